#include "projarr/oracles.hpp"

#include <cstdlib>
#include <stdexcept>

#include "projarr/cohomology_ring.hpp"

namespace projarr {

// Elements are sorted by descending d, so every element strictly below u has a larger id.
MobiusTable::MobiusTable(const IntersectionPoset& poset) : size_(poset.size()), mu_(size_ * size_, 0) {
  for (std::size_t u = 0; u < size_; ++u) {
    mu_[u * size_ + u] = 1;
    for (std::size_t v = u + 1; v < size_; ++v) {
      const auto iu = static_cast<IntersectionPoset::Id>(u);
      const auto iv = static_cast<IntersectionPoset::Id>(v);
      if (!poset.less(iv, iu)) continue;
      long sum = 0;
      for (std::size_t w = u; w < v; ++w) {
        const auto iw = static_cast<IntersectionPoset::Id>(w);
        if (poset.leq(iw, iu) && poset.less(iv, iw)) sum += mu_[u * size_ + w];
      }
      mu_[u * size_ + v] = -sum;
    }
  }
}

long MobiusTable::operator()(IntersectionPoset::Id upper, IntersectionPoset::Id lower) const {
  return mu_[static_cast<std::size_t>(upper) * size_ + static_cast<std::size_t>(lower)];
}

bool MobiusTable::recursion_holds(const IntersectionPoset& poset) const {
  for (std::size_t u = 0; u < size_; ++u)
    for (std::size_t v = 0; v < size_; ++v) {
      const auto iu = static_cast<IntersectionPoset::Id>(u);
      const auto iv = static_cast<IntersectionPoset::Id>(v);
      if (!poset.less(iv, iu)) {
        if (u != v && (*this)(iu, iv) != 0) return false;
        continue;
      }
      long sum = 0;
      for (std::size_t w = 0; w < size_; ++w) {
        const auto iw = static_cast<IntersectionPoset::Id>(w);
        if (poset.leq(iw, iu) && poset.leq(iv, iw)) sum += (*this)(iu, iw);
      }
      if (sum != 0) return false;
    }
  return true;
}

MobiusTable mobius(const IntersectionPoset& poset) { return MobiusTable(poset); }

std::vector<long> os_poincare_central(const IntersectionPoset& poset) {
  const MobiusTable mu(poset);
  std::vector<long> out(static_cast<std::size_t>(poset.n()) + 2, 0);
  for (std::size_t q = 0; q < poset.size(); ++q) {
    const auto iq = static_cast<IntersectionPoset::Id>(q);
    out[static_cast<std::size_t>(poset.n() - poset.d(iq))] += std::labs(mu(poset.top(), iq));
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

std::vector<long> os_poincare_projective(const Arrangement& arr) {
  if (arr.empty()) throw std::invalid_argument("no hyperplanes: the complement is not a C* bundle");
  for (std::size_t i = 0; i < arr.size(); ++i)
    if (arr.d(i) != arr.n() - 1) throw std::invalid_argument("member " + std::to_string(i) + " is not a hyperplane");
  const auto central = os_poincare_central(build_poset(arr, ExecutionMode::Serial));
  // synthetic division by (1 + t)
  std::vector<long> q(central.size() - 1, 0);
  long carry = 0;
  for (std::size_t i = 0; i + 1 < central.size(); ++i) {
    q[i] = central[i] - carry;
    carry = q[i];
  }
  const long remainder = central.back() - carry;
  if (remainder != 0) throw std::logic_error("division by 1 + t leaves remainder " + std::to_string(remainder));
  return q;
}

long stratified_euler(const IntersectionPoset& poset) {
  std::vector<long> chi(poset.size(), 0);
  // smallest strata first
  for (std::size_t i = poset.size(); i-- > 0;) {
    const auto q = static_cast<IntersectionPoset::Id>(i);
    if (poset.d(q) < 0) continue;
    long value = poset.d(q) + 1;
    for (std::size_t j = i + 1; j < poset.size(); ++j) {
      const auto p = static_cast<IntersectionPoset::Id>(j);
      if (poset.d(p) >= 0 && poset.less(p, q)) value -= chi[j];
    }
    chi[i] = value;
  }
  return chi[0];
}

OracleReport compare(const Arrangement& arr, const std::vector<long>& betti) {
  OracleReport rep;
  rep.engine_poincare = betti;
  long euler = 0;
  for (std::size_t i = 0; i < betti.size(); ++i) euler += (i % 2 == 0) ? betti[i] : -betti[i];
  rep.engine_euler = euler;
  rep.oracle_euler = stratified_euler(build_poset(arr, ExecutionMode::Serial));
  if (rep.engine_euler != rep.oracle_euler) {
    rep.passed = false;
    rep.diffs.push_back("euler: engine " + std::to_string(rep.engine_euler) + ", oracle " +
                        std::to_string(rep.oracle_euler));
  }
  rep.hyperplane = !arr.empty();
  for (std::size_t i = 0; i < arr.size(); ++i)
    if (arr.d(i) != arr.n() - 1) rep.hyperplane = false;
  if (rep.hyperplane) {
    rep.os_poincare = os_poincare_projective(arr);
    std::vector<long> padded = rep.os_poincare;
    padded.resize(std::max(padded.size(), betti.size()), 0);
    std::vector<long> engine = betti;
    engine.resize(padded.size(), 0);
    for (std::size_t i = 0; i < padded.size(); ++i)
      if (padded[i] != engine[i]) {
        rep.passed = false;
        rep.diffs.push_back("b^" + std::to_string(i) + ": engine " + std::to_string(engine[i]) + ", oracle " +
                            std::to_string(padded[i]));
      }
  }
  return rep;
}

OracleReport compare(const Arrangement& arr) { return compare(arr, poincare_polynomial(arr)); }

}  // namespace projarr
