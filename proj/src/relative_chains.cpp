#include "projarr/relative_chains.hpp"

#include <algorithm>
#include <stdexcept>

namespace projarr {

IntChain relative_boundary(const IntChain& c) {
  IntChain out;
  for (const auto& [s, coeff] : c.terms()) {
    if (s.size() <= 1) continue;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      PosetSimplex face;
      face.reserve(s.size() - 1);
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i) face.push_back(s[j]);
      out.add(face, (i % 2 == 0) ? coeff : Integer(-coeff));
    }
  }
  return out;
}

IntChain interval_boundary(const IntChain& c) {
  IntChain out;
  for (const auto& [s, coeff] : c.terms()) {
    if (s.size() <= 2) continue;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
      PosetSimplex face;
      face.reserve(s.size() - 1);
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i) face.push_back(s[j]);
      out.add(face, (i % 2 == 0) ? coeff : Integer(-coeff));
    }
  }
  return out;
}

IntChain meet_push(const IntersectionPoset& poset, const ProductChain& ch) {
  IntChain out;
  for (const auto& [s, coeff] : ch.terms()) {
    PosetSimplex image;
    image.reserve(s.size());
    bool degenerate = false;
    for (const auto& [u, v] : s) {
      const auto w = poset.meet(u, v);
      // Images of chains are weakly increasing, so a repeat is always adjacent.
      if (!image.empty() && image.back() == w) {
        degenerate = true;
        break;
      }
      image.push_back(w);
    }
    if (!degenerate) out.add(image, coeff);
  }
  return out;
}

IntChain meet_chains(const IntersectionPoset& poset, const IntChain& c, const IntChain& d) {
  const IntChain pushed = meet_push(poset, cross_shuffle(c, d));
  IntChain out;
  for (const auto& [s, coeff] : pushed.terms())
    if (s.back() == poset.top()) out.add(s, coeff);
  return out;
}

// ---------------------------------------------------------------------------

RelativeComplex::RelativeComplex(const IntersectionPoset& poset, int k) : RelativeComplex(poset, k, -1) {}

RelativeComplex RelativeComplex::interval(const IntersectionPoset& poset, IntersectionPoset::Id bottom) {
  return RelativeComplex(poset, poset.d(bottom), bottom);
}

RelativeComplex::RelativeComplex(const IntersectionPoset& poset, int k, IntersectionPoset::Id bottom)
    : poset_(&poset), k_(k), bottom_(bottom) {
  if (bottom < 0 && (k < 0 || k > poset.n())) throw std::invalid_argument("level k out of range");
  if (bottom >= 0 && poset.d(bottom) < 0) throw std::invalid_argument("interval bottom must be nonzero");
  // Grow chains downward from V: through elements with d >= k, or inside [bottom, V].
  auto admissible = [&](IntersectionPoset::Id w) {
    return bottom < 0 ? poset.d(w) >= k : poset.leq(bottom, w);
  };
  std::vector<std::vector<PosetSimplex>> all;
  std::vector<PosetSimplex> layer{{poset.top()}};
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end());
    all.push_back(layer);
    std::vector<PosetSimplex> next;
    for (const auto& s : layer)
      for (IntersectionPoset::Id w = 0; w < static_cast<int>(poset.size()); ++w)
        if (admissible(w) && poset.less(w, s.front())) {
          PosetSimplex t;
          t.reserve(s.size() + 1);
          t.push_back(w);
          t.insert(t.end(), s.begin(), s.end());
          next.push_back(std::move(t));
        }
    layer = std::move(next);
  }
  if (bottom < 0) {
    basis_ = std::move(all);
  } else {
    // Keep only chains that start at the bottom element.
    for (auto& lay : all) {
      std::vector<PosetSimplex> kept;
      for (auto& s : lay)
        if (s.front() == bottom) kept.push_back(std::move(s));
      basis_.push_back(std::move(kept));
    }
    while (!basis_.empty() && basis_.back().empty()) basis_.pop_back();
  }
  finish();
}

void RelativeComplex::finish() {
  index_.resize(basis_.size());
  for (std::size_t r = 0; r < basis_.size(); ++r)
    for (std::size_t i = 0; i < basis_[r].size(); ++i) index_[r].emplace(basis_[r][i], i);

  complex_.dims.resize(basis_.size());
  for (std::size_t r = 0; r < basis_.size(); ++r) complex_.dims[r] = basis_[r].size();
  complex_.boundary.push_back(ZMatrix(0, complex_.dims.empty() ? 0 : complex_.dims[0]));
  for (std::size_t r = 1; r < basis_.size(); ++r) {
    ZMatrix b(complex_.dims[r - 1], complex_.dims[r]);
    for (std::size_t j = 0; j < basis_[r].size(); ++j) {
      const IntChain face = boundary(IntChain(basis_[r][j], 1));
      for (const auto& [s, coeff] : face.terms()) b(index_[r - 1].at(s), j) = coeff;
    }
    complex_.boundary.push_back(std::move(b));
  }
}

IntChain RelativeComplex::boundary(const IntChain& c) const {
  return bottom_ < 0 ? relative_boundary(c) : interval_boundary(c);
}

const std::vector<PosetSimplex>& RelativeComplex::basis(std::size_t r) const {
  static const std::vector<PosetSimplex> empty;
  return r < basis_.size() ? basis_[r] : empty;
}

bool RelativeComplex::contains(const PosetSimplex& s) const {
  if (s.empty()) return false;
  const std::size_t r = s.size() - 1;
  return r < index_.size() && index_[r].count(s) > 0;
}

ZVector RelativeComplex::to_vector(const IntChain& c, std::size_t r) const {
  ZVector v(basis(r).size());
  for (const auto& [s, coeff] : c.terms()) {
    if (s.size() != r + 1) throw std::invalid_argument("chain is not homogeneous of the requested degree");
    if (r >= index_.size()) throw std::invalid_argument("chain leaves the relative complex at this level");
    const auto it = index_[r].find(s);
    if (it == index_[r].end()) throw std::invalid_argument("chain leaves the relative complex at this level");
    v[it->second] = coeff;
  }
  return v;
}

IntChain RelativeComplex::from_vector(const ZVector& v, std::size_t r) const {
  IntChain out;
  for (std::size_t i = 0; i < v.size(); ++i) out.add(basis_[r][i], v[i]);
  return out;
}

LevelHomology::LevelHomology(const IntersectionPoset& poset, int k)
    : complex(poset, k), summary(compute_homology(complex.complex())) {}

LevelHomology::LevelHomology(RelativeComplex rc)
    : complex(std::move(rc)), summary(compute_homology(complex.complex())) {}

IntChain LevelHomology::representative(std::size_t r, std::size_t i) const {
  return complex.from_vector(summary.degrees.at(r).generators.at(i), r);
}

std::size_t chain_degree(const IntChain& c) {
  if (c.is_zero()) throw std::invalid_argument("zero chain has no degree");
  return c.terms().begin()->first.size() - 1;
}

HomologyClassRef class_of(const LevelHomology& level, const IntChain& z, std::size_t r) {
  HomologyClassRef ref;
  ref.k = level.complex.k();
  ref.r = r;
  if (r >= level.summary.degrees.size()) {
    if (!z.is_zero()) throw std::invalid_argument("chain leaves the relative complex at this level");
    return ref;
  }
  ref.coordinates =
      homology_coordinates(level.complex.complex(), level.summary, r, level.complex.to_vector(z, r));
  return ref;
}

HomologyClassRef class_of(const LevelHomology& level, const IntChain& z) {
  return class_of(level, z, chain_degree(z));
}

IntChain meet_product(const IntersectionPoset& poset, int k, int l, const IntChain& c, const IntChain& d) {
  const int n = poset.n();
  if (k + l < n) throw std::invalid_argument("meet product needs k + l >= n");
  IntChain out = meet_chains(poset, c, d);
  for (const auto& [s, coeff] : out.terms())
    if (poset.d(s.front()) < k + l - n)
      throw std::logic_error("meet product left level k + l - n; inputs are not level-k and level-l chains");
  return out;
}

std::vector<LevelHomology> all_levels(const IntersectionPoset& poset, ExecutionMode mode) {
  const int n = poset.n();
  std::vector<std::optional<LevelHomology>> slots(static_cast<std::size_t>(n + 1));
  if (mode == ExecutionMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k <= n; ++k) slots[static_cast<std::size_t>(k)].emplace(poset, k);
  } else {
    for (int k = 0; k <= n; ++k) slots[static_cast<std::size_t>(k)].emplace(poset, k);
  }
  std::vector<LevelHomology> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace projarr
