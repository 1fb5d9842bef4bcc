#include "projarr/cohomology_ring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace projarr {

bool RingElement::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Integer& x) { return x == 0; });
}

std::vector<long> RingTable::poincare() const {
  std::vector<long> out(static_cast<std::size_t>(2 * n + 1), 0);
  for (const auto& b : basis)
    if (b.torsion_order == 0) ++out[static_cast<std::size_t>(b.degree)];
  return out;
}

std::vector<std::pair<int, Integer>> RingTable::torsion() const {
  std::vector<std::pair<int, Integer>> out;
  for (const auto& b : basis)
    if (b.torsion_order != 0) out.emplace_back(b.degree, b.torsion_order);
  return out;
}

RingElement RingTable::zero(int degree) const { return {degree, ZVector(size())}; }

RingElement RingTable::basis_element(std::size_t i) const {
  RingElement e = zero(basis.at(i).degree);
  e.coords[i] = 1;
  return e;
}

RingElement RingTable::unit() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (basis[i].degree == 0) return basis_element(i);
  throw std::logic_error("ring has no degree-0 generator");
}

void RingTable::reduce(ZVector& coords) const {
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Integer& t = basis[i].torsion_order;
    if (t == 0) continue;
    coords[i] %= t;
    if (coords[i] < 0) coords[i] += t;
  }
}

RingElement RingTable::multiply(const RingElement& a, const RingElement& b) const {
  RingElement out = zero(a.degree + b.degree);
  for (std::size_t i = 0; i < size(); ++i) {
    if (a.coords[i] == 0) continue;
    for (std::size_t j = 0; j < size(); ++j) {
      if (b.coords[j] == 0) continue;
      const Integer f = a.coords[i] * b.coords[j];
      const ZVector& p = products[i][j];
      for (std::size_t m = 0; m < size(); ++m)
        if (p[m] != 0) out.coords[m] += f * p[m];
    }
  }
  reduce(out.coords);
  return out;
}

RingElement RingTable::add(const RingElement& a, const RingElement& b, const Integer& factor) const {
  if (a.degree != b.degree && !a.is_zero() && !b.is_zero())
    throw std::invalid_argument("adding ring elements of different degrees");
  RingElement out = a.is_zero() ? zero(b.degree) : a;
  for (std::size_t i = 0; i < size(); ++i) out.coords[i] = a.coords[i] + factor * b.coords[i];
  reduce(out.coords);
  return out;
}

namespace {

void fill_products(RingTable& t, ExecutionMode mode, const std::function<ZVector(std::size_t, std::size_t)>& f) {
  const std::size_t b = t.size();
  t.products.assign(b, std::vector<ZVector>(b));
  const long total = static_cast<long>(b * b);
  if (mode == ExecutionMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long p = 0; p < total; ++p) {
      const auto i = static_cast<std::size_t>(p) / b;
      const auto j = static_cast<std::size_t>(p) % b;
      t.products[i][j] = f(i, j);
    }
  } else {
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j) t.products[i][j] = f(i, j);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Projective mode

std::vector<LevelHomology> decompose(const IntersectionPoset& poset, ExecutionMode mode) {
  return all_levels(poset, mode);
}

ProjectiveCohomology::ProjectiveCohomology(const Arrangement& arr, ExecutionMode mode)
    : arr_(arr), poset_(std::make_shared<const IntersectionPoset>(build_poset(arr, mode))) {
  levels_ = all_levels(*poset_, mode);
  const int n = poset_->n();
  for (int k = n; k >= 0; --k) {
    const auto& h = level(k).summary;
    for (std::size_t r = 0; r < h.degrees.size(); ++r)
      for (std::size_t g = 0; g < h.degrees[r].generator_count(); ++g)
        basis_.push_back({k, r, g, 2 * n - 2 * k - static_cast<int>(r), h.degrees[r].orders[g], -1});
  }
  std::stable_sort(basis_.begin(), basis_.end(),
                   [](const RingBasisElement& a, const RingBasisElement& b) { return a.degree < b.degree; });
  ids_.resize(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) {
    const auto& h = level(k).summary;
    ids_[static_cast<std::size_t>(k)].resize(h.degrees.size());
    for (std::size_t r = 0; r < h.degrees.size(); ++r)
      ids_[static_cast<std::size_t>(k)][r].resize(h.degrees[r].generator_count());
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto& b = basis_[i];
    ids_[static_cast<std::size_t>(b.k)][b.r][b.index] = i;
  }
}

std::optional<std::size_t> ProjectiveCohomology::basis_id(int k, std::size_t r, std::size_t generator) const {
  if (k < 0 || k > poset_->n()) return std::nullopt;
  const auto& lk = ids_[static_cast<std::size_t>(k)];
  if (r >= lk.size() || generator >= lk[r].size()) return std::nullopt;
  return lk[r][generator];
}

RingElement ProjectiveCohomology::element_of(int k, const IntChain& z, std::size_t r) const {
  const int n = poset_->n();
  RingElement out{2 * n - 2 * k - static_cast<int>(r), ZVector(basis_.size())};
  const HomologyClassRef ref = class_of(level(k), z, r);
  for (std::size_t g = 0; g < ref.coordinates.size(); ++g) out.coords[*basis_id(k, r, g)] = ref.coordinates[g];
  return out;
}

ZVector ProjectiveCohomology::multiply_basis(std::size_t i, std::size_t j) const {
  const auto& a = basis_.at(i);
  const auto& b = basis_.at(j);
  const int n = poset_->n();
  if (a.k + b.k < n) return ZVector(basis_.size());
  const IntChain ca = level(a.k).representative(a.r, a.index);
  const IntChain cb = level(b.k).representative(b.r, b.index);
  const IntChain prod = meet_product(*poset_, a.k, b.k, ca, cb);
  ZVector coords = element_of(a.k + b.k - n, prod, a.r + b.r).coords;
  for (std::size_t m = 0; m < coords.size(); ++m) {
    const Integer& t = basis_[m].torsion_order;
    if (t != 0) {
      coords[m] %= t;
      if (coords[m] < 0) coords[m] += t;
    }
  }
  return coords;
}

RingTable ProjectiveCohomology::table(ExecutionMode mode) const {
  RingTable t;
  t.n = poset_->n();
  t.basis = basis_;
  for (const auto& b : basis_) t.representatives.push_back(level(b.k).representative(b.r, b.index));
  fill_products(t, mode, [this](std::size_t i, std::size_t j) { return multiply_basis(i, j); });
  return t;
}

std::vector<long> ProjectiveCohomology::poincare() const {
  std::vector<long> out(static_cast<std::size_t>(2 * poset_->n() + 1), 0);
  for (const auto& b : basis_)
    if (b.torsion_order == 0) ++out[static_cast<std::size_t>(b.degree)];
  return out;
}

RingTable ring_table(const Arrangement& arr, ExecutionMode mode) { return ProjectiveCohomology(arr, mode).table(mode); }

std::vector<long> poincare_polynomial(const Arrangement& arr) { return ProjectiveCohomology(arr).poincare(); }

// ---------------------------------------------------------------------------
// Affine mode

AffineCohomology::AffineCohomology(const Arrangement& arr, std::size_t infinity_index, ExecutionMode mode)
    : poset_(std::make_shared<const IntersectionPoset>(build_poset(arr, mode))) {
  if (infinity_index >= arr.size()) throw std::invalid_argument("infinity index out of range");
  if (arr.d(infinity_index) != arr.n() - 1)
    throw std::invalid_argument("member " + std::to_string(infinity_index) + " is not a hyperplane");
  const auto& q = *poset_;
  const int n = q.n();
  infinity_ = q.member(infinity_index);
  for (IntersectionPoset::Id u = 0; u < static_cast<int>(q.size()); ++u)
    if (q.d(u) >= 0 && !q.leq(u, infinity_)) affine_.push_back(u);

  std::vector<std::optional<LevelHomology>> locals(affine_.size());
  const long count = static_cast<long>(affine_.size());
  if (mode == ExecutionMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i)
      locals[static_cast<std::size_t>(i)].emplace(RelativeComplex::interval(q, affine_[static_cast<std::size_t>(i)]));
  } else {
    for (long i = 0; i < count; ++i)
      locals[static_cast<std::size_t>(i)].emplace(RelativeComplex::interval(q, affine_[static_cast<std::size_t>(i)]));
  }
  summand_of_.assign(q.size(), std::nullopt);
  for (std::size_t i = 0; i < affine_.size(); ++i) {
    summands_.push_back({affine_[i], 2 * q.d(affine_[i]), std::move(*locals[i])});
    summand_of_[static_cast<std::size_t>(affine_[i])] = i;
  }

  auto& basis = table_.basis;
  for (std::size_t s = 0; s < summands_.size(); ++s) {
    const auto& h = summands_[s].local.summary;
    const int du = q.d(summands_[s].u);
    for (std::size_t r = 0; r < h.degrees.size(); ++r)
      for (std::size_t g = 0; g < h.degrees[r].generator_count(); ++g)
        basis.push_back({du, r, g, 2 * n - 2 * du - static_cast<int>(r), h.degrees[r].orders[g], summands_[s].u});
  }
  std::stable_sort(basis.begin(), basis.end(), [](const RingBasisElement& a, const RingBasisElement& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.k > b.k;
  });
  ids_.resize(summands_.size());
  for (std::size_t s = 0; s < summands_.size(); ++s) {
    const auto& h = summands_[s].local.summary;
    ids_[s].resize(h.degrees.size());
    for (std::size_t r = 0; r < h.degrees.size(); ++r) ids_[s][r].resize(h.degrees[r].generator_count());
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto s = *summand_of_[static_cast<std::size_t>(basis[i].stratum)];
    ids_[s][basis[i].r][basis[i].index] = i;
  }
  table_.n = n;
  for (const auto& b : basis)
    table_.representatives.push_back(
        summands_[*summand_of_[static_cast<std::size_t>(b.stratum)]].local.representative(b.r, b.index));
  fill_products(table_, mode, [this](std::size_t i, std::size_t j) { return multiply_basis(i, j); });
}

ZVector AffineCohomology::multiply_basis(std::size_t i, std::size_t j) const {
  const auto& q = *poset_;
  const auto& a = table_.basis.at(i);
  const auto& b = table_.basis.at(j);
  ZVector out(table_.size());
  const auto w = q.meet(a.stratum, b.stratum);
  if (q.d(w) < 0 || q.leq(w, infinity_) || q.d(w) != q.d(a.stratum) + q.d(b.stratum) - q.n()) return out;
  const IntChain prod = meet_chains(q, table_.representatives[i], table_.representatives[j]);
  const auto s = *summand_of_[static_cast<std::size_t>(w)];
  const HomologyClassRef ref = class_of(summands_[s].local, prod, a.r + b.r);
  for (std::size_t g = 0; g < ref.coordinates.size(); ++g) out[ids_[s][a.r + b.r][g]] = ref.coordinates[g];
  table_.reduce(out);
  return out;
}

// ---------------------------------------------------------------------------
// Axioms

namespace {

std::string describe(const std::vector<std::size_t>& ids) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < ids.size(); ++i) os << (i ? "," : "") << ids[i];
  os << ")";
  return os.str();
}

}  // namespace

RingAxiomReport verify_ring_axioms(const RingTable& table) {
  RingAxiomReport rep;
  const std::size_t b = table.size();
  auto fail = [&](std::string msg) {
    rep.passed = false;
    if (rep.failures.size() < 32) rep.failures.push_back(std::move(msg));
  };
  auto reduced = [&](ZVector v) {
    table.reduce(v);
    return v;
  };

  std::vector<std::size_t> units;
  for (std::size_t i = 0; i < b; ++i)
    if (table.basis[i].degree == 0) units.push_back(i);
  ++rep.checks;
  if (units.size() != 1) {
    fail("expected exactly one degree-0 generator, found " + std::to_string(units.size()));
    return rep;
  }
  const std::size_t one = units.front();

  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) {
      const int deg = table.basis[i].degree + table.basis[j].degree;
      const ZVector& p = table.products[i][j];
      ++rep.checks;
      for (std::size_t m = 0; m < b; ++m)
        if (p[m] != 0 && (deg > 2 * table.n || table.basis[m].degree != deg)) {
          fail("degree violation in product " + describe({i, j}));
          break;
        }
    }

  for (std::size_t j = 0; j < b; ++j) {
    ZVector e(b);
    e[j] = 1;
    e = reduced(e);
    ++rep.checks;
    if (reduced(table.products[one][j]) != e || reduced(table.products[j][one]) != e)
      fail("unit law fails on generator " + std::to_string(j));
  }

  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = i; j < b; ++j) {
      ++rep.checks;
      const bool odd = (table.basis[i].degree % 2 != 0) && (table.basis[j].degree % 2 != 0);
      ZVector swapped = table.products[j][i];
      if (odd)
        for (auto& x : swapped) x = -x;
      if (reduced(table.products[i][j]) != reduced(swapped))
        fail("graded commutativity fails on " + describe({i, j}));
    }

  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j)
      for (std::size_t k = 0; k < b; ++k) {
        ++rep.checks;
        ZVector lhs(b), rhs(b);
        const ZVector& ij = table.products[i][j];
        const ZVector& jk = table.products[j][k];
        for (std::size_t m = 0; m < b; ++m) {
          if (ij[m] != 0)
            for (std::size_t t = 0; t < b; ++t) lhs[t] += ij[m] * table.products[m][k][t];
          if (jk[m] != 0)
            for (std::size_t t = 0; t < b; ++t) rhs[t] += jk[m] * table.products[i][m][t];
        }
        if (reduced(lhs) != reduced(rhs)) fail("associativity fails on " + describe({i, j, k}));
      }
  return rep;
}

}  // namespace projarr
