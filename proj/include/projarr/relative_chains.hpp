#pragma once

#include <map>
#include <utility>
#include <vector>

#include "projarr/homology.hpp"
#include "projarr/intersection_poset.hpp"

namespace projarr {

/// Sparse integral chain on an order complex: simplex (vertex list in increasing
/// poset order) -> coefficient. Zero coefficients are never stored.
template <class Vertex>
class Chain {
 public:
  using Simplex = std::vector<Vertex>;
  using Terms = std::map<Simplex, Integer>;

  Chain() = default;
  Chain(const Simplex& s, const Integer& coeff) { add(s, coeff); }

  void add(const Simplex& s, const Integer& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(s, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }
  void add(const Chain& other, const Integer& factor = 1) {
    for (const auto& [s, c] : other.terms_) add(s, c * factor);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Chain operator-() const {
    Chain out;
    out.add(*this, -1);
    return out;
  }
  friend Chain operator+(Chain a, const Chain& b) {
    a.add(b);
    return a;
  }
  friend Chain operator-(Chain a, const Chain& b) {
    a.add(b, -1);
    return a;
  }
  friend Chain operator*(const Integer& f, const Chain& a) {
    Chain out;
    out.add(a, f);
    return out;
  }
  friend bool operator==(const Chain& a, const Chain& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

using PosetSimplex = std::vector<IntersectionPoset::Id>;
using IntChain = Chain<IntersectionPoset::Id>;
using PairVertex = std::pair<IntersectionPoset::Id, IntersectionPoset::Id>;
using ProductChain = Chain<PairVertex>;

/// Full simplicial boundary sum_i (-1)^i (face without vertex i).
template <class Vertex>
Chain<Vertex> absolute_boundary(const Chain<Vertex>& c) {
  Chain<Vertex> out;
  for (const auto& [s, coeff] : c.terms()) {
    if (s.size() <= 1) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      typename Chain<Vertex>::Simplex face;
      face.reserve(s.size() - 1);
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i) face.push_back(s[j]);
      out.add(face, (i % 2 == 0) ? coeff : Integer(-coeff));
    }
  }
  return out;
}

/// Boundary in the quotient by chains not ending at the top vertex: the face dropping
/// the last vertex is omitted.
IntChain relative_boundary(const IntChain& c);
/// Boundary in the interval quotient: faces dropping the first or last vertex are omitted.
IntChain interval_boundary(const IntChain& c);

/// Eilenberg-Zilber shuffle product: sum over staircase paths with the sign of the shuffle.
template <class VA, class VB>
Chain<std::pair<VA, VB>> cross_shuffle(const Chain<VA>& c, const Chain<VB>& d);

/// Applies (u, v) -> u meet v vertex-wise, dropping degenerate images.
IntChain meet_push(const IntersectionPoset& poset, const ProductChain& ch);

/// meet_push(cross_shuffle(c, d)) with summands not ending at V dropped.
IntChain meet_chains(const IntersectionPoset& poset, const IntChain& c, const IntChain& d);

/// Chains u_0 < ... < u_q = V with d(u_0) >= k: the relative chains of (Delta Q_[k,n], Delta Q_[k,n)).
///
/// The interval variant holds chains u = q_0 < ... < q_m = V for a fixed bottom u, the
/// relative chains of (Delta[u,V], Delta[u,V) cup Delta(u,V]); both end faces are omitted.
class RelativeComplex {
 public:
  RelativeComplex(const IntersectionPoset& poset, int k);
  static RelativeComplex interval(const IntersectionPoset& poset, IntersectionPoset::Id bottom);

  /// Level k, or d(bottom) for an interval complex.
  int k() const { return k_; }
  /// Fixed bottom element of an interval complex, -1 for a level complex.
  IntersectionPoset::Id bottom() const { return bottom_; }
  const IntersectionPoset& poset() const { return *poset_; }
  const std::vector<std::vector<PosetSimplex>>& basis() const { return basis_; }
  const std::vector<PosetSimplex>& basis(std::size_t r) const;
  const ChainComplex& complex() const { return complex_; }

  /// Coordinates of a homogeneous chain of degree r; throws if it leaves the basis.
  ZVector to_vector(const IntChain& c, std::size_t r) const;
  IntChain from_vector(const ZVector& v, std::size_t r) const;
  bool contains(const PosetSimplex& s) const;
  IntChain boundary(const IntChain& c) const;

 private:
  RelativeComplex(const IntersectionPoset& poset, int k, IntersectionPoset::Id bottom);
  void finish();

  const IntersectionPoset* poset_;
  int k_;
  IntersectionPoset::Id bottom_ = -1;
  std::vector<std::vector<PosetSimplex>> basis_;
  std::vector<std::map<PosetSimplex, std::size_t>> index_;
  ChainComplex complex_;
};

/// Homology of one level with its representatives as chains.
struct LevelHomology {
  RelativeComplex complex;
  HomologySummary summary;

  LevelHomology(const IntersectionPoset& poset, int k);
  explicit LevelHomology(RelativeComplex rc);
  /// i-th generator in degree r as a chain.
  IntChain representative(std::size_t r, std::size_t i) const;
};

struct HomologyClassRef {
  int k = 0;
  std::size_t r = 0;
  ZVector coordinates;
};

/// Degree of a homogeneous nonzero chain (number of vertices minus one).
std::size_t chain_degree(const IntChain& c);

HomologyClassRef class_of(const LevelHomology& level, const IntChain& z, std::size_t r);
HomologyClassRef class_of(const LevelHomology& level, const IntChain& z);

/// The meet product of relative cycles at levels k and l, landing at level k + l - n.
/// Throws std::invalid_argument when k + l < n.
IntChain meet_product(const IntersectionPoset& poset, int k, int l, const IntChain& c, const IntChain& d);

/// Homology of every level 0..n.
std::vector<LevelHomology> all_levels(const IntersectionPoset& poset, ExecutionMode mode = ExecutionMode::Parallel);

// ---------------------------------------------------------------------------

template <class VA, class VB>
Chain<std::pair<VA, VB>> cross_shuffle(const Chain<VA>& c, const Chain<VB>& d) {
  Chain<std::pair<VA, VB>> out;
  for (const auto& [sa, ca] : c.terms()) {
    for (const auto& [sb, cb] : d.terms()) {
      const std::size_t p = sa.size() - 1;
      const std::size_t q = sb.size() - 1;
      // Enumerate step sequences with p horizontal and q vertical steps.
      std::vector<bool> vertical(p + q, false);
      std::fill(vertical.begin() + static_cast<long>(p), vertical.end(), true);
      do {
        std::vector<std::pair<VA, VB>> path;
        path.reserve(p + q + 1);
        std::size_t a = 0, b = 0;
        path.emplace_back(sa[0], sb[0]);
        std::size_t inversions = 0;
        std::size_t verticals_so_far = 0;
        for (bool v : vertical) {
          if (v) {
            ++b;
            ++verticals_so_far;
          } else {
            ++a;
            inversions += verticals_so_far;
          }
          path.emplace_back(sa[a], sb[b]);
        }
        const Integer coeff = ca * cb;
        out.add(path, inversions % 2 == 0 ? coeff : Integer(-coeff));
      } while (std::next_permutation(vertical.begin(), vertical.end()));
    }
  }
  return out;
}

}  // namespace projarr
