#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "projarr/relative_chains.hpp"

namespace projarr {

/// One additive generator of H^*(PV minus the arrangement).
///
/// In projective mode it is generator `index` of H_r at level k; in affine mode `stratum`
/// names the element u of the affine poset and k = d(u).
struct RingBasisElement {
  int k = 0;
  std::size_t r = 0;
  std::size_t index = 0;
  int degree = 0;
  Integer torsion_order = 0;
  IntersectionPoset::Id stratum = -1;
};

/// Homogeneous coordinates over a RingTable basis.
struct RingElement {
  int degree = 0;
  ZVector coords;

  bool is_zero() const;
};

/// Graded basis with full structure constants.
struct RingTable {
  int n = 0;
  std::vector<RingBasisElement> basis;
  /// products[i][j] = coordinates of b_i * b_j
  std::vector<std::vector<ZVector>> products;
  std::vector<IntChain> representatives;

  std::size_t size() const { return basis.size(); }
  /// Betti numbers b^0..b^{2n} from the free generators.
  std::vector<long> poincare() const;
  /// (degree, order) of every torsion generator.
  std::vector<std::pair<int, Integer>> torsion() const;

  RingElement unit() const;
  RingElement basis_element(std::size_t i) const;
  RingElement zero(int degree) const;
  /// Reduces torsion coordinates modulo their orders.
  void reduce(ZVector& coords) const;
  RingElement multiply(const RingElement& a, const RingElement& b) const;
  RingElement add(const RingElement& a, const RingElement& b, const Integer& factor = 1) const;
};

/// The projective decomposition: homology of every level pair and the product
/// h_k(c) h_l(d) = h_{k+l-n}(c meet d), with h_i = 0 for i < 0.
class ProjectiveCohomology {
 public:
  explicit ProjectiveCohomology(const Arrangement& arr, ExecutionMode mode = ExecutionMode::Parallel);

  const Arrangement& arrangement() const { return arr_; }
  const IntersectionPoset& poset() const { return *poset_; }
  const std::vector<LevelHomology>& levels() const { return levels_; }
  const LevelHomology& level(int k) const { return levels_.at(static_cast<std::size_t>(k)); }
  const std::vector<RingBasisElement>& basis() const { return basis_; }

  std::optional<std::size_t> basis_id(int k, std::size_t r, std::size_t generator) const;
  /// Ring coordinates of the class of a relative cycle z of degree r at level k.
  RingElement element_of(int k, const IntChain& z, std::size_t r) const;
  /// Product of two basis elements computed from their representative cycles.
  ZVector multiply_basis(std::size_t i, std::size_t j) const;

  RingTable table(ExecutionMode mode = ExecutionMode::Parallel) const;
  std::vector<long> poincare() const;

 private:
  Arrangement arr_;
  std::shared_ptr<const IntersectionPoset> poset_;
  std::vector<LevelHomology> levels_;
  std::vector<RingBasisElement> basis_;
  std::vector<std::vector<std::vector<std::size_t>>> ids_;  // [k][r][generator]
};

/// Homology of every level, with the cohomological degree map 2n - 2k - r.
std::vector<LevelHomology> decompose(const IntersectionPoset& poset, ExecutionMode mode = ExecutionMode::Parallel);

RingTable ring_table(const Arrangement& arr, ExecutionMode mode = ExecutionMode::Parallel);
std::vector<long> poincare_polynomial(const Arrangement& arr);

/// Summand of the affine decomposition: local homology of the interval [u, V].
struct AffineSummand {
  IntersectionPoset::Id u;
  int shift;  // 2 d(u)
  LevelHomology local;
};

/// Complement of the affine arrangement obtained by sending member `infinity_index` to infinity.
class AffineCohomology {
 public:
  AffineCohomology(const Arrangement& arr, std::size_t infinity_index,
                   ExecutionMode mode = ExecutionMode::Parallel);

  const IntersectionPoset& poset() const { return *poset_; }
  const std::vector<AffineSummand>& summands() const { return summands_; }
  /// Elements of Q' with d >= 0: intersections not contained in the hyperplane at infinity.
  const std::vector<IntersectionPoset::Id>& affine_elements() const { return affine_; }
  const RingTable& table() const { return table_; }
  ZVector multiply_basis(std::size_t i, std::size_t j) const;

 private:
  std::shared_ptr<const IntersectionPoset> poset_;
  IntersectionPoset::Id infinity_;
  std::vector<IntersectionPoset::Id> affine_;
  std::vector<AffineSummand> summands_;
  std::vector<std::optional<std::size_t>> summand_of_;  // poset id -> summand index
  std::vector<std::vector<std::vector<std::size_t>>> ids_;  // [summand][r][generator]
  RingTable table_;
};

struct RingAxiomReport {
  bool passed = true;
  std::size_t checks = 0;
  std::vector<std::string> failures;
};

/// Degree additivity, vanishing above 2n, unit law, graded commutativity and associativity.
RingAxiomReport verify_ring_axioms(const RingTable& table);

}  // namespace projarr
