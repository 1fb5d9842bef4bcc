#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "projarr/arrangement.hpp"
#include "projarr/parallel.hpp"

namespace projarr {

/// All intersections of subfamilies of `arr`, including V = the empty intersection,
/// each with one witnessing subfamily (indices into arr). Unordered.
struct ClosureEntry {
  Subspace space;
  std::vector<std::size_t> witness;
};
std::vector<ClosureEntry> intersection_closure_with_witnesses(const Arrangement& arr);
std::vector<Subspace> intersection_closure(const Arrangement& arr);

/// The intersection poset Q with dimension function d and a full meet table.
///
/// Elements are sorted by descending d, then by lexicographic RREF entries, so V is
/// always element 0 and the zero subspace (d = -1), when present, is last.
class IntersectionPoset {
 public:
  using Id = int;

  int n() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  Id top() const { return 0; }

  const Subspace& element(Id u) const { return elements_[u]; }
  const std::vector<Subspace>& elements() const { return elements_; }
  int d(Id u) const { return d_[u]; }
  Id meet(Id u, Id v) const { return meet_[static_cast<std::size_t>(u) * size() + v]; }
  bool leq(Id u, Id v) const { return meet(u, v) == u; }
  bool less(Id u, Id v) const { return u != v && leq(u, v); }
  /// Indices into the arrangement whose intersection is this element.
  const std::vector<std::size_t>& witness(Id u) const { return witness_[u]; }
  /// Poset id of the i-th arrangement member.
  Id member(std::size_t i) const { return member_[i]; }
  std::size_t member_count() const { return member_.size(); }
  /// Name of the arrangement member equal to u, if any.
  const std::optional<std::string>& name(Id u) const { return name_[u]; }
  /// Id of a subspace, or nullopt if it is not an element.
  std::optional<Id> find(const Subspace& s) const;

  /// Elements with lo <= d < hi (or <= hi when hi_closed).
  std::vector<Id> interval(int lo, int hi, bool hi_closed) const;
  /// Pairs (lower, upper) with lower covered by upper.
  std::vector<std::pair<Id, Id>> covers() const;

  friend IntersectionPoset build_poset(const Arrangement& arr, ExecutionMode mode);

 private:
  int n_ = 0;
  std::vector<Subspace> elements_;
  std::vector<int> d_;
  std::vector<Id> meet_;
  std::vector<std::vector<std::size_t>> witness_;
  std::vector<Id> member_;
  std::vector<std::optional<std::string>> name_;
};

IntersectionPoset build_poset(const Arrangement& arr, ExecutionMode mode = ExecutionMode::Parallel);

/// A finite poset with an integer rank label, used for isomorphism checks.
struct RankedPoset {
  std::vector<int> rank;
  std::vector<std::vector<bool>> leq;

  std::size_t size() const { return rank.size(); }
};

RankedPoset ranked(const IntersectionPoset& p);
/// Induced subposet on `ids`, with ranks shifted by `shift`.
RankedPoset induced(const IntersectionPoset& p, const std::vector<IntersectionPoset::Id>& ids, int shift = 0);

/// True iff a rank- and order-preserving bijection exists.
bool poset_isomorphic(const RankedPoset& p, const RankedPoset& q);
bool poset_isomorphic(const IntersectionPoset& p, const IntersectionPoset& q);

struct EtaReport {
  bool passed = false;
  Hyperplane hyperplane;
  std::string message;
};

/// Checks that q -> q cap H is an isomorphism Q_(0,n] -> Q^H_[0,n-1] lowering d by one.
EtaReport verify_eta(const Arrangement& arr, std::uint64_t seed);
EtaReport verify_eta_with(const Arrangement& arr, const Hyperplane& h);

struct DependentSet {
  std::vector<std::size_t> indices;
  /// sum of member codimensions minus codimension of the intersection
  int defect = 0;
  bool minimal = false;
};

/// Projective codimension n - d of the intersection of the given members (V for none).
int intersection_codim(const Arrangement& arr, const std::vector<std::size_t>& indices);
bool is_dependent(const Arrangement& arr, const std::vector<std::size_t>& indices);
/// All inclusion-minimal dependent subfamilies, by increasing size then lexicographically.
std::vector<DependentSet> minimal_dependent_sets(const Arrangement& arr);

/// Every member has codimension c and every intersection has codimension divisible by c.
bool is_c_arrangement(const Arrangement& arr, int c);

}  // namespace projarr
