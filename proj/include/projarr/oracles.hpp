#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "projarr/intersection_poset.hpp"

namespace projarr {

/// mu(u, v) for u <= v in the reversed-inclusion order, i.e. u contains v.
class MobiusTable {
 public:
  explicit MobiusTable(const IntersectionPoset& poset);

  /// mu(upper, lower) where lower is contained in upper; zero when not comparable.
  long operator()(IntersectionPoset::Id upper, IntersectionPoset::Id lower) const;
  std::size_t size() const { return size_; }
  /// Re-sums every interval: sum_{upper >= w >= lower} mu(upper, w) == 0 for upper != lower.
  bool recursion_holds(const IntersectionPoset& poset) const;

 private:
  std::size_t size_;
  std::vector<long> mu_;
};

MobiusTable mobius(const IntersectionPoset& poset);

/// sum_q |mu(V, q)| t^{codim q} for the central complement in C^{n+1}.
std::vector<long> os_poincare_central(const IntersectionPoset& poset);
/// Central polynomial divided by (1 + t). Throws std::invalid_argument unless every
/// member is a hyperplane, std::logic_error on a nonzero remainder.
std::vector<long> os_poincare_projective(const Arrangement& arr);

/// chi of PV minus the arrangement, by additivity over the strata of the poset.
long stratified_euler(const IntersectionPoset& poset);

struct OracleReport {
  bool passed = true;
  bool hyperplane = false;
  std::vector<long> engine_poincare;
  std::vector<long> os_poincare;  // empty unless hyperplane
  long engine_euler = 0;
  long oracle_euler = 0;
  std::vector<std::string> diffs;
};

/// Runs every applicable oracle against the given Betti vector b^0..b^{2n}.
OracleReport compare(const Arrangement& arr, const std::vector<long>& betti);
/// Same, with the Betti vector from the engine.
OracleReport compare(const Arrangement& arr);

}  // namespace projarr
