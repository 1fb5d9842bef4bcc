#pragma once

#include <vector>

#include "projarr/exact_linear_algebra.hpp"

namespace projarr {

/// A finite free chain complex over Z. boundary[r] maps C_r -> C_{r-1}
/// and has shape dims[r-1] x dims[r]; boundary[0] has zero rows.
struct ChainComplex {
  std::vector<std::size_t> dims;
  std::vector<ZMatrix> boundary;

  std::size_t top_degree() const { return dims.empty() ? 0 : dims.size() - 1; }
  std::size_t dim(std::size_t r) const { return r < dims.size() ? dims[r] : 0; }
  /// boundary[r], or the appropriate zero matrix out of range.
  ZMatrix boundary_at(std::size_t r) const;
};

/// Integral homology of one degree, with explicit generators and a coordinatizer.
///
/// Generators are ordered free first, then torsion by increasing order. For a cycle z,
/// coordinatizer * z gives its class coordinates; torsion entries must be read modulo order.
struct DegreeHomology {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
  std::vector<ZVector> generators;
  /// 0 for a free generator, the order otherwise
  std::vector<Integer> orders;
  ZMatrix coordinatizer;

  std::size_t generator_count() const { return generators.size(); }
};

struct HomologySummary {
  std::vector<DegreeHomology> degrees;

  const DegreeHomology& operator[](std::size_t r) const { return degrees[r]; }
  std::size_t free_rank(std::size_t r) const { return r < degrees.size() ? degrees[r].free_rank : 0; }
};

HomologySummary compute_homology(const ChainComplex& complex);

/// True iff boundary[r] * z == 0.
bool is_cycle(const ChainComplex& complex, std::size_t r, const ZVector& z);

/// Class coordinates of a cycle with torsion entries reduced; throws if z is not a cycle.
ZVector homology_coordinates(const ChainComplex& complex, const HomologySummary& hom, std::size_t r,
                             const ZVector& z);

}  // namespace projarr
