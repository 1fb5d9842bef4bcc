#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "projarr/cohomology_ring.hpp"

namespace projarr {

/// x^x_power * y_{ys[0]} * ... with ys strictly increasing (indices 1..t).
struct Monomial {
  int x_power = 0;
  std::vector<std::size_t> ys;

  int degree(int c) const { return 2 * x_power + static_cast<int>(ys.size()) * (2 * c - 1); }
  auto operator<=>(const Monomial&) const = default;
};

/// Element of the free graded-commutative ring on x (degree 2) and y_i (degree 2c-1).
using Polynomial = std::map<Monomial, Integer>;

void add_term(Polynomial& p, const Monomial& m, const Integer& coeff);
/// Product of monomials with the Koszul sign; coefficient 0 when a y repeats.
std::pair<Integer, Monomial> multiply(const Monomial& a, const Monomial& b);
Polynomial multiply(const Polynomial& a, const Polynomial& b);
std::string to_string(const Monomial& m);
std::string to_string(const Polynomial& p);

enum class RelationFamily { Alternating, BaseProduct, XPower };

struct Relation {
  RelationFamily family;
  /// Member indices (base-first order) of the minimally dependent set, empty for x^c.
  std::vector<std::size_t> dependent_set;
  Polynomial poly;
  int degree = 0;
};

/// Generators x, y_1..y_t and the three relation families of a c-arrangement,
/// with members re-ordered so the chosen base A_0 comes first.
struct Presentation {
  int c = 1;
  std::size_t t = 0;
  std::size_t base_index = 0;
  Arrangement ordered;
  std::vector<Relation> relations;

  int y_degree() const { return 2 * c - 1; }
};

/// Throws std::invalid_argument unless `arr` is a c-arrangement with at least one member.
Presentation build_presentation(const Arrangement& arr, int c, std::size_t base_index = 0);

/// All monomials of the given degree in x, y_1..y_t.
std::vector<Monomial> monomials_of_degree(std::size_t t, int c, int degree);

/// Rank over Q of (R/I) in degrees 0..max_degree.
std::vector<long> graded_ranks(const Presentation& p, int max_degree);
/// True iff the homogeneous polynomial lies in the degree component of I.
bool in_ideal(const Presentation& p, const Polynomial& poly, int degree);

/// Atomic complex S_k with its shifted reduced chain complex D^k: D^k_r = subsets of size r.
struct AtomicComplex {
  int k = 0;
  std::vector<std::vector<std::vector<std::size_t>>> simplices;  // [r] -> sorted index sets of size r
  ChainComplex complex;

  std::size_t index_of(const std::vector<std::size_t>& s) const;
};

AtomicComplex atomic_complex(const Arrangement& arr, const IntersectionPoset& poset, int k);

/// Degree-wise matrices of a map D^k -> RelativeComplex(k) (degree shift `shift`).
struct ChainMapMatrices {
  int shift = 0;
  std::vector<ZMatrix> matrices;  // [r]: dim RC_{r+shift} x dim D_r
};

/// alpha_{i_1} meet ... meet alpha_{i_r} with alpha_i = [A_i, V]; the empty product is [V].
IntChain atomic_product(const IntersectionPoset& poset, const std::vector<std::size_t>& indices,
                        const std::vector<IntersectionPoset::Id>& members);

ChainMapMatrices fk_chain_map(const ProjectiveCohomology& cohom, const AtomicComplex& ac);
ChainMapMatrices gk_chain_map(const ProjectiveCohomology& cohom, const AtomicComplex& ac, int c);
ChainMapMatrices homotopy_k(const ProjectiveCohomology& cohom, const AtomicComplex& ac, int c);

/// True iff the matrices commute with the boundaries of D^k and RelativeComplex(k).
bool is_chain_map(const ChainMapMatrices& f, const AtomicComplex& ac, const RelativeComplex& rc);

struct CheckReport {
  bool passed = true;
  std::vector<std::string> notes;
};

/// f^k induces an isomorphism H(D^k) -> H(RelativeComplex(k)).
CheckReport verify_fk_iso(const ProjectiveCohomology& cohom, int k);
/// f^k and g^k agree on homology classes and f - g = K d + d K as matrices.
CheckReport verify_fg_homotopic(const ProjectiveCohomology& cohom, int c, int k);

/// pi(x^s y_{i_1} ... y_{i_r}) computed through the ring table.
RingElement pi_image(const ProjectiveCohomology& cohom, const RingTable& table, int c, const Monomial& m);
RingElement pi_image(const ProjectiveCohomology& cohom, const RingTable& table, int c, const Polynomial& p, int degree);

struct PresentationRow {
  int degree = 0;
  long quotient_rank = 0;  // rank of R/I
  long engine_rank = 0;    // free rank from the decomposition
  long image_rank = 0;     // rank of the span of pi(monomials)
};

struct PresentationReport {
  bool passed = true;
  bool relations_vanish = true;
  bool torsion_free = true;
  Presentation presentation;
  std::vector<PresentationRow> rows;
  std::vector<std::string> notes;
};

/// Checks pi(I) = 0 and, degree by degree, rank(R/I) = rank(span pi) = engine free rank.
/// `arr` is in its original order; `base_index` picks A_0.
PresentationReport verify_presentation(const Arrangement& arr, int c, std::size_t base_index, int max_degree,
                                       ExecutionMode mode = ExecutionMode::Parallel);

}  // namespace projarr
