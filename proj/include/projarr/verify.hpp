#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "projarr/report.hpp"

namespace projarr {

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct VerifyReport {
  bool passed = true;
  std::vector<Check> checks;

  void add(Check c);
};

/// Random chain on the order complex: a walk upwards from a random element.
PosetSimplex random_simplex(const IntersectionPoset& poset, std::mt19937_64& rng, std::size_t max_vertices);

/// dd = 0 (absolute, relative, and on every level matrix), shuffle and push chain-map
/// identities, class_of(boundary) = 0 and closure of relative cycles under the meet product.
Check chain_algebra_check(const ProjectiveCohomology& cohom, std::uint64_t seed, std::size_t samples = 100);

/// U A Vt = D, Smith divisibility and unimodularity of U, Vt on random matrices up to 12 x 12.
Check snf_check(std::uint64_t seed, std::size_t samples = 100);

/// Ring tables built serially and in parallel are identical.
Check serial_parallel_check(const Arrangement& arr);

/// The smallest c for which arr is a c-arrangement, if any.
std::optional<int> detect_c(const Arrangement& arr);

/// Oracles, ring axioms, generic sections (seeds seed .. seed + sections - 1), chain algebra,
/// and for c-arrangements the atomic-complex checks and the presentation.
VerifyReport verify_arrangement(const Arrangement& arr, std::uint64_t seed, std::optional<int> c = std::nullopt,
                                std::size_t base_index = 0, std::optional<int> max_degree = std::nullopt,
                                std::size_t sections = 10);

Json verify_json(const VerifyReport& rep);
std::string verify_text(const VerifyReport& rep);

}  // namespace projarr
