#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "projarr/exact_linear_algebra.hpp"

namespace projarr {

/// Raised for malformed or invalid arrangement input (CLI exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite family of proper nonzero linear subspaces of Q^{n+1}, read over C.
class Arrangement {
 public:
  Arrangement() = default;
  /// Validates: members proper, nonzero, pairwise distinct, same ambient dimension.
  Arrangement(std::size_t ambient_dim, std::vector<Subspace> subspaces,
              std::vector<std::optional<std::string>> names = {});

  std::size_t ambient_dim() const { return ambient_dim_; }
  /// Projective dimension n of PV.
  int n() const { return static_cast<int>(ambient_dim_) - 1; }
  std::size_t size() const { return subspaces_.size(); }
  bool empty() const { return subspaces_.empty(); }
  const std::vector<Subspace>& subspaces() const { return subspaces_; }
  const Subspace& operator[](std::size_t i) const { return subspaces_[i]; }
  const std::vector<std::optional<std::string>>& names() const { return names_; }
  /// Projective dimension d(A) = dim A - 1 of the i-th member.
  int d(std::size_t i) const { return static_cast<int>(subspaces_[i].dim()) - 1; }

  /// Same members with `index` moved to the front, others keeping their order.
  Arrangement with_base(std::size_t index) const;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Subspace> subspaces_;
  std::vector<std::optional<std::string>> names_;
};

/// Kernel of a nonzero rational functional.
struct Hyperplane {
  QVector functional;

  Subspace subspace() const;
  bool vanishes_on(const Subspace& s) const;
};

Arrangement parse_arrangement(const std::string& json_text);
std::string serialize_arrangement(const Arrangement& arr);

/// Deterministic pseudo-random functional vanishing on no nonzero intersection of `arr`.
Hyperplane generic_hyperplane(const Arrangement& arr, std::uint64_t seed);

/// A^H = {A cap H}, written in the coordinates of the RREF basis of H.
/// Members whose section is zero are dropped. Throws std::invalid_argument when some A lies in H.
Arrangement hyperplane_section(const Arrangement& arr, const Hyperplane& h);

/// Set union, first argument's order first.
Arrangement union_arrangement(const Arrangement& a, const Arrangement& b);

}  // namespace projarr
