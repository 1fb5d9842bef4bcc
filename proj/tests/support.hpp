#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "projarr/verify.hpp"

namespace testsupport {

inline projarr::Arrangement fixture(const std::string& name) {
  std::ifstream in(std::string(PROJARR_FIXTURE_DIR) + "/" + name + ".json");
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream os;
  os << in.rdbuf();
  return projarr::parse_arrangement(os.str());
}

inline const std::vector<std::string>& all_fixtures() {
  static const std::vector<std::string> names{
      "empty_cp1",  "empty_cp2",         "empty_cp3",         "empty_cp4",         "points_2",
      "points_3",   "points_4",          "points_5",          "boolean_cp1",       "boolean_cp2",
      "boolean_cp3", "generic_lines_cp2", "generic_planes_cp3", "concurrent_lines_cp2", "braid_a3",
      "skew_lines", "three_skew_lines",  "complexified_real", "mixed_cp3",         "mixed_nested_cp3"};
  return names;
}

inline long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline projarr::Subspace span(std::size_t ambient, const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<projarr::Rational>> q;
  for (const auto& r : rows) {
    std::vector<projarr::Rational> row;
    for (long x : r) row.emplace_back(x);
    q.push_back(row);
  }
  return projarr::Subspace(ambient, projarr::QMatrix::from_rows(q, ambient));
}

inline projarr::Subspace kernel(std::size_t ambient, const std::vector<long>& functional) {
  std::vector<projarr::Rational> row;
  for (long x : functional) row.emplace_back(x);
  return projarr::Subspace::from_equations(ambient, projarr::QMatrix::from_rows({row}, ambient));
}

}  // namespace testsupport
