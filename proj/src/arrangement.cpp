#include "projarr/arrangement.hpp"

#include <algorithm>
#include <random>
#include <set>

#include <json.hpp>

#include "projarr/intersection_poset.hpp"

namespace projarr {

using nlohmann::json;

Arrangement::Arrangement(std::size_t ambient_dim, std::vector<Subspace> subspaces,
                         std::vector<std::optional<std::string>> names)
    : ambient_dim_(ambient_dim), subspaces_(std::move(subspaces)), names_(std::move(names)) {
  if (ambient_dim_ < 1) throw InputError("ambient_dim must be at least 1");
  if (names_.empty()) names_.resize(subspaces_.size());
  if (names_.size() != subspaces_.size()) throw InputError("name list does not match subspace list");
  std::set<Subspace> seen;
  for (std::size_t i = 0; i < subspaces_.size(); ++i) {
    const auto& s = subspaces_[i];
    if (s.ambient_dim() != ambient_dim_)
      throw InputError("subspace " + std::to_string(i) + " has ambient dimension " +
                       std::to_string(s.ambient_dim()) + ", expected " + std::to_string(ambient_dim_));
    if (s.is_zero()) throw InputError("subspace " + std::to_string(i) + " is zero (empty projectivization)");
    if (s.is_full()) throw InputError("subspace " + std::to_string(i) + " is not proper");
    if (!seen.insert(s).second) throw InputError("subspace " + std::to_string(i) + " duplicates an earlier one");
  }
}

Arrangement Arrangement::with_base(std::size_t index) const {
  if (index >= subspaces_.size()) throw std::out_of_range("base index out of range");
  std::vector<Subspace> subs{subspaces_[index]};
  std::vector<std::optional<std::string>> names{names_[index]};
  for (std::size_t i = 0; i < subspaces_.size(); ++i) {
    if (i == index) continue;
    subs.push_back(subspaces_[i]);
    names.push_back(names_[i]);
  }
  return Arrangement(ambient_dim_, std::move(subs), std::move(names));
}

Subspace Hyperplane::subspace() const {
  return Subspace::from_equations(functional.size(), QMatrix(1, functional.size(), functional));
}

bool Hyperplane::vanishes_on(const Subspace& s) const {
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < functional.size(); ++j) acc += functional[j] * s.basis()(i, j);
    if (acc != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

Rational rational_from_json(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
  throw InputError("rational entries must be strings like \"p/q\" or integers");
}

QMatrix rows_from_json(const json& rows, std::size_t ambient_dim, const std::string& where) {
  if (!rows.is_array()) throw InputError(where + " must be an array of rows");
  QMatrix m(rows.size(), ambient_dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != ambient_dim)
      throw InputError(where + " row " + std::to_string(i) + " must have " + std::to_string(ambient_dim) + " entries");
    for (std::size_t j = 0; j < ambient_dim; ++j) {
      try {
        m(i, j) = rational_from_json(row[j]);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
    }
  }
  return m;
}

}  // namespace

Arrangement parse_arrangement(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("arrangement document must be a JSON object");
  if (!doc.contains("ambient_dim") || !doc["ambient_dim"].is_number_integer())
    throw InputError("missing integer field \"ambient_dim\"");
  const long long amb = doc["ambient_dim"].get<long long>();
  if (amb < 1) throw InputError("ambient_dim must be at least 1");
  const auto ambient_dim = static_cast<std::size_t>(amb);
  const json subs = doc.value("subspaces", json::array());
  if (!subs.is_array()) throw InputError("\"subspaces\" must be an array");

  std::vector<Subspace> members;
  std::vector<std::optional<std::string>> names;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const auto& entry = subs[i];
    const std::string where = "subspaces[" + std::to_string(i) + "]";
    if (!entry.is_object()) throw InputError(where + " must be an object");
    const bool has_span = entry.contains("span");
    const bool has_eq = entry.contains("equations");
    if (has_span == has_eq) throw InputError(where + " needs exactly one of \"span\" or \"equations\"");
    if (has_span)
      members.emplace_back(ambient_dim, rows_from_json(entry["span"], ambient_dim, where + ".span"));
    else
      members.push_back(
          Subspace::from_equations(ambient_dim, rows_from_json(entry["equations"], ambient_dim, where + ".equations")));
    if (entry.contains("name")) {
      if (!entry["name"].is_string()) throw InputError(where + ".name must be a string");
      names.emplace_back(entry["name"].get<std::string>());
    } else {
      names.emplace_back(std::nullopt);
    }
  }
  return Arrangement(ambient_dim, std::move(members), std::move(names));
}

std::string serialize_arrangement(const Arrangement& arr) {
  json doc;
  doc["ambient_dim"] = arr.ambient_dim();
  doc["subspaces"] = json::array();
  for (std::size_t i = 0; i < arr.size(); ++i) {
    json entry;
    if (arr.names()[i]) entry["name"] = *arr.names()[i];
    json rows = json::array();
    const auto& b = arr[i].basis();
    for (std::size_t r = 0; r < b.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < b.cols(); ++c) row.push_back(format_rational(b(r, c)));
      rows.push_back(row);
    }
    entry["span"] = rows;
    doc["subspaces"].push_back(entry);
  }
  return doc.dump(2);
}

// ---------------------------------------------------------------------------
// Hyperplane sections

Hyperplane generic_hyperplane(const Arrangement& arr, std::uint64_t seed) {
  const auto closure = intersection_closure(arr);
  std::mt19937_64 rng(seed);
  for (long bound = 2;; bound = bound * 2 + 1) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      std::uniform_int_distribution<long> dist(-bound, bound);
      Hyperplane h;
      h.functional.resize(arr.ambient_dim());
      bool nonzero = false;
      for (auto& x : h.functional) {
        x = dist(rng);
        nonzero = nonzero || x != 0;
      }
      if (!nonzero) continue;
      const bool generic = std::none_of(closure.begin(), closure.end(), [&](const Subspace& q) {
        return !q.is_zero() && h.vanishes_on(q);
      });
      if (generic) return h;
    }
  }
}

Arrangement hyperplane_section(const Arrangement& arr, const Hyperplane& h) {
  if (h.functional.size() != arr.ambient_dim()) throw std::invalid_argument("functional has wrong length");
  const Subspace hs = h.subspace();
  if (hs.is_full()) throw std::invalid_argument("functional is zero");
  const QMatrix& hb = hs.basis();
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < hb.rows(); ++i) {
    std::size_t p = 0;
    while (hb(i, p) == 0) ++p;
    pivots.push_back(p);
  }
  auto coordinates = [&](const Subspace& s) {
    QMatrix m(s.dim(), hb.rows());
    for (std::size_t i = 0; i < s.dim(); ++i)
      for (std::size_t j = 0; j < pivots.size(); ++j) m(i, j) = s.basis()(i, pivots[j]);
    return Subspace(hb.rows(), m);
  };

  std::vector<Subspace> members;
  std::vector<std::optional<std::string>> names;
  std::set<Subspace> seen;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (h.vanishes_on(arr[i]))
      throw std::invalid_argument("hyperplane is not generic: it contains subspace " + std::to_string(i));
    const Subspace cut = subspace_intersection(arr[i], hs);
    if (cut.is_zero()) continue;
    Subspace local = coordinates(cut);
    if (!seen.insert(local).second) continue;
    members.push_back(std::move(local));
    names.push_back(arr.names()[i]);
  }
  return Arrangement(hb.rows(), std::move(members), std::move(names));
}

Arrangement union_arrangement(const Arrangement& a, const Arrangement& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  std::vector<Subspace> members = a.subspaces();
  auto names = a.names();
  std::set<Subspace> seen(members.begin(), members.end());
  for (std::size_t i = 0; i < b.size(); ++i)
    if (seen.insert(b[i]).second) {
      members.push_back(b[i]);
      names.push_back(b.names()[i]);
    }
  return Arrangement(a.ambient_dim(), std::move(members), std::move(names));
}

}  // namespace projarr
