#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "projarr/cohomology_ring.hpp"
#include "projarr/oracles.hpp"
#include "projarr/os_presentation.hpp"

namespace projarr {

using Json = nlohmann::ordered_json;

/// Integers are JSON numbers when they fit in 64 bits, decimal strings otherwise.
Json integer_json(const Integer& z);
Integer integer_from_json(const Json& j);
Json chain_json(const IntChain& c);

Json poset_json(const IntersectionPoset& poset);
std::string poset_text(const IntersectionPoset& poset);

Json homology_json(const std::vector<LevelHomology>& levels);
std::string homology_text(const std::vector<LevelHomology>& levels);

Json ring_json(const RingTable& table);
std::string ring_text(const RingTable& table);
/// Inverse of ring_json (representatives included).
RingTable ring_from_json(const Json& j);

Json presentation_json(const PresentationReport& rep);
std::string presentation_text(const PresentationReport& rep);

Json oracle_json(const OracleReport& rep);
std::string oracle_text(const OracleReport& rep);

}  // namespace projarr
