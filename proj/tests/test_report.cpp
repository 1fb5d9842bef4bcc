#include <doctest.h>

#include "support.hpp"

using namespace projarr;
using testsupport::fixture;

TEST_CASE("integers serialize as numbers or strings") {
  CHECK(integer_json(Integer(-7)) == Json(-7));
  const Integer big("123456789012345678901234567890");
  CHECK(integer_json(big).is_string());
  CHECK(integer_from_json(integer_json(big)) == big);
}

TEST_CASE("ring tables round trip through JSON") {
  for (const auto& name : {"skew_lines", "braid_a3", "points_4"}) {
    const RingTable t = ring_table(fixture(name));
    const Json j = ring_json(t);
    const RingTable back = ring_from_json(Json::parse(j.dump()));
    CHECK(back.products == t.products);
    CHECK(back.representatives == t.representatives);
    CHECK(ring_json(back) == j);
    // deterministic across runs
    CHECK(ring_json(ring_table(fixture(name))).dump() == j.dump());
  }
}

TEST_CASE("poset JSON") {
  const Json j = poset_json(build_poset(fixture("empty_cp2")));
  CHECK(j["elements"].size() == 1);
  CHECK(j["covers"].empty());
  const auto skew = build_poset(fixture("skew_lines"));
  const Json s = poset_json(skew);
  const auto l1 = static_cast<std::size_t>(skew.member(0));
  CHECK(s["elements"][l1]["name"] == "L1");
  CHECK(s["elements"][l1]["basis"][0][0] == "1");
  CHECK(s["elements"][l1]["d"] == 1);
}

TEST_CASE("homology and presentation JSON") {
  const ProjectiveCohomology cohom(fixture("points_3"));
  const Json h = homology_json(cohom.levels());
  CHECK(h[0]["k"] == 0);
  CHECK(h[0]["degrees"][0]["r"] == 1);
  CHECK(h[0]["degrees"][0]["free_rank"] == 2);

  const auto rep = verify_presentation(fixture("skew_lines"), 2, 0, 6);
  const Json p = presentation_json(rep);
  CHECK(p["generators"].size() == 2);
  CHECK(p["relations"].size() == 1);
  CHECK(p["passed"] == true);
  CHECK(presentation_text(rep).find("PASS") != std::string::npos);
}

TEST_CASE("verify report") {
  const auto rep = verify_arrangement(fixture("skew_lines"), 0, std::nullopt, 0, std::nullopt, 3);
  CHECK(rep.passed);
  CHECK(verify_json(rep)["passed"] == true);
  CHECK(detect_c(fixture("skew_lines")) == std::optional<int>(2));
  CHECK_FALSE(detect_c(fixture("complexified_real")).has_value());
}
