#include <doctest.h>

#include "support.hpp"

using namespace projarr;
using testsupport::fixture;
using testsupport::span;

TEST_CASE("parse arrangements") {
  const auto one = parse_arrangement(R"({"ambient_dim":2,"subspaces":[{"span":[["1","0"]]}]})");
  CHECK(one.n() == 1);
  CHECK(one.size() == 1);
  CHECK(one.d(0) == 0);

  const auto empty = parse_arrangement(R"({"ambient_dim":3,"subspaces":[]})");
  CHECK(empty.n() == 2);
  CHECK(empty.empty());

  const auto collapsed =
      parse_arrangement(R"({"ambient_dim":3,"subspaces":[{"span":[["1","0","0"],["2","0","0"]]}]})");
  CHECK(collapsed[0].dim() == 1);

  const auto eq = parse_arrangement(R"({"ambient_dim":3,"subspaces":[{"name":"H","equations":[["1","-1","0"]]}]})");
  CHECK(eq[0].dim() == 2);
  CHECK(eq.names()[0] == std::optional<std::string>("H"));
}

TEST_CASE("invalid arrangements are rejected") {
  CHECK_THROWS_AS(parse_arrangement(R"({"ambient_dim":3,"subspaces":[{"span":[["1","0","0"]]},{"span":[["2","0","0"]]}]})"),
                  InputError);
  CHECK_THROWS_AS(parse_arrangement(R"({"ambient_dim":2,"subspaces":[{"span":[["1","0"],["0","1"]]}]})"), InputError);
  CHECK_THROWS_AS(parse_arrangement(R"({"ambient_dim":2,"subspaces":[{"span":[["0","0"]]}]})"), InputError);
  CHECK_THROWS_AS(parse_arrangement(R"({"ambient_dim":2,"subspaces":[{"span":[["1","0","0"]]}]})"), InputError);
  CHECK_THROWS_AS(parse_arrangement(R"({"ambient_dim":2)"), InputError);
  CHECK_THROWS_AS(parse_arrangement(R"({"ambient_dim":2,"subspaces":[{"span":[["x","0"]]}]})"), InputError);
}

TEST_CASE("serialization round trip") {
  for (const auto& name : testsupport::all_fixtures()) {
    const auto arr = fixture(name);
    const auto again = parse_arrangement(serialize_arrangement(arr));
    CHECK(again.subspaces() == arr.subspaces());
    CHECK(again.names() == arr.names());
  }
}

TEST_CASE("generic hyperplanes avoid every nonzero intersection") {
  for (const auto& name : {"empty_cp2", "skew_lines", "braid_a3", "complexified_real"}) {
    const auto arr = fixture(name);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Hyperplane h = generic_hyperplane(arr, seed);
      for (const auto& s : intersection_closure(arr))
        if (!s.is_zero()) CHECK_FALSE(h.vanishes_on(s));
      CHECK(generic_hyperplane(arr, seed).functional == h.functional);
    }
  }
}

TEST_CASE("hyperplane sections") {
  const auto points = fixture("points_3");
  const auto cut = hyperplane_section(points, generic_hyperplane(points, 0));
  CHECK(cut.n() == 0);
  CHECK(cut.empty());

  const auto skew = fixture("skew_lines");
  const auto sec = hyperplane_section(skew, generic_hyperplane(skew, 3));
  CHECK(sec.n() == 2);
  REQUIRE(sec.size() == 2);
  CHECK(sec.d(0) == 0);
  CHECK(sec.d(1) == 0);
  CHECK(sec[0] != sec[1]);

  // a member inside H
  const Hyperplane h{{0, 0, 1, 0}};
  CHECK_THROWS_AS(hyperplane_section(skew, h), std::invalid_argument);
}

TEST_CASE("union of arrangements") {
  const auto a = fixture("skew_lines");
  const Arrangement none(4, {});
  CHECK(union_arrangement(a, none).subspaces() == a.subspaces());
  CHECK(union_arrangement(a, a).subspaces() == a.subspaces());

  const Arrangement uv(4, {span(4, {{1, 0, 0, 0}, {0, 0, 0, 1}}), span(4, {{1, 0, 0, 0}, {0, 0, 4, 1}})});
  const Arrangement tilde(4, {span(4, {{0, 1, 0, 0}, {0, 0, 1, 1}}), span(4, {{0, 1, 0, 0}, {0, 0, 5, 1}})});
  const auto all = union_arrangement(uv, tilde);
  CHECK(all.size() == 4);
  CHECK(build_poset(all).size() == build_poset(fixture("complexified_real")).size());
}

TEST_CASE("with_base moves one member to the front") {
  const auto arr = fixture("points_4");
  const auto b = arr.with_base(2);
  CHECK(b[0] == arr[2]);
  CHECK(b[1] == arr[0]);
  CHECK(b[2] == arr[1]);
  CHECK(b[3] == arr[3]);
}
