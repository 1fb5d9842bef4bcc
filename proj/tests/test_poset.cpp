#include <doctest.h>

#include <algorithm>

#include "support.hpp"

using namespace projarr;
using testsupport::fixture;
using testsupport::span;

TEST_CASE("poset of the empty arrangement") {
  const auto p = build_poset(fixture("empty_cp3"));
  CHECK(p.size() == 1);
  CHECK(p.d(0) == 3);
  CHECK(p.interval(0, 3, true) == std::vector<IntersectionPoset::Id>{0});
}

TEST_CASE("poset of three points") {
  const auto p = build_poset(fixture("points_3"));
  REQUIRE(p.size() == 5);
  std::vector<int> d;
  for (std::size_t i = 0; i < p.size(); ++i) d.push_back(p.d(static_cast<int>(i)));
  CHECK(d == std::vector<int>{1, 0, 0, 0, -1});
  CHECK(p.interval(0, 1, false).size() == 3);
  CHECK(p.interval(1, 1, true) == std::vector<IntersectionPoset::Id>{0});
  CHECK(p.covers().size() == 6);
}

TEST_CASE("poset of the complexified real example") {
  const auto arr = fixture("complexified_real");
  const auto p = build_poset(arr);
  // V, four lines, u cap v, u~ cap v~, and the zero subspace
  REQUIRE(p.size() == 8);
  const auto u = p.member(0), v = p.member(1), ut = p.member(2), vt = p.member(3);
  CHECK(p.d(u) == 1);
  CHECK(p.d(v) == 1);
  CHECK(p.d(ut) == 1);
  CHECK(p.d(vt) == 1);
  CHECK(p.d(p.meet(u, v)) == 0);
  CHECK(p.d(p.meet(ut, vt)) == 0);
  CHECK(p.element(p.meet(u, v)) == span(4, {{1, 0, 0, 0}}));
  CHECK(p.element(p.meet(ut, vt)) == span(4, {{0, 1, 0, 0}}));
  CHECK(p.d(p.meet(u, ut)) == -1);
  CHECK(p.d(p.meet(v, vt)) == -1);
  CHECK(p.d(p.top()) == 3);
}

TEST_CASE("meet table laws on every fixture") {
  for (const auto& name : testsupport::all_fixtures()) {
    const auto arr = fixture(name);
    const auto p = build_poset(arr);
    const int n = p.n();
    const auto s = static_cast<int>(p.size());
    for (int a = 0; a < s; ++a) {
      CHECK(p.meet(a, a) == a);
      CHECK(p.meet(p.top(), a) == a);
      for (int b = 0; b < s; ++b) {
        CHECK(p.meet(a, b) == p.meet(b, a));
        CHECK(p.element(p.meet(a, b)) == subspace_intersection(p.element(a), p.element(b)));
        CHECK(p.d(p.meet(a, b)) >= p.d(a) + p.d(b) - n);
        if (p.less(a, b)) CHECK(p.d(a) < p.d(b));
        for (int c = 0; c < s; ++c) CHECK(p.meet(p.meet(a, b), c) == p.meet(a, p.meet(b, c)));
      }
    }
    // witnesses realize their elements
    for (int a = 0; a < s; ++a) {
      Subspace w = Subspace::full(arr.ambient_dim());
      for (auto i : p.witness(a)) w = subspace_intersection(w, arr[i]);
      CHECK(w == p.element(a));
    }
    const auto serial = build_poset(arr, ExecutionMode::Serial);
    CHECK(serial.elements() == p.elements());
    for (int a = 0; a < s; ++a)
      for (int b = 0; b < s; ++b) CHECK(serial.meet(a, b) == p.meet(a, b));
  }
}

TEST_CASE("generic sections preserve the upper poset") {
  CHECK(verify_eta(fixture("empty_cp2"), 0).passed);
  const auto skew = verify_eta(fixture("skew_lines"), 0);
  CHECK(skew.passed);
  for (const auto& name : {"three_skew_lines", "braid_a3", "complexified_real", "mixed_cp3"})
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto rep = verify_eta(fixture(name), seed);
      INFO(name << ": " << rep.message);
      CHECK(rep.passed);
    }
  // H = {z_2 = 0} contains L1
  const auto bad = verify_eta_with(fixture("skew_lines"), Hyperplane{{0, 0, 1, 0}});
  CHECK_FALSE(bad.passed);
}

TEST_CASE("minimally dependent sets") {
  CHECK(minimal_dependent_sets(fixture("skew_lines")).empty());
  const auto three = minimal_dependent_sets(fixture("three_skew_lines"));
  REQUIRE(three.size() == 1);
  CHECK(three[0].indices == std::vector<std::size_t>{0, 1, 2});
  CHECK(three[0].defect == 2);
  const auto arr = fixture("points_4");
  for (std::size_t i = 0; i < arr.size(); ++i) CHECK_FALSE(is_dependent(arr, {i}));
  // every triple of points is minimally dependent, no pair is dependent
  const auto pts = minimal_dependent_sets(arr);
  CHECK(pts.size() == 4);
  for (const auto& dep : pts) CHECK(dep.indices.size() == 3);
  CHECK(intersection_codim(fixture("skew_lines"), {0, 1}) == 4);
}

TEST_CASE("c-arrangements") {
  CHECK(is_c_arrangement(fixture("points_5"), 1));
  CHECK(is_c_arrangement(fixture("skew_lines"), 2));
  CHECK(is_c_arrangement(fixture("three_skew_lines"), 2));
  CHECK_FALSE(is_c_arrangement(fixture("skew_lines"), 1));
  CHECK_FALSE(is_c_arrangement(fixture("complexified_real"), 2));
  const Arrangement points_cp2(3, {span(3, {{1, 0, 0}}), span(3, {{0, 1, 0}})});
  CHECK_FALSE(is_c_arrangement(points_cp2, 2));
}

TEST_CASE("poset isomorphism") {
  const auto p = build_poset(fixture("points_3"));
  CHECK(poset_isomorphic(p, p));
  const Arrangement other(2, {span(2, {{1, 3}}), span(2, {{2, -1}}), span(2, {{0, 1}})});
  CHECK(poset_isomorphic(p, build_poset(other)));
  CHECK_FALSE(poset_isomorphic(p, build_poset(fixture("points_4"))));
  RankedPoset chain{{0, 1}, {{true, true}, {false, true}}};
  RankedPoset anti{{0, 1}, {{true, false}, {false, true}}};
  CHECK_FALSE(poset_isomorphic(chain, anti));
}
