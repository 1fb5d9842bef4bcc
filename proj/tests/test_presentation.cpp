#include <doctest.h>

#include "support.hpp"

using namespace projarr;
using testsupport::binomial;
using testsupport::fixture;

namespace {

std::vector<long> padded(std::vector<long> v, std::size_t size) {
  v.resize(size, 0);
  return v;
}

}  // namespace

TEST_CASE("monomial arithmetic") {
  const Monomial y1{0, {1}}, y2{0, {2}}, x{1, {}};
  CHECK(multiply(y1, y2) == std::pair<Integer, Monomial>{1, Monomial{0, {1, 2}}});
  CHECK(multiply(y2, y1) == std::pair<Integer, Monomial>{-1, Monomial{0, {1, 2}}});
  CHECK(multiply(y1, y1).first == 0);
  CHECK(multiply(x, y1) == std::pair<Integer, Monomial>{1, Monomial{1, {1}}});
  CHECK(Monomial{2, {1, 3}}.degree(2) == 10);
  CHECK(monomials_of_degree(2, 2, 5).size() == 2);
  CHECK(monomials_of_degree(3, 1, 2).size() == 4);  // x, y1y2, y1y3, y2y3
}

TEST_CASE("presentations of small c-arrangements") {
  const Arrangement hyper(3, {testsupport::kernel(3, {0, 1, 0})});
  const auto one = build_presentation(hyper, 1);
  CHECK(one.t == 0);
  REQUIRE(one.relations.size() == 1);
  CHECK(to_string(one.relations[0].poly) == "x");
  CHECK(graded_ranks(one, 4) == std::vector<long>{1, 0, 0, 0, 0});

  const auto skew = build_presentation(fixture("skew_lines"), 2);
  CHECK(skew.t == 1);
  REQUIRE(skew.relations.size() == 1);
  CHECK(to_string(skew.relations[0].poly) == "x^2");
  CHECK(graded_ranks(skew, 6) == std::vector<long>{1, 0, 1, 1, 0, 1, 0});

  const auto three = build_presentation(fixture("three_skew_lines"), 2);
  REQUIRE(three.relations.size() == 2);
  CHECK(three.relations[0].family == RelationFamily::BaseProduct);
  CHECK(to_string(three.relations[0].poly) == "y1*y2");
  CHECK(graded_ranks(three, 6) == std::vector<long>{1, 0, 1, 2, 0, 2, 0});

  for (int m = 2; m <= 5; ++m) {
    const auto p = build_presentation(fixture("points_" + std::to_string(m)), 1);
    CHECK(graded_ranks(p, 3) == std::vector<long>{1, m - 1, 0, 0});
    // R1 relations come from triples avoiding the base point
    std::size_t alternating = 0;
    for (const auto& r : p.relations)
      if (r.family == RelationFamily::Alternating) ++alternating;
    CHECK(alternating == static_cast<std::size_t>(binomial(m - 1, 3)));
  }

  for (int n = 1; n <= 3; ++n) {
    const auto p = build_presentation(fixture("boolean_cp" + std::to_string(n)), 1);
    std::vector<long> expect;
    for (int i = 0; i <= 2 * n; ++i) expect.push_back(binomial(n, i));
    CHECK(graded_ranks(p, 2 * n) == expect);
  }

  CHECK_THROWS_AS(build_presentation(fixture("complexified_real"), 2), std::invalid_argument);
  CHECK_THROWS_AS(build_presentation(fixture("skew_lines"), 1), std::invalid_argument);
}

TEST_CASE("ideal membership") {
  const auto p = build_presentation(fixture("points_4"), 1);
  Polynomial y1y2;
  add_term(y1y2, Monomial{0, {1, 2}}, 1);
  CHECK(in_ideal(p, y1y2, 2));
  Polynomial y1;
  add_term(y1, Monomial{0, {1}}, 1);
  CHECK_FALSE(in_ideal(p, y1, 1));
}

TEST_CASE("atomic complexes") {
  const auto pts = fixture("points_3");
  const auto pp = build_poset(pts);
  const auto s0 = atomic_complex(pts, pp, 0);
  REQUIRE(s0.simplices.size() == 2);
  CHECK(s0.simplices[1].size() == 3);
  const auto sn = atomic_complex(pts, pp, 1);
  CHECK(sn.simplices.size() == 1);

  const auto skew = fixture("skew_lines");
  const auto sp = build_poset(skew);
  const auto s1 = atomic_complex(skew, sp, 1);
  REQUIRE(s1.simplices.size() == 2);
  CHECK(s1.simplices[1].size() == 2);
}

TEST_CASE("the atomic complex computes the level homology") {
  for (const auto& [name, c] : std::vector<std::pair<std::string, int>>{{"empty_cp2", 1},
                                                                        {"points_3", 1},
                                                                        {"points_5", 1},
                                                                        {"boolean_cp3", 1},
                                                                        {"generic_lines_cp2", 1},
                                                                        {"skew_lines", 2},
                                                                        {"three_skew_lines", 2}}) {
    const ProjectiveCohomology cohom(fixture(name));
    for (int k = 0; k <= cohom.poset().n(); ++k) {
      const auto fk = verify_fk_iso(cohom, k);
      INFO(name << " k=" << k << " " << (fk.notes.empty() ? "" : fk.notes.front()));
      CHECK(fk.passed);
      if (!cohom.arrangement().empty()) {
        const auto fg = verify_fg_homotopic(cohom, c, k);
        CHECK(fg.passed);
      }
    }
  }
}

TEST_CASE("presentation agrees with the engine") {
  for (const auto& [name, c] : std::vector<std::pair<std::string, int>>{{"points_2", 1},
                                                                        {"points_3", 1},
                                                                        {"points_4", 1},
                                                                        {"points_5", 1},
                                                                        {"boolean_cp1", 1},
                                                                        {"boolean_cp2", 1},
                                                                        {"boolean_cp3", 1},
                                                                        {"generic_planes_cp3", 1},
                                                                        {"braid_a3", 1},
                                                                        {"skew_lines", 2},
                                                                        {"three_skew_lines", 2}}) {
    const auto arr = fixture(name);
    for (std::size_t base = 0; base < std::min<std::size_t>(arr.size(), 3); ++base) {
      const auto rep = verify_presentation(arr, c, base, 2 * arr.n());
      INFO(name << " base " << base << " " << (rep.notes.empty() ? "" : rep.notes.front()));
      CHECK(rep.passed);
      std::vector<long> engine;
      for (const auto& row : rep.rows) engine.push_back(row.engine_rank);
      CHECK(engine == padded(poincare_polynomial(arr), engine.size()));
    }
  }
}
