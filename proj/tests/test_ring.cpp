#include <doctest.h>

#include "support.hpp"

using namespace projarr;
using testsupport::binomial;
using testsupport::fixture;

namespace {

std::vector<std::size_t> of_degree(const RingTable& t, int degree) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t.basis[i].degree == degree && t.basis[i].torsion_order == 0) out.push_back(i);
  return out;
}

bool is_unit_multiple(const RingElement& e, std::size_t index) {
  for (std::size_t m = 0; m < e.coords.size(); ++m) {
    const Integer& c = e.coords[m];
    if (m == index ? (c != 1 && c != -1) : c != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Poincare polynomials") {
  CHECK(poincare_polynomial(fixture("empty_cp3")) == std::vector<long>{1, 0, 1, 0, 1, 0, 1});
  CHECK(poincare_polynomial(fixture("points_3")) == std::vector<long>{1, 2, 0});
  CHECK(poincare_polynomial(fixture("boolean_cp2")) == std::vector<long>{1, 2, 1, 0, 0});
  CHECK(poincare_polynomial(fixture("skew_lines")) == std::vector<long>{1, 0, 1, 1, 0, 1, 0});
  CHECK(poincare_polynomial(fixture("three_skew_lines")) == std::vector<long>{1, 0, 1, 2, 0, 2, 0});
  // m generic hyperplanes in CP^n: affine complement of m - 1 generic hyperplanes in C^n
  CHECK(poincare_polynomial(fixture("generic_lines_cp2")) == std::vector<long>{1, 3, 3, 0, 0});
  CHECK(poincare_polynomial(fixture("generic_planes_cp3")) == std::vector<long>{1, 4, 6, 4, 0, 0, 0});
}

TEST_CASE("the ring of CP^n") {
  for (int n = 1; n <= 4; ++n) {
    const RingTable t = ring_table(fixture("empty_cp" + std::to_string(n)));
    REQUIRE(t.size() == static_cast<std::size_t>(n + 1));
    const auto x_ids = of_degree(t, 2);
    REQUIRE(x_ids.size() == 1);
    const RingElement x = t.basis_element(x_ids[0]);
    RingElement power = t.unit();
    for (int i = 1; i <= n; ++i) {
      power = t.multiply(power, x);
      CHECK(is_unit_multiple(power, of_degree(t, 2 * i).at(0)));
    }
    CHECK(t.multiply(power, x).is_zero());
  }
}

TEST_CASE("products on small arrangements") {
  const RingTable pts = ring_table(fixture("points_3"));
  for (auto i : of_degree(pts, 1))
    for (auto j : of_degree(pts, 1)) CHECK(pts.multiply(pts.basis_element(i), pts.basis_element(j)).is_zero());

  const RingTable skew = ring_table(fixture("skew_lines"));
  const auto xs = of_degree(skew, 2), ys = of_degree(skew, 3), tops = of_degree(skew, 5);
  REQUIRE(xs.size() == 1);
  REQUIRE(ys.size() == 1);
  REQUIRE(tops.size() == 1);
  const RingElement x = skew.basis_element(xs[0]), y = skew.basis_element(ys[0]);
  CHECK(is_unit_multiple(skew.multiply(x, y), tops[0]));
  CHECK(skew.multiply(x, x).is_zero());
  CHECK(skew.multiply(y, y).is_zero());
}

TEST_CASE("degree-3 classes of the complexified real example multiply to zero") {
  const ProjectiveCohomology cohom(fixture("complexified_real"));
  const auto& p = cohom.poset();
  const RingTable t = cohom.table();
  const IntChain a = IntChain({p.member(0), 0}, 1) - IntChain({p.member(1), 0}, 1);
  const IntChain b = IntChain({p.member(2), 0}, 1) - IntChain({p.member(3), 0}, 1);
  const RingElement ea = cohom.element_of(1, a, 1), eb = cohom.element_of(1, b, 1);
  CHECK(ea.degree == 3);
  CHECK(eb.degree == 3);
  CHECK_FALSE(ea.is_zero());
  CHECK_FALSE(eb.is_zero());
  CHECK(t.multiply(ea, eb).is_zero());
}

TEST_CASE("ring axioms on every fixture") {
  for (const auto& name : testsupport::all_fixtures()) {
    const auto rep = verify_ring_axioms(ring_table(fixture(name)));
    INFO(name << ": " << (rep.failures.empty() ? "" : rep.failures.front()));
    CHECK(rep.passed);
  }
}

TEST_CASE("corrupted tables fail the axioms") {
  RingTable t = ring_table(fixture("skew_lines"));
  const auto x = of_degree(t, 2).at(0), y = of_degree(t, 3).at(0);
  for (auto& c : t.products[x][y]) c = -c;
  CHECK_FALSE(verify_ring_axioms(t).passed);

  RingTable u = ring_table(fixture("empty_cp2"));
  const auto one = of_degree(u, 0).at(0);
  u.products[one][one][one] = 2;
  CHECK_FALSE(verify_ring_axioms(u).passed);
}

TEST_CASE("serial and parallel tables agree") {
  for (const auto& name : {"braid_a3", "three_skew_lines", "complexified_real", "generic_planes_cp3"}) {
    const Check c = serial_parallel_check(fixture(name));
    INFO(name);
    CHECK(c.passed);
  }
}

TEST_CASE("affine mode") {
  const Arrangement one(3, {testsupport::kernel(3, {1, 0, 0})});
  const AffineCohomology line(one, 0);
  CHECK(line.table().poincare() == std::vector<long>{1, 0, 0, 0, 0});

  for (int m = 2; m <= 5; ++m) {
    const AffineCohomology aff(fixture("points_" + std::to_string(m)), 0);
    const RingTable& t = aff.table();
    CHECK(t.poincare() == std::vector<long>{1, m - 1, 0});
    for (auto i : of_degree(t, 1))
      for (auto j : of_degree(t, 1)) CHECK(t.multiply(t.basis_element(i), t.basis_element(j)).is_zero());
    CHECK(verify_ring_axioms(t).passed);
  }

  for (int n = 1; n <= 3; ++n) {
    const AffineCohomology aff(fixture("boolean_cp" + std::to_string(n)), 0);
    const RingTable& t = aff.table();
    for (int i = 0; i <= 2 * n; ++i) CHECK(t.poincare()[static_cast<std::size_t>(i)] == binomial(n, i));
    CHECK(verify_ring_axioms(t).passed);
    const auto ones = of_degree(t, 1);
    for (auto i : ones) CHECK(t.multiply(t.basis_element(i), t.basis_element(i)).is_zero());
    // products of distinct degree-1 generators form a Z-basis of each degree (exterior algebra)
    for (int deg = 2; deg <= n; ++deg) {
      const auto target = of_degree(t, deg);
      std::vector<std::vector<Integer>> rows;
      std::vector<std::size_t> pick(static_cast<std::size_t>(deg));
      for (std::size_t q = 0; q < pick.size(); ++q) pick[q] = q;
      for (;;) {
        RingElement e = t.unit();
        for (auto q : pick) e = t.multiply(e, t.basis_element(ones[q]));
        std::vector<Integer> row;
        for (auto id : target) row.push_back(e.coords[id]);
        rows.push_back(row);
        std::size_t pos = pick.size();
        while (pos > 0 && pick[pos - 1] == ones.size() - pick.size() + pos - 1) --pos;
        if (pos == 0) break;
        ++pick[pos - 1];
        for (std::size_t q = pos; q < pick.size(); ++q) pick[q] = pick[q - 1] + 1;
      }
      REQUIRE(rows.size() == target.size());
      const Integer det = determinant(ZMatrix::from_rows(rows, target.size()));
      CHECK((det == 1 || det == -1));
    }
  }
  CHECK_THROWS_AS(AffineCohomology(fixture("skew_lines"), 0), std::invalid_argument);
}
