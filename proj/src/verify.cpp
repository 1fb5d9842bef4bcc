#include "projarr/verify.hpp"

#include <sstream>

namespace projarr {

void VerifyReport::add(Check c) {
  passed = passed && c.passed;
  checks.push_back(std::move(c));
}

PosetSimplex random_simplex(const IntersectionPoset& poset, std::mt19937_64& rng, std::size_t max_vertices) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(poset.size()) - 1);
  PosetSimplex s{pick(rng)};
  while (s.size() < max_vertices) {
    std::vector<IntersectionPoset::Id> above;
    for (std::size_t v = 0; v < poset.size(); ++v)
      if (poset.less(s.back(), static_cast<IntersectionPoset::Id>(v))) above.push_back(static_cast<IntersectionPoset::Id>(v));
    if (above.empty()) break;
    std::uniform_int_distribution<std::size_t> next(0, above.size() - 1);
    s.push_back(above[next(rng)]);
  }
  return s;
}

namespace {

Integer random_coeff(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(1, 3);
  std::bernoulli_distribution sign(0.5);
  const int c = dist(rng);
  return sign(rng) ? c : -c;
}

struct FailureLog {
  std::size_t count = 0;
  std::string first;

  void fail(const std::string& what) {
    if (count++ == 0) first = what;
  }
  Check finish(std::string name, const std::string& ok_detail) const {
    if (count == 0) return {std::move(name), true, ok_detail};
    return {std::move(name), false, std::to_string(count) + " failures, first: " + first};
  }
};

}  // namespace

Check chain_algebra_check(const ProjectiveCohomology& cohom, std::uint64_t seed, std::size_t samples) {
  const auto& poset = cohom.poset();
  const int n = poset.n();
  std::mt19937_64 rng(seed);
  FailureLog log;

  for (const auto& lvl : cohom.levels()) {
    const auto& cx = lvl.complex.complex();
    for (std::size_t r = 2; r <= cx.top_degree(); ++r)
      if (!(cx.boundary_at(r - 1) * cx.boundary_at(r)).is_zero())
        log.fail("boundary matrices at level " + std::to_string(lvl.complex.k()) + " square to nonzero");
  }

  std::uniform_int_distribution<int> level_pick(0, n);
  for (std::size_t s = 0; s < samples; ++s) {
    const PosetSimplex a = random_simplex(poset, rng, 4);
    const PosetSimplex b = random_simplex(poset, rng, 4);
    const IntChain ca(a, random_coeff(rng));
    const IntChain cb(b, random_coeff(rng));
    const IntChain mixed = ca + IntChain(random_simplex(poset, rng, 4), random_coeff(rng));

    if (!absolute_boundary(absolute_boundary(mixed)).is_zero()) log.fail("absolute dd != 0");
    if (!relative_boundary(relative_boundary(mixed)).is_zero()) log.fail("relative dd != 0");

    const ProductChain x = cross_shuffle(ca, cb);
    const ProductChain rhs = cross_shuffle(absolute_boundary(ca), cb) +
                             Integer(a.size() % 2 == 1 ? 1 : -1) * cross_shuffle(ca, absolute_boundary(cb));
    if (!(absolute_boundary(x) == rhs)) log.fail("shuffle is not a chain map");
    if (!(meet_push(poset, absolute_boundary(x)) == absolute_boundary(meet_push(poset, x))))
      log.fail("meet push does not commute with the boundary");

    const int k = level_pick(rng);
    const auto& lvl = cohom.level(k);
    const auto& rc = lvl.complex;
    std::vector<std::size_t> degrees;
    for (std::size_t r = 1; r < rc.basis().size(); ++r)
      if (!rc.basis(r).empty()) degrees.push_back(r);
    if (!degrees.empty()) {
      const std::size_t r = degrees[std::uniform_int_distribution<std::size_t>(0, degrees.size() - 1)(rng)];
      std::uniform_int_distribution<std::size_t> term(0, rc.basis(r).size() - 1);
      IntChain c;
      for (int t = 0; t < 3; ++t) c.add(rc.basis(r)[term(rng)], random_coeff(rng));
      const IntChain dc = rc.boundary(c);
      if (!rc.boundary(dc).is_zero()) log.fail("level complex dd != 0");
      for (const auto& z : class_of(lvl, dc, r - 1).coordinates)
        if (z != 0) {
          log.fail("class of a boundary at level " + std::to_string(k) + " is nonzero");
          break;
        }
    }

    const int l = level_pick(rng);
    if (k + l >= n) {
      const auto& lk = cohom.level(k);
      const auto& ll = cohom.level(l);
      for (std::size_t r1 = 0; r1 < lk.summary.degrees.size(); ++r1)
        for (std::size_t r2 = 0; r2 < ll.summary.degrees.size(); ++r2) {
          if (lk.summary[r1].generator_count() == 0 || ll.summary[r2].generator_count() == 0) continue;
          const IntChain p = meet_product(poset, k, l, lk.representative(r1, 0), ll.representative(r2, 0));
          const auto& target = cohom.level(k + l - n).complex;
          try {
            (void)target.to_vector(p, r1 + r2);
            if (!target.boundary(p).is_zero()) log.fail("meet product of cycles is not a cycle");
          } catch (const std::exception&) {
            log.fail("meet product leaves the level " + std::to_string(k + l - n) + " complex");
          }
        }
    }
  }
  return log.finish("chain_algebra", std::to_string(samples) + " samples");
}

Check snf_check(std::uint64_t seed, std::size_t samples) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(1, 12);
  std::uniform_int_distribution<int> entry(-9, 9);
  FailureLog log;
  for (std::size_t s = 0; s < samples; ++s) {
    ZMatrix a(static_cast<std::size_t>(size(rng)), static_cast<std::size_t>(size(rng)));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
    const SNFResult res = snf(a);
    if (!(res.U * a * res.Vt == res.D)) log.fail("U A Vt != D");
    if (!(res.U * res.U_inv == ZMatrix::identity(a.rows()))) log.fail("U not inverted by U_inv");
    if (!(res.Vt * res.Vt_inv == ZMatrix::identity(a.cols()))) log.fail("Vt not inverted by Vt_inv");
    for (std::size_t i = 0; i < res.D.rows(); ++i)
      for (std::size_t j = 0; j < res.D.cols(); ++j)
        if (i != j && res.D(i, j) != 0) log.fail("D is not diagonal");
    const auto diag = res.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i) {
      if ((i < res.rank) != (diag[i] > 0)) log.fail("diagonal sign or rank mismatch");
      if (i + 1 < res.rank && diag[i + 1] % diag[i] != 0) log.fail("divisibility chain broken");
    }
    const Integer du = determinant(res.U);
    const Integer dv = determinant(res.Vt);
    if (abs(du) != 1 || abs(dv) != 1) log.fail("U or Vt not unimodular");
  }
  return log.finish("snf", std::to_string(samples) + " random matrices");
}

Check serial_parallel_check(const Arrangement& arr) {
  const auto serial = ring_json(ring_table(arr, ExecutionMode::Serial));
  const auto parallel = ring_json(ring_table(arr, ExecutionMode::Parallel));
  const bool posets = poset_json(build_poset(arr, ExecutionMode::Serial)) ==
                      poset_json(build_poset(arr, ExecutionMode::Parallel));
  if (serial == parallel && posets) return {"serial_parallel", true, "identical poset and ring table"};
  return {"serial_parallel", false, posets ? "ring tables differ" : "posets differ"};
}

std::optional<int> detect_c(const Arrangement& arr) {
  if (arr.empty()) return std::nullopt;
  const int c = arr.n() - arr.d(0);
  if (is_c_arrangement(arr, c)) return c;
  return std::nullopt;
}

VerifyReport verify_arrangement(const Arrangement& arr, std::uint64_t seed, std::optional<int> c,
                                std::size_t base_index, std::optional<int> max_degree, std::size_t sections) {
  VerifyReport rep;
  const ProjectiveCohomology cohom(arr);
  const RingTable table = cohom.table();

  const OracleReport oracle = compare(arr, table.poincare());
  {
    std::string detail = oracle.hyperplane ? "orlik-solomon and euler" : "euler";
    for (const auto& d : oracle.diffs) detail += "; " + d;
    rep.add({"oracle", oracle.passed, detail});
  }

  const RingAxiomReport axioms = verify_ring_axioms(table);
  rep.add({"ring_axioms", axioms.passed,
           std::to_string(axioms.checks) + " checks" + (axioms.failures.empty() ? "" : "; " + axioms.failures.front())});

  rep.add(serial_parallel_check(arr));

  for (std::size_t s = 0; s < sections; ++s) {
    const EtaReport eta = verify_eta(arr, seed + s);
    rep.add({"eta[seed=" + std::to_string(seed + s) + "]", eta.passed, eta.message});
  }

  rep.add(chain_algebra_check(cohom, seed));
  rep.add(snf_check(seed));

  if (!c) c = detect_c(arr);
  if (c) {
    if (!is_c_arrangement(arr, *c))
      throw std::invalid_argument("arrangement is not a " + std::to_string(*c) + "-arrangement");
    const ProjectiveCohomology ordered(arr.with_base(base_index));
    for (int k = 0; k <= arr.n(); ++k) {
      const CheckReport fk = verify_fk_iso(ordered, k);
      rep.add({"fk_iso[k=" + std::to_string(k) + "]", fk.passed, fk.notes.empty() ? "" : fk.notes.front()});
      const CheckReport fg = verify_fg_homotopic(ordered, *c, k);
      rep.add({"fg_homotopy[k=" + std::to_string(k) + "]", fg.passed, fg.notes.empty() ? "" : fg.notes.front()});
    }
    const PresentationReport pres = verify_presentation(arr, *c, base_index, max_degree.value_or(2 * arr.n()));
    rep.add({"presentation[c=" + std::to_string(*c) + "]", pres.passed,
             pres.notes.empty() ? "ranks agree" : pres.notes.front()});
  }
  return rep;
}

Json verify_json(const VerifyReport& rep) {
  Json out;
  out["passed"] = rep.passed;
  Json checks = Json::array();
  for (const auto& c : rep.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  out["checks"] = std::move(checks);
  return out;
}

std::string verify_text(const VerifyReport& rep) {
  std::ostringstream os;
  for (const auto& c : rep.checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << "  " << c.detail;
    os << "\n";
  }
  os << (rep.passed ? "all checks passed" : "verification failed") << "\n";
  return os.str();
}

}  // namespace projarr
