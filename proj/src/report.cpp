#include "projarr/report.hpp"

#include <sstream>

namespace projarr {

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(static_cast<long long>(z.get_si()));
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(std::to_string(j.get<long long>()));
}

Json chain_json(const IntChain& c) {
  Json out = Json::array();
  for (const auto& [s, coeff] : c.terms()) out.push_back(Json::array({Json(s), integer_json(coeff)}));
  return out;
}

namespace {

Json subspace_rows(const Subspace& s) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < s.basis().rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < s.basis().cols(); ++j) row.push_back(format_rational(s.basis()(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string poly_string(const std::vector<long>& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || p[i] != 1) os << p[i];
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

std::string vector_string(const std::vector<long>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace

Json poset_json(const IntersectionPoset& poset) {
  Json out;
  out["n"] = poset.n();
  Json elements = Json::array();
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const auto u = static_cast<IntersectionPoset::Id>(i);
    Json e;
    e["id"] = i;
    if (poset.name(u)) e["name"] = *poset.name(u);
    e["d"] = poset.d(u);
    e["basis"] = subspace_rows(poset.element(u));
    e["witness"] = poset.witness(u);
    elements.push_back(std::move(e));
  }
  out["elements"] = std::move(elements);
  Json covers = Json::array();
  for (const auto& [lo, hi] : poset.covers()) covers.push_back(Json::array({lo, hi}));
  out["covers"] = std::move(covers);
  Json meet = Json::array();
  for (std::size_t i = 0; i < poset.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < poset.size(); ++j)
      row.push_back(poset.meet(static_cast<IntersectionPoset::Id>(i), static_cast<IntersectionPoset::Id>(j)));
    meet.push_back(std::move(row));
  }
  out["meet"] = std::move(meet);
  return out;
}

std::string poset_text(const IntersectionPoset& poset) {
  std::ostringstream os;
  os << "n = " << poset.n() << ", " << poset.size() << " elements\n";
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const auto u = static_cast<IntersectionPoset::Id>(i);
    os << "  [" << i << "] d=" << poset.d(u);
    if (poset.name(u)) os << " " << *poset.name(u);
    os << " covered by:";
    for (const auto& [lo, hi] : poset.covers())
      if (lo == u) os << " " << hi;
    os << "\n";
  }
  return os.str();
}

Json homology_json(const std::vector<LevelHomology>& levels) {
  Json out = Json::array();
  for (const auto& lvl : levels) {
    Json l;
    l["k"] = lvl.complex.k();
    Json degrees = Json::array();
    for (std::size_t r = 0; r < lvl.summary.degrees.size(); ++r) {
      const auto& h = lvl.summary[r];
      if (h.generator_count() == 0) continue;
      Json d;
      d["r"] = r;
      d["free_rank"] = h.free_rank;
      Json tors = Json::array();
      for (const auto& t : h.torsion) tors.push_back(integer_json(t));
      d["torsion"] = std::move(tors);
      Json reps = Json::array();
      for (std::size_t g = 0; g < h.generator_count(); ++g) reps.push_back(chain_json(lvl.representative(r, g)));
      d["representatives"] = std::move(reps);
      degrees.push_back(std::move(d));
    }
    l["degrees"] = std::move(degrees);
    out.push_back(std::move(l));
  }
  return out;
}

std::string homology_text(const std::vector<LevelHomology>& levels) {
  std::ostringstream os;
  for (const auto& lvl : levels) {
    os << "k = " << lvl.complex.k() << ":";
    bool any = false;
    for (std::size_t r = 0; r < lvl.summary.degrees.size(); ++r) {
      const auto& h = lvl.summary[r];
      if (h.generator_count() == 0) continue;
      any = true;
      os << " H_" << r << " = Z^" << h.free_rank;
      for (const auto& t : h.torsion) os << " + Z/" << t.get_str();
      os << ";";
    }
    if (!any) os << " 0";
    os << "\n";
  }
  return os.str();
}

Json ring_json(const RingTable& table) {
  Json out;
  out["n"] = table.n;
  Json basis = Json::array();
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& b = table.basis[i];
    Json e;
    e["id"] = i;
    e["k"] = b.k;
    e["r"] = b.r;
    e["degree"] = b.degree;
    e["torsion_order"] = integer_json(b.torsion_order);
    if (b.stratum >= 0) e["stratum"] = b.stratum;
    e["generator"] = b.index;
    if (i < table.representatives.size()) e["representative"] = chain_json(table.representatives[i]);
    basis.push_back(std::move(e));
  }
  out["basis"] = std::move(basis);
  out["poincare"] = table.poincare();
  Json tors = Json::array();
  for (const auto& [deg, order] : table.torsion()) tors.push_back(Json{{"degree", deg}, {"order", integer_json(order)}});
  out["torsion"] = std::move(tors);
  Json products = Json::array();
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = 0; j < table.size(); ++j) {
      Json result = Json::array();
      const auto& v = table.products[i][j];
      for (std::size_t t = 0; t < v.size(); ++t)
        if (v[t] != 0) result.push_back(Json::array({t, integer_json(v[t])}));
      if (result.empty()) continue;
      products.push_back(Json{{"i", i}, {"j", j}, {"result", std::move(result)}});
    }
  out["products"] = std::move(products);
  return out;
}

RingTable ring_from_json(const Json& j) {
  RingTable t;
  t.n = j.at("n").get<int>();
  for (const auto& e : j.at("basis")) {
    RingBasisElement b;
    b.k = e.at("k").get<int>();
    b.r = e.at("r").get<std::size_t>();
    b.degree = e.at("degree").get<int>();
    b.torsion_order = integer_from_json(e.at("torsion_order"));
    b.index = e.at("generator").get<std::size_t>();
    if (e.contains("stratum")) b.stratum = e.at("stratum").get<int>();
    t.basis.push_back(b);
    IntChain rep;
    if (e.contains("representative"))
      for (const auto& term : e.at("representative"))
        rep.add(term.at(0).get<PosetSimplex>(), integer_from_json(term.at(1)));
    t.representatives.push_back(std::move(rep));
  }
  const std::size_t m = t.basis.size();
  t.products.assign(m, std::vector<ZVector>(m, ZVector(m, Integer(0))));
  for (const auto& p : j.at("products")) {
    auto& v = t.products[p.at("i").get<std::size_t>()][p.at("j").get<std::size_t>()];
    for (const auto& term : p.at("result")) v[term.at(0).get<std::size_t>()] = integer_from_json(term.at(1));
  }
  return t;
}

std::string ring_text(const RingTable& table) {
  std::ostringstream os;
  os << "n = " << table.n << "\n";
  os << "poincare: " << poly_string(table.poincare()) << "\n";
  for (const auto& [deg, order] : table.torsion()) os << "torsion: Z/" << order.get_str() << " in degree " << deg << "\n";
  os << "basis:\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& b = table.basis[i];
    os << "  e" << i << ": degree " << b.degree << " (k=" << b.k << ", r=" << b.r << ", generator " << b.index;
    if (b.stratum >= 0) os << ", stratum " << b.stratum;
    if (b.torsion_order != 0) os << ", order " << b.torsion_order.get_str();
    os << ")\n";
  }
  os << "nonzero products:\n";
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = 0; j < table.size(); ++j) {
      const auto& v = table.products[i][j];
      std::ostringstream rhs;
      bool first = true;
      for (std::size_t t = 0; t < v.size(); ++t) {
        if (v[t] == 0) continue;
        rhs << (first ? "" : " + ") << v[t].get_str() << "*e" << t;
        first = false;
      }
      if (!first) os << "  e" << i << " * e" << j << " = " << rhs.str() << "\n";
    }
  return os.str();
}

namespace {

const char* family_name(RelationFamily f) {
  switch (f) {
    case RelationFamily::Alternating: return "alternating";
    case RelationFamily::BaseProduct: return "base_product";
    case RelationFamily::XPower: return "x_power";
  }
  return "";
}

}  // namespace

Json presentation_json(const PresentationReport& rep) {
  const auto& p = rep.presentation;
  Json out;
  out["c"] = p.c;
  out["base_index"] = p.base_index;
  Json gens = Json::array();
  gens.push_back(Json{{"name", "x"}, {"degree", 2}});
  for (std::size_t i = 1; i <= p.t; ++i)
    gens.push_back(Json{{"name", "y" + std::to_string(i)}, {"degree", p.y_degree()}});
  out["generators"] = std::move(gens);
  Json rels = Json::array();
  for (const auto& r : p.relations) {
    Json e;
    e["family"] = family_name(r.family);
    e["dependent_set"] = r.dependent_set;
    e["degree"] = r.degree;
    e["polynomial"] = to_string(r.poly);
    rels.push_back(std::move(e));
  }
  out["relations"] = std::move(rels);
  Json rows = Json::array();
  for (const auto& row : rep.rows)
    rows.push_back(Json{{"degree", row.degree},
                        {"quotient_rank", row.quotient_rank},
                        {"image_rank", row.image_rank},
                        {"engine_rank", row.engine_rank}});
  out["ranks"] = std::move(rows);
  out["relations_vanish"] = rep.relations_vanish;
  out["torsion_free"] = rep.torsion_free;
  out["passed"] = rep.passed;
  out["notes"] = rep.notes;
  return out;
}

std::string presentation_text(const PresentationReport& rep) {
  const auto& p = rep.presentation;
  std::ostringstream os;
  os << "generators: x (degree 2)";
  for (std::size_t i = 1; i <= p.t; ++i) os << ", y" << i;
  if (p.t > 0) os << " (degree " << p.y_degree() << ")";
  os << "\nrelations:\n";
  for (const auto& r : p.relations) os << "  " << to_string(r.poly) << "  [" << family_name(r.family) << "]\n";
  os << "degree  R/I  image  engine\n";
  for (const auto& row : rep.rows)
    os << "  " << row.degree << "     " << row.quotient_rank << "    " << row.image_rank << "      " << row.engine_rank
       << "\n";
  for (const auto& n : rep.notes) os << "note: " << n << "\n";
  os << (rep.passed ? "PASS" : "FAIL") << "\n";
  return os.str();
}

Json oracle_json(const OracleReport& rep) {
  Json out;
  out["passed"] = rep.passed;
  out["hyperplane"] = rep.hyperplane;
  out["engine_poincare"] = rep.engine_poincare;
  if (rep.hyperplane) out["os_poincare"] = rep.os_poincare;
  out["engine_euler"] = rep.engine_euler;
  out["oracle_euler"] = rep.oracle_euler;
  out["diffs"] = rep.diffs;
  return out;
}

std::string oracle_text(const OracleReport& rep) {
  std::ostringstream os;
  os << "engine betti: " << vector_string(rep.engine_poincare) << "\n";
  if (rep.hyperplane) os << "orlik-solomon: " << poly_string(rep.os_poincare) << "\n";
  os << "euler: engine " << rep.engine_euler << ", stratified " << rep.oracle_euler << "\n";
  for (const auto& d : rep.diffs) os << "diff: " << d << "\n";
  os << (rep.passed ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace projarr
