#include "projarr/os_presentation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace projarr {

void add_term(Polynomial& p, const Monomial& m, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = p.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) p.erase(it);
  }
}

std::pair<Integer, Monomial> multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.x_power = a.x_power + b.x_power;
  std::size_t inversions = 0;
  std::size_t i = 0, j = 0;
  while (i < a.ys.size() || j < b.ys.size()) {
    if (j == b.ys.size() || (i < a.ys.size() && a.ys[i] < b.ys[j])) {
      out.ys.push_back(a.ys[i++]);
    } else if (i == a.ys.size() || b.ys[j] < a.ys[i]) {
      // b's y jumps over the remaining a's
      inversions += a.ys.size() - i;
      out.ys.push_back(b.ys[j++]);
    } else {
      return {0, Monomial{}};
    }
  }
  return {inversions % 2 == 0 ? Integer(1) : Integer(-1), out};
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      const auto [sign, m] = multiply(ma, mb);
      if (sign != 0) add_term(out, m, sign * ca * cb);
    }
  return out;
}

std::string to_string(const Monomial& m) {
  std::ostringstream os;
  bool any = false;
  if (m.x_power > 0) {
    os << "x";
    if (m.x_power > 1) os << "^" << m.x_power;
    any = true;
  }
  for (auto y : m.ys) {
    if (any) os << "*";
    os << "y" << y;
    any = true;
  }
  if (!any) os << "1";
  return os.str();
}

std::string to_string(const Polynomial& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p) {
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const Integer a = abs(c);
    if (a != 1) os << a.get_str() << "*";
    os << to_string(m);
    first = false;
  }
  return os.str();
}

Presentation build_presentation(const Arrangement& arr, int c, std::size_t base_index) {
  if (arr.empty()) throw std::invalid_argument("presentation needs at least one subspace");
  if (base_index >= arr.size()) throw std::invalid_argument("base index out of range");
  if (!is_c_arrangement(arr, c))
    throw std::invalid_argument("arrangement is not a " + std::to_string(c) + "-arrangement");
  Presentation p;
  p.c = c;
  p.t = arr.size() - 1;
  p.base_index = base_index;
  p.ordered = arr.with_base(base_index);

  for (const auto& dep : minimal_dependent_sets(p.ordered)) {
    Relation rel;
    rel.dependent_set = dep.indices;
    const auto& idx = dep.indices;
    if (idx.front() == 0) {
      rel.family = RelationFamily::BaseProduct;
      Monomial m;
      m.ys.assign(idx.begin() + 1, idx.end());
      add_term(rel.poly, m, 1);
      rel.degree = m.degree(c);
    } else {
      rel.family = RelationFamily::Alternating;
      for (std::size_t j = 0; j < idx.size(); ++j) {
        Monomial m;
        for (std::size_t i = 0; i < idx.size(); ++i)
          if (i != j) m.ys.push_back(idx[i]);
        add_term(rel.poly, m, j % 2 == 0 ? 1 : -1);
        rel.degree = m.degree(c);
      }
    }
    p.relations.push_back(std::move(rel));
  }
  Relation xc;
  xc.family = RelationFamily::XPower;
  add_term(xc.poly, Monomial{c, {}}, 1);
  xc.degree = 2 * c;
  p.relations.push_back(std::move(xc));
  return p;
}

std::vector<Monomial> monomials_of_degree(std::size_t t, int c, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  const int yd = 2 * c - 1;
  for (std::size_t j = 0; j <= t; ++j) {
    const int rest = degree - static_cast<int>(j) * yd;
    if (rest < 0) break;
    if (rest % 2 != 0) continue;
    std::vector<std::size_t> idx(j);
    std::iota(idx.begin(), idx.end(), 1);
    for (;;) {
      out.push_back(Monomial{rest / 2, idx});
      std::size_t pos = j;
      while (pos > 0 && idx[pos - 1] == t - j + pos) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t q = pos; q < j; ++q) idx[q] = idx[q - 1] + 1;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

/// Rows spanning the degree component of I, over the given monomial basis.
QMatrix ideal_component(const Presentation& p, const std::vector<Monomial>& basis, int degree) {
  std::map<Monomial, std::size_t> pos;
  for (std::size_t i = 0; i < basis.size(); ++i) pos.emplace(basis[i], i);
  std::vector<std::vector<Rational>> rows;
  for (const auto& rel : p.relations) {
    if (rel.degree > degree) continue;
    for (const auto& m : monomials_of_degree(p.t, p.c, degree - rel.degree)) {
      Polynomial single;
      add_term(single, m, 1);
      const Polynomial prod = multiply(single, rel.poly);
      if (prod.empty()) continue;
      std::vector<Rational> row(basis.size());
      for (const auto& [mm, coeff] : prod) row[pos.at(mm)] = Rational(coeff);
      rows.push_back(std::move(row));
    }
  }
  return QMatrix::from_rows(rows, basis.size());
}

}  // namespace

std::vector<long> graded_ranks(const Presentation& p, int max_degree) {
  std::vector<long> out;
  for (int deg = 0; deg <= max_degree; ++deg) {
    const auto basis = monomials_of_degree(p.t, p.c, deg);
    const QMatrix ideal = ideal_component(p, basis, deg);
    out.push_back(static_cast<long>(basis.size()) - static_cast<long>(rank(ideal)));
  }
  return out;
}

bool in_ideal(const Presentation& p, const Polynomial& poly, int degree) {
  const auto basis = monomials_of_degree(p.t, p.c, degree);
  std::map<Monomial, std::size_t> pos;
  for (std::size_t i = 0; i < basis.size(); ++i) pos.emplace(basis[i], i);
  const QMatrix ideal = ideal_component(p, basis, degree);
  QMatrix stacked(ideal.rows() + 1, basis.size());
  for (std::size_t i = 0; i < ideal.rows(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) stacked(i, j) = ideal(i, j);
  for (const auto& [m, coeff] : poly) {
    if (m.degree(p.c) != degree) throw std::invalid_argument("polynomial is not homogeneous of the given degree");
    stacked(ideal.rows(), pos.at(m)) = Rational(coeff);
  }
  return rank(stacked) == rank(ideal);
}

// ---------------------------------------------------------------------------
// Atomic complexes

std::size_t AtomicComplex::index_of(const std::vector<std::size_t>& s) const {
  const auto& layer = simplices.at(s.size());
  const auto it = std::lower_bound(layer.begin(), layer.end(), s);
  if (it == layer.end() || *it != s) throw std::out_of_range("not a simplex of the atomic complex");
  return static_cast<std::size_t>(it - layer.begin());
}

AtomicComplex atomic_complex(const Arrangement& arr, const IntersectionPoset& poset, int k) {
  AtomicComplex ac;
  ac.k = k;
  std::vector<std::pair<std::vector<std::size_t>, IntersectionPoset::Id>> layer{{{}, poset.top()}};
  while (!layer.empty()) {
    std::vector<std::vector<std::size_t>> sets;
    for (const auto& [s, meet] : layer) sets.push_back(s);
    ac.simplices.push_back(sets);
    std::vector<std::pair<std::vector<std::size_t>, IntersectionPoset::Id>> next;
    for (const auto& [s, meet] : layer)
      for (std::size_t j = s.empty() ? 0 : s.back() + 1; j < arr.size(); ++j) {
        const auto w = poset.meet(meet, poset.member(j));
        if (poset.d(w) < k) continue;
        auto t = s;
        t.push_back(j);
        next.emplace_back(std::move(t), w);
      }
    layer = std::move(next);
  }
  auto& cx = ac.complex;
  for (const auto& l : ac.simplices) cx.dims.push_back(l.size());
  cx.boundary.push_back(ZMatrix(0, cx.dims[0]));
  for (std::size_t r = 1; r < ac.simplices.size(); ++r) {
    ZMatrix b(cx.dims[r - 1], cx.dims[r]);
    for (std::size_t col = 0; col < ac.simplices[r].size(); ++col) {
      const auto& s = ac.simplices[r][col];
      for (std::size_t j = 0; j < s.size(); ++j) {
        auto face = s;
        face.erase(face.begin() + static_cast<long>(j));
        b(ac.index_of(face), col) += (j % 2 == 0) ? 1 : -1;
      }
    }
    cx.boundary.push_back(std::move(b));
  }
  return ac;
}

IntChain atomic_product(const IntersectionPoset& poset, const std::vector<std::size_t>& indices,
                        const std::vector<IntersectionPoset::Id>& members) {
  IntChain acc(PosetSimplex{poset.top()}, 1);
  for (auto i : indices) acc = meet_chains(poset, acc, IntChain(PosetSimplex{members.at(i), poset.top()}, 1));
  return acc;
}

namespace {

std::vector<IntersectionPoset::Id> member_ids(const IntersectionPoset& poset) {
  std::vector<IntersectionPoset::Id> out;
  for (std::size_t i = 0; i < poset.member_count(); ++i) out.push_back(poset.member(i));
  return out;
}

int g_level(int n, int k, int c) { return (n - k) / c; }

void check_c(const ProjectiveCohomology& cohom, int c) {
  if (!is_c_arrangement(cohom.arrangement(), c))
    throw std::invalid_argument("arrangement is not a " + std::to_string(c) + "-arrangement");
}

// alpha_{i_1} - alpha_0 meet ... ; factors with i_j = 0 vanish.
IntChain difference_product(const IntersectionPoset& poset, const std::vector<std::size_t>& indices,
                            const std::vector<IntersectionPoset::Id>& members) {
  const auto top = poset.top();
  IntChain acc(PosetSimplex{top}, 1);
  for (auto i : indices) {
    const IntChain factor =
        IntChain(PosetSimplex{members.at(i), top}, 1) - IntChain(PosetSimplex{members.at(0), top}, 1);
    acc = meet_chains(poset, acc, factor);
  }
  return acc;
}

}  // namespace

ChainMapMatrices fk_chain_map(const ProjectiveCohomology& cohom, const AtomicComplex& ac) {
  const auto& poset = cohom.poset();
  const auto& rc = cohom.level(ac.k).complex;
  const auto members = member_ids(poset);
  ChainMapMatrices f;
  for (std::size_t r = 0; r < ac.simplices.size(); ++r) {
    ZMatrix m(rc.basis(r).size(), ac.simplices[r].size());
    for (std::size_t col = 0; col < ac.simplices[r].size(); ++col) {
      const ZVector v = rc.to_vector(atomic_product(poset, ac.simplices[r][col], members), r);
      for (std::size_t row = 0; row < v.size(); ++row) m(row, col) = v[row];
    }
    f.matrices.push_back(std::move(m));
  }
  return f;
}

ChainMapMatrices gk_chain_map(const ProjectiveCohomology& cohom, const AtomicComplex& ac, int c) {
  check_c(cohom, c);
  const auto& poset = cohom.poset();
  const auto& rc = cohom.level(ac.k).complex;
  const auto members = member_ids(poset);
  const int a = g_level(poset.n(), ac.k, c);
  ChainMapMatrices g;
  for (std::size_t r = 0; r < ac.simplices.size(); ++r) {
    ZMatrix m(rc.basis(r).size(), ac.simplices[r].size());
    if (static_cast<int>(r) == a)
      for (std::size_t col = 0; col < ac.simplices[r].size(); ++col) {
        const ZVector v = rc.to_vector(difference_product(poset, ac.simplices[r][col], members), r);
        for (std::size_t row = 0; row < v.size(); ++row) m(row, col) = v[row];
      }
    g.matrices.push_back(std::move(m));
  }
  return g;
}

ChainMapMatrices homotopy_k(const ProjectiveCohomology& cohom, const AtomicComplex& ac, int c) {
  check_c(cohom, c);
  const auto& poset = cohom.poset();
  const auto& rc = cohom.level(ac.k).complex;
  const auto members = member_ids(poset);
  const int a = g_level(poset.n(), ac.k, c);
  ChainMapMatrices h;
  h.shift = 1;
  for (std::size_t r = 0; r < ac.simplices.size(); ++r) {
    ZMatrix m(rc.basis(r + 1).size(), ac.simplices[r].size());
    if (static_cast<int>(r) < a)
      for (std::size_t col = 0; col < ac.simplices[r].size(); ++col) {
        const auto& s = ac.simplices[r][col];
        if (!s.empty() && s.front() == 0) continue;  // <0, 0, ...> is degenerate
        std::vector<std::size_t> coned{0};
        coned.insert(coned.end(), s.begin(), s.end());
        const ZVector v = rc.to_vector(atomic_product(poset, coned, members), r + 1);
        for (std::size_t row = 0; row < v.size(); ++row) m(row, col) = v[row];
      }
    h.matrices.push_back(std::move(m));
  }
  return h;
}

bool is_chain_map(const ChainMapMatrices& f, const AtomicComplex& ac, const RelativeComplex& rc) {
  for (std::size_t r = 1; r < f.matrices.size(); ++r) {
    const ZMatrix lhs = rc.complex().boundary_at(r + static_cast<std::size_t>(f.shift)) * f.matrices[r];
    const ZMatrix rhs = f.matrices[r - 1] * ac.complex.boundary_at(r);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

CheckReport verify_fk_iso(const ProjectiveCohomology& cohom, int k) {
  CheckReport rep;
  const auto ac = atomic_complex(cohom.arrangement(), cohom.poset(), k);
  const auto& lvl = cohom.level(k);
  const auto f = fk_chain_map(cohom, ac);
  if (!is_chain_map(f, ac, lvl.complex)) {
    rep.passed = false;
    rep.notes.push_back("f^" + std::to_string(k) + " does not commute with boundaries");
    return rep;
  }
  const HomologySummary hd = compute_homology(ac.complex);
  const std::size_t top = std::max(hd.degrees.size(), lvl.summary.degrees.size());
  for (std::size_t r = 0; r < top; ++r) {
    const std::size_t src_free = hd.free_rank(r);
    const std::size_t dst_free = lvl.summary.free_rank(r);
    const auto src_tors = r < hd.degrees.size() ? hd[r].torsion : std::vector<Integer>{};
    const auto dst_tors = r < lvl.summary.degrees.size() ? lvl.summary[r].torsion : std::vector<Integer>{};
    if (src_free != dst_free || src_tors != dst_tors) {
      rep.passed = false;
      rep.notes.push_back("degree " + std::to_string(r) + ": H(D^k) and H(pair_k) differ in rank or torsion");
      continue;
    }
    if (src_free == 0) continue;
    ZMatrix induced(dst_free, src_free);
    for (std::size_t g = 0; g < src_free; ++g) {
      const ZVector image = f.matrices[r].apply(hd[r].generators[g]);
      const auto coords = class_of(lvl, lvl.complex.from_vector(image, r), r).coordinates;
      for (std::size_t i = 0; i < dst_free; ++i) induced(i, g) = coords[i];
    }
    const Integer det = determinant(induced);
    if (det != 1 && det != -1) {
      rep.passed = false;
      rep.notes.push_back("degree " + std::to_string(r) + ": induced map has determinant " + det.get_str());
    } else {
      rep.notes.push_back("degree " + std::to_string(r) + ": rank " + std::to_string(src_free) + ", det " +
                          det.get_str());
    }
  }
  return rep;
}

CheckReport verify_fg_homotopic(const ProjectiveCohomology& cohom, int c, int k) {
  CheckReport rep;
  const auto ac = atomic_complex(cohom.arrangement(), cohom.poset(), k);
  const auto& lvl = cohom.level(k);
  const auto f = fk_chain_map(cohom, ac);
  const auto g = gk_chain_map(cohom, ac, c);
  const auto h = homotopy_k(cohom, ac, c);
  if (!is_chain_map(g, ac, lvl.complex)) {
    rep.passed = false;
    rep.notes.push_back("g^" + std::to_string(k) + " does not commute with boundaries");
  }
  // f - g = K d + d K, degree by degree
  for (std::size_t r = 0; r < ac.simplices.size(); ++r) {
    ZMatrix rhs = lvl.complex.complex().boundary_at(r + 1) * h.matrices[r];
    if (r > 0) rhs = rhs + h.matrices[r - 1] * ac.complex.boundary_at(r);
    if (!(f.matrices[r] - g.matrices[r] == rhs)) {
      rep.passed = false;
      rep.notes.push_back("homotopy identity fails in degree " + std::to_string(r));
    }
  }
  const HomologySummary hd = compute_homology(ac.complex);
  for (std::size_t r = 0; r < hd.degrees.size(); ++r)
    for (const auto& z : hd[r].generators) {
      const auto cf = class_of(lvl, lvl.complex.from_vector(f.matrices[r].apply(z), r), r).coordinates;
      const auto cg = class_of(lvl, lvl.complex.from_vector(g.matrices[r].apply(z), r), r).coordinates;
      if (cf != cg) {
        rep.passed = false;
        rep.notes.push_back("f and g differ on a homology class in degree " + std::to_string(r));
      }
    }
  if (rep.passed) rep.notes.push_back("f^" + std::to_string(k) + " ~ g^" + std::to_string(k));
  return rep;
}

RingElement pi_image(const ProjectiveCohomology& cohom, const RingTable& table, int c, const Monomial& m) {
  check_c(cohom, c);
  const auto& poset = cohom.poset();
  const int n = poset.n();
  const auto top = poset.top();
  RingElement acc = table.unit();
  if (m.x_power > 0) {
    const RingElement x = cohom.element_of(n - 1, IntChain(PosetSimplex{top}, 1), 0);
    for (int s = 0; s < m.x_power; ++s) acc = table.multiply(acc, x);
  }
  const auto a0 = poset.member(0);
  for (auto i : m.ys) {
    const IntChain cycle = IntChain(PosetSimplex{poset.member(i), top}, 1) - IntChain(PosetSimplex{a0, top}, 1);
    acc = table.multiply(acc, cohom.element_of(n - c, cycle, 1));
  }
  return acc;
}

RingElement pi_image(const ProjectiveCohomology& cohom, const RingTable& table, int c, const Polynomial& p,
                     int degree) {
  RingElement acc = table.zero(degree);
  for (const auto& [m, coeff] : p) acc = table.add(acc, pi_image(cohom, table, c, m), coeff);
  return acc;
}

PresentationReport verify_presentation(const Arrangement& arr, int c, std::size_t base_index, int max_degree,
                                       ExecutionMode mode) {
  PresentationReport rep;
  rep.presentation = build_presentation(arr, c, base_index);
  const auto& p = rep.presentation;
  const ProjectiveCohomology cohom(p.ordered, mode);
  const RingTable table = cohom.table(mode);

  for (const auto& rel : p.relations) {
    if (!pi_image(cohom, table, c, rel.poly, rel.degree).is_zero()) {
      rep.relations_vanish = false;
      rep.notes.push_back("pi does not vanish on relation " + to_string(rel.poly));
    }
  }
  for (const auto& [deg, order] : table.torsion()) {
    rep.torsion_free = false;
    rep.notes.push_back("engine reports torsion Z/" + order.get_str() + " in degree " + std::to_string(deg));
  }

  const auto quotient = graded_ranks(p, max_degree);
  const auto betti = table.poincare();
  for (int deg = 0; deg <= max_degree; ++deg) {
    PresentationRow row;
    row.degree = deg;
    row.quotient_rank = quotient[static_cast<std::size_t>(deg)];
    row.engine_rank = deg < static_cast<int>(betti.size()) ? betti[static_cast<std::size_t>(deg)] : 0;
    const auto monos = monomials_of_degree(p.t, c, deg);
    std::vector<std::vector<Rational>> images;
    for (const auto& m : monos) {
      const RingElement e = pi_image(cohom, table, c, m);
      std::vector<Rational> v;
      for (std::size_t i = 0; i < table.size(); ++i)
        if (table.basis[i].torsion_order == 0) v.emplace_back(e.coords[i]);
      images.push_back(std::move(v));
    }
    std::size_t free_count = 0;
    for (const auto& b : table.basis)
      if (b.torsion_order == 0) ++free_count;
    row.image_rank = static_cast<long>(rank(QMatrix::from_rows(images, free_count)));
    if (row.quotient_rank != row.engine_rank || row.image_rank != row.engine_rank) {
      rep.notes.push_back("degree " + std::to_string(deg) + ": R/I rank " + std::to_string(row.quotient_rank) +
                          ", pi image rank " + std::to_string(row.image_rank) + ", engine rank " +
                          std::to_string(row.engine_rank));
      rep.passed = false;
    }
    rep.rows.push_back(row);
  }
  rep.passed = rep.passed && rep.relations_vanish && rep.torsion_free;
  return rep;
}

}  // namespace projarr
