#include "projarr/exact_linear_algebra.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace projarr {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& x) {
    const auto b = x.find_first_not_of(" \t");
    const auto e = x.find_last_not_of(" \t");
    x = (b == std::string::npos) ? std::string() : x.substr(b, e - b + 1);
  };
  trim(s);
  auto valid_int = [](const std::string& x) {
    if (x.empty()) return false;
    std::size_t i = (x[0] == '-' || x[0] == '+') ? 1 : 0;
    if (i == x.size()) return false;
    for (; i < x.size(); ++i)
      if (x[i] < '0' || x[i] > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? std::string("1") : s.substr(slash + 1);
  trim(num);
  trim(den);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: \"" + std::string(text) + "\"");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

// In-place RREF; returns pivot columns.
std::vector<std::size_t> rref_in_place(QMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    a.swap_rows(row, sel);
    const Rational inv = 1 / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

QMatrix first_rows(const QMatrix& a, std::size_t count) {
  QMatrix out(count, a.cols());
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

}  // namespace

QMatrix rref(const QMatrix& m) {
  QMatrix a = m;
  const auto pivots = rref_in_place(a);
  return first_rows(a, pivots.size());
}

std::size_t rank(const QMatrix& m) {
  QMatrix a = m;
  return rref_in_place(a).size();
}

QMatrix nullspace(const QMatrix& m) {
  QMatrix a = m;
  const auto pivots = rref_in_place(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, f);
    rows.push_back(std::move(v));
  }
  return rref(QMatrix::from_rows(rows, m.cols()));
}

Rational determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  QMatrix a = m;
  Rational det = 1;
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && a(sel, c) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != c) {
      a.swap_rows(sel, c);
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

Integer determinant(const ZMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  ZMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t sel = k + 1;
      while (sel < n && a(sel, k) == 0) ++sel;
      if (sel == n) return 0;
      a.swap_rows(k, sel);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::size_t ambient_dim, const QMatrix& spanning_rows) : ambient_dim_(ambient_dim) {
  if (spanning_rows.rows() > 0 && spanning_rows.cols() != ambient_dim)
    throw std::invalid_argument("subspace rows have wrong length");
  basis_ = spanning_rows.rows() == 0 ? QMatrix(0, ambient_dim) : rref(spanning_rows);
}

Subspace Subspace::full(std::size_t ambient_dim) { return Subspace(ambient_dim, QMatrix::identity(ambient_dim)); }

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, QMatrix(0, ambient_dim)); }

Subspace Subspace::from_equations(std::size_t ambient_dim, const QMatrix& equations) {
  if (equations.rows() == 0) return full(ambient_dim);
  if (equations.cols() != ambient_dim) throw std::invalid_argument("equation rows have wrong length");
  return Subspace(ambient_dim, nullspace(equations));
}

QMatrix Subspace::equations() const {
  if (basis_.rows() == 0) return QMatrix::identity(ambient_dim_);
  return nullspace(basis_);
}

bool Subspace::contains(const QVector& v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("vector has wrong length");
  // Reduce v against the RREF rows using their pivots.
  QVector r = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t p = 0;
    while (basis_(i, p) == 0) ++p;
    if (r[p] == 0) continue;
    const Rational f = r[p];
    for (std::size_t j = p; j < ambient_dim_; ++j) r[j] -= f * basis_(i, j);
  }
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw std::invalid_argument("ambient dimension mismatch");
  if (other.dim() > dim()) return false;
  for (std::size_t i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.ambient_dim_ <=> b.ambient_dim_; c != 0) return c;
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  const auto& x = a.basis_.entries();
  const auto& y = b.basis_.entries();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const int c = cmp(x[i], y[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t Subspace::hash() const {
  std::size_t h = std::hash<std::size_t>{}(ambient_dim_) ^ (dim() * 0x9e3779b97f4a7c15ULL);
  for (const auto& e : basis_.entries()) {
    const std::size_t eh = std::hash<long>{}(mpz_get_si(e.get_num_mpz_t())) ^
                           (std::hash<long>{}(mpz_get_si(e.get_den_mpz_t())) << 1);
    h ^= eh + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  if (a.is_full()) return b;
  if (b.is_full()) return a;
  const QMatrix ea = a.equations();
  const QMatrix eb = b.equations();
  QMatrix stacked(ea.rows() + eb.rows(), a.ambient_dim());
  for (std::size_t i = 0; i < ea.rows(); ++i)
    for (std::size_t j = 0; j < ea.cols(); ++j) stacked(i, j) = ea(i, j);
  for (std::size_t i = 0; i < eb.rows(); ++i)
    for (std::size_t j = 0; j < eb.cols(); ++j) stacked(ea.rows() + i, j) = eb(i, j);
  return Subspace(a.ambient_dim(), nullspace(stacked));
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  QMatrix stacked(a.dim() + b.dim(), a.ambient_dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.ambient_dim(); ++j) stacked(i, j) = a.basis()(i, j);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < a.ambient_dim(); ++j) stacked(a.dim() + i, j) = b.basis()(i, j);
  return Subspace(a.ambient_dim(), stacked);
}

// ---------------------------------------------------------------------------
// Smith normal form

std::vector<Integer> SNFResult::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
  return out;
}

namespace {

class SmithReducer {
 public:
  explicit SmithReducer(const ZMatrix& a)
      : d_(a),
        u_(ZMatrix::identity(a.rows())),
        u_inv_(ZMatrix::identity(a.rows())),
        v_(ZMatrix::identity(a.cols())),
        v_inv_(ZMatrix::identity(a.cols())) {}

  SNFResult run() {
    const std::size_t m = d_.rows();
    const std::size_t n = d_.cols();
    std::size_t t = 0;
    while (t < std::min(m, n)) {
      if (!move_min_to(t, t, m, t, n)) break;
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (d_(i, t) == 0) continue;
          row_add(i, t, -Integer(d_(i, t) / d_(t, t)));
          if (d_(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (d_(t, j) == 0) continue;
          col_add(j, t, -Integer(d_(t, j) / d_(t, t)));
          if (d_(t, j) != 0) clean = false;
        }
        if (!clean) {
          // A remainder smaller than the pivot survived; bring it to the pivot position.
          move_min_cross(t, m, n);
          continue;
        }
        bool divisible = true;
        for (std::size_t i = t + 1; i < m && divisible; ++i)
          for (std::size_t j = t + 1; j < n; ++j)
            if (d_(i, j) % d_(t, t) != 0) {
              row_add(t, i, 1);
              divisible = false;
              break;
            }
        if (divisible) break;
      }
      if (d_(t, t) < 0) row_negate(t);
      ++t;
    }
    SNFResult r;
    r.rank = t;
    r.D = std::move(d_);
    r.U = std::move(u_);
    r.U_inv = std::move(u_inv_);
    r.Vt = std::move(v_);
    r.Vt_inv = std::move(v_inv_);
    return r;
  }

 private:
  bool move_min_to(std::size_t t, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
    bool found = false;
    std::size_t bi = 0, bj = 0;
    Integer best;
    for (std::size_t i = r0; i < r1; ++i)
      for (std::size_t j = c0; j < c1; ++j) {
        if (d_(i, j) == 0) continue;
        if (!found || mpz_cmpabs(d_(i, j).get_mpz_t(), best.get_mpz_t()) < 0) {
          best = d_(i, j);
          bi = i;
          bj = j;
          found = true;
        }
      }
    if (!found) return false;
    row_swap(t, bi);
    col_swap(t, bj);
    return true;
  }

  void move_min_cross(std::size_t t, std::size_t m, std::size_t n) {
    std::size_t bi = t, bj = t;
    Integer best = d_(t, t);
    for (std::size_t i = t + 1; i < m; ++i)
      if (d_(i, t) != 0 && mpz_cmpabs(d_(i, t).get_mpz_t(), best.get_mpz_t()) < 0) {
        best = d_(i, t);
        bi = i;
        bj = t;
      }
    for (std::size_t j = t + 1; j < n; ++j)
      if (d_(t, j) != 0 && mpz_cmpabs(d_(t, j).get_mpz_t(), best.get_mpz_t()) < 0) {
        best = d_(t, j);
        bi = t;
        bj = j;
      }
    row_swap(t, bi);
    col_swap(t, bj);
  }

  void row_add(std::size_t dst, std::size_t src, const Integer& f) {
    d_.add_row(dst, src, f);
    u_.add_row(dst, src, f);
    u_inv_.add_col(src, dst, -f);
  }
  void col_add(std::size_t dst, std::size_t src, const Integer& f) {
    d_.add_col(dst, src, f);
    v_.add_col(dst, src, f);
    v_inv_.add_row(src, dst, -f);
  }
  void row_swap(std::size_t a, std::size_t b) {
    d_.swap_rows(a, b);
    u_.swap_rows(a, b);
    u_inv_.swap_cols(a, b);
  }
  void col_swap(std::size_t a, std::size_t b) {
    d_.swap_cols(a, b);
    v_.swap_cols(a, b);
    v_inv_.swap_rows(a, b);
  }
  void row_negate(std::size_t i) {
    d_.negate_row(i);
    u_.negate_row(i);
    u_inv_.negate_col(i);
  }

  ZMatrix d_, u_, u_inv_, v_, v_inv_;
};

}  // namespace

SNFResult snf(const ZMatrix& m) { return SmithReducer(m).run(); }

std::optional<ZVector> solve_integer(const ZMatrix& A, const ZVector& b) {
  if (b.size() != A.rows()) throw std::invalid_argument("right-hand side has wrong length");
  const SNFResult s = snf(A);
  const ZVector ub = s.U.apply(b);
  ZVector y(A.cols());
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < s.rank) {
      if (ub[i] % s.D(i, i) != 0) return std::nullopt;
      y[i] = ub[i] / s.D(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return s.Vt.apply(y);
}

}  // namespace projarr
