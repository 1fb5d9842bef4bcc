#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace projarr {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
/// "p/q", or "p" when q = 1.
std::string format_rational(const Rational& value);

/// Dense row-major matrix over a ring with value semantics.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw std::invalid_argument("matrix entry count mismatch");
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static DenseMatrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    DenseMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<T>& entries() const { return data_; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
  }
  // col[dst] += factor * col[src]
  void add_col(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }
  void negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
  }

  DenseMatrix transposed() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    DenseMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
    DenseMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
  }
  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
    DenseMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
  }

  std::vector<T> apply(const std::vector<T>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<T> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (x[j] != 0) y[i] += (*this)(i, j) * x[j];
    return y;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = DenseMatrix<Rational>;
using ZMatrix = DenseMatrix<Integer>;
using ZVector = std::vector<Integer>;
using QVector = std::vector<Rational>;

/// Reduced row echelon form with zero rows removed.
QMatrix rref(const QMatrix& m);
/// Rank over the rationals.
std::size_t rank(const QMatrix& m);
/// Rows form a basis (RREF) of {x : m x = 0}.
QMatrix nullspace(const QMatrix& m);
/// Exact determinant of a square rational matrix.
Rational determinant(const QMatrix& m);
/// Exact determinant of a square integer matrix (Bareiss).
Integer determinant(const ZMatrix& m);

/// A linear subspace of Q^ambient_dim stored by its canonical RREF basis.
class Subspace {
 public:
  Subspace() = default;
  /// Canonicalizes the row span of `spanning_rows` (which must have `ambient_dim` columns).
  Subspace(std::size_t ambient_dim, const QMatrix& spanning_rows);

  static Subspace full(std::size_t ambient_dim);
  static Subspace zero(std::size_t ambient_dim);
  /// Kernel of the listed functionals.
  static Subspace from_equations(std::size_t ambient_dim, const QMatrix& equations);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  const QMatrix& basis() const { return basis_; }
  bool is_zero() const { return basis_.rows() == 0; }
  bool is_full() const { return basis_.rows() == ambient_dim_; }

  bool contains(const QVector& v) const;
  bool contains(const Subspace& other) const;
  /// Rows spanning the annihilator: x in this subspace iff equations() x = 0.
  QMatrix equations() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }
  /// Total order: ambient, then dimension, then lexicographic RREF entries.
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

  std::size_t hash() const;

 private:
  std::size_t ambient_dim_ = 0;
  QMatrix basis_;
};

Subspace subspace_intersection(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const { return s.hash(); }
};

/// U * A * Vt = D with U, Vt unimodular; diagonal nonnegative with d_1 | d_2 | ...
/// The inverses are tracked alongside so that homology can change basis both ways.
struct SNFResult {
  ZMatrix U;
  ZMatrix D;
  ZMatrix Vt;
  ZMatrix U_inv;
  ZMatrix Vt_inv;
  std::size_t rank = 0;

  std::vector<Integer> diagonal() const;
};

SNFResult snf(const ZMatrix& m);

/// Some x with A x = b, or nullopt when no integral solution exists.
std::optional<ZVector> solve_integer(const ZMatrix& A, const ZVector& b);

}  // namespace projarr
