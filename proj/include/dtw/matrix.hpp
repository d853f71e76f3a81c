#ifndef DTW_MATRIX_HPP
#define DTW_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "dtw/errors.hpp"

namespace dtw {

namespace detail {
// Free-function dispatch helper; member functions named is_zero would
// otherwise hide the element overloads inside class scope.
template <class R>
bool element_is_zero(const R& x) {
  return is_zero(x);
}
}  // namespace detail

/// Dense row-major matrix over a commutative ring R.
///
/// R is any element type of the library; the generic algorithms rely on the
/// free functions zero_like, one_like, is_zero, twist and (for fields)
/// inverse being found by argument-dependent lookup.
template <class R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const R& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const R& like) {
    Matrix m(n, n, zero_like(like));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(like);
    return m;
  }
  static Matrix diagonal(std::size_t n, const R& value) {
    Matrix m(n, n, zero_like(value));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = value;
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<R>>& rows) {
    if (rows.empty()) throw ShapeError("matrix needs at least one row");
    Matrix m(rows.size(), rows[0].size(), rows[0].at(0));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw ShapeError("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix column(const std::vector<R>& v) {
    Matrix m(v.size(), 1, v.at(0));
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<R>& data() const { return data_; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!dtw_is_zero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, data_.at(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw ShapeError("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                       std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                       std::to_string(b.cols_));
    Matrix r(a.rows_, b.cols_, zero_like(a.data_.at(0)));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const R& x = a(i, k);
        if (dtw_is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
      }
    return r;
  }
  friend Matrix operator*(const R& s, const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.data_) x = s * x;
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Apply f to every entry.
  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<const R&>()))> {
    using S = decltype(f(std::declval<const R&>()));
    Matrix<S> out(rows_, cols_, f(data_.at(0)));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
      os << "]";
    }
    return os << "]";
  }

 private:
  static bool dtw_is_zero(const R& x) { return detail::element_is_zero(x); }
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
  }
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<R> data_;
};

/// Entrywise Frobenius twist.
template <class R>
Matrix<R> twist(const Matrix<R>& m, long long ell) {
  return m.map([ell](const R& x) { return twist(x, ell); });
}

/// Characteristic polynomial det(X*I - A) by the division-free Berkowitz
/// algorithm; coefficients are returned from X^0 up to X^n (monic).
template <class R>
std::vector<R> charpoly(const Matrix<R>& A) {
  if (!A.square()) throw ShapeError("characteristic polynomial of a non-square matrix");
  const std::size_t n = A.rows();
  const R one = one_like(A(0, 0));
  const R zero = zero_like(A(0, 0));
  // c holds coefficients from the highest power downward.
  std::vector<R> c{one};
  for (std::size_t r = 1; r <= n; ++r) {
    const std::size_t k = r - 1;
    std::vector<R> col(r + 1, zero);
    col[0] = one;
    col[1] = -A(k, k);
    if (k > 0) {
      std::vector<R> v(k, zero);
      for (std::size_t i = 0; i < k; ++i) v[i] = A(i, k);
      for (std::size_t j = 2; j <= r; ++j) {
        R dot = zero;
        for (std::size_t i = 0; i < k; ++i) dot += A(k, i) * v[i];
        col[j] = -dot;
        if (j < r) {
          std::vector<R> w(k, zero);
          for (std::size_t i = 0; i < k; ++i)
            for (std::size_t l = 0; l < k; ++l) w[i] += A(i, l) * v[l];
          v = std::move(w);
        }
      }
    }
    std::vector<R> next(r + 1, zero);
    for (std::size_t i = 0; i <= r; ++i)
      for (std::size_t j = 0; j < r && j <= i; ++j) next[i] += col[i - j] * c[j];
    c = std::move(next);
  }
  return std::vector<R>(c.rbegin(), c.rend());
}

/// Determinant over a commutative ring (division-free).
template <class R>
R determinant(const Matrix<R>& A) {
  auto c = charpoly(A);
  R d = c[0];
  if (A.rows() % 2 == 1) d = -d;
  return d;
}

/// Inverse over a field by Gauss-Jordan elimination; nullopt when singular.
template <class R>
std::optional<Matrix<R>> inverse(const Matrix<R>& A) {
  if (!A.square()) throw ShapeError("inverse of a non-square matrix");
  const std::size_t n = A.rows();
  Matrix<R> M = A;
  Matrix<R> I = Matrix<R>::identity(n, A(0, 0));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(M(piv, col))) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(M(piv, j), M(col, j));
        std::swap(I(piv, j), I(col, j));
      }
    R inv = inverse(M(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      M(col, j) = M(col, j) * inv;
      I(col, j) = I(col, j) * inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || is_zero(M(i, col))) continue;
      R f = M(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        M(i, j) -= f * M(col, j);
        I(i, j) -= f * I(col, j);
      }
    }
  }
  return I;
}

/// Solves A x = b over a field for a possibly non-square A. Returns nullopt
/// if the system is inconsistent; throws if the solution is not unique.
template <class R>
std::optional<std::vector<R>> solve_unique(Matrix<R> A, std::vector<R> b) {
  const std::size_t m = A.rows(), n = A.cols();
  if (b.size() != m) throw ShapeError("right-hand side length mismatch");
  std::size_t row = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && is_zero(A(piv, col))) ++piv;
    if (piv == m) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < n; ++j) std::swap(A(piv, j), A(row, j));
      std::swap(b[piv], b[row]);
    }
    R inv = inverse(A(row, col));
    for (std::size_t j = 0; j < n; ++j) A(row, j) = A(row, j) * inv;
    b[row] = b[row] * inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || is_zero(A(i, col))) continue;
      R f = A(i, col);
      for (std::size_t j = 0; j < n; ++j) A(i, j) -= f * A(row, j);
      b[i] -= f * b[row];
    }
    pivots.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < m; ++i)
    if (!is_zero(b[i])) return std::nullopt;
  if (pivots.size() != n) throw SingularError("linear system has no unique solution");
  std::vector<R> x(n, zero_like(b.at(0)));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = b[i];
  return x;
}

}  // namespace dtw

#endif  // DTW_MATRIX_HPP
