#ifndef DTW_ORE_HPP
#define DTW_ORE_HPP

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include "dtw/errors.hpp"
#include "dtw/matrix.hpp"

namespace dtw {

/// A twisted polynomial sum_i A_i τ^i with rows x cols matrix coefficients
/// over a ring R, multiplied by the rule τ c = c^(1) τ.
///
/// R must provide zero_like, one_like, is_zero and twist through
/// argument-dependent lookup. A scalar Ore polynomial is the 1 x 1 case.
template <class R>
class OrePoly {
 public:
  using Mat = Matrix<R>;

  OrePoly() = default;
  /// The zero polynomial of the given shape; like fixes the coefficient ring.
  OrePoly(std::size_t rows, std::size_t cols, const R& like)
      : rows_(rows), cols_(cols), zero_(zero_like(like)) {}
  /// From coefficient matrices A_0, A_1, ... (all of one shape).
  explicit OrePoly(std::vector<Mat> terms) {
    if (terms.empty()) throw ShapeError("Ore polynomial needs at least one term");
    rows_ = terms[0].rows();
    cols_ = terms[0].cols();
    zero_ = zero_like(terms[0](0, 0));
    for (const auto& t : terms)
      if (t.rows() != rows_ || t.cols() != cols_)
        throw ShapeError("Ore coefficients of different shapes");
    terms_ = std::move(terms);
    trim();
  }
  /// Scalar polynomial sum_i c_i τ^i.
  static OrePoly scalar(const std::vector<R>& coeffs) {
    std::vector<Mat> t;
    for (const auto& c : coeffs) t.push_back(Mat(1, 1, c));
    return OrePoly(std::move(t));
  }
  static OrePoly identity(std::size_t n, const R& like) {
    return OrePoly(std::vector<Mat>{Mat::identity(n, like)});
  }
  /// The single term A τ^k.
  static OrePoly monomial(const Mat& A, std::size_t k) {
    std::vector<Mat> t(k + 1, Mat(A.rows(), A.cols(), zero_like(A(0, 0))));
    t[k] = A;
    return OrePoly(std::move(t));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  /// τ-degree, with -1 for the zero polynomial.
  long degree() const { return static_cast<long>(terms_.size()) - 1; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Mat>& terms() const { return terms_; }
  /// Coefficient of τ^k (a zero matrix beyond the degree).
  Mat coeff(std::size_t k) const {
    if (k < terms_.size()) return terms_[k];
    return Mat(rows_, cols_, zero_);
  }
  /// Leading coefficient matrix.
  const Mat& leading() const {
    if (terms_.empty()) throw ShapeError("leading coefficient of the zero Ore polynomial");
    return terms_.back();
  }
  /// The constant term ∂f.
  Mat d_part() const { return coeff(0); }
  const R& zero_element() const { return zero_; }

  OrePoly& operator+=(const OrePoly& o) {
    check_same(o);
    if (terms_.size() < o.terms_.size())
      terms_.resize(o.terms_.size(), Mat(rows_, cols_, zero_));
    for (std::size_t k = 0; k < o.terms_.size(); ++k) terms_[k] += o.terms_[k];
    trim();
    return *this;
  }
  OrePoly& operator-=(const OrePoly& o) { return *this += -o; }
  OrePoly operator-() const {
    OrePoly r = *this;
    for (auto& t : r.terms_) t = -t;
    return r;
  }
  friend OrePoly operator+(OrePoly a, const OrePoly& b) { return a += b; }
  friend OrePoly operator-(OrePoly a, const OrePoly& b) { return a -= b; }

  /// (sum A_i τ^i)(sum B_j τ^j) = sum_k (sum_{i+j=k} A_i B_j^(i)) τ^k.
  friend OrePoly operator*(const OrePoly& a, const OrePoly& b) {
    if (a.cols_ != b.rows_)
      throw ShapeError("Ore product shape mismatch: " + std::to_string(a.cols_) + " vs " +
                       std::to_string(b.rows_));
    OrePoly r(a.rows_, b.cols_, a.zero_);
    if (a.is_zero() || b.is_zero()) return r;
    r.terms_.assign(a.terms_.size() + b.terms_.size() - 1, Mat(a.rows_, b.cols_, a.zero_));
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.terms_.size(); ++j) {
        if (b.terms_[j].is_zero()) continue;
        r.terms_[i + j] += a.terms_[i] * twist(b.terms_[j], static_cast<long long>(i));
      }
    }
    r.trim();
    return r;
  }
  OrePoly& operator*=(const OrePoly& o) { return *this = *this * o; }

  friend bool operator==(const OrePoly& a, const OrePoly& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const OrePoly& a, const OrePoly& b) { return !(a == b); }

  /// Evaluation sum_i A_i x^(i) on a column vector.
  std::vector<R> apply(const std::vector<R>& x) const {
    if (x.size() != cols_) throw ShapeError("Ore evaluation vector length mismatch");
    std::vector<R> out(rows_, zero_);
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const Mat& A = terms_[i];
      for (std::size_t c = 0; c < cols_; ++c) {
        R xi = twist(x[c], static_cast<long long>(i));
        if (detail::element_is_zero(xi)) continue;
        for (std::size_t r = 0; r < rows_; ++r) out[r] += A(r, c) * xi;
      }
    }
    return out;
  }

  /// Apply f to every coefficient entry (change of coefficient ring).
  template <class F>
  auto map(F f) const -> OrePoly<decltype(f(std::declval<const R&>()))> {
    using S = decltype(f(std::declval<const R&>()));
    OrePoly<S> out(rows_, cols_, f(zero_));
    if (terms_.empty()) return out;
    std::vector<Matrix<S>> t;
    for (const auto& A : terms_) t.push_back(A.map(f));
    return OrePoly<S>(std::move(t));
  }

  friend std::ostream& operator<<(std::ostream& os, const OrePoly& a) {
    if (a.terms_.empty()) return os << "0";
    bool first = true;
    for (std::size_t k = 0; k < a.terms_.size(); ++k) {
      if (a.terms_[k].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      if (a.rows_ == 1 && a.cols_ == 1)
        os << "(" << a.terms_[k](0, 0) << ")";
      else
        os << a.terms_[k];
      if (k == 1) os << "τ";
      if (k > 1) os << "τ^" << k;
    }
    return os;
  }

 private:
  void trim() {
    while (!terms_.empty() && terms_.back().is_zero()) terms_.pop_back();
  }
  void check_same(const OrePoly& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("Ore sum shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  R zero_{};
  std::vector<Mat> terms_;
};

/// Block-diagonal sum a ⊕ a ⊕ ... (n copies) of a scalar Ore polynomial.
template <class R>
OrePoly<R> direct_sum(const OrePoly<R>& a, std::size_t n) {
  if (a.rows() != 1 || a.cols() != 1) throw ShapeError("direct sum of a non-scalar Ore polynomial");
  if (a.is_zero()) return OrePoly<R>(n, n, a.zero_element());
  std::vector<Matrix<R>> t;
  for (const auto& A : a.terms()) t.push_back(Matrix<R>::diagonal(n, A(0, 0)));
  return OrePoly<R>(std::move(t));
}

}  // namespace dtw

#endif  // DTW_ORE_HPP
