#ifndef DTW_LAURENT_HPP
#define DTW_LAURENT_HPP

#include <climits>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "dtw/field.hpp"
#include "dtw/poly.hpp"
#include "dtw/ratfunc.hpp"

namespace dtw {

/// Default number of retained coefficients.
inline constexpr std::size_t kDefaultPrecision = 64;

/// Result of sign_decompose: x = sgn * θ^deg * one_unit.
struct SignDecomposition;

/// A truncated Laurent series in 1/θ over a finite constant field:
///   x = sum_{i < P} c_i θ^(top - i) + O(θ^(top - P)).
/// The leading coefficient is nonzero unless the value is zero to its
/// precision, in which case only the error bound O(θ^(bound)) is known.
class LaurentNumber {
 public:
  LaurentNumber() = default;

  /// The exact zero.
  static LaurentNumber zero(const Field* F);
  /// Zero known only up to O(θ^bound).
  static LaurentNumber zero_to(const Field* F, long bound);
  static LaurentNumber one(const Field* F, std::size_t prec = kDefaultPrecision);
  static LaurentNumber constant(const FieldElem& c, std::size_t prec = kDefaultPrecision);
  /// c * θ^k.
  static LaurentNumber monomial(const FieldElem& c, long k, std::size_t prec = kDefaultPrecision);
  /// Direct construction from leading degree and coefficients.
  static LaurentNumber from_coeffs(const Field* F, long top, std::vector<Field::Elem> coeffs);

  const Field* field() const { return F_; }
  bool is_zero() const { return c_.empty(); }
  bool is_exact_zero() const { return c_.empty() && top_ == kExact; }
  /// θ-degree of the leading term (for zero values: the error exponent).
  long top_degree() const { return top_; }
  /// Number of retained coefficients.
  std::size_t precision() const { return c_.size(); }
  /// Exponent e with the value known modulo θ^e.
  long error_exponent() const { return top_ - static_cast<long>(c_.size()); }
  const std::vector<Field::Elem>& coeffs() const { return c_; }
  /// Coefficient of θ^k (0 above the top degree; throws below the error).
  Field::Elem coefficient(long k) const;

  LaurentNumber& operator+=(const LaurentNumber& o);
  LaurentNumber& operator-=(const LaurentNumber& o);
  LaurentNumber& operator*=(const LaurentNumber& o);
  friend LaurentNumber operator+(LaurentNumber a, const LaurentNumber& b) { return a += b; }
  friend LaurentNumber operator-(LaurentNumber a, const LaurentNumber& b) { return a -= b; }
  friend LaurentNumber operator*(LaurentNumber a, const LaurentNumber& b) { return a *= b; }
  LaurentNumber operator-() const;
  LaurentNumber scaled(const FieldElem& s) const;

  /// x^(q^ell) as a power of the series (coefficients Frobenius-twisted and
  /// exponents multiplied by q^ell), truncated to the current precision.
  LaurentNumber frobenius_power(long long ell) const;
  /// Coefficientwise Frobenius twist c_i -> c_i^(q^ell); θ is fixed.
  LaurentNumber coefficient_twist(long long ell) const;
  /// Same series over a field containing the constant field.
  LaurentNumber over(const Field* G) const;
  /// Truncate to at most prec coefficients.
  LaurentNumber truncated(std::size_t prec) const;

  std::string to_string(std::size_t max_terms = 8) const;
  friend std::ostream& operator<<(std::ostream& os, const LaurentNumber& x) {
    return os << x.to_string();
  }

  static constexpr long kExact = LONG_MIN / 4;

 private:
  void normalize();
  const Field* F_ = nullptr;
  long top_ = kExact;
  std::vector<Field::Elem> c_;
};

struct SignDecomposition {
  FieldElem sign;
  long degree = 0;
  LaurentNumber one_unit;
};

/// Expansion of a rational function to prec coefficients.
LaurentNumber embed_rational(const RatFunc& x, std::size_t prec = kDefaultPrecision);
/// Multiplicative inverse to the working precision.
LaurentNumber invert(const LaurentNumber& x);
/// x = sgn * θ^deg * <x> with <x> = 1 + O(1/θ).
SignDecomposition sign_decompose(const LaurentNumber& x);
/// Product of the coefficientwise Frobenius conjugates, descended to F_q.
LaurentNumber norm_down(const LaurentNumber& x);
/// θ-valuation of a - b, i.e. the largest v with a - b = O(θ^(-v)) as far
/// as the precisions allow.
long discrepancy(const LaurentNumber& a, const LaurentNumber& b);

}  // namespace dtw

#endif  // DTW_LAURENT_HPP
