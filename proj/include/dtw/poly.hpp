#ifndef DTW_POLY_HPP
#define DTW_POLY_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "dtw/field.hpp"

namespace dtw {

/// Variable tag for A = F_q[θ]: the Frobenius twist raises the whole
/// polynomial to the q-th power, moving θ to θ^q.
struct ThetaVar {
  static constexpr const char* name = "θ";
  static constexpr bool twist_moves_variable = true;
};

/// Variable tag for polynomials in the motive variable t: the Frobenius
/// twist acts on coefficients only and fixes t.
struct TVar {
  static constexpr const char* name = "t";
  static constexpr bool twist_moves_variable = false;
};

/// Dense univariate polynomial over a finite field, little-endian, with no
/// trailing zero coefficients. A default-constructed polynomial is the zero
/// polynomial of an unspecified field and adopts the field of whatever it
/// is combined with.
template <class Var>
class Polynomial {
 public:
  using Elem = Field::Elem;

  Polynomial() = default;
  explicit Polynomial(const Field* F) : F_(F) {}
  Polynomial(const Field* F, std::vector<Elem> coeffs);

  static Polynomial constant(const Field* F, Elem c);
  static Polynomial monomial(const Field* F, Elem c, std::size_t k);
  static Polynomial variable(const Field* F) { return monomial(F, 1, 1); }

  const Field* field() const { return F_; }
  /// Degree, with -1 standing for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Elem operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<Elem>& coeffs() const { return c_; }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  Polynomial operator-() const;

  Polynomial scaled(Elem s) const;
  Polynomial shifted(std::size_t k) const;
  Polynomial monic() const;
  Elem eval(Elem x) const;
  Polynomial derivative() const;
  /// Frobenius twist by q^ell (see the variable tag for the semantics).
  Polynomial twist(long long ell) const;
  /// Same coefficients over a field containing the current one.
  Polynomial over(const Field* G) const;
  /// Reinterpret the coefficient sequence in another variable.
  template <class Other>
  Polynomial<Other> as() const {
    return Polynomial<Other>(F_, c_);
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }
  /// Canonical order: by degree, then by coefficients from the top down.
  friend bool operator<(const Polynomial& a, const Polynomial& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (std::size_t i = a.c_.size(); i-- > 0;)
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
  }

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& a) {
    return os << a.to_string();
  }

 private:
  void trim();
  const Field* F_ = nullptr;
  std::vector<Elem> c_;
};

using APoly = Polynomial<ThetaVar>;
using TPoly = Polynomial<TVar>;

/// Euclidean division a = q*b + r with deg r < deg b.
template <class Var>
std::pair<Polynomial<Var>, Polynomial<Var>> divmod(const Polynomial<Var>& a,
                                                   const Polynomial<Var>& b);
template <class Var>
Polynomial<Var> operator%(const Polynomial<Var>& a, const Polynomial<Var>& b) {
  return divmod(a, b).second;
}
template <class Var>
Polynomial<Var> operator/(const Polynomial<Var>& a, const Polynomial<Var>& b) {
  return divmod(a, b).first;
}
/// Monic greatest common divisor (zero when both inputs are zero).
template <class Var>
Polynomial<Var> gcd(Polynomial<Var> a, Polynomial<Var> b);
/// Returns (g, s, t) with s*a + t*b = g monic.
template <class Var>
void xgcd(const Polynomial<Var>& a, const Polynomial<Var>& b,
          Polynomial<Var>& g, Polynomial<Var>& s, Polynomial<Var>& t);
template <class Var>
Polynomial<Var> pow(const Polynomial<Var>& a, std::uint64_t e);
template <class Var>
Polynomial<Var> powmod(const Polynomial<Var>& a, std::uint64_t e,
                       const Polynomial<Var>& m);
/// a^(|F|^k) mod m by repeated |F|-th powering.
template <class Var>
Polynomial<Var> frobenius_powmod(const Polynomial<Var>& a, unsigned k,
                                 const Polynomial<Var>& m);
/// Irreducibility over the coefficient field (Ben-Or test).
template <class Var>
bool is_irreducible(const Polynomial<Var>& f);

// Ring-interface helpers used by the generic matrix and Ore code.
template <class Var>
Polynomial<Var> zero_like(const Polynomial<Var>& x) {
  return Polynomial<Var>(x.field());
}
template <class Var>
Polynomial<Var> one_like(const Polynomial<Var>& x) {
  return Polynomial<Var>::constant(x.field(), 1);
}
template <class Var>
bool is_zero(const Polynomial<Var>& x) {
  return x.is_zero();
}
template <class Var>
Polynomial<Var> twist(const Polynomial<Var>& x, long long ell) {
  return x.twist(ell);
}
template <class Var>
Polynomial<Var> constant_like(const Polynomial<Var>& x, Field::Elem c) {
  return Polynomial<Var>::constant(x.field(), c);
}

/// Parses the small polynomial grammar used on the command line: integer
/// coefficients, the variable (θ, x or t), "^", "+", "-" and "*".
APoly parse_poly(const Field* F, const std::string& text);

}  // namespace dtw

#endif  // DTW_POLY_HPP
