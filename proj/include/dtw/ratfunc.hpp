#ifndef DTW_RATFUNC_HPP
#define DTW_RATFUNC_HPP

#include <ostream>
#include <string>

#include "dtw/poly.hpp"

namespace dtw {

/// An element of K = F(θ) for a finite constant field F, stored as a reduced
/// fraction with monic denominator.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(const Field* F) : num_(F), den_(APoly::constant(F, 1)) {}
  RatFunc(APoly num);  // NOLINT: polynomials embed implicitly
  RatFunc(APoly num, APoly den);

  static RatFunc zero(const Field* F) { return RatFunc(F); }
  static RatFunc one(const Field* F) { return RatFunc(APoly::constant(F, 1)); }
  static RatFunc from_int(const Field* F, long long n) {
    return RatFunc(APoly::constant(F, F->from_int(n)));
  }
  static RatFunc constant(const Field* F, Field::Elem c) {
    return RatFunc(APoly::constant(F, c));
  }

  const Field* field() const { return num_.field() ? num_.field() : den_.field(); }
  const APoly& numerator() const { return num_; }
  const APoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.degree() <= 0; }
  /// deg(num) - deg(den); the zero element reports a very negative value.
  long degree() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const;
  RatFunc inverse() const;
  RatFunc pow(long long e) const;
  RatFunc twist(long long ell) const;
  /// Same fraction over a field containing the constant field.
  RatFunc over(const Field* G) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const RatFunc& a) {
    return os << a.to_string();
  }

 private:
  void normalize();
  APoly num_;
  APoly den_;
};

inline RatFunc zero_like(const RatFunc& x) { return RatFunc::zero(x.field()); }
inline RatFunc one_like(const RatFunc& x) { return RatFunc::one(x.field()); }
inline bool is_zero(const RatFunc& x) { return x.is_zero(); }
inline RatFunc inverse(const RatFunc& x) { return x.inverse(); }
inline RatFunc twist(const RatFunc& x, long long ell) { return x.twist(ell); }
inline RatFunc constant_like(const RatFunc& x, Field::Elem c) {
  return RatFunc::constant(x.field(), c);
}

}  // namespace dtw

#endif  // DTW_RATFUNC_HPP
