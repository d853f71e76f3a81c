#include "dtw/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "dtw/errors.hpp"

namespace dtw {

namespace {

const Field* common_field(const Field* a, const Field* b) {
  if (a == nullptr) return b;
  if (b == nullptr || a == b) return a;
  throw RingMismatchError("Laurent numbers over different constant fields");
}

}  // namespace

LaurentNumber LaurentNumber::zero(const Field* F) {
  LaurentNumber z;
  z.F_ = F;
  return z;
}

LaurentNumber LaurentNumber::zero_to(const Field* F, long bound) {
  LaurentNumber z;
  z.F_ = F;
  z.top_ = bound;
  return z;
}

LaurentNumber LaurentNumber::one(const Field* F, std::size_t prec) {
  return constant(FieldElem{F, 1}, prec);
}

LaurentNumber LaurentNumber::constant(const FieldElem& c, std::size_t prec) {
  return monomial(c, 0, prec);
}

LaurentNumber LaurentNumber::monomial(const FieldElem& c, long k, std::size_t prec) {
  if (c.is_zero()) return zero(c.F);
  if (prec == 0) throw InvalidArgument("precision must be positive");
  std::vector<Field::Elem> v(prec, 0);
  v[0] = c.v;
  return from_coeffs(c.F, k, std::move(v));
}

LaurentNumber LaurentNumber::from_coeffs(const Field* F, long top, std::vector<Field::Elem> coeffs) {
  LaurentNumber x;
  x.F_ = F;
  x.top_ = top;
  x.c_ = std::move(coeffs);
  x.normalize();
  return x;
}

void LaurentNumber::normalize() {
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead == c_.size()) {
    // Nothing known to be nonzero: keep only the error bound.
    top_ = top_ - static_cast<long>(c_.size());
    c_.clear();
    return;
  }
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    top_ -= static_cast<long>(lead);
  }
}

Field::Elem LaurentNumber::coefficient(long k) const {
  if (is_exact_zero()) return 0;
  if (k > top_) return 0;
  if (k <= error_exponent())
    throw InvalidArgument("coefficient of θ^" + std::to_string(k) + " lies below the precision");
  return c_[static_cast<std::size_t>(top_ - k)];
}

LaurentNumber& LaurentNumber::operator+=(const LaurentNumber& o) {
  F_ = common_field(F_, o.F_);
  if (o.is_exact_zero()) return *this;
  if (is_exact_zero()) {
    const Field* F = F_;
    *this = o;
    F_ = F;
    return *this;
  }
  const long err = std::max(error_exponent(), o.error_exponent());
  const long top = std::max(top_, o.top_);
  if (top <= err) {
    *this = zero_to(F_, err);
    return *this;
  }
  std::size_t cap = std::max(c_.size(), o.c_.size());
  std::size_t len = static_cast<std::size_t>(top - err);
  std::vector<Field::Elem> v(len, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    long deg = top_ - static_cast<long>(i);
    if (deg <= err) break;
    v[static_cast<std::size_t>(top - deg)] = c_[i];
  }
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    long deg = o.top_ - static_cast<long>(i);
    if (deg <= err) break;
    auto& slot = v[static_cast<std::size_t>(top - deg)];
    slot = F_->add(slot, o.c_[i]);
  }
  top_ = top;
  c_ = std::move(v);
  normalize();
  if (c_.size() > cap && cap > 0) c_.resize(cap);
  return *this;
}

LaurentNumber LaurentNumber::operator-() const {
  LaurentNumber r = *this;
  for (auto& x : r.c_) x = F_->neg(x);
  return r;
}

LaurentNumber& LaurentNumber::operator-=(const LaurentNumber& o) { return *this += -o; }

LaurentNumber& LaurentNumber::operator*=(const LaurentNumber& o) {
  F_ = common_field(F_, o.F_);
  if (is_exact_zero() || o.is_exact_zero()) {
    *this = zero(F_);
    return *this;
  }
  if (is_zero() || o.is_zero()) {
    // For a zero value top_ is its error bound, so the bounds simply add.
    *this = zero_to(F_, top_ + o.top_);
    return *this;
  }
  const std::size_t P = std::min(c_.size(), o.c_.size());
  std::vector<Field::Elem> v(P, 0);
  if (F_->is_prime()) {
    const std::uint64_t p = F_->characteristic();
    std::vector<std::uint64_t> acc(P, 0);
    const std::uint64_t limit = ~0ull - p * p;
    for (std::size_t i = 0; i < P; ++i) {
      std::uint64_t a = c_[i];
      if (a == 0) continue;
      for (std::size_t j = 0; i + j < P; ++j) {
        auto& slot = acc[i + j];
        slot += a * o.c_[j];
        if (slot > limit) slot %= p;
      }
    }
    for (std::size_t k = 0; k < P; ++k) v[k] = static_cast<Field::Elem>(acc[k] % p);
  } else {
    for (std::size_t i = 0; i < P; ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; i + j < P; ++j)
        v[i + j] = F_->add(v[i + j], F_->mul(c_[i], o.c_[j]));
    }
  }
  top_ += o.top_;
  c_ = std::move(v);
  normalize();
  return *this;
}

LaurentNumber LaurentNumber::scaled(const FieldElem& s) const {
  if (s.is_zero()) return zero(F_);
  LaurentNumber r = *this;
  for (auto& x : r.c_) x = F_->mul(x, s.v);
  return r;
}

LaurentNumber LaurentNumber::frobenius_power(long long ell) const {
  if (ell < 0) throw InvalidArgument("negative Frobenius power of a Laurent number");
  if (ell == 0 || is_exact_zero()) return *this;
  long step = 1;
  for (long long i = 0; i < ell; ++i) step *= static_cast<long>(F_->q());
  if (is_zero()) return zero_to(F_, top_ * step);
  const std::size_t P = c_.size();
  std::vector<Field::Elem> v(P, 0);
  for (std::size_t i = 0; i * static_cast<std::size_t>(step) < P; ++i)
    v[i * static_cast<std::size_t>(step)] = F_->frob(c_[i], ell);
  return from_coeffs(F_, top_ * step, std::move(v));
}

LaurentNumber LaurentNumber::coefficient_twist(long long ell) const {
  LaurentNumber r = *this;
  for (auto& x : r.c_) x = F_->frob(x, ell);
  return r;
}

LaurentNumber LaurentNumber::over(const Field* G) const {
  if (F_ != nullptr && !G->contains(F_))
    throw RingMismatchError("target field does not contain the constant field");
  LaurentNumber r = *this;
  r.F_ = G;
  return r;
}

LaurentNumber LaurentNumber::truncated(std::size_t prec) const {
  if (c_.size() <= prec) return *this;
  LaurentNumber r = *this;
  r.c_.resize(prec);
  return r;
}

std::string LaurentNumber::to_string(std::size_t max_terms) const {
  if (is_exact_zero()) return "0";
  std::ostringstream os;
  std::size_t shown = 0;
  for (std::size_t i = 0; i < c_.size() && shown < max_terms; ++i) {
    if (c_[i] == 0) continue;
    long k = top_ - static_cast<long>(i);
    if (shown > 0) os << " + ";
    std::string coef = F_->format(c_[i]);
    if (k == 0) {
      os << coef;
    } else {
      if (c_[i] != 1) os << (F_->is_prime() ? coef : "(" + coef + ")");
      os << "θ";
      if (k != 1) os << "^" << k;
    }
    ++shown;
  }
  if (shown > 0) os << " + ";
  os << "O(θ^" << error_exponent() << ")";
  return os.str();
}

LaurentNumber embed_rational(const RatFunc& x, std::size_t prec) {
  const Field* F = x.field();
  if (x.is_zero()) return LaurentNumber::zero(F);
  auto poly_series = [&](const APoly& p) {
    std::size_t len = std::max(prec, static_cast<std::size_t>(p.degree()) + 1);
    std::vector<Field::Elem> v(len, 0);
    for (int i = 0; i <= p.degree(); ++i)
      v[static_cast<std::size_t>(p.degree() - i)] = p[static_cast<std::size_t>(i)];
    return LaurentNumber::from_coeffs(F, p.degree(), std::move(v));
  };
  LaurentNumber num = poly_series(x.numerator());
  if (x.denominator().is_one()) return num.truncated(prec);
  return (num * invert(poly_series(x.denominator()))).truncated(prec);
}

LaurentNumber invert(const LaurentNumber& x) {
  if (x.is_zero()) throw ZeroDivisionError("inverse of a Laurent number that is zero to its precision");
  const Field* F = x.field();
  const auto& c = x.coeffs();
  const std::size_t P = c.size();
  const Field::Elem inv0 = F->inv(c[0]);
  std::vector<Field::Elem> d(P, 0);
  d[0] = inv0;
  for (std::size_t k = 1; k < P; ++k) {
    Field::Elem s = 0;
    for (std::size_t j = 1; j <= k; ++j)
      if (c[j] != 0 && d[k - j] != 0) s = F->add(s, F->mul(c[j], d[k - j]));
    d[k] = F->neg(F->mul(inv0, s));
  }
  return LaurentNumber::from_coeffs(F, -x.top_degree(), std::move(d));
}

SignDecomposition sign_decompose(const LaurentNumber& x) {
  if (x.is_zero()) throw ZeroSignError("sign of zero");
  const Field* F = x.field();
  FieldElem sgn{F, x.coeffs()[0]};
  std::vector<Field::Elem> v = x.coeffs();
  Field::Elem inv = F->inv(sgn.v);
  for (auto& c : v) c = F->mul(c, inv);
  return {sgn, x.top_degree(), LaurentNumber::from_coeffs(F, 0, std::move(v))};
}

LaurentNumber norm_down(const LaurentNumber& x) {
  const Field* F = x.field();
  LaurentNumber r = x;
  for (unsigned i = 1; i < F->degree_over_ground(); ++i) r *= x.coefficient_twist(i);
  for (auto c : r.coeffs())
    if (!F->in_ground(c))
      throw DescentError("norm has a coefficient outside the ground field: " + F->format(c));
  return LaurentNumber::from_coeffs(F->ground_field(), r.top_degree(), r.coeffs());
}

long discrepancy(const LaurentNumber& a, const LaurentNumber& b) {
  LaurentNumber d = a - b;
  if (d.is_exact_zero()) return LONG_MAX / 4;
  return -d.top_degree();
}

}  // namespace dtw
