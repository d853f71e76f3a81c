#include "dtw/ratfunc.hpp"

#include <climits>

#include "dtw/errors.hpp"

namespace dtw {

RatFunc::RatFunc(APoly num) : num_(std::move(num)) {
  den_ = APoly::constant(num_.field(), 1);
}

RatFunc::RatFunc(APoly num, APoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroDivisionError("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  const Field* F = field();
  if (num_.is_zero()) {
    num_ = APoly(F);
    den_ = APoly::constant(F, 1);
    return;
  }
  if (den_.degree() > 0) {
    APoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
  Field::Elem lead = den_.lead();
  if (lead != 1) {
    Field::Elem inv = F->inv(lead);
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

long RatFunc::degree() const {
  if (num_.is_zero()) return LONG_MIN / 4;
  return static_cast<long>(num_.degree()) - static_cast<long>(den_.degree());
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.degree() > 0) normalize();
    else if (num_.is_zero()) normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = zero_like(o);
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  // Cross-cancel before multiplying to keep degrees small.
  APoly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  num_ = (num_ / g1) * (o.num_ / g2);
  den_ = (den_ / g2) * (o.den_ / g1);
  Field::Elem lead = den_.lead();
  if (lead != 1) {
    Field::Elem inv = field()->inv(lead);
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw ZeroDivisionError("inverse of zero in K");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r;
  r.num_ = dtw::pow(num_, static_cast<std::uint64_t>(e));
  r.den_ = dtw::pow(den_, static_cast<std::uint64_t>(e));
  if (r.num_.is_zero()) r.normalize();
  return r;
}

RatFunc RatFunc::twist(long long ell) const {
  RatFunc r;
  r.num_ = num_.twist(ell);
  r.den_ = den_.twist(ell);
  return r;
}

RatFunc RatFunc::over(const Field* G) const {
  RatFunc r;
  r.num_ = num_.over(G);
  r.den_ = den_.over(G);
  return r;
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  auto wrap = [](const APoly& p) {
    std::string s = p.to_string();
    return (s.find(' ') != std::string::npos) ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace dtw
