#include "dtw/poly.hpp"

#include <cctype>
#include <sstream>

#include "dtw/errors.hpp"

namespace dtw {

namespace {

const Field* common_field(const Field* a, const Field* b) {
  if (a == nullptr) return b;
  if (b == nullptr || a == b) return a;
  throw RingMismatchError("polynomials over different fields");
}

}  // namespace

template <class Var>
Polynomial<Var>::Polynomial(const Field* F, std::vector<Elem> coeffs)
    : F_(F), c_(std::move(coeffs)) {
  trim();
}

template <class Var>
void Polynomial<Var>::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

template <class Var>
Polynomial<Var> Polynomial<Var>::constant(const Field* F, Elem c) {
  return Polynomial(F, std::vector<Elem>{c});
}

template <class Var>
Polynomial<Var> Polynomial<Var>::monomial(const Field* F, Elem c, std::size_t k) {
  std::vector<Elem> v(k + 1, 0);
  v[k] = c;
  return Polynomial(F, std::move(v));
}

template <class Var>
Polynomial<Var>& Polynomial<Var>::operator+=(const Polynomial& o) {
  F_ = common_field(F_, o.F_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = F_->add(c_[i], o.c_[i]);
  trim();
  return *this;
}

template <class Var>
Polynomial<Var>& Polynomial<Var>::operator-=(const Polynomial& o) {
  F_ = common_field(F_, o.F_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = F_->sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

template <class Var>
Polynomial<Var>& Polynomial<Var>::operator*=(const Polynomial& o) {
  F_ = common_field(F_, o.F_);
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::size_t n = c_.size() + o.c_.size() - 1;
  std::vector<Elem> out(n, 0);
  if (F_->is_prime()) {
    // Accumulate in 64 bits and reduce once per coefficient.
    const std::uint64_t p = F_->characteristic();
    std::vector<std::uint64_t> acc(n, 0);
    const std::uint64_t limit = ~0ull - p * p;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      std::uint64_t a = c_[i];
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) {
        std::uint64_t& slot = acc[i + j];
        slot += a * o.c_[j];
        if (slot > limit) slot %= p;
      }
    }
    for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<Elem>(acc[k] % p);
  } else {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j)
        out[i + j] = F_->add(out[i + j], F_->mul(c_[i], o.c_[j]));
    }
  }
  c_ = std::move(out);
  trim();
  return *this;
}

template <class Var>
Polynomial<Var> Polynomial<Var>::operator-() const {
  Polynomial r(F_, c_);
  for (auto& x : r.c_) x = F_->neg(x);
  return r;
}

template <class Var>
Polynomial<Var> Polynomial<Var>::scaled(Elem s) const {
  if (s == 0) return Polynomial(F_);
  Polynomial r(F_, c_);
  for (auto& x : r.c_) x = F_->mul(x, s);
  r.trim();
  return r;
}

template <class Var>
Polynomial<Var> Polynomial<Var>::shifted(std::size_t k) const {
  if (c_.empty()) return *this;
  std::vector<Elem> v(k, 0);
  v.insert(v.end(), c_.begin(), c_.end());
  return Polynomial(F_, std::move(v));
}

template <class Var>
Polynomial<Var> Polynomial<Var>::monic() const {
  if (c_.empty()) return *this;
  return scaled(F_->inv(c_.back()));
}

template <class Var>
typename Polynomial<Var>::Elem Polynomial<Var>::eval(Elem x) const {
  Elem r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = F_->add(F_->mul(r, x), c_[i]);
  return r;
}

template <class Var>
Polynomial<Var> Polynomial<Var>::derivative() const {
  if (c_.size() <= 1) return Polynomial(F_);
  std::vector<Elem> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    v[i - 1] = F_->mul(F_->from_int(static_cast<long long>(i)), c_[i]);
  return Polynomial(F_, std::move(v));
}

template <class Var>
Polynomial<Var> Polynomial<Var>::twist(long long ell) const {
  if (c_.empty() || ell == 0) return *this;
  if constexpr (Var::twist_moves_variable) {
    if (ell < 0) throw InvalidArgument("negative twist of a polynomial in θ");
    std::uint64_t step = 1;
    for (long long i = 0; i < ell; ++i) step *= F_->q();
    std::vector<Elem> v((c_.size() - 1) * step + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * step] = F_->frob(c_[i], ell);
    return Polynomial(F_, std::move(v));
  } else {
    std::vector<Elem> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = F_->frob(c_[i], ell);
    return Polynomial(F_, std::move(v));
  }
}

template <class Var>
Polynomial<Var> Polynomial<Var>::over(const Field* G) const {
  if (F_ != nullptr && !G->contains(F_))
    throw RingMismatchError("target field does not contain the coefficient field");
  return Polynomial(G, c_);
}

template <class Var>
std::string Polynomial<Var>::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    std::string coef = F_->format(c_[i]);
    bool compound = !F_->is_prime() && coef.find_first_of("+*^") != std::string::npos;
    if (compound) coef = "(" + coef + ")";
    if (i == 0) {
      os << coef;
    } else {
      if (c_[i] != 1) os << coef << "*";
      os << Var::name;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

template <class Var>
std::pair<Polynomial<Var>, Polynomial<Var>> divmod(const Polynomial<Var>& a,
                                                   const Polynomial<Var>& b) {
  if (b.is_zero()) throw ZeroDivisionError("polynomial division by zero");
  const Field* F = common_field(a.field(), b.field());
  if (a.degree() < b.degree()) return {Polynomial<Var>(F), Polynomial<Var>(F, a.coeffs())};
  std::vector<Field::Elem> r = a.coeffs();
  const auto& bc = b.coeffs();
  std::size_t db = bc.size() - 1;
  Field::Elem inv_lead = F->inv(bc.back());
  std::vector<Field::Elem> q(r.size() - db, 0);
  for (std::size_t d = r.size(); d-- > db;) {
    Field::Elem c = r[d];
    if (c == 0) continue;
    Field::Elem f = F->mul(c, inv_lead);
    q[d - db] = f;
    for (std::size_t j = 0; j <= db; ++j)
      r[d - db + j] = F->sub(r[d - db + j], F->mul(f, bc[j]));
  }
  r.resize(db);
  return {Polynomial<Var>(F, std::move(q)), Polynomial<Var>(F, std::move(r))};
}

template <class Var>
Polynomial<Var> gcd(Polynomial<Var> a, Polynomial<Var> b) {
  while (!b.is_zero()) {
    Polynomial<Var> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class Var>
void xgcd(const Polynomial<Var>& a, const Polynomial<Var>& b, Polynomial<Var>& g,
          Polynomial<Var>& s, Polynomial<Var>& t) {
  const Field* F = common_field(a.field(), b.field());
  Polynomial<Var> r0 = a, r1 = b;
  Polynomial<Var> s0 = Polynomial<Var>::constant(F, 1), s1(F);
  Polynomial<Var> t0(F), t1 = Polynomial<Var>::constant(F, 1);
  while (!r1.is_zero()) {
    auto [qq, rr] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rr);
    Polynomial<Var> s2 = s0 - qq * s1;
    Polynomial<Var> t2 = t0 - qq * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    g = r0;
    s = s0;
    t = t0;
    return;
  }
  Field::Elem inv = F->inv(r0.lead());
  g = r0.scaled(inv);
  s = s0.scaled(inv);
  t = t0.scaled(inv);
}

template <class Var>
Polynomial<Var> pow(const Polynomial<Var>& a, std::uint64_t e) {
  Polynomial<Var> r = Polynomial<Var>::constant(a.field(), 1), b = a;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return r;
}

template <class Var>
Polynomial<Var> powmod(const Polynomial<Var>& a, std::uint64_t e, const Polynomial<Var>& m) {
  Polynomial<Var> r = Polynomial<Var>::constant(m.field(), 1) % m, b = a % m;
  while (e > 0) {
    if (e & 1) r = (r * b) % m;
    e >>= 1;
    if (e > 0) b = (b * b) % m;
  }
  return r;
}

template <class Var>
Polynomial<Var> frobenius_powmod(const Polynomial<Var>& a, unsigned k, const Polynomial<Var>& m) {
  Polynomial<Var> r = a % m;
  for (unsigned i = 0; i < k; ++i) r = powmod(r, m.field()->size(), m);
  return r;
}

template <class Var>
bool is_irreducible(const Polynomial<Var>& f) {
  int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const Field* F = f.field();
  Polynomial<Var> fm = f.monic();
  Polynomial<Var> x = Polynomial<Var>::variable(F);
  Polynomial<Var> h = x % fm;
  for (int i = 1; i <= n / 2; ++i) {
    h = powmod(h, F->size(), fm);
    if (!gcd(h - x, fm).is_one()) return false;
  }
  return true;
}

#define DTW_INSTANTIATE(V)                                                           \
  template class Polynomial<V>;                                                      \
  template std::pair<Polynomial<V>, Polynomial<V>> divmod(const Polynomial<V>&,      \
                                                          const Polynomial<V>&);     \
  template Polynomial<V> gcd(Polynomial<V>, Polynomial<V>);                          \
  template void xgcd(const Polynomial<V>&, const Polynomial<V>&, Polynomial<V>&,     \
                     Polynomial<V>&, Polynomial<V>&);                                \
  template Polynomial<V> pow(const Polynomial<V>&, std::uint64_t);                   \
  template Polynomial<V> powmod(const Polynomial<V>&, std::uint64_t,                 \
                                const Polynomial<V>&);                               \
  template Polynomial<V> frobenius_powmod(const Polynomial<V>&, unsigned,            \
                                          const Polynomial<V>&);                     \
  template bool is_irreducible(const Polynomial<V>&);

DTW_INSTANTIATE(ThetaVar)
DTW_INSTANTIATE(TVar)

#undef DTW_INSTANTIATE

// Grammar (whitespace ignored):
//   poly  := ["-"] term (("+" | "-") term)*
//   term  := factor ("*"? factor)*
//   factor:= number | var ["^" number] | "(" poly ")" ["^" number]
APoly parse_poly(const Field* F, const std::string& text) {
  struct Parser {
    const Field* F;
    std::string s;
    std::size_t i = 0;

    void skip() {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool at_var() {
      skip();
      if (i >= s.size()) return false;
      if (s[i] == 'x' || s[i] == 't' || s[i] == 'T') return true;
      return s.compare(i, 2, "\xce\xb8") == 0;  // θ in UTF-8
    }
    void eat_var() {
      if (s[i] == 'x' || s[i] == 't' || s[i] == 'T')
        ++i;
      else
        i += 2;
    }
    std::uint64_t number() {
      skip();
      if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
        throw ParseError("expected a number at position " + std::to_string(i) + " in '" + s + "'");
      std::uint64_t v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
        if (v > (1ull << 40)) throw ParseError("number too large in '" + s + "'");
        ++i;
      }
      return v;
    }
    std::uint64_t exponent() {
      skip();
      if (i < s.size() && s[i] == '^') {
        ++i;
        return number();
      }
      return 1;
    }
    APoly factor() {
      skip();
      if (i >= s.size()) throw ParseError("unexpected end of polynomial '" + s + "'");
      if (s[i] == '(') {
        ++i;
        APoly inner = poly();
        skip();
        if (i >= s.size() || s[i] != ')') throw ParseError("missing ')' in '" + s + "'");
        ++i;
        return pow(inner, exponent());
      }
      if (at_var()) {
        eat_var();
        return APoly::monomial(F, 1, exponent());
      }
      std::uint64_t n = number();
      return APoly::constant(F, F->from_int(static_cast<long long>(n % F->characteristic())));
    }
    bool starts_factor() {
      skip();
      if (i >= s.size()) return false;
      return s[i] == '(' || std::isdigit(static_cast<unsigned char>(s[i])) || at_var();
    }
    APoly term() {
      APoly r = factor();
      for (;;) {
        skip();
        if (i < s.size() && s[i] == '*') {
          ++i;
          r *= factor();
        } else if (starts_factor()) {
          r *= factor();
        } else {
          return r;
        }
      }
    }
    APoly poly() {
      skip();
      bool negate = false;
      if (i < s.size() && s[i] == '-') {
        negate = true;
        ++i;
      }
      APoly r = term();
      if (negate) r = -r;
      for (;;) {
        skip();
        if (i < s.size() && s[i] == '+') {
          ++i;
          r += term();
        } else if (i < s.size() && s[i] == '-') {
          ++i;
          r -= term();
        } else {
          return r;
        }
      }
    }
  };
  Parser p{F, text};
  APoly r = p.poly();
  p.skip();
  if (p.i != p.s.size())
    throw ParseError("unexpected character at position " + std::to_string(p.i) + " in '" + text + "'");
  return APoly(F, r.coeffs());
}

}  // namespace dtw
