#include "dtw/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

#include "dtw/errors.hpp"
#include "dtw/poly.hpp"

namespace dtw {

namespace {

// Largest field for which multiplication uses exp/log tables.
constexpr std::uint32_t kTableLimit = 4096;

bool is_prime_number(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

using Key = std::tuple<const Field*, std::vector<Field::Elem>, bool, std::uint32_t>;

struct Registry {
  std::mutex mutex;
  std::map<Key, std::unique_ptr<const Field>> fields;
};

Registry& registry() {
  static Registry r;
  return r;
}

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

}  // namespace

const Field* Field::prime(std::uint32_t p) {
  if (!is_prime_number(p) || p >= (1u << 16))
    throw InvalidArgument("characteristic must be a prime below 65536, got " +
                          std::to_string(p));
  return intern(nullptr, {}, true, p);
}

const Field* Field::ground(std::uint32_t p, unsigned e, std::vector<Elem> modulus) {
  const Field* Fp = prime(p);
  if (e == 0) throw InvalidArgument("extension degree must be at least 1");
  if (e == 1) {
    if (!modulus.empty() && !(modulus.size() == 2 && modulus[1] == 1))
      throw InvalidArgument("a degree-1 modulus must be monic linear");
    return Fp;
  }
  if (modulus.empty()) modulus = extension(Fp, e)->modulus();
  return intern(Fp, std::move(modulus), true, p);
}

const Field* Field::extension(const Field* base, std::vector<Elem> modulus) {
  return intern(base, std::move(modulus), false, base->characteristic());
}

const Field* Field::extension(const Field* base, unsigned d) {
  if (d == 0) throw InvalidArgument("extension degree must be at least 1");
  // Enumerate monic candidates of degree d in increasing index order.
  std::uint64_t count = 1;
  for (unsigned i = 0; i < d; ++i) count *= base->size();
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<Elem> c(d + 1, 0);
    std::uint64_t r = idx;
    for (unsigned i = 0; i < d; ++i) {
      c[i] = static_cast<Elem>(r % base->size());
      r /= base->size();
    }
    c[d] = 1;
    APoly f(base, c);
    if (is_irreducible(f)) return extension(base, c);
  }
  throw InvalidArgument("no irreducible polynomial found");
}

const Field* Field::intern(const Field* base, std::vector<Elem> modulus,
                           bool new_ground, std::uint32_t p) {
  Key key{base, modulus, new_ground, p};
  Registry& reg = registry();
  {
    std::lock_guard<std::mutex> lock(reg.mutex);
    auto it = reg.fields.find(key);
    if (it != reg.fields.end()) return it->second.get();
  }
  // Validate outside the lock: the irreducibility test may itself create
  // fields.
  if (base != nullptr) {
    if (modulus.size() < 2 || modulus.back() != 1)
      throw InvalidArgument("field modulus must be monic of degree >= 1");
    for (Elem c : modulus)
      if (c >= base->size()) throw InvalidArgument("modulus coefficient out of range");
    if (!is_irreducible(APoly(base, modulus)))
      throw ReducibleError("field modulus is not irreducible");
  }
  auto F = std::unique_ptr<Field>(new Field());
  F->p_ = p;
  F->base_ = base;
  if (base == nullptr) {
    F->size_ = p;
    F->degree_ = 1;
    F->abs_degree_ = 1;
  } else {
    F->degree_ = static_cast<unsigned>(modulus.size() - 1);
    F->abs_degree_ = base->abs_degree_ * F->degree_;
    std::uint64_t size = 1;
    for (unsigned i = 0; i < F->degree_; ++i) size *= base->size_;
    if (size >= (1ull << 31)) throw InvalidArgument("field too large for this library");
    F->size_ = static_cast<std::uint32_t>(size);
  }
  F->modulus_ = std::move(modulus);
  if (new_ground || base == nullptr) {
    F->ground_ = F.get();
    F->q_ = F->size_;
    F->ground_degree_ = 1;
  } else {
    F->ground_ = base->ground_;
    F->q_ = base->q_;
    F->ground_degree_ = base->ground_degree_ * F->degree_;
  }
  F->build_tables();

  std::lock_guard<std::mutex> lock(reg.mutex);
  auto [it, inserted] = reg.fields.emplace(key, std::move(F));
  return it->second.get();
}

void Field::build_tables() {
  if (base_ == nullptr || size_ > kTableLimit) return;
  std::uint64_t order = size_ - 1;
  auto factors = prime_factors(order);
  Elem g = 0;
  for (Elem cand = 1; cand < size_; ++cand) {
    bool primitive = true;
    for (auto r : factors)
      if (pow_schoolbook(cand, order / r) == 1) {
        primitive = false;
        break;
      }
    if (primitive) {
      g = cand;
      break;
    }
  }
  exp_.assign(2 * order, 0);
  log_.assign(size_, 0);
  Elem x = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    exp_[i] = x;
    exp_[i + order] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = mul_schoolbook(x, g);
  }
  tables_ = true;
}

bool Field::contains(const Field* sub) const {
  for (const Field* f = this; f != nullptr; f = f->base_)
    if (f == sub) return true;
  return false;
}

Field::Elem Field::add(Elem a, Elem b) const {
  if (base_ == nullptr) {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  Elem out = 0, place = 1;
  while (a != 0 || b != 0) {
    Elem d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    out += d * place;
    place *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

Field::Elem Field::neg(Elem a) const {
  if (base_ == nullptr) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  Elem out = 0, place = 1;
  while (a != 0) {
    Elem d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * place;
    place *= p_;
    a /= p_;
  }
  return out;
}

Field::Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Field::Elem Field::mul(Elem a, Elem b) const {
  if (base_ == nullptr)
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  if (a == 0 || b == 0) return 0;
  if (tables_) return exp_[log_[a] + log_[b]];
  return mul_schoolbook(a, b);
}

Field::Elem Field::mul_schoolbook(Elem a, Elem b) const {
  if (base_ == nullptr) return mul(a, b);
  auto ca = coords(a), cb = coords(b);
  std::vector<Elem> prod(2 * degree_ - 1, 0);
  for (unsigned i = 0; i < degree_; ++i) {
    if (ca[i] == 0) continue;
    for (unsigned j = 0; j < degree_; ++j)
      prod[i + j] = base_->add(prod[i + j], base_->mul(ca[i], cb[j]));
  }
  for (std::size_t d = prod.size(); d-- > degree_;) {
    Elem c = prod[d];
    if (c == 0) continue;
    for (unsigned j = 0; j < degree_; ++j)
      prod[d - degree_ + j] = base_->sub(prod[d - degree_ + j], base_->mul(c, modulus_[j]));
    prod[d] = 0;
  }
  prod.resize(degree_);
  return from_coords(prod);
}

Field::Elem Field::pow_schoolbook(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e > 0) {
    if (e & 1) r = mul_schoolbook(r, a);
    a = mul_schoolbook(a, a);
    e >>= 1;
  }
  return r;
}

Field::Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  std::uint64_t order = size_ - 1;
  if (tables_) return exp_[static_cast<std::size_t>((static_cast<std::uint64_t>(log_[a]) * (e % order)) % order)];
  e %= order;
  if (e == 0) e = order;
  Elem r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Field::Elem Field::inv(Elem a) const {
  if (a == 0) throw ZeroDivisionError("inverse of zero in a finite field");
  if (tables_) {
    std::uint32_t order = size_ - 1;
    return exp_[(order - log_[a]) % order];
  }
  return pow(a, size_ - 2);
}

Field::Elem Field::frob(Elem a, long long ell) const {
  long long k = static_cast<long long>(ground_degree_);
  long long r = ((ell % k) + k) % k;
  if (r == 0 || a < q_) return a;
  std::uint64_t order = size_ - 1;
  std::uint64_t e = 1;
  for (long long i = 0; i < r; ++i) e = mulmod64(e, q_, order);
  return pow(a, e == 0 ? order : e);
}

Field::Elem Field::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

Field::Elem Field::generator() const {
  if (base_ == nullptr) return 1;
  if (degree_ == 1) return base_->neg(modulus_[0]);
  return base_->size_;
}

std::vector<Field::Elem> Field::coords(Elem a) const {
  if (base_ == nullptr) return {a};
  std::vector<Elem> c(degree_);
  for (unsigned i = 0; i < degree_; ++i) {
    c[i] = a % base_->size_;
    a /= base_->size_;
  }
  return c;
}

Field::Elem Field::from_coords(const std::vector<Elem>& c) const {
  if (base_ == nullptr) return c.empty() ? 0 : c[0];
  Elem out = 0, place = 1;
  for (unsigned i = 0; i < degree_ && i < c.size(); ++i) {
    out += c[i] * place;
    place *= base_->size_;
  }
  return out;
}

std::vector<std::uint32_t> Field::digits(Elem a) const {
  std::vector<std::uint32_t> d;
  while (a != 0) {
    d.push_back(a % p_);
    a /= p_;
  }
  return d;
}

Field::Elem Field::from_digits(const std::vector<std::uint32_t>& d) const {
  if (d.size() > abs_degree_) throw ParseError("field element has too many digits");
  Elem out = 0, place = 1;
  for (auto x : d) {
    if (x >= p_) throw ParseError("field element digit out of range");
    out += x * place;
    place *= p_;
  }
  return out;
}

std::string Field::format(Elem a, const std::string& var) const {
  if (base_ == nullptr) return std::to_string(a);
  auto c = coords(a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    std::string coef = base_->format(c[i], var + "'");
    bool paren = !base_->is_prime() && c[i] >= base_->p_;
    if (i == 0) {
      os << (paren ? "(" + coef + ")" : coef);
    } else {
      if (c[i] != 1) os << (paren ? "(" + coef + ")" : coef) << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return first ? "0" : os.str();
}

FieldElem FieldElem::inverse() const { return {F, F->inv(v)}; }

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  if (F == nullptr) F = o.F;
  v = F->add(v, o.v);
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  if (F == nullptr) F = o.F;
  v = F->sub(v, o.v);
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  if (F == nullptr) F = o.F;
  v = F->mul(v, o.v);
  return *this;
}

}  // namespace dtw
