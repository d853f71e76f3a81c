#include "dtw/lseries.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <thread>

#include "dtw/errors.hpp"
#include "dtw/factor.hpp"

namespace dtw {

namespace {

std::atomic<std::uint64_t> g_descent_checks{0};

// a^e for a in A and e >= 0.
APoly apow(const APoly& a, long e) { return pow(a, static_cast<std::uint64_t>(e)); }

}  // namespace

bool BadPrimeSet::contains(const APoly& p) const {
  for (const auto& b : primes)
    if (b.prime == p) return true;
  return false;
}

void BadPrimeSet::add(const APoly& p, const std::string& reason) {
  if (contains(p)) return;
  primes.push_back({p, reason});
  std::sort(primes.begin(), primes.end(),
            [](const BadPrime& a, const BadPrime& b) { return a.prime < b.prime; });
}

void BadPrimeSet::merge(const BadPrimeSet& other) {
  for (const auto& b : other.primes) add(b.prime, b.reason);
}

std::vector<APoly> BadPrimeSet::list() const {
  std::vector<APoly> out;
  for (const auto& b : primes) out.push_back(b.prime);
  return out;
}

BadPrimeSet detect_bad_primes(const AndersonModule& E, const std::vector<APoly>& extra) {
  BadPrimeSet S;
  for (const auto& M : E.Et().terms())
    for (const auto& x : M.data())
      for (const auto& p : prime_divisors(x.denominator())) S.add(p, "denominator");
  const KElem det = determinant(E.Et().leading());
  if (det.is_zero()) throw SingularError("leading matrix of E_t is singular");
  for (const auto& p : prime_divisors(det.numerator())) S.add(p, "leading matrix");
  for (const auto& e : extra) {
    if (e.degree() < 1) throw InvalidArgument("extra bad prime must be non-constant");
    for (const auto& p : prime_divisors(e)) S.add(p, "ramified");
  }
  return S;
}

ReducedModule reduce_module(const AndersonModule& E, const PrimeIdeal& wp) {
  const ResidueField R(wp);
  const Field* Fp = R.field();
  std::vector<Matrix<FieldElem>> terms;
  try {
    for (const auto& M : E.Et().terms())
      terms.push_back(M.map([&R](const KElem& x) { return R.reduce(x); }));
  } catch (const DividesError&) {
    throw BadPrimeError(wp.generator.to_string() + " divides a coefficient denominator");
  }
  if (determinant(terms.back()).is_zero())
    throw BadPrimeError("leading matrix is singular modulo " + wp.generator.to_string());
  ReducedModule out;
  out.prime = wp;
  out.residue = Fp;
  out.rank = terms.size() - 1;
  out.dimension = E.dimension();
  out.Et = OrePoly<FieldElem>(std::move(terms));
  return out;
}

APoly CharpolyRecord::evaluate(const APoly& x) const {
  APoly acc(x.field());
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + at_theta(k);
  return acc;
}

CharpolyRecord frobenius_charpoly(const ReducedModule& Em) {
  const std::size_t r = Em.rank, N = Em.dimension, n = r * N;
  if (r == 0) throw InvalidArgument("E_t has τ-degree zero");
  const Field* Fp = Em.residue;
  const Field* Fq = Fp->ground_field();
  const auto Ainv = inverse(Em.Et.coeff(r));
  if (!Ainv) throw BadPrimeError("leading matrix is singular modulo the prime");
  const TPoly tz(Fp);
  auto idx = [N](std::size_t k, std::size_t l) { return k * N + l; };

  // Matrix of τ on the basis b_{k,l} = τ^k ε_l; columns are images.
  Matrix<TPoly> T(n, n, tz);
  for (std::size_t k = 0; k + 1 < r; ++k)
    for (std::size_t l = 0; l < N; ++l) T(idx(k + 1, l), idx(k, l)) = TPoly::constant(Fp, 1);
  const Matrix<FieldElem> B0 = *Ainv * Em.Et.coeff(0);
  for (std::size_t l = 0; l < N; ++l) {
    const std::size_t col = idx(r - 1, l);
    for (std::size_t m = 0; m < N; ++m)
      T(idx(0, m), col) = TPoly(Fp, {(-B0(l, m)).v, (*Ainv)(l, m).v});
    for (std::size_t k = 1; k < r; ++k) {
      const Matrix<FieldElem> Bk = *Ainv * Em.Et.coeff(k);
      for (std::size_t m = 0; m < N; ++m) T(idx(k, m), col) = TPoly::constant(Fp, (-Bk(l, m)).v);
    }
  }

  Matrix<TPoly> Q = T;
  for (int i = 1; i < Em.prime.degree; ++i) Q = Q * twist(T, i);

  CharpolyRecord out;
  out.prime = Em.prime;
  for (const auto& c : charpoly(Q)) {
    for (auto v : c.coeffs())
      if (!Fp->in_ground(v))
        throw DescentError("characteristic polynomial at " + Em.prime.generator.to_string() +
                           " has a coefficient outside F_q[t]");
    out.coeffs.emplace_back(Fq, c.coeffs());
  }
  const TPoly& c0 = out.coeffs.front();
  if (c0.is_zero()) throw DescentError("characteristic polynomial has P(0) = 0");
  out.unit = FieldElem{Fq, c0.lead()};
  g_descent_checks.fetch_add(1, std::memory_order_relaxed);
  return out;
}

std::uint64_t descent_checks_passed() { return g_descent_checks.load(); }

KElem local_factor_exact(const CharpolyRecord& cp, long s) {
  const APoly& p = cp.prime.generator;
  const Field* Fq = p.field();
  const long n = static_cast<long>(cp.degree());
  APoly num = cp.at_theta(0), den(Fq);
  if (s >= 0) {
    num = num * apow(p, s * n);
    for (long k = 0; k <= n; ++k) den += cp.at_theta(static_cast<std::size_t>(k)) * apow(p, s * (n - k));
  } else {
    const APoly y = apow(p, -s);
    den = cp.evaluate(y);
  }
  if (den.is_zero())
    throw ConvergenceError("P(℘^(-s)) vanishes at " + p.to_string());
  return KElem(num, den);
}

LaurentNumber local_factor(const CharpolyRecord& cp, long s, std::size_t prec) {
  const KElem x = local_factor_exact(cp, s);
  if (x.degree() != 0)
    throw ConvergenceError("local factor at " + cp.prime.generator.to_string() + " has degree " +
                           std::to_string(x.degree()) + " at s = " + std::to_string(s));
  return embed_rational(x, prec);
}

LValue goss_L(const AndersonModule& E, long s, int deg_max, std::size_t prec, unsigned threads,
              const std::vector<APoly>& extra_bad, bool keep_local_factors) {
  if (deg_max < 0) throw InvalidArgument("deg_max must be non-negative");
  const Field* Fq = E.field();
  LValue out;
  out.excluded = detect_bad_primes(E, extra_bad);
  std::vector<PrimeIdeal> good;
  for (auto& wp : enumerate_monic_irreducibles(Fq, deg_max))
    if (!out.excluded.contains(wp.generator)) good.push_back(std::move(wp));

  std::vector<LaurentNumber> factors(good.size());
  std::vector<std::exception_ptr> errors(good.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next++; i < good.size(); i = next++) {
      try {
        factors[i] = local_factor(frobenius_charpoly(reduce_module(E, good[i])), s, prec);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned nt = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(good.size())));
  if (nt <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  LaurentNumber value = LaurentNumber::one(Fq, prec);
  for (std::size_t i = 0; i < good.size(); ++i) {
    value *= factors[i];
    if (keep_local_factors) out.local_factors.emplace_back(good[i].generator, factors[i]);
  }
  out.value = value;
  out.primes_used = good.size();
  return out;
}

Character Character::trivial(const Field* Fq) {
  Character c;
  c.kind_ = Kind::Trivial;
  c.f_ = APoly::constant(Fq, 1);
  c.G_ = Fq;
  c.xi_ = FieldElem{Fq, 0};
  return c;
}

Character Character::power_residue(const APoly& f, unsigned n) {
  const Field* Fq = f.field();
  if (f.is_zero()) throw InvalidArgument("power residue character needs a nonzero f");
  if (n == 0 || (Fq->size() - 1) % n != 0)
    throw BadOrderError("n must divide q-1 (n=" + std::to_string(n) + ", q=" +
                        std::to_string(Fq->size()) + ")");
  Character c;
  c.kind_ = Kind::PowerResidue;
  c.f_ = f;
  c.n_ = n;
  c.G_ = Fq;
  c.xi_ = FieldElem{Fq, 0};
  return c;
}

Character Character::cyclotomic(const APoly& f) {
  const ResidueField R{PrimeIdeal(f.monic())};
  Character c;
  c.kind_ = Kind::Cyclotomic;
  c.f_ = f.monic();
  c.G_ = R.field();
  c.xi_ = R.theta();
  return c;
}

Character Character::with_root(const APoly& f, const FieldElem& xi) {
  if (f.degree() < 1) throw InvalidArgument("character modulus must be non-constant");
  if (xi.F == nullptr || !(xi.F == f.field() || xi.F->contains(f.field())))
    throw RingMismatchError("root does not lie in an extension of the constant field");
  Character c;
  c.kind_ = Kind::Cyclotomic;
  c.f_ = f.monic();
  c.G_ = xi.F;
  c.xi_ = xi;
  if (!c(c.f_).is_zero() || c.f_.is_zero())
    throw InvalidArgument("ξ is not a root of " + f.to_string());
  return c;
}

std::vector<APoly> Character::conductor_primes() const {
  if (kind_ == Kind::Trivial) return {};
  return prime_divisors(f_);
}

FieldElem Character::operator()(const APoly& a) const {
  if (a.is_zero()) return FieldElem{G_, 0};
  switch (kind_) {
    case Kind::Trivial:
      return FieldElem{G_, 1};
    case Kind::Cyclotomic: {
      Field::Elem acc = 0;
      for (std::size_t i = a.coeffs().size(); i-- > 0;) acc = G_->add(G_->mul(acc, xi_.v), a[i]);
      return FieldElem{G_, acc};
    }
    case Kind::PowerResidue: {
      if (gcd(a, f_).degree() > 0) return FieldElem{G_, 0};
      FieldElem v{G_, 1};
      for (const auto& fac : factor(a)) {
        const FieldElem s = power_residue_symbol(f_, PrimeIdeal(fac.prime), n_);
        v *= s.pow(fac.multiplicity);
      }
      return v;
    }
  }
  return FieldElem{G_, 0};
}

LaurentNumber character_L(const Character& chi, long s, int deg_max, LMethod method,
                          std::size_t prec) {
  if (deg_max < 0) throw InvalidArgument("deg_max must be non-negative");
  const Field* G = chi.value_field();
  const Field* Fq = chi.modulus().field();
  LaurentNumber value = LaurentNumber::one(G, prec);
  if (method == LMethod::Euler) {
    const auto bad = chi.conductor_primes();
    for (const auto& wp : enumerate_monic_irreducibles(Fq, deg_max)) {
      if (std::find(bad.begin(), bad.end(), wp.generator) != bad.end()) continue;
      const FieldElem c = chi(wp.generator);
      const APoly p = wp.generator.over(G);
      const APoly cp = APoly::constant(G, c.v);
      KElem factor_value = s >= 0 ? KElem(apow(p, s), apow(p, s) - cp)
                                  : KElem(APoly::constant(G, 1), APoly::constant(G, 1) - cp * apow(p, -s));
      value *= embed_rational(factor_value, prec);
    }
    return value;
  }
  // Power residue values are multiplicative; cache them on primes.
  std::map<APoly, FieldElem> on_primes;
  auto value_at = [&](const APoly& a) {
    if (chi.kind() != Character::Kind::PowerResidue) return chi(a);
    if (gcd(a, chi.modulus()).degree() > 0) return FieldElem{G, 0};
    FieldElem v{G, 1};
    for (const auto& fac : factor(a)) {
      auto it = on_primes.find(fac.prime);
      if (it == on_primes.end()) it = on_primes.emplace(fac.prime, chi(fac.prime)).first;
      v *= it->second.pow(fac.multiplicity);
    }
    return v;
  };
  value = LaurentNumber::zero_to(G, -static_cast<long>(prec));
  value += LaurentNumber::one(G, prec);
  for (int d = 1; d <= deg_max; ++d) {
    for (const auto& a : monic_polynomials_of_degree(Fq, d)) {
      const FieldElem c = value_at(a);
      if (c.is_zero()) continue;
      const APoly ag = a.over(G);
      const APoly cg = APoly::constant(G, c.v);
      const KElem term = s >= 0 ? KElem(cg, apow(ag, s)) : KElem(cg * apow(ag, -s));
      value += embed_rational(term, prec);
    }
  }
  return value;
}

StructureBrackets module_structure_oracle(const ReducedModule& Em) {
  const Field* Fp = Em.residue;
  const Field* Fq = Fp->ground_field();
  if (Fp->base() != Fq) throw RingMismatchError("residue field must be a simple extension of F_q");
  const std::size_t m = Fp->degree();
  const std::size_t N = Em.dimension, n = m * N;
  const FieldElem zq{Fq, 0};
  const OrePoly<FieldElem> lie(std::vector<Matrix<FieldElem>>{Em.Et.coeff(0)});
  auto linear_map = [&](const OrePoly<FieldElem>& op) {
    Matrix<FieldElem> M(n, n, zq);
    for (std::size_t l = 0; l < N; ++l)
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<FieldElem> x(N, FieldElem{Fp, 0});
        std::vector<Field::Elem> e(m, 0);
        e[i] = 1;
        x[l] = FieldElem{Fp, Fp->from_coords(e)};
        const auto y = op.apply(x);
        for (std::size_t l2 = 0; l2 < N; ++l2) {
          const auto c = Fp->coords(y[l2].v);
          for (std::size_t i2 = 0; i2 < m; ++i2) M(l2 * m + i2, l * m + i) = FieldElem{Fq, c[i2]};
        }
      }
    std::vector<Field::Elem> cs;
    for (const auto& c : charpoly(M)) cs.push_back(c.v);
    return APoly(Fq, std::move(cs));
  };
  return StructureBrackets{linear_map(lie), linear_map(Em.Et)};
}

bool oracle_agrees(const CharpolyRecord& cp, const StructureBrackets& b) {
  const APoly p0 = cp.at_theta(0);
  const APoly p1 = cp.evaluate(APoly::constant(p0.field(), 1));
  if (p0.is_zero() || p1.is_zero()) return false;
  return KElem(p0.monic(), p1.monic()) == KElem(b.lie, b.point);
}

}  // namespace dtw
