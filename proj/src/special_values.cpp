#include "dtw/special_values.hpp"

#include <algorithm>
#include <numeric>

#include "dtw/errors.hpp"
#include "dtw/factor.hpp"

namespace dtw {

DrinfeldModule PowerTwist::drinfeld() const {
  const Field* F = field();
  const std::uint64_t e = (F->size() - 1) / n;
  return DrinfeldModule(F, {KElem(pow(f, e))});
}

PowerTwist power_twist_module(const APoly& f, unsigned n) {
  if (f.is_zero()) throw InvalidArgument("power twist needs a nonzero f");
  const std::uint64_t q = f.field()->size();
  if (n == 0 || (q - 1) % n != 0)
    throw BadOrderError("n must divide q-1 (n=" + std::to_string(n) + ", q=" + std::to_string(q) + ")");
  // For n = 1 the character is trivial and every f is allowed.
  if (n >= 2)
    for (const auto& fac : factor(f))
      if (fac.multiplicity >= n)
        throw NotPowerFreeError(fac.prime.to_string() + " divides f with multiplicity " +
                                std::to_string(fac.multiplicity) + " >= n = " + std::to_string(n));
  return PowerTwist{f, n};
}

std::string RadiusExponent::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

RadiusExponent convergence_radius(const PowerTwist& tw) {
  const long q = static_cast<long>(tw.field()->size());
  const long n = static_cast<long>(tw.n), d = tw.d();
  long num = n * q - d * (q - 1);
  long den = n * (q - 1);
  const long g = std::gcd(num, den);
  if (g != 0) {
    num /= g;
    den /= g;
  }
  return RadiusExponent{num, den, d <= n};
}

LaurentNumber log_at_one(const PowerTwist& tw, unsigned k_max, std::size_t prec) {
  if (tw.d() > static_cast<int>(tw.n))
    throw RadiusError("log_E(1) needs deg f <= n (deg f = " + std::to_string(tw.d()) +
                      ", n = " + std::to_string(tw.n) + "); radius exponent " +
                      convergence_radius(tw).to_string());
  const EntireSeries l = log_coefficients(tw.drinfeld(), k_max);
  const Field* F = tw.field();
  LaurentNumber value = LaurentNumber::one(F, prec);
  long last = 0;
  for (unsigned k = 1; k <= k_max; ++k) {
    if (l[k].is_zero()) continue;
    const long deg = l[k].degree();
    if (deg >= last)
      throw DivergenceError("log term " + std::to_string(k) + " has degree " + std::to_string(deg) +
                            ", not below " + std::to_string(last));
    last = deg;
    value += embed_rational(l[k], prec);
  }
  return value.truncated(prec);
}

SpecialValueReport taelman_check(const APoly& f, unsigned n, int deg_max, unsigned k_max,
                                 std::size_t prec, unsigned threads) {
  const PowerTwist tw = power_twist_module(f, n);
  const Character chi = tw.character();
  SpecialValueReport r;
  r.deg_max = deg_max;
  r.k_max = k_max;
  r.prec = prec;
  r.goss = goss_L(tw.module(), 0, deg_max, prec, threads).value;
  r.euler = character_L(chi, 1, deg_max, LMethod::Euler, prec);
  r.dirichlet = character_L(chi, 1, deg_max, LMethod::Dirichlet, prec);
  r.log_value = log_at_one(tw, k_max, prec);
  r.disc_goss_euler = discrepancy(r.goss, r.euler);
  r.disc_euler_dirichlet = discrepancy(r.euler, r.dirichlet);
  r.disc_euler_log = discrepancy(r.euler, r.log_value);
  r.disc_dirichlet_log = discrepancy(r.dirichlet, r.log_value);
  r.disc_goss_log = discrepancy(r.goss, r.log_value);
  r.pass = std::min({r.disc_goss_euler, r.disc_euler_dirichlet, r.disc_euler_log,
                     r.disc_dirichlet_log, r.disc_goss_log}) >= deg_max;
  return r;
}

}  // namespace dtw
