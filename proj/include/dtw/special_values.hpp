#ifndef DTW_SPECIAL_VALUES_HPP
#define DTW_SPECIAL_VALUES_HPP

#include <cstddef>
#include <string>

#include "dtw/drinfeld.hpp"
#include "dtw/laurent.hpp"
#include "dtw/lseries.hpp"

namespace dtw {

/// The n-th power twist E_t = θ + f^((q-1)/n) τ of the Carlitz module,
/// attached to the power residue character χ_f.
struct PowerTwist {
  APoly f;
  unsigned n = 1;

  const Field* field() const { return f.field(); }
  /// deg f.
  int d() const { return f.degree(); }
  DrinfeldModule drinfeld() const;
  AndersonModule module() const { return AndersonModule::from_drinfeld(drinfeld()); }
  /// χ_f(℘) = (f/℘)_n.
  Character character() const { return Character::power_residue(f, n); }
};

/// Throws BadOrderError unless n | q-1 and, for n >= 2, NotPowerFreeError
/// when an irreducible factor of f has multiplicity >= n.
PowerTwist power_twist_module(const APoly& f, unsigned n);

/// The exponent e of the radius q^e of log_E, as a reduced fraction.
struct RadiusExponent {
  long num = 0;
  long den = 1;
  /// deg f <= n, the hypothesis under which log_E(1) is evaluated.
  bool log_at_one_allowed = false;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;
};
/// e = 1 + 1/(q-1) - d/n.
RadiusExponent convergence_radius(const PowerTwist& tw);

/// log_E(1) = sum_{k <= k_max} ℓ_k. Throws RadiusError when deg f > n and
/// DivergenceError if the term degrees fail to decrease strictly.
LaurentNumber log_at_one(const PowerTwist& tw, unsigned k_max, std::size_t prec = kDefaultPrecision);

/// The four evaluations of L(χ_f, 1) with their pairwise discrepancies.
struct SpecialValueReport {
  LaurentNumber goss;       // goss_L(E, 0)
  LaurentNumber euler;      // Euler product of L(χ_f, 1)
  LaurentNumber dirichlet;  // Dirichlet sum of L(χ_f, 1)
  LaurentNumber log_value;  // log_E(1)
  long disc_goss_euler = 0;
  long disc_euler_dirichlet = 0;
  long disc_euler_log = 0;
  long disc_dirichlet_log = 0;
  long disc_goss_log = 0;
  int deg_max = 0;
  unsigned k_max = 0;
  std::size_t prec = 0;
  /// Every discrepancy is at least deg_max.
  bool pass = false;
};
SpecialValueReport taelman_check(const APoly& f, unsigned n, int deg_max, unsigned k_max,
                                 std::size_t prec = kDefaultPrecision, unsigned threads = 1);

}  // namespace dtw

#endif  // DTW_SPECIAL_VALUES_HPP
