#ifndef DTW_LSERIES_HPP
#define DTW_LSERIES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dtw/base_algebra.hpp"
#include "dtw/drinfeld.hpp"
#include "dtw/laurent.hpp"
#include "dtw/ore.hpp"

namespace dtw {

/// A prime excluded from an Euler product, with the reason it was excluded.
struct BadPrime {
  APoly prime;
  std::string reason;
};

/// The finite set S of primes excluded from L-series products.
struct BadPrimeSet {
  std::vector<BadPrime> primes;

  bool contains(const APoly& p) const;
  /// Adds p (if new) with the given reason.
  void add(const APoly& p, const std::string& reason);
  /// Union with another set; reasons of existing entries are kept.
  void merge(const BadPrimeSet& other);
  /// The primes alone, canonically ordered.
  std::vector<APoly> list() const;
};

/// Primes dividing a coefficient denominator or the numerator of the
/// leading-matrix determinant, together with the caller's extra primes.
BadPrimeSet detect_bad_primes(const AndersonModule& E, const std::vector<APoly>& extra = {});

/// E_t reduced modulo a good prime, with coefficients in F_℘.
struct ReducedModule {
  PrimeIdeal prime;
  const Field* residue = nullptr;
  OrePoly<FieldElem> Et;
  std::size_t rank = 0;       // τ-degree r
  std::size_t dimension = 0;  // N
};
/// Throws BadPrimeError when ℘ divides a denominator or the leading
/// matrix becomes singular modulo ℘.
ReducedModule reduce_module(const AndersonModule& E, const PrimeIdeal& wp);

/// P(X) = det(X - τ^deg℘ | motive) with coefficients descended to F_q[t].
struct CharpolyRecord {
  PrimeIdeal prime;
  /// Coefficients of X^0, ..., X^(rN), each a polynomial in t over F_q.
  std::vector<TPoly> coeffs;
  /// Leading coefficient of P(0) in F_q^*.
  FieldElem unit;

  std::size_t degree() const { return coeffs.size() - 1; }
  /// Coefficient of X^k with t replaced by θ.
  APoly at_theta(std::size_t k) const { return coeffs.at(k).as<ThetaVar>(); }
  /// P(x) for x in A (t -> θ).
  APoly evaluate(const APoly& x) const;
};
/// Throws DescentError if a coefficient fails to lie in F_q[t].
CharpolyRecord frobenius_charpoly(const ReducedModule& Em);
/// Number of characteristic polynomials whose descent has been checked so
/// far in this process (every check that did not throw).
std::uint64_t descent_checks_passed();

/// L_℘(E^∨, s) = P(0) / P(℘^(-s)) as an exact element of K.
KElem local_factor_exact(const CharpolyRecord& cp, long s);
/// The local factor embedded in K_∞; ConvergenceError if its degree is
/// not zero.
LaurentNumber local_factor(const CharpolyRecord& cp, long s, std::size_t prec = kDefaultPrecision);

/// Result of a truncated Goss L-series.
struct LValue {
  LaurentNumber value;
  BadPrimeSet excluded;
  std::size_t primes_used = 0;
  /// Per-prime local factors, filled when requested.
  std::vector<std::pair<APoly, LaurentNumber>> local_factors;
};
/// Product of local factors over the good primes of degree <= deg_max, in
/// canonical order. Factors may be computed on several threads; the
/// product is always taken sequentially.
LValue goss_L(const AndersonModule& E, long s, int deg_max, std::size_t prec = kDefaultPrecision,
              unsigned threads = 1, const std::vector<APoly>& extra_bad = {},
              bool keep_local_factors = false);

/// A Dirichlet character of A = F_q[θ].
class Character {
 public:
  enum class Kind { Trivial, PowerResidue, Cyclotomic };

  static Character trivial(const Field* Fq);
  /// χ(℘) = (f/℘)_n, extended multiplicatively.
  static Character power_residue(const APoly& f, unsigned n);
  /// χ(a) = a(ξ) for the root ξ = θ mod f of an irreducible f, with values
  /// in F_q[θ]/(f); ReducibleError for reducible f.
  static Character cyclotomic(const APoly& f);
  /// χ(a) = a(ξ) for a supplied root ξ of f (f need not be irreducible).
  static Character with_root(const APoly& f, const FieldElem& xi);

  Kind kind() const { return kind_; }
  const APoly& modulus() const { return f_; }
  /// The field holding the values of χ.
  const Field* value_field() const { return G_; }
  /// Primes dividing the modulus (excluded from the Euler product).
  std::vector<APoly> conductor_primes() const;
  /// χ(a); zero when a shares a factor with the modulus.
  FieldElem operator()(const APoly& a) const;

 private:
  Kind kind_ = Kind::Trivial;
  APoly f_;
  unsigned n_ = 1;
  FieldElem xi_;
  const Field* G_ = nullptr;
};

enum class LMethod { Euler, Dirichlet };

/// Truncated L(χ, s): the Euler product over ℘ of degree <= deg_max, or the
/// sum over monic a of degree <= deg_max, valued in K_∞(χ).
LaurentNumber character_L(const Character& chi, long s, int deg_max, LMethod method,
                          std::size_t prec = kDefaultPrecision);

/// Brute-force module data at a good prime: the monic characteristic
/// polynomials (in t, written in θ) of ∂Ē_t and of x -> Ē_t(x) on F_℘^N
/// viewed over F_q.
struct StructureBrackets {
  APoly lie;
  APoly point;
};
StructureBrackets module_structure_oracle(const ReducedModule& Em);
/// True when P(0)/P(1), with numerator and denominator made monic, equals
/// lie/point.
bool oracle_agrees(const CharpolyRecord& cp, const StructureBrackets& b);

}  // namespace dtw

#endif  // DTW_LSERIES_HPP
