#ifndef DTW_BASE_ALGEBRA_HPP
#define DTW_BASE_ALGEBRA_HPP

#include <cstdint>
#include <vector>

#include "dtw/factor.hpp"
#include "dtw/field.hpp"
#include "dtw/poly.hpp"
#include "dtw/ratfunc.hpp"

namespace dtw {

using KElem = RatFunc;

/// Description of the ground field F_q, q = p^e.
struct FieldSpec {
  std::uint32_t p = 2;
  unsigned e = 1;
  /// Monic modulus over F_p of degree e; empty selects the default.
  std::vector<Field::Elem> modulus;

  /// The interned field F_q with these parameters.
  const Field* field() const { return Field::ground(p, e, modulus); }
};

/// A nonzero prime ideal of A, given by its monic irreducible generator.
struct PrimeIdeal {
  APoly generator;
  int degree = 0;

  PrimeIdeal() = default;
  /// Validates that g is monic and irreducible.
  explicit PrimeIdeal(APoly g);

  friend bool operator==(const PrimeIdeal& a, const PrimeIdeal& b) {
    return a.generator == b.generator;
  }
  friend bool operator<(const PrimeIdeal& a, const PrimeIdeal& b) {
    return a.generator < b.generator;
  }
};

/// The residue field F_℘ = A/℘, realized as an extension of F_q by the
/// generator of ℘; θ reduces to the class of the variable.
class ResidueField {
 public:
  explicit ResidueField(PrimeIdeal prime);

  const PrimeIdeal& prime() const { return prime_; }
  const Field* field() const { return F_; }
  /// deg ℘.
  int degree() const { return prime_.degree; }
  FieldElem theta() const { return {F_, F_->generator()}; }
  FieldElem reduce(const APoly& a) const;
  /// Reduction of a fraction whose denominator is prime to ℘.
  FieldElem reduce(const KElem& a) const;
  /// Lift to the canonical representative of degree < deg ℘.
  APoly lift(const FieldElem& x) const;

 private:
  PrimeIdeal prime_;
  const Field* F_ = nullptr;
};

/// The constant extension F_{q^d} of the ground field, built from the least
/// monic irreducible of degree d (or a supplied modulus).
class ExtConstField {
 public:
  ExtConstField(const Field* ground, unsigned d);
  ExtConstField(const Field* ground, std::vector<Field::Elem> modulus);

  unsigned degree() const { return d_; }
  const Field* field() const { return F_; }
  const Field* ground() const { return ground_; }
  FieldElem generator() const { return {F_, F_->generator()}; }
  FieldElem element(const std::vector<Field::Elem>& coords) const;
  /// The monomial basis 1, w, ..., w^(d-1).
  std::vector<FieldElem> monomial_basis() const;

 private:
  const Field* ground_;
  const Field* F_;
  unsigned d_;
};

/// Monic irreducibles of degree 1..max_deg in the canonical order
/// (degree, then lexicographic from the leading coefficient down).
std::vector<PrimeIdeal> enumerate_monic_irreducibles(const Field* Fq, int max_deg);
/// Monic irreducibles of exactly degree m, canonically ordered.
std::vector<PrimeIdeal> monic_irreducibles_of_degree(const Field* Fq, int m);
/// Number of monic irreducibles of degree m from the necklace formula.
std::uint64_t necklace_count(std::uint64_t q, int m);

/// The n-th power residue symbol (f/℘)_n = f^((q^deg℘ - 1)/n) mod ℘.
FieldElem power_residue_symbol(const APoly& f, const PrimeIdeal& wp, unsigned n);

/// Norm from F_℘ (or any extension of F_q) down to F_q.
FieldElem residue_norm(const FieldElem& x);

/// x^(q^ell) for a constant-field element.
FieldElem frobenius_twist_const(const FieldElem& x, long long ell);

/// Every monic polynomial of degree exactly m, canonically ordered.
std::vector<APoly> monic_polynomials_of_degree(const Field* F, int m);

}  // namespace dtw

#endif  // DTW_BASE_ALGEBRA_HPP
