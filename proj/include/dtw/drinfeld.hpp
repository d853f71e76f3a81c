#ifndef DTW_DRINFELD_HPP
#define DTW_DRINFELD_HPP

#include <cstddef>
#include <vector>

#include "dtw/base_algebra.hpp"
#include "dtw/laurent.hpp"
#include "dtw/ore.hpp"
#include "dtw/ratfunc.hpp"

namespace dtw {

/// A Drinfeld module over K with φ_t = θ + a_1 τ + ... + a_r τ^r.
class DrinfeldModule {
 public:
  /// coeffs = (a_1, ..., a_r) with a_r nonzero.
  DrinfeldModule(const Field* Fq, std::vector<KElem> coeffs);

  const Field* field() const { return Fq_; }
  std::size_t rank() const { return a_.size(); }
  /// a_i for 1 <= i <= r.
  const KElem& coeff(std::size_t i) const { return a_.at(i - 1); }
  const std::vector<KElem>& coeffs() const { return a_; }
  /// φ_t as a scalar Ore polynomial over K.
  OrePoly<KElem> phi_t() const;

 private:
  const Field* Fq_;
  std::vector<KElem> a_;
};

/// The Carlitz module C_t = θ + τ.
DrinfeldModule carlitz(const Field* Fq);

/// An Anderson t-module of dimension N over K, given by E_t.
class AndersonModule {
 public:
  /// Validates that E_t is square and that ∂E_t - θI is nilpotent.
  explicit AndersonModule(OrePoly<KElem> Et);
  /// The one-dimensional module attached to a Drinfeld module.
  static AndersonModule from_drinfeld(const DrinfeldModule& phi);

  std::size_t dimension() const { return Et_.rows(); }
  /// τ-degree of E_t.
  std::size_t tau_degree() const { return static_cast<std::size_t>(Et_.degree()); }
  const OrePoly<KElem>& Et() const { return Et_; }
  const Field* field() const { return Fq_; }
  /// True when every coefficient entry lies in A.
  bool is_integral() const;

 private:
  OrePoly<KElem> Et_;
  const Field* Fq_ = nullptr;
};

/// a(E_t) for a polynomial a in t, computed by Horner's rule in the Ore
/// ring over the coefficient ring of Et.
template <class R>
OrePoly<R> image_of(const TPoly& a, const OrePoly<R>& Et) {
  const R& z = Et.zero_element();
  const std::size_t n = Et.rows();
  OrePoly<R> result(n, n, z);
  for (int i = a.degree(); i >= 0; --i) {
    result = result * Et;
    Field::Elem c = a[static_cast<std::size_t>(i)];
    if (c != 0)
      result += OrePoly<R>(
          std::vector<Matrix<R>>{Matrix<R>::diagonal(n, constant_like(z, c))});
  }
  return result;
}

/// The Carlitz factorial data [k] = θ^(q^k) - θ, D_k and L_k.
struct CarlitzFactorials {
  APoly bracket;  // [k]; zero for k = 0
  APoly D;
  APoly L;
};
CarlitzFactorials carlitz_factorials(const Field* Fq, unsigned k);

/// Coefficients c_0, c_1, ... of a twisted power series x -> sum c_k x^(k).
using EntireSeries = std::vector<KElem>;

/// exp coefficients from e_k [k] = sum_{i=1}^{min(r,k)} a_i e_{k-i}^(i).
EntireSeries exp_coefficients(const DrinfeldModule& phi, unsigned k_max);
/// log coefficients from ℓ_k [k] = -sum_{i=1}^{min(r,k)} ℓ_{k-i} a_i^(k-i).
EntireSeries log_coefficients(const DrinfeldModule& phi, unsigned k_max);
/// Formal composition (a ∘ b)_k = sum_{i+j=k} a_i b_j^(i), truncated at k_max.
EntireSeries compose_series(const EntireSeries& a, const EntireSeries& b, unsigned k_max);

/// Partial sum of an entire series at a Laurent number.
struct SeriesValue {
  LaurentNumber value;
  /// θ-valuation of the last nonzero term (an error indicator).
  long last_term_valuation = 0;
};
/// Evaluates sum_{k <= k_max} c_k x^(k) at the working precision of x.
/// Throws DivergenceError when the term degrees grow along the range.
SeriesValue eval_entire(const EntireSeries& s, const LaurentNumber& x, unsigned k_max);

}  // namespace dtw

#endif  // DTW_DRINFELD_HPP
