#include "dtw/drinfeld.hpp"

#include <string>

#include "dtw/errors.hpp"

namespace dtw {

namespace {

KElem theta_of(const Field* F) { return KElem(APoly::variable(F)); }

std::uint64_t q_power(const Field* F, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) r *= F->q();
  return r;
}

}  // namespace

DrinfeldModule::DrinfeldModule(const Field* Fq, std::vector<KElem> coeffs)
    : Fq_(Fq), a_(std::move(coeffs)) {
  if (a_.empty()) throw InvalidArgument("Drinfeld module of rank 0");
  if (a_.back().is_zero()) throw InvalidArgument("leading coefficient a_r is zero");
  for (auto& a : a_) {
    if (a.field() == nullptr) a = KElem::zero(Fq_);
    if (a.field() != Fq_) throw RingMismatchError("Drinfeld coefficient over another field");
  }
}

OrePoly<KElem> DrinfeldModule::phi_t() const {
  std::vector<KElem> c{theta_of(Fq_)};
  c.insert(c.end(), a_.begin(), a_.end());
  return OrePoly<KElem>::scalar(c);
}

DrinfeldModule carlitz(const Field* Fq) { return DrinfeldModule(Fq, {KElem::one(Fq)}); }

AndersonModule::AndersonModule(OrePoly<KElem> Et) : Et_(std::move(Et)) {
  if (Et_.rows() != Et_.cols() || Et_.rows() == 0)
    throw ShapeError("E_t must be a nonempty square Ore polynomial");
  Fq_ = Et_.zero_element().field();
  const std::size_t N = Et_.rows();
  Matrix<KElem> D = Et_.d_part() - Matrix<KElem>::diagonal(N, theta_of(Fq_));
  Matrix<KElem> P = D;
  for (std::size_t i = 1; i < N; ++i) P = P * D;
  if (!P.is_zero()) throw InvalidArgument("∂E_t - θI is not nilpotent");
}

AndersonModule AndersonModule::from_drinfeld(const DrinfeldModule& phi) {
  return AndersonModule(phi.phi_t());
}

bool AndersonModule::is_integral() const {
  for (const auto& A : Et_.terms())
    for (const auto& x : A.data())
      if (!x.is_polynomial()) return false;
  return true;
}

CarlitzFactorials carlitz_factorials(const Field* Fq, unsigned k) {
  const APoly theta = APoly::variable(Fq);
  CarlitzFactorials out{APoly(Fq), APoly::constant(Fq, 1), APoly::constant(Fq, 1)};
  for (unsigned i = 1; i <= k; ++i) {
    APoly bracket = APoly::monomial(Fq, 1, q_power(Fq, i)) - theta;
    // D_i = [i] D_{i-1}^q and L_i = [i] L_{i-1}.
    out.D = bracket * out.D.twist(1);
    out.L = bracket * out.L;
    out.bracket = bracket;
  }
  return out;
}

EntireSeries exp_coefficients(const DrinfeldModule& phi, unsigned k_max) {
  const Field* F = phi.field();
  const KElem theta = theta_of(F);
  EntireSeries e{KElem::one(F)};
  for (unsigned k = 1; k <= k_max; ++k) {
    KElem bracket = theta.twist(k) - theta;
    if (bracket.is_zero())
      throw CharacteristicError("[" + std::to_string(k) + "] vanishes in the base field");
    KElem s = KElem::zero(F);
    for (unsigned i = 1; i <= std::min<std::size_t>(phi.rank(), k); ++i)
      s += phi.coeff(i) * e[k - i].twist(i);
    e.push_back(s / bracket);
  }
  return e;
}

EntireSeries log_coefficients(const DrinfeldModule& phi, unsigned k_max) {
  const Field* F = phi.field();
  const KElem theta = theta_of(F);
  EntireSeries l{KElem::one(F)};
  for (unsigned k = 1; k <= k_max; ++k) {
    KElem bracket = theta.twist(k) - theta;
    if (bracket.is_zero())
      throw CharacteristicError("[" + std::to_string(k) + "] vanishes in the base field");
    KElem s = KElem::zero(F);
    for (unsigned i = 1; i <= std::min<std::size_t>(phi.rank(), k); ++i)
      s += l[k - i] * phi.coeff(i).twist(k - i);
    l.push_back(-s / bracket);
  }
  return l;
}

EntireSeries compose_series(const EntireSeries& a, const EntireSeries& b, unsigned k_max) {
  if (a.empty() || b.empty()) throw InvalidArgument("composition of an empty series");
  const Field* F = a[0].field() ? a[0].field() : b[0].field();
  EntireSeries c(k_max + 1, KElem::zero(F));
  for (unsigned i = 0; i < a.size() && i <= k_max; ++i)
    for (unsigned j = 0; j < b.size() && i + j <= k_max; ++j)
      c[i + j] += a[i] * b[j].twist(i);
  return c;
}

SeriesValue eval_entire(const EntireSeries& s, const LaurentNumber& x, unsigned k_max) {
  const Field* F = x.field();
  SeriesValue out{LaurentNumber::zero(F), 0};
  if (x.is_exact_zero()) return out;
  const std::size_t prec = std::max<std::size_t>(x.precision(), 1);
  bool have_prev = false;
  long prev_degree = 0;
  for (unsigned k = 0; k <= k_max && k < s.size(); ++k) {
    if (s[k].is_zero()) continue;
    LaurentNumber term = embed_rational(s[k].over(F), prec) * x.frobenius_power(k);
    if (term.is_zero()) continue;
    long deg = term.top_degree();
    if (have_prev && deg > prev_degree)
      throw DivergenceError("term " + std::to_string(k) + " has degree " + std::to_string(deg) +
                            " above the previous term degree " + std::to_string(prev_degree));
    have_prev = true;
    prev_degree = deg;
    out.value += term;
    out.last_term_valuation = -deg;
  }
  return out;
}

}  // namespace dtw
