#include "dtw/twist.hpp"

#include "dtw/errors.hpp"

namespace dtw {

namespace {

TowerElem scale_const(const TowerElem& x, const FieldElem& c) {
  return x.scaled(KElem::constant(x.field(), c.v));
}

// Replaces column i of M by v.
template <class R>
Matrix<R> with_column(Matrix<R> M, std::size_t i, const std::vector<R>& v) {
  for (std::size_t r = 0; r < M.rows(); ++r) M(r, i) = v[r];
  return M;
}

}  // namespace

std::vector<TowerElem> SolutionMatrix::flatten() const {
  std::vector<TowerElem> v;
  for (std::size_t j = 0; j < u.cols(); ++j)
    for (std::size_t i = 0; i < u.rows(); ++i) v.push_back(u(i, j));
  return v;
}

SolutionMatrix column_solution(const std::vector<TowerElem>& u) {
  if (u.empty()) throw ShapeError("empty solution vector");
  const Field* F = u[0].field();
  return SolutionMatrix{Matrix<TowerElem>::column(u), {FieldElem{F, 1}}};
}

SolutionMatrix average_solution(const RepresentationTable& rho, const GaloisActionTable& act,
                                const std::vector<TowerElem>& y) {
  if (rho.d() != 1) throw InvalidArgument("averaging needs a representation with d = 1");
  if (y.size() != rho.dimension()) throw ShapeError("seed length differs from dim ρ");
  const Tower& T = act.tower();
  std::vector<TowerElem> u(y.size(), T.zero());
  for (const auto& g : act.enumerate()) {
    Matrix<FieldElem> R = rho.of(g.word);
    std::vector<TowerElem> gy;
    for (const auto& x : y) gy.push_back(act.apply(g, x));
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = 0; j < gy.size(); ++j)
        if (!R(i, j).is_zero()) u[i] += scale_const(gy[j], R(i, j));
  }
  bool zero = true;
  for (const auto& x : u) zero = zero && x.is_zero();
  if (zero) throw ZeroAverageError("the averaged seed vanishes; try another seed");
  return column_solution(u);
}

SolutionCheck verify_solution(const SolutionMatrix& sol, const RepresentationTable& rho,
                              const GaloisActionTable& act0) {
  if (sol.n() != rho.dimension()) throw ShapeError("solution height differs from dim ρ");
  if (sol.d() != sol.alpha.size()) throw ShapeError("solution width differs from the basis length");
  const Field* G = rho.field();
  GaloisActionTable act = act0;
  Tower T = act0.tower();
  if (T.field() != G && !T.field()->contains(G)) {
    T = rebase_constants(T, G->degree_over_ground() / T.field()->degree_over_ground());
    if (T.field() != G) throw RingMismatchError("constant field of ρ is not the rebased field");
    act = act0.rebased(T);
  }
  SolutionCheck out;
  for (unsigned ell = 0; ell < sol.d(); ++ell) {
    std::vector<TowerElem> x(sol.n(), T.zero());
    for (std::size_t i = 0; i < sol.n(); ++i)
      for (std::size_t j = 0; j < sol.d(); ++j)
        x[i] += T.embed(sol.u(i, j)).scaled(KElem::constant(T.field(), twist(sol.alpha[j], ell).v));
    for (std::size_t g = 0; g < act.generator_count(); ++g) {
      Matrix<FieldElem> R = twist(rho.generators()[g], ell);
      std::vector<TowerElem> gx;
      for (const auto& e : x) gx.push_back(act.apply({static_cast<int>(g)}, e));
      bool ok = true;
      for (std::size_t i = 0; i < x.size() && ok; ++i) {
        TowerElem s = T.zero();
        for (std::size_t j = 0; j < gx.size(); ++j)
          if (!R(i, j).is_zero()) s += gx[j].scaled(KElem::constant(T.field(), R(i, j).v));
        ok = s == x[i];
      }
      if (!ok) {
        out.ok = false;
        out.failures.emplace_back(g, ell);
      }
    }
  }
  return out;
}

FVector f_vector(const std::vector<TowerElem>& u) {
  const std::size_t N = u.size();
  Matrix<TowerElem> M = moore_matrix(u);
  TowerElem det = determinant(M);
  if (det.is_zero()) throw NotFundamentalError("Moore determinant vanishes: entries are dependent");
  std::vector<TowerElem> uN;
  for (const auto& x : u) uN.push_back(x.frobenius_twist(static_cast<long long>(N)));
  const TowerElem inv = det.inverse();
  FVector out{{}, det, false};
  for (std::size_t i = 0; i < N; ++i)
    out.f.push_back(descend_to_base(determinant(with_column(M, i, uN)) * inv));
  TowerElem s = det.pow(u[0].field()->q() - 1);
  if (N % 2 == 0) s = -s;
  out.sign_law = s == u[0].tower().constant(out.f[0]);
  return out;
}

Companions companion_matrices(const std::vector<KElem>& f) {
  const std::size_t N = f.size();
  if (N == 0) throw ShapeError("empty f-vector");
  if (f[0].is_zero()) throw SingularError("f_0 = 0 gives a singular companion matrix");
  const KElem zero = KElem::zero(f[0].field());
  Matrix<KElem> Phi(N, N, zero);
  for (std::size_t i = 1; i < N; ++i) Phi(i, i - 1) = KElem::one(zero.field());
  for (std::size_t i = 0; i < N; ++i) Phi(i, N - 1) = f[i];
  auto Psi = inverse(Phi.transpose());
  if (!Psi) throw SingularError("companion matrix is not invertible");
  return {Phi, *Psi};
}

AndersonModule twist_model(const DrinfeldModule& phi, const Matrix<KElem>& Psi) {
  const std::size_t N = Psi.rows();
  const Field* F = phi.field();
  std::vector<Matrix<KElem>> terms{Matrix<KElem>::diagonal(N, KElem(APoly::variable(F)))};
  Matrix<KElem> prod = Psi;
  for (std::size_t m = 1; m <= phi.rank(); ++m) {
    if (m > 1) prod = prod * twist(Psi, static_cast<long long>(m - 1));
    terms.push_back(phi.coeff(m) * prod);
  }
  return AndersonModule(OrePoly<KElem>(std::move(terms)));
}

IntegralModel clear_denominators(const AndersonModule& E) {
  const Field* F = E.field();
  const auto& terms = E.Et().terms();
  for (const auto& x : terms.at(0).data())
    if (!x.is_polynomial()) throw InvalidArgument("constant term of E_t is not integral");
  APoly c = APoly::constant(F, 1);
  for (std::size_t k = 1; k < terms.size(); ++k)
    for (const auto& x : terms[k].data()) {
      const APoly& d = x.denominator();
      c = (c * d) / gcd(c, d);
    }
  c = c.monic();
  const KElem ck(c);
  std::vector<Matrix<KElem>> out{terms[0]};
  std::uint64_t qk = 1;
  for (std::size_t k = 1; k < terms.size(); ++k) {
    qk *= F->q();
    out.push_back(ck.pow(static_cast<long long>(qk - 1)) * terms[k]);
  }
  return IntegralModel{AndersonModule(OrePoly<KElem>(std::move(out))), ck};
}

bool verify_sep_isomorphism(const AndersonModule& E, const DrinfeldModule& phi,
                            const std::vector<TowerElem>& u, const KElem& conjugator) {
  const std::size_t N = u.size();
  if (E.dimension() != N) throw ShapeError("module dimension differs from the solution length");
  const Tower T = u[0].tower();
  auto Minv = inverse(moore_matrix(u).transpose());
  if (!Minv) throw NotFundamentalError("Moore matrix is singular");
  const Matrix<TowerElem> P = T.constant(conjugator) * *Minv;
  auto lift = [&T](const KElem& x) { return T.constant(x); };
  const OrePoly<TowerElem> Ep = E.Et().map(lift);
  const OrePoly<TowerElem> phiN = direct_sum(phi.phi_t().map(lift), N);
  const OrePoly<TowerElem> Pp(std::vector<Matrix<TowerElem>>{P});
  return Pp * Ep == phiN * Pp;
}

TwistResult build_twist(const TwistExample& ex) {
  TwistResult r;
  r.solution_check = verify_solution(ex.u, ex.rho, ex.action);
  if (!r.solution_check.ok) return r;
  const std::vector<TowerElem> u = ex.u.flatten();
  try {
    r.fvec = f_vector(u);
  } catch (const NotFundamentalError&) {
    return r;
  }
  r.fundamental = true;
  r.companions = companion_matrices(r.fvec->f);
  r.model = twist_model(ex.phi, r.companions->Psi);
  r.integral = clear_denominators(*r.model);
  r.isomorphism = verify_sep_isomorphism(r.integral->E, ex.phi, u, r.integral->conjugator);
  return r;
}

TwistExample s3_example() {
  const Field* F = Field::prime(5);
  const KElem theta(APoly::variable(F));
  const Tower K(F);
  // Level 1: ζ_1 is a root of x^3 + θx + 1.
  const std::vector<KElem> f{KElem::one(F), theta, KElem::zero(F), KElem::one(F)};
  const Tower T1 = K.extend(poly_from_base(K, f));
  // Level 2: the quadratic cofactor y^2 + ζ_1 y + (ζ_1^2 + θ).
  const TowerPoly m2 = divide_by_root(poly_from_base(T1, f), T1.generator(0));
  const Tower T = T1.extend(m2);
  const TowerElem z1 = T.generator(0), z2 = T.generator(1);
  const TowerElem z3 = -(z1 + z2);
  // r: ζ_1 -> ζ_2 -> ζ_3 -> ζ_1 and s: ζ_1 <-> ζ_2.
  std::vector<std::vector<int>> rel{{0, 0, 0}, {1, 1}, {1, 0, 1, 0}};
  GaloisActionTable act(T, {"r", "s"}, {{z2, z3}, {z2, z1}}, rel);
  auto c = [F](long long v) { return FieldElem{F, F->from_int(v)}; };
  Matrix<FieldElem> rr = Matrix<FieldElem>::from_rows({{c(0), c(-1)}, {c(1), c(-1)}});
  Matrix<FieldElem> rs = Matrix<FieldElem>::from_rows({{c(-1), c(1)}, {c(0), c(1)}});
  RepresentationTable rho({rr, rs}, rel);
  SolutionMatrix u = average_solution(rho, act, {z1, T.zero()});
  return TwistExample{"s3", carlitz(F), std::move(act), std::move(rho), std::move(u)};
}

TwistExample cyclotomic_example() {
  const Field* F = Field::prime(2);
  const APoly f(F, {1, 0, 1});
  CyclotomicTower ct = carlitz_cyclotomic_tower(f);
  const TowerElem lambda = ct.tower.generator(0);
  // Regular representation of the two-element group (A/f)^* = {1, θ}.
  const FieldElem o{F, 0}, l{F, 1};
  std::vector<Matrix<FieldElem>> gens;
  for (const auto& a : ct.units) {
    if (a.is_one())
      gens.push_back(Matrix<FieldElem>::identity(2, l));
    else
      gens.push_back(Matrix<FieldElem>::from_rows({{o, l}, {l, o}}));
  }
  RepresentationTable rho(std::move(gens), ct.action.relations());
  SolutionMatrix u = column_solution({lambda, carlitz_action(APoly::variable(F), lambda)});
  return TwistExample{"cyclotomic", carlitz(F), ct.action, std::move(rho), std::move(u)};
}

TwistExample trivial_example(const DrinfeldModule& phi, const KElem& u) {
  if (u.is_zero()) throw ZeroAverageError("the trivial twist needs a nonzero solution");
  const Field* F = phi.field();
  const Tower K(F);
  std::vector<std::vector<int>> rel{{0}};
  GaloisActionTable act(K, {"1"}, {{}}, rel);
  RepresentationTable rho({Matrix<FieldElem>::identity(1, FieldElem{F, 1})}, rel);
  return TwistExample{"trivial", phi, std::move(act), std::move(rho), column_solution({K.constant(u)})};
}

}  // namespace dtw
