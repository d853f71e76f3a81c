#ifndef DTW_TWIST_HPP
#define DTW_TWIST_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dtw/drinfeld.hpp"
#include "dtw/matrix.hpp"
#include "dtw/ore.hpp"
#include "dtw/tower.hpp"

namespace dtw {

/// A candidate solution u (n x d over a tower) with the basis α of F_{q^d}
/// that pairs with its columns.
struct SolutionMatrix {
  Matrix<TowerElem> u;
  std::vector<FieldElem> alpha;

  std::size_t n() const { return u.rows(); }
  std::size_t d() const { return u.cols(); }
  /// Entries stacked column by column, the length N = n d vector.
  std::vector<TowerElem> flatten() const;
};

/// A solution column for d = 1 (α = (1)).
SolutionMatrix column_solution(const std::vector<TowerElem>& u);

/// u = sum_g ρ(g) g(y) over all group elements; ZeroAverageError if u = 0.
SolutionMatrix average_solution(const RepresentationTable& rho, const GaloisActionTable& act,
                                const std::vector<TowerElem>& y);

/// Outcome of verify_solution; failures lists (generator, ℓ) pairs.
struct SolutionCheck {
  bool ok = true;
  std::vector<std::pair<std::size_t, unsigned>> failures;
};
/// Checks ρ^(ℓ)(g) g(u α^(ℓ)) = u α^(ℓ) for every generator g and ℓ < d,
/// over the tower rebased to the constant field of ρ when d > 1.
SolutionCheck verify_solution(const SolutionMatrix& u, const RepresentationTable& rho,
                              const GaloisActionTable& act);

/// M(u) = [u, u^(1), ..., u^(N-1)].
template <class R>
Matrix<R> moore_matrix(const std::vector<R>& u) {
  const std::size_t N = u.size();
  if (N == 0) throw ShapeError("Moore matrix of an empty vector");
  Matrix<R> M(N, N, zero_like(u[0]));
  for (std::size_t i = 0; i < N; ++i) {
    R x = u[i];
    for (std::size_t j = 0; j < N; ++j) {
      M(i, j) = x;
      if (j + 1 < N) x = twist(x, 1);
    }
  }
  return M;
}

/// True when the Moore determinant of u is nonzero.
template <class R>
bool is_fundamental(const std::vector<R>& u) {
  return !is_zero(determinant(moore_matrix(u)));
}

/// The vector (f_0, ..., f_{N-1}) = M(u)^(-1) u^(N), descended to K.
struct FVector {
  std::vector<KElem> f;
  /// det M(u), an element of the tower.
  TowerElem moore_det;
  /// f_0 = (-1)^(N-1) (det M(u))^(q-1).
  bool sign_law = false;
};
/// Throws NotFundamentalError for a singular Moore matrix and
/// NotRationalError when an entry fails to descend.
FVector f_vector(const std::vector<TowerElem>& u);

/// Φ (companion matrix with last column f) and Ψ = (Φ^T)^(-1).
struct Companions {
  Matrix<KElem> Phi;
  Matrix<KElem> Psi;
};
Companions companion_matrices(const std::vector<KElem>& f);

/// E_t = θ I + sum_{m=1}^{r} a_m Ψ Ψ^(1) ... Ψ^(m-1) τ^m.
AndersonModule twist_model(const DrinfeldModule& phi, const Matrix<KElem>& Psi);

/// An integral model c^(-1) E c together with the scalar c.
struct IntegralModel {
  AndersonModule E;
  KElem conjugator;
};
/// Conjugates by the monic lcm c of all coefficient denominators, which
/// multiplies the τ^k coefficient by c^(q^k - 1).
IntegralModel clear_denominators(const AndersonModule& E);

/// Checks P E_t = φ_t^(⊕N) P with P = (M(u)^T)^(-1) c over the tower of u,
/// where c is the conjugator of an integral model (1 for a K-model).
bool verify_sep_isomorphism(const AndersonModule& E, const DrinfeldModule& phi,
                            const std::vector<TowerElem>& u, const KElem& conjugator);

/// The ingredients of a worked twist example.
struct TwistExample {
  std::string name;
  DrinfeldModule phi;
  GaloisActionTable action;
  RepresentationTable rho;
  SolutionMatrix u;
};

/// Everything produced from a twist example: the solution check, the
/// f-vector, Φ and Ψ, the K-model, the integral model and the isomorphism
/// check. Later stages are empty when an earlier one fails.
struct TwistResult {
  SolutionCheck solution_check;
  bool fundamental = false;
  std::optional<FVector> fvec;
  std::optional<Companions> companions;
  std::optional<AndersonModule> model;
  std::optional<IntegralModel> integral;
  bool isomorphism = false;

  /// Every verification succeeded.
  bool ok() const {
    return solution_check.ok && fundamental && fvec && fvec->sign_law && isomorphism;
  }
};
TwistResult build_twist(const TwistExample& ex);

/// The S3 twist over F_5: the splitting field of x^3 + θx + 1 with the
/// two-dimensional irreducible representation and u averaged from (ζ_1, 0).
TwistExample s3_example();
/// The Carlitz cyclotomic twist over F_2 for f = θ^2 + 1, with the regular
/// representation of (A/f)^* and u = (λ, C_t(λ)).
TwistExample cyclotomic_example();
/// The trivial twist of a Drinfeld module by a nonzero element u of K.
TwistExample trivial_example(const DrinfeldModule& phi, const KElem& u);

}  // namespace dtw

#endif  // DTW_TWIST_HPP
