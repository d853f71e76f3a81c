#ifndef DTW_TOWER_HPP
#define DTW_TOWER_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "dtw/base_algebra.hpp"
#include "dtw/matrix.hpp"
#include "dtw/ratfunc.hpp"

namespace dtw {

class TowerElem;
struct TowerData;

/// A finite extension L = K[x_0]/(m_0)[x_1]/(m_1)... of K = F(θ), where F is
/// the constant field and each m_k is monic over the previous level.
///
/// Elements are stored as coordinate vectors in the multi-level monomial
/// basis x_0^e_0 x_1^e_1 ..., with x_0 varying fastest. Towers are cheap
/// handles to immutable shared data; two handles denote the same ring
/// exactly when they share that data.
class Tower {
 public:
  /// A null handle.
  Tower() = default;
  /// The trivial tower K over the constant field F.
  explicit Tower(const Field* F);

  const Field* field() const;
  std::size_t levels() const;
  /// Total degree over K.
  std::size_t degree() const;
  unsigned level_degree(std::size_t k) const;
  /// The level polynomial m_k as little-endian coefficients (monic).
  std::vector<TowerElem> level_polynomial(std::size_t k) const;

  /// Appends the level K_k[x]/(m); m is given by its little-endian
  /// coefficients over this tower and must be monic and squarefree.
  Tower extend(const std::vector<TowerElem>& m) const;

  TowerElem zero() const;
  TowerElem one() const;
  TowerElem constant(const KElem& c) const;
  /// The class of x_k.
  TowerElem generator(std::size_t k) const;
  TowerElem from_coords(std::vector<KElem> coords) const;
  /// Natural image of an element of a prefix of this tower, or of the
  /// tower this one was rebased from.
  TowerElem embed(const TowerElem& e) const;
  /// The tower this one extends by one level (throws for the base).
  Tower parent() const;

  friend bool operator==(const Tower& a, const Tower& b) { return a.d_ == b.d_; }
  friend bool operator!=(const Tower& a, const Tower& b) { return a.d_ != b.d_; }

  const std::shared_ptr<const TowerData>& data() const { return d_; }
  explicit Tower(std::shared_ptr<const TowerData> d) : d_(std::move(d)) {}

 private:
  std::shared_ptr<const TowerData> d_;
};

/// An element of a tower.
class TowerElem {
 public:
  TowerElem() = default;
  TowerElem(Tower t, std::vector<KElem> coords);

  const Tower& tower() const { return T_; }
  const std::vector<KElem>& coords() const { return c_; }
  const Field* field() const { return T_.field(); }
  bool is_zero() const;
  bool is_one() const;
  /// True when the element lies in K.
  bool is_rational() const;

  TowerElem& operator+=(const TowerElem& o);
  TowerElem& operator-=(const TowerElem& o);
  TowerElem& operator*=(const TowerElem& o);
  TowerElem& operator/=(const TowerElem& o) { return *this *= o.inverse(); }
  friend TowerElem operator+(TowerElem a, const TowerElem& b) { return a += b; }
  friend TowerElem operator-(TowerElem a, const TowerElem& b) { return a -= b; }
  friend TowerElem operator*(const TowerElem& a, const TowerElem& b);
  friend TowerElem operator/(TowerElem a, const TowerElem& b) { return a /= b; }
  TowerElem operator-() const;
  friend bool operator==(const TowerElem& a, const TowerElem& b) {
    return a.T_ == b.T_ && a.c_ == b.c_;
  }
  friend bool operator!=(const TowerElem& a, const TowerElem& b) { return !(a == b); }

  /// Multiplicative inverse; ZeroDivisionError for zero divisors.
  TowerElem inverse() const;
  TowerElem pow(std::uint64_t e) const;
  TowerElem scaled(const KElem& c) const;
  /// e^(q^ell), ell >= 0.
  TowerElem frobenius_twist(long long ell) const;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const TowerElem& a) {
    return os << a.to_string();
  }

 private:
  Tower T_;
  std::vector<KElem> c_;
};

inline TowerElem zero_like(const TowerElem& x) { return x.tower().zero(); }
inline TowerElem one_like(const TowerElem& x) { return x.tower().one(); }
inline bool is_zero(const TowerElem& x) { return x.is_zero(); }
inline TowerElem inverse(const TowerElem& x) { return x.inverse(); }
inline TowerElem twist(const TowerElem& x, long long ell) { return x.frobenius_twist(ell); }
inline TowerElem constant_like(const TowerElem& x, Field::Elem c) {
  return x.tower().constant(KElem::constant(x.field(), c));
}

/// Polynomials over a tower, little-endian coefficient vectors.
using TowerPoly = std::vector<TowerElem>;

/// Value of a tower polynomial at a point.
TowerElem eval(const TowerPoly& p, const TowerElem& x);
/// Monic gcd of two tower polynomials (over a tower that is a field).
TowerPoly poly_gcd(TowerPoly a, TowerPoly b);
/// Quotient of an exact division.
TowerPoly poly_exact_div(const TowerPoly& a, const TowerPoly& b);
/// Quotient of p by (x - root); throws if root is not a root of p.
TowerPoly divide_by_root(const TowerPoly& p, const TowerElem& root);
TowerPoly poly_derivative(const TowerPoly& p);
/// Lifts polynomial coefficients from K into the tower.
TowerPoly poly_from_base(const Tower& t, const std::vector<KElem>& p);

/// The value in K of a rational tower element; NotRationalError otherwise.
KElem descend_to_base(const TowerElem& e);

/// A group element of a Galois action, by a word in the generators and the
/// images of the tower generators x_0, x_1, ...
struct GroupElement {
  std::vector<int> word;
  std::vector<TowerElem> images;
};

/// A group acting on a tower through automorphisms fixing K, presented by
/// generators (images of each x_k) and relations.
///
/// A word [g_1, ..., g_k] denotes g_1 ∘ ... ∘ g_k, so g_k acts first.
class GaloisActionTable {
 public:
  /// Validates that every image is a root of the transformed level
  /// polynomial and that every relation acts trivially.
  GaloisActionTable(Tower t, std::vector<std::string> names,
                    std::vector<std::vector<TowerElem>> images,
                    std::vector<std::vector<int>> relations);

  const Tower& tower() const { return T_; }
  std::size_t generator_count() const { return images_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::vector<TowerElem>>& images() const { return images_; }
  const std::vector<std::vector<int>>& relations() const { return relations_; }

  TowerElem apply(const std::vector<int>& word, const TowerElem& e) const;
  TowerElem apply(const GroupElement& g, const TowerElem& e) const;
  /// All group elements, found by breadth-first search from the identity.
  std::vector<GroupElement> enumerate() const;
  /// The same action on a rebased tower.
  GaloisActionTable rebased(const Tower& t) const;

 private:
  Tower T_;
  std::vector<std::string> names_;
  std::vector<std::vector<TowerElem>> images_;
  std::vector<std::vector<int>> relations_;
};

/// Applies the automorphism with the given generator images.
TowerElem substitute(const TowerElem& e, const std::vector<TowerElem>& images);

/// Matrices of a representation ρ on the generators of an action table.
class RepresentationTable {
 public:
  /// Validates invertibility and the relations; d is computed as the degree
  /// of the field generated by the entries over the ground field.
  RepresentationTable(std::vector<Matrix<FieldElem>> gens,
                      const std::vector<std::vector<int>>& relations);

  std::size_t dimension() const { return n_; }
  unsigned d() const { return d_; }
  const Field* field() const { return F_; }
  const std::vector<Matrix<FieldElem>>& generators() const { return gens_; }
  /// ρ(g_1 ∘ ... ∘ g_k) = ρ(g_1) ... ρ(g_k).
  Matrix<FieldElem> of(const std::vector<int>& word) const;

 private:
  std::vector<Matrix<FieldElem>> gens_;
  const Field* F_ = nullptr;
  std::size_t n_ = 0;
  unsigned d_ = 1;
};

/// ψ_f = C_f(x)/x as little-endian coefficients over K.
std::vector<KElem> carlitz_torsion_polynomial(const APoly& f);
/// The primitive f-torsion polynomial C_f(x) / lcm_{℘ | f} C_{f/℘}(x);
/// equals ψ_f when f is irreducible.
std::vector<KElem> carlitz_primitive_torsion_polynomial(const APoly& f);

/// The tower K(λ_f) with the action a -> (λ -> C_a(λ)) of (A/f)^*.
struct CyclotomicTower {
  APoly f;
  Tower tower;
  /// Representatives of (A/f)^*, in the generator order of the action.
  std::vector<APoly> units;
  GaloisActionTable action;
};
/// Builds K(λ_f) on the primitive f-torsion polynomial; every unit of A/f
/// is a generator and the relations are its multiplication table.
CyclotomicTower carlitz_cyclotomic_tower(const APoly& f);

/// C_a(x) evaluated at a tower element.
TowerElem carlitz_action(const APoly& a, const TowerElem& x);

/// The same levels over the constant field extension of degree d.
Tower rebase_constants(const Tower& t, unsigned d);

}  // namespace dtw

#endif  // DTW_TOWER_HPP
