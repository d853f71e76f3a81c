#ifndef DTW_FIELD_HPP
#define DTW_FIELD_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace dtw {

/// A finite field, either a prime field F_p or a simple extension B[x]/(m)
/// of another finite field B.
///
/// Elements are plain integers in [0, size). An element of an extension is
/// encoded as sum_i c_i * |B|^i where (c_i) are its coordinates in the
/// monomial basis of the modulus. Base field elements therefore keep their
/// own encoding inside every extension, and the base-p digits of an index
/// are the flattened F_p-coordinates.
///
/// Each field remembers a distinguished subfield F_q (its "ground"); the
/// Frobenius twist of an element is x -> x^q. Fields are interned in a
/// process-wide registry and never destroyed, so raw pointers stay valid.
class Field {
 public:
  using Elem = std::uint32_t;

  /// The prime field F_p, which is also its own ground.
  static const Field* prime(std::uint32_t p);
  /// F_q with q = p^e. A missing modulus selects the least monic
  /// irreducible of degree e over F_p. The result is its own ground.
  static const Field* ground(std::uint32_t p, unsigned e = 1,
                             std::vector<Elem> modulus = {});
  /// base[x]/(modulus); modulus is monic, little-endian, coefficients in base.
  /// The ground is inherited from base.
  static const Field* extension(const Field* base, std::vector<Elem> modulus);
  /// Degree-d extension of base by its least monic irreducible of degree d.
  static const Field* extension(const Field* base, unsigned d);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t size() const { return size_; }
  /// Cardinality of the ground field (the q in x -> x^q).
  std::uint32_t q() const { return q_; }
  const Field* base() const { return base_; }
  const Field* ground_field() const { return ground_; }
  bool is_prime() const { return base_ == nullptr; }
  /// Degree over the immediate base field (1 for a prime field).
  unsigned degree() const { return degree_; }
  /// Degree over the ground field.
  unsigned degree_over_ground() const { return ground_degree_; }
  const std::vector<Elem>& modulus() const { return modulus_; }
  /// True when this field is obtained from sub by a chain of extensions.
  bool contains(const Field* sub) const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// a^(q^ell); ell may be negative and is reduced modulo the degree over
  /// the ground field.
  Elem frob(Elem a, long long ell) const;
  /// Image of an integer in the prime subfield.
  Elem from_int(long long n) const;
  /// Class of the variable x of the defining modulus (1 for a prime field).
  Elem generator() const;
  bool in_ground(Elem a) const { return a < q_; }

  /// Coordinates over the immediate base, length degree().
  std::vector<Elem> coords(Elem a) const;
  Elem from_coords(const std::vector<Elem>& c) const;
  /// Base-p digits, little-endian, without trailing zeros.
  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(const std::vector<std::uint32_t>& d) const;

  /// Human-readable form; extension elements are written in the variable
  /// name (default "w").
  std::string format(Elem a, const std::string& var = "w") const;

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field() = default;
  static const Field* intern(const Field* base, std::vector<Elem> modulus,
                             bool new_ground, std::uint32_t p);
  void build_tables();
  Elem mul_schoolbook(Elem a, Elem b) const;
  Elem pow_schoolbook(Elem a, std::uint64_t e) const;

  std::uint32_t p_ = 0;
  std::uint32_t size_ = 0;
  std::uint32_t q_ = 0;
  unsigned degree_ = 1;
  unsigned abs_degree_ = 1;
  unsigned ground_degree_ = 1;
  const Field* base_ = nullptr;
  const Field* ground_ = nullptr;
  std::vector<Elem> modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  bool tables_ = false;
};

/// An element of a finite field together with its field.
struct FieldElem {
  const Field* F = nullptr;
  Field::Elem v = 0;

  FieldElem() = default;
  FieldElem(const Field* f, Field::Elem value) : F(f), v(value) {}

  bool is_zero() const { return v == 0; }
  bool is_one() const { return v == 1; }
  FieldElem inverse() const;
  FieldElem pow(std::uint64_t e) const { return {F, F->pow(v, e)}; }

  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    return a * b.inverse();
  }
  FieldElem operator-() const { return {F, F->neg(v)}; }
  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.v == b.v;
  }
  friend std::ostream& operator<<(std::ostream& os, const FieldElem& a) {
    return os << a.F->format(a.v);
  }
};

inline FieldElem zero_like(const FieldElem& x) { return {x.F, 0}; }
inline FieldElem one_like(const FieldElem& x) { return {x.F, 1}; }
inline bool is_zero(const FieldElem& x) { return x.v == 0; }
inline FieldElem inverse(const FieldElem& x) { return x.inverse(); }
inline FieldElem twist(const FieldElem& x, long long ell) {
  return {x.F, x.F->frob(x.v, ell)};
}
/// The constant c (an element of the ground field) in the ring of x.
inline FieldElem constant_like(const FieldElem& x, Field::Elem c) { return {x.F, c}; }

}  // namespace dtw

#endif  // DTW_FIELD_HPP
