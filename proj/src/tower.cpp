#include "dtw/tower.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dtw/drinfeld.hpp"
#include "dtw/errors.hpp"
#include "dtw/factor.hpp"

namespace dtw {

struct TowerData {
  const Field* F = nullptr;
  std::vector<unsigned> deg;
  /// size[k] = deg[0] * ... * deg[k-1]; size.back() is the total degree.
  std::vector<std::size_t> size{1};
  /// mod[k][j] = coordinates (length size[k]) of the x^j coefficient of m_k.
  std::vector<std::vector<std::vector<KElem>>> mod;
  std::shared_ptr<const TowerData> parent;
  /// The tower this one was obtained from by rebase_constants.
  std::shared_ptr<const TowerData> source;
  /// Coordinates of x_k^q for every level.
  std::vector<std::vector<KElem>> frob;
};

namespace {

using Coords = std::vector<KElem>;

bool all_zero(const Coords& c, std::size_t from = 0, std::size_t to = SIZE_MAX) {
  to = std::min(to, c.size());
  for (std::size_t i = from; i < to; ++i)
    if (!c[i].is_zero()) return false;
  return true;
}

Coords zeros(const Field* F, std::size_t n) { return Coords(n, KElem::zero(F)); }

// Product of two elements of the sub-tower with L levels.
Coords mul_rec(const TowerData& D, const Coords& a, const Coords& b, std::size_t L) {
  if (L == 0) return {a[0] * b[0]};
  const std::size_t n = D.deg[L - 1], s = D.size[L - 1];
  auto block = [&](const Coords& v, std::size_t j) {
    return Coords(v.begin() + static_cast<long>(j * s), v.begin() + static_cast<long>((j + 1) * s));
  };
  std::vector<Coords> ab(n), bb(n);
  std::vector<bool> az(n), bz(n);
  for (std::size_t j = 0; j < n; ++j) {
    ab[j] = block(a, j);
    bb[j] = block(b, j);
    az[j] = all_zero(ab[j]);
    bz[j] = all_zero(bb[j]);
  }
  std::vector<Coords> r(2 * n - 1, zeros(D.F, s));
  for (std::size_t i = 0; i < n; ++i) {
    if (az[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (bz[j]) continue;
      Coords p = mul_rec(D, ab[i], bb[j], L - 1);
      for (std::size_t k = 0; k < s; ++k) r[i + j][k] += p[k];
    }
  }
  for (std::size_t j = 2 * n - 1; j-- > n;) {
    if (all_zero(r[j])) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (all_zero(D.mod[L - 1][i])) continue;
      Coords p = mul_rec(D, r[j], D.mod[L - 1][i], L - 1);
      for (std::size_t k = 0; k < s; ++k) r[j - n + i][k] -= p[k];
    }
  }
  Coords out;
  out.reserve(n * s);
  for (std::size_t j = 0; j < n; ++j) out.insert(out.end(), r[j].begin(), r[j].end());
  return out;
}

template <class CoeffMap>
TowerElem subst_rec(const Tower& T, const Coords& c, std::size_t L,
                    const std::vector<TowerElem>& images, CoeffMap f) {
  const TowerData& D = *T.data();
  if (L == 0) return T.constant(f(c[0]));
  const std::size_t n = D.deg[L - 1], s = D.size[L - 1];
  TowerElem result = T.zero();
  for (std::size_t j = n; j-- > 0;) {
    result = result * images[L - 1];
    Coords b(c.begin() + static_cast<long>(j * s), c.begin() + static_cast<long>((j + 1) * s));
    if (!all_zero(b)) result += subst_rec(T, b, L - 1, images, f);
  }
  return result;
}

void check_same(const TowerElem& a, const TowerElem& b) {
  if (a.tower() != b.tower()) throw RingMismatchError("tower elements of different towers");
}

void trim(TowerPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

std::pair<TowerPoly, TowerPoly> poly_divmod(TowerPoly a, const TowerPoly& b0) {
  TowerPoly b = b0;
  trim(b);
  trim(a);
  if (b.empty()) throw ZeroDivisionError("division by the zero tower polynomial");
  const TowerElem inv = b.back().inverse();
  if (a.size() < b.size()) return {TowerPoly{}, a};
  TowerPoly q(a.size() - b.size() + 1, b.back().tower().zero());
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (a[k].is_zero()) {
      if (k == 0) break;
      continue;
    }
    TowerElem c = a[k] * inv;
    const std::size_t shift = k - (b.size() - 1);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    if (k == 0) break;
  }
  trim(q);
  a.resize(b.size() - 1, b.back().tower().zero());
  trim(a);
  return {q, a};
}

TowerPoly poly_mul(const TowerPoly& a, const TowerPoly& b) {
  if (a.empty() || b.empty()) return {};
  TowerPoly r(a.size() + b.size() - 1, a[0].tower().zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// Builds the data of a new level on top of base and finishes the Frobenius
// table. The separability check runs before anything is published.
Tower make_level(const Tower& base, const TowerPoly& m, std::shared_ptr<const TowerData> source) {
  if (m.size() < 2) throw InvalidArgument("level polynomial must have positive degree");
  for (const auto& c : m)
    if (c.tower() != base) throw RingMismatchError("level polynomial over another tower");
  if (!m.back().is_one()) throw InvalidArgument("level polynomial must be monic");
  TowerPoly g = poly_gcd(m, poly_derivative(m));
  if (g.size() != 1)
    throw InseparableError("level polynomial is not squarefree (gcd with derivative has degree " +
                           std::to_string(static_cast<long>(g.size()) - 1) + ")");
  const TowerData& B = *base.data();
  auto D = std::make_shared<TowerData>();
  D->F = B.F;
  D->deg = B.deg;
  D->deg.push_back(static_cast<unsigned>(m.size() - 1));
  D->size = B.size;
  D->size.push_back(B.size.back() * (m.size() - 1));
  D->mod = B.mod;
  std::vector<std::vector<KElem>> level;
  for (std::size_t j = 0; j + 1 < m.size(); ++j) level.push_back(m[j].coords());
  D->mod.push_back(std::move(level));
  D->parent = base.data();
  D->source = std::move(source);
  // Frobenius images: earlier levels are padded, the new one is computed.
  const std::size_t total = D->size.back();
  for (const auto& f : B.frob) {
    Coords c = f;
    c.resize(total, KElem::zero(D->F));
    D->frob.push_back(std::move(c));
  }
  Tower T{std::shared_ptr<const TowerData>(D)};
  TowerElem x = T.generator(D->deg.size() - 1);
  D->frob.push_back(x.pow(D->F->q()).coords());
  return T;
}

}  // namespace

// ---------------------------------------------------------------- Tower

Tower::Tower(const Field* F) {
  auto D = std::make_shared<TowerData>();
  D->F = F;
  d_ = D;
}

const Field* Tower::field() const { return d_ ? d_->F : nullptr; }
std::size_t Tower::levels() const { return d_->deg.size(); }
std::size_t Tower::degree() const { return d_->size.back(); }
unsigned Tower::level_degree(std::size_t k) const { return d_->deg.at(k); }

std::vector<TowerElem> Tower::level_polynomial(std::size_t k) const {
  if (k >= levels()) throw InvalidArgument("no such tower level");
  std::vector<TowerElem> m;
  for (const auto& c : d_->mod[k]) {
    Coords full = c;
    full.resize(degree(), KElem::zero(field()));
    m.push_back(from_coords(full));
  }
  m.push_back(one());
  return m;
}

Tower Tower::extend(const std::vector<TowerElem>& m) const { return make_level(*this, m, nullptr); }

TowerElem Tower::zero() const { return TowerElem(*this, zeros(field(), degree())); }

TowerElem Tower::one() const {
  Coords c = zeros(field(), degree());
  c[0] = KElem::one(field());
  return TowerElem(*this, std::move(c));
}

TowerElem Tower::constant(const KElem& x) const {
  Coords c = zeros(field(), degree());
  c[0] = x.field() == field() ? x : x.over(field());
  return TowerElem(*this, std::move(c));
}

TowerElem Tower::generator(std::size_t k) const {
  if (k >= levels()) throw InvalidArgument("no such tower generator");
  Coords c = zeros(field(), degree());
  if (d_->deg[k] == 1) {
    // x_k is the root of a linear polynomial x + m_0.
    Coords v = d_->mod[k][0];
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = -v[i];
    return TowerElem(*this, std::move(c));
  }
  c[d_->size[k]] = KElem::one(field());
  return TowerElem(*this, std::move(c));
}

TowerElem Tower::from_coords(std::vector<KElem> coords) const {
  return TowerElem(*this, std::move(coords));
}

TowerElem Tower::embed(const TowerElem& e) const {
  const auto& src = e.tower().data();
  for (auto cur = d_; cur; cur = cur->parent) {
    if (cur == src || (cur->source && cur->source == src)) {
      Coords c;
      c.reserve(degree());
      for (const auto& x : e.coords()) c.push_back(x.field() == field() ? x : x.over(field()));
      c.resize(degree(), KElem::zero(field()));
      return TowerElem(*this, std::move(c));
    }
  }
  throw RingMismatchError("element does not belong to a subtower of this tower");
}

Tower Tower::parent() const {
  if (!d_->parent) throw InvalidArgument("the base tower has no parent");
  return Tower(d_->parent);
}

// ---------------------------------------------------------------- TowerElem

TowerElem::TowerElem(Tower t, std::vector<KElem> coords) : T_(std::move(t)), c_(std::move(coords)) {
  if (c_.size() != T_.degree())
    throw ShapeError("tower element needs " + std::to_string(T_.degree()) + " coordinates");
  for (auto& x : c_) {
    if (x.field() == nullptr) x = KElem::zero(T_.field());
    if (x.field() != T_.field()) x = x.over(T_.field());
  }
}

bool TowerElem::is_zero() const { return all_zero(c_); }
bool TowerElem::is_one() const { return c_[0].is_one() && all_zero(c_, 1); }
bool TowerElem::is_rational() const { return all_zero(c_, 1); }

TowerElem& TowerElem::operator+=(const TowerElem& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

TowerElem& TowerElem::operator-=(const TowerElem& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

TowerElem operator*(const TowerElem& a, const TowerElem& b) {
  check_same(a, b);
  const TowerData& D = *a.T_.data();
  if (a.is_rational()) return b.scaled(a.c_[0]);
  if (b.is_rational()) return a.scaled(b.c_[0]);
  return TowerElem(a.T_, mul_rec(D, a.c_, b.c_, D.deg.size()));
}

TowerElem& TowerElem::operator*=(const TowerElem& o) { return *this = *this * o; }

TowerElem TowerElem::operator-() const {
  TowerElem r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

TowerElem TowerElem::scaled(const KElem& c0) const {
  const KElem c = c0.field() == field() ? c0 : c0.over(field());
  TowerElem r = *this;
  for (auto& x : r.c_)
    if (!x.is_zero()) x *= c;
  return r;
}

TowerElem TowerElem::inverse() const {
  if (is_zero()) throw ZeroDivisionError("inverse of zero in a tower");
  if (is_rational()) return T_.constant(c_[0].inverse());
  const std::size_t n = c_.size();
  // Columns of the multiplication-by-this matrix in the monomial basis.
  Matrix<KElem> M(n, n, KElem::zero(field()));
  for (std::size_t j = 0; j < n; ++j) {
    Coords e = zeros(field(), n);
    e[j] = KElem::one(field());
    TowerElem col = *this * TowerElem(T_, std::move(e));
    for (std::size_t i = 0; i < n; ++i) M(i, j) = col.c_[i];
  }
  Coords rhs = zeros(field(), n);
  rhs[0] = KElem::one(field());
  try {
    auto x = solve_unique(M, rhs);
    if (!x) throw ZeroDivisionError("tower element is not invertible");
    return TowerElem(T_, std::move(*x));
  } catch (const SingularError&) {
    throw ZeroDivisionError("tower element is a zero divisor");
  }
}

TowerElem TowerElem::pow(std::uint64_t e) const {
  TowerElem result = T_.one();
  TowerElem base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

TowerElem TowerElem::frobenius_twist(long long ell) const {
  if (ell < 0) throw InvalidArgument("negative Frobenius twist of a tower element");
  const TowerData& D = *T_.data();
  std::vector<TowerElem> images;
  for (const auto& f : D.frob) images.push_back(TowerElem(T_, f));
  TowerElem r = *this;
  for (long long i = 0; i < ell; ++i)
    r = subst_rec(T_, r.c_, D.deg.size(), images, [](const KElem& c) { return c.twist(1); });
  return r;
}

std::string TowerElem::to_string() const {
  static const char* names[] = {"x", "y", "z", "w", "v", "u"};
  const TowerData& D = *T_.data();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string mono;
    std::size_t rest = i;
    for (std::size_t k = 0; k < D.deg.size(); ++k) {
      std::size_t e = rest % D.deg[k];
      rest /= D.deg[k];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += k < 6 ? names[k] : "x" + std::to_string(k);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      os << c_[i];
    } else {
      if (!c_[i].is_one()) os << "(" << c_[i] << ")*";
      os << mono;
    }
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------- polynomials

TowerElem eval(const TowerPoly& p, const TowerElem& x) {
  TowerElem r = x.tower().zero();
  for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

TowerPoly poly_derivative(const TowerPoly& p) {
  TowerPoly d;
  for (std::size_t i = 1; i < p.size(); ++i)
    d.push_back(p[i].scaled(KElem::from_int(p[i].field(), static_cast<long long>(i))));
  trim(d);
  return d;
}

TowerPoly poly_gcd(TowerPoly a, TowerPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    TowerPoly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  TowerElem inv = a.back().inverse();
  for (auto& c : a) c *= inv;
  return a;
}

TowerPoly poly_exact_div(const TowerPoly& a, const TowerPoly& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.empty()) throw DividesError("tower polynomial division is not exact");
  return q;
}

TowerPoly divide_by_root(const TowerPoly& p, const TowerElem& root) {
  if (p.size() < 2) throw InvalidArgument("polynomial of degree < 1 has no root to divide out");
  const std::size_t n = p.size() - 1;
  TowerPoly q(n, root.tower().zero());
  q[n - 1] = p[n];
  for (std::size_t i = n - 1; i-- > 0;) q[i] = p[i + 1] + root * q[i + 1];
  if (!(p[0] + root * q[0]).is_zero()) throw DividesError("element is not a root of the polynomial");
  return q;
}

TowerPoly poly_from_base(const Tower& t, const std::vector<KElem>& p) {
  TowerPoly r;
  for (const auto& c : p) r.push_back(t.constant(c));
  return r;
}

KElem descend_to_base(const TowerElem& e) {
  const auto& c = e.coords();
  std::ostringstream bad;
  bool ok = true;
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    if (!ok) bad << ", ";
    ok = false;
    bad << "[" << i << "] = " << c[i];
  }
  if (!ok) throw NotRationalError("element is not in K; nonzero coordinates: " + bad.str());
  return c[0];
}

// ---------------------------------------------------------------- Galois actions

TowerElem substitute(const TowerElem& e, const std::vector<TowerElem>& images) {
  const Tower& T = e.tower();
  if (images.size() != T.levels()) throw ShapeError("one image per tower generator is required");
  for (const auto& im : images) check_same(e, im);
  return subst_rec(T, e.coords(), T.levels(), images, [](const KElem& c) { return c; });
}

GaloisActionTable::GaloisActionTable(Tower t, std::vector<std::string> names,
                                     std::vector<std::vector<TowerElem>> images,
                                     std::vector<std::vector<int>> relations)
    : T_(std::move(t)), names_(std::move(names)), images_(std::move(images)),
      relations_(std::move(relations)) {
  if (names_.size() != images_.size()) throw ShapeError("one name per generator is required");
  for (const auto& im : images_) {
    if (im.size() != T_.levels()) throw ShapeError("one image per tower level is required");
    for (const auto& x : im)
      if (x.tower() != T_) throw RingMismatchError("generator image in another tower");
  }
  for (std::size_t g = 0; g < images_.size(); ++g) {
    for (std::size_t k = 0; k < T_.levels(); ++k) {
      TowerPoly m = T_.level_polynomial(k);
      for (auto& c : m) c = substitute(c, images_[g]);
      if (!eval(m, images_[g][k]).is_zero())
        throw InvalidArgument("image of x" + std::to_string(k) + " under " + names_[g] +
                              " is not a root of the transformed level polynomial");
    }
  }
  for (const auto& w : relations_)
    for (std::size_t k = 0; k < T_.levels(); ++k)
      if (apply(w, T_.generator(k)) != T_.generator(k))
        throw InvalidArgument("relation does not act trivially on x" + std::to_string(k));
}

TowerElem GaloisActionTable::apply(const std::vector<int>& word, const TowerElem& e) const {
  for (int g : word)
    if (g < 0 || static_cast<std::size_t>(g) >= images_.size())
      throw BadWordError("generator index " + std::to_string(g) + " out of range");
  TowerElem r = T_.embed(e);
  for (std::size_t i = word.size(); i-- > 0;) r = substitute(r, images_[static_cast<std::size_t>(word[i])]);
  return r;
}

TowerElem GaloisActionTable::apply(const GroupElement& g, const TowerElem& e) const {
  return substitute(T_.embed(e), g.images);
}

std::vector<GroupElement> GaloisActionTable::enumerate() const {
  std::vector<GroupElement> elems;
  GroupElement id;
  for (std::size_t k = 0; k < T_.levels(); ++k) id.images.push_back(T_.generator(k));
  elems.push_back(id);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t g = 0; g < images_.size(); ++g) {
      GroupElement next;
      next.word.push_back(static_cast<int>(g));
      next.word.insert(next.word.end(), elems[head].word.begin(), elems[head].word.end());
      for (const auto& x : elems[head].images) next.images.push_back(substitute(x, images_[g]));
      bool seen = false;
      for (const auto& e : elems)
        if (e.images == next.images) {
          seen = true;
          break;
        }
      if (!seen) elems.push_back(std::move(next));
    }
  }
  return elems;
}

GaloisActionTable GaloisActionTable::rebased(const Tower& t) const {
  std::vector<std::vector<TowerElem>> imgs;
  for (const auto& im : images_) {
    std::vector<TowerElem> v;
    for (const auto& x : im) v.push_back(t.embed(x));
    imgs.push_back(std::move(v));
  }
  return GaloisActionTable(t, names_, std::move(imgs), relations_);
}

// ---------------------------------------------------------------- representations

RepresentationTable::RepresentationTable(std::vector<Matrix<FieldElem>> gens,
                                         const std::vector<std::vector<int>>& relations)
    : gens_(std::move(gens)) {
  if (gens_.empty()) throw InvalidArgument("representation needs at least one generator");
  n_ = gens_[0].rows();
  F_ = gens_[0](0, 0).F;
  for (const auto& g : gens_) {
    if (!g.square() || g.rows() != n_) throw ShapeError("representation matrices must be n x n");
    if (!inverse(g)) throw SingularError("representation matrix is not invertible");
  }
  const Matrix<FieldElem> I = Matrix<FieldElem>::identity(n_, gens_[0](0, 0));
  for (const auto& w : relations)
    if (!(of(w) == I)) throw InvalidArgument("relation is not mapped to the identity");
  unsigned d = 1;
  const unsigned top = F_->degree_over_ground();
  for (const auto& g : gens_)
    for (const auto& x : g.data()) {
      unsigned j = 1;
      while (j < top && F_->frob(x.v, j) != x.v) ++j;
      d = std::lcm(d, j);
    }
  d_ = d;
}

Matrix<FieldElem> RepresentationTable::of(const std::vector<int>& word) const {
  Matrix<FieldElem> r = Matrix<FieldElem>::identity(n_, gens_[0](0, 0));
  for (int g : word) {
    if (g < 0 || static_cast<std::size_t>(g) >= gens_.size())
      throw BadWordError("generator index " + std::to_string(g) + " out of range");
    r = r * gens_[static_cast<std::size_t>(g)];
  }
  return r;
}

// ---------------------------------------------------------------- cyclotomic

namespace {

// C_a(x) as little-endian coefficients in x (nonzero only at q-powers).
std::vector<KElem> carlitz_additive_polynomial(const APoly& a) {
  const Field* F = a.field();
  OrePoly<KElem> Ca = image_of(a.as<TVar>(), carlitz(F).phi_t());
  std::vector<KElem> p(1, KElem::zero(F));
  std::size_t qk = 1;
  for (long k = 0; k <= Ca.degree(); ++k) {
    if (p.size() < qk + 1) p.resize(qk + 1, KElem::zero(F));
    p[qk] = Ca.coeff(static_cast<std::size_t>(k))(0, 0);
    qk *= F->q();
  }
  return p;
}

std::vector<KElem> to_base(const TowerPoly& p) {
  std::vector<KElem> r;
  for (const auto& c : p) r.push_back(descend_to_base(c));
  return r;
}

}  // namespace

std::vector<KElem> carlitz_torsion_polynomial(const APoly& f) {
  if (f.degree() < 1) throw InvalidArgument("torsion polynomial of a constant");
  std::vector<KElem> p = carlitz_additive_polynomial(f);
  return std::vector<KElem>(p.begin() + 1, p.end());
}

std::vector<KElem> carlitz_primitive_torsion_polynomial(const APoly& f) {
  if (f.degree() < 1) throw InvalidArgument("torsion polynomial of a constant");
  const Field* F = f.field();
  const Tower K(F);
  TowerPoly Cf = poly_from_base(K, carlitz_additive_polynomial(f.monic()));
  TowerPoly l{K.one()};
  for (const auto& wp : prime_divisors(f)) {
    TowerPoly Cg = poly_from_base(K, carlitz_additive_polynomial(f.monic() / wp));
    TowerPoly g = poly_gcd(l, Cg);
    l = poly_exact_div(poly_mul(l, Cg), g);
  }
  TowerPoly phi = poly_exact_div(Cf, l);
  TowerElem inv = phi.back().inverse();
  for (auto& c : phi) c *= inv;
  return to_base(phi);
}

TowerElem carlitz_action(const APoly& a, const TowerElem& x) {
  OrePoly<KElem> Ca = image_of(a.as<TVar>(), carlitz(a.field()).phi_t());
  TowerElem r = x.tower().zero();
  TowerElem xp = x;
  for (long k = 0; k <= Ca.degree(); ++k) {
    const KElem c = Ca.coeff(static_cast<std::size_t>(k))(0, 0);
    if (!c.is_zero()) r += xp.scaled(c);
    if (k < Ca.degree()) xp = xp.pow(x.field()->q());
  }
  return r;
}

CyclotomicTower carlitz_cyclotomic_tower(const APoly& f0) {
  if (f0.degree() < 1) throw InvalidArgument("cyclotomic tower of a constant");
  const APoly f = f0.monic();
  const Field* F = f.field();
  const Tower K(F);
  Tower L = K.extend(poly_from_base(K, carlitz_primitive_torsion_polynomial(f)));
  const TowerElem lambda = L.generator(0);

  std::vector<APoly> units;
  const std::uint64_t count = [&] {
    std::uint64_t c = 1;
    for (int i = 0; i < f.degree(); ++i) c *= F->q();
    return c;
  }();
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    std::vector<Field::Elem> coeffs;
    for (std::uint64_t r = idx; r > 0; r /= F->q()) coeffs.push_back(static_cast<Field::Elem>(r % F->q()));
    APoly a(F, coeffs);
    if (gcd(a, f).is_one()) units.push_back(a);
  }
  std::sort(units.begin(), units.end());
  auto index_of = [&](const APoly& a) {
    APoly r = a % f;
    for (std::size_t i = 0; i < units.size(); ++i)
      if (units[i] == r) return static_cast<int>(i);
    throw InvalidArgument("not a unit modulo f");
  };
  auto inverse_mod = [&](const APoly& a) {
    for (const auto& u : units)
      if (((u * a) % f).is_one()) return u;
    throw InvalidArgument("not a unit modulo f");
  };

  std::vector<std::string> names;
  std::vector<std::vector<TowerElem>> images;
  for (const auto& a : units) {
    names.push_back("σ_" + a.to_string());
    images.push_back({carlitz_action(a, lambda)});
  }
  std::vector<std::vector<int>> relations;
  relations.push_back({index_of(APoly::constant(F, 1))});
  for (std::size_t i = 0; i < units.size(); ++i)
    for (std::size_t j = 0; j < units.size(); ++j)
      relations.push_back({static_cast<int>(i), static_cast<int>(j),
                           index_of(inverse_mod(units[i] * units[j]))});
  GaloisActionTable act(L, std::move(names), std::move(images), std::move(relations));
  return CyclotomicTower{f, L, std::move(units), std::move(act)};
}

Tower rebase_constants(const Tower& t, unsigned d) {
  if (d == 1) return t;
  if (d == 0) throw InvalidArgument("constant extension degree must be positive");
  std::vector<std::shared_ptr<const TowerData>> chain;
  for (auto cur = t.data(); cur; cur = cur->parent) chain.push_back(cur);
  std::reverse(chain.begin(), chain.end());
  const Field* G = Field::extension(t.field(), d);
  auto base = std::make_shared<TowerData>();
  base->F = G;
  base->source = chain[0];
  Tower cur{std::shared_ptr<const TowerData>(base)};
  for (std::size_t k = 1; k < chain.size(); ++k) {
    const auto& level = chain[k]->mod.back();
    TowerPoly m;
    for (const auto& c : level) {
      Coords cc;
      for (const auto& x : c) cc.push_back(x.over(G));
      m.push_back(cur.from_coords(std::move(cc)));
    }
    m.push_back(cur.one());
    cur = make_level(cur, m, chain[k]);
  }
  return cur;
}

}  // namespace dtw
