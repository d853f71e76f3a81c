#include "dtw/base_algebra.hpp"

#include "dtw/errors.hpp"

namespace dtw {

PrimeIdeal::PrimeIdeal(APoly g) : generator(std::move(g)) {
  if (!generator.is_monic() || !is_irreducible(generator))
    throw ReducibleError("prime ideal generator must be monic irreducible: " +
                         generator.to_string());
  degree = generator.degree();
}

ResidueField::ResidueField(PrimeIdeal prime) : prime_(std::move(prime)) {
  F_ = Field::extension(prime_.generator.field(), prime_.generator.coeffs());
}

FieldElem ResidueField::reduce(const APoly& a) const {
  APoly r = a % prime_.generator;
  return {F_, F_->from_coords(r.coeffs())};
}

FieldElem ResidueField::reduce(const KElem& a) const {
  FieldElem d = reduce(a.denominator());
  if (d.is_zero())
    throw DividesError("denominator divisible by " + prime_.generator.to_string());
  return reduce(a.numerator()) * d.inverse();
}

APoly ResidueField::lift(const FieldElem& x) const {
  return APoly(prime_.generator.field(), F_->coords(x.v));
}

ExtConstField::ExtConstField(const Field* ground, unsigned d)
    : ground_(ground), F_(d == 1 ? ground : Field::extension(ground, d)), d_(d) {}

ExtConstField::ExtConstField(const Field* ground, std::vector<Field::Elem> modulus)
    : ground_(ground), F_(Field::extension(ground, std::move(modulus))), d_(F_->degree()) {}

FieldElem ExtConstField::element(const std::vector<Field::Elem>& coords) const {
  return {F_, F_->from_coords(coords)};
}

std::vector<FieldElem> ExtConstField::monomial_basis() const {
  std::vector<FieldElem> out;
  FieldElem w = generator(), x{F_, 1};
  for (unsigned i = 0; i < d_; ++i) {
    out.push_back(x);
    x = x * w;
  }
  return out;
}

std::vector<APoly> monic_polynomials_of_degree(const Field* F, int m) {
  std::vector<APoly> out;
  std::uint64_t count = 1;
  for (int i = 0; i < m; ++i) count *= F->size();
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<Field::Elem> c(static_cast<std::size_t>(m) + 1, 0);
    std::uint64_t r = idx;
    for (int i = 0; i < m; ++i) {
      c[static_cast<std::size_t>(i)] = static_cast<Field::Elem>(r % F->size());
      r /= F->size();
    }
    c[static_cast<std::size_t>(m)] = 1;
    out.emplace_back(F, std::move(c));
  }
  return out;
}

std::vector<PrimeIdeal> monic_irreducibles_of_degree(const Field* Fq, int m) {
  std::vector<PrimeIdeal> out;
  for (auto& f : monic_polynomials_of_degree(Fq, m)) {
    if (is_irreducible(f)) {
      PrimeIdeal p;
      p.degree = m;
      p.generator = std::move(f);
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<PrimeIdeal> enumerate_monic_irreducibles(const Field* Fq, int max_deg) {
  if (max_deg < 0) throw InvalidArgument("max_deg must be non-negative");
  std::vector<PrimeIdeal> out;
  for (int m = 1; m <= max_deg; ++m) {
    auto part = monic_irreducibles_of_degree(Fq, m);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::uint64_t necklace_count(std::uint64_t q, int m) {
  auto mobius = [](int n) {
    int result = 1;
    for (int d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        n /= d;
        if (n % d == 0) return 0;
        result = -result;
      }
    }
    if (n > 1) result = -result;
    return result;
  };
  long long total = 0;
  for (int k = 1; k <= m; ++k) {
    if (m % k != 0) continue;
    long long qp = 1;
    for (int i = 0; i < m / k; ++i) qp *= static_cast<long long>(q);
    total += mobius(k) * qp;
  }
  return static_cast<std::uint64_t>(total / m);
}

FieldElem power_residue_symbol(const APoly& f, const PrimeIdeal& wp, unsigned n) {
  const Field* Fq = f.field();
  std::uint64_t q = Fq->size();
  if (n == 0 || (q - 1) % n != 0)
    throw BadOrderError("n must divide q-1 (n=" + std::to_string(n) + ", q=" + std::to_string(q) + ")");
  ResidueField R(wp);
  FieldElem fbar = R.reduce(f);
  if (fbar.is_zero()) throw DividesError(wp.generator.to_string() + " divides " + f.to_string());
  std::uint64_t card = R.field()->size();
  FieldElem s = fbar.pow((card - 1) / n);
  if (!R.field()->in_ground(s.v) || !s.pow(n).is_one())
    throw DescentError("power residue symbol is not an n-th root of unity in F_q");
  return {Fq, s.v};
}

FieldElem residue_norm(const FieldElem& x) {
  const Field* F = x.F;
  FieldElem r{F, 1};
  for (unsigned i = 0; i < F->degree_over_ground(); ++i) r *= twist(x, i);
  if (!F->in_ground(r.v)) throw DescentError("norm does not lie in the ground field");
  return {F->ground_field(), r.v};
}

FieldElem frobenius_twist_const(const FieldElem& x, long long ell) { return twist(x, ell); }

}  // namespace dtw
