#include "dtw/factor.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "dtw/errors.hpp"

namespace dtw {

namespace {

// p-th root of a polynomial whose derivative vanishes.
APoly pth_root(const APoly& f) {
  const Field* F = f.field();
  std::uint32_t p = F->characteristic();
  std::uint64_t inv_exp = F->size() / p;  // x -> x^(Q/p) inverts x -> x^p
  std::vector<Field::Elem> c;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p))
    c.push_back(F->pow(f[static_cast<std::size_t>(i)], inv_exp));
  return APoly(F, c);
}

void squarefree(const APoly& f, unsigned scale, std::vector<std::pair<APoly, unsigned>>& out) {
  const Field* F = f.field();
  std::uint32_t p = F->characteristic();
  APoly one = APoly::constant(F, 1);
  APoly c = gcd(f, f.derivative());
  APoly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    APoly y = gcd(w, c);
    APoly z = w / y;
    if (!z.is_one()) out.emplace_back(z, i * scale);
    ++i;
    w = y;
    c = c / y;
  }
  if (!c.is_one() && c.degree() > 0) squarefree(pth_root(c).monic(), scale * p, out);
}

void equal_degree(const APoly& g, int d, std::mt19937_64& rng, std::vector<APoly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const Field* F = g.field();
  const std::uint64_t Q = F->size();
  std::uniform_int_distribution<std::uint32_t> coin(0, static_cast<std::uint32_t>(Q - 1));
  for (;;) {
    std::vector<Field::Elem> c(static_cast<std::size_t>(g.degree()));
    for (auto& x : c) x = coin(rng);
    APoly a(F, c);
    if (a.degree() <= 0) continue;
    APoly b;
    if (Q % 2 == 0) {
      // Absolute trace of a over F_2, computed modulo g.
      unsigned k = 0;
      for (std::uint64_t s = Q; s > 1; s >>= 1) ++k;
      APoly term = a % g, acc = term;
      for (unsigned j = 1; j < k * static_cast<unsigned>(d); ++j) {
        term = (term * term) % g;
        acc += term;
      }
      b = acc;
    } else {
      // a^((Q^d-1)/2) = N^((Q-1)/2) with N = a * a^Q * ... * a^(Q^(d-1)).
      APoly term = a % g, norm = term;
      for (int j = 1; j < d; ++j) {
        term = powmod(term, Q, g);
        norm = (norm * term) % g;
      }
      b = powmod(norm, (Q - 1) / 2, g) - APoly::constant(F, 1);
    }
    APoly h = gcd(g, b);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree(g / h, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Factor> factor(const APoly& f) {
  if (f.is_zero()) throw InvalidArgument("cannot factor the zero polynomial");
  std::vector<Factor> result;
  if (f.degree() == 0) return result;
  const Field* F = f.field();
  std::vector<std::pair<APoly, unsigned>> sqf;
  squarefree(f.monic(), 1, sqf);
  std::mt19937_64 rng(0x5eed5eedULL);
  std::map<std::vector<Field::Elem>, unsigned> mult;
  std::vector<APoly> primes;
  for (auto& [g0, m] : sqf) {
    APoly g = g0;
    APoly x = APoly::variable(F);
    APoly h = x % g;
    int i = 1;
    while (g.degree() >= 2 * i) {
      h = powmod(h, F->size(), g);
      APoly part = gcd(g, h - x);
      if (!part.is_one()) {
        std::vector<APoly> split;
        equal_degree(part, i, rng, split);
        for (auto& s : split) {
          auto [it, fresh] = mult.emplace(s.coeffs(), 0);
          it->second += m;
          if (fresh) primes.push_back(s);
        }
        g = g / part;
        h = h % g;
      }
      ++i;
    }
    if (g.degree() > 0) {
      auto [it, fresh] = mult.emplace(g.coeffs(), 0);
      it->second += m;
      if (fresh) primes.push_back(g);
    }
  }
  std::sort(primes.begin(), primes.end());
  for (auto& p : primes) result.push_back({p, mult[p.coeffs()]});
  return result;
}

std::vector<APoly> prime_divisors(const APoly& f) {
  std::vector<APoly> out;
  for (auto& fac : factor(f)) out.push_back(fac.prime);
  return out;
}

}  // namespace dtw
