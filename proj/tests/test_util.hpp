#ifndef DTW_TEST_UTIL_HPP
#define DTW_TEST_UTIL_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dtw/base_algebra.hpp"
#include "dtw/laurent.hpp"

namespace dtw::test {

/// A polynomial over F written in the command-line grammar.
inline APoly P(const Field* F, const std::string& text) { return parse_poly(F, text); }

inline KElem K(const Field* F, const std::string& text) { return KElem(parse_poly(F, text)); }

inline KElem K(const Field* F, const std::string& num, const std::string& den) {
  return KElem(parse_poly(F, num), parse_poly(F, den));
}

/// Deterministic generator shared by the property tests.
inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611ULL);
  return g;
}

inline Field::Elem random_elem(const Field* F) {
  return static_cast<Field::Elem>(rng()() % F->size());
}

/// Random polynomial of degree at most max_deg.
inline APoly random_poly(const Field* F, int max_deg) {
  std::vector<Field::Elem> c(static_cast<std::size_t>(max_deg) + 1);
  for (auto& x : c) x = random_elem(F);
  return APoly(F, std::move(c));
}

inline APoly random_nonzero_poly(const Field* F, int max_deg) {
  for (;;) {
    APoly a = random_poly(F, max_deg);
    if (!a.is_zero()) return a;
  }
}

inline KElem random_kelem(const Field* F, int max_deg) {
  return KElem(random_poly(F, max_deg), random_nonzero_poly(F, max_deg));
}

/// Laurent number of a random rational function at precision prec.
inline LaurentNumber random_laurent(const Field* F, std::size_t prec) {
  for (;;) {
    KElem x = random_kelem(F, 3);
    if (!x.is_zero()) return embed_rational(x, prec);
  }
}

/// Series given by its top degree and coefficients written as integers.
inline LaurentNumber series(const Field* F, long top, const std::vector<Field::Elem>& c) {
  return LaurentNumber::from_coeffs(F, top, c);
}

}  // namespace dtw::test

#endif  // DTW_TEST_UTIL_HPP
