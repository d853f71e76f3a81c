#ifndef DTW_FACTOR_HPP
#define DTW_FACTOR_HPP

#include <vector>

#include "dtw/poly.hpp"

namespace dtw {

/// A monic irreducible factor with its multiplicity.
struct Factor {
  APoly prime;
  unsigned multiplicity = 0;
};

/// Complete factorization of a nonzero polynomial over its coefficient field
/// into monic irreducibles (squarefree decomposition, distinct-degree and
/// equal-degree splitting with a fixed-seed generator). Factors come out in
/// the canonical (degree, lex) order; the leading coefficient is dropped.
std::vector<Factor> factor(const APoly& f);

/// The distinct monic irreducible divisors of f, canonically ordered.
std::vector<APoly> prime_divisors(const APoly& f);

}  // namespace dtw

#endif  // DTW_FACTOR_HPP
