#ifndef DTW_SERIALIZE_HPP
#define DTW_SERIALIZE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "dtw/base_algebra.hpp"
#include "dtw/drinfeld.hpp"
#include "dtw/laurent.hpp"
#include "dtw/lseries.hpp"
#include "dtw/special_values.hpp"
#include "dtw/twist.hpp"

namespace dtw::io {

/// JSON values with sorted keys, so dumps are canonical.
using json = nlohmann::json;

/// Canonical text of a JSON value: two-space indent, UTF-8, trailing newline.
std::string dump(const json& j);

// Writers. A field element is written as the array of its base-p digits
// (little-endian, no trailing zeros, so 0 is []); polynomials as
// little-endian arrays of elements; elements of K as {"num", "den"}.

json to_json(const Field* F);
json to_json(const FieldElem& x);
json to_json(const APoly& a);
json to_json(const TPoly& a);
json to_json(const KElem& x);
json to_json(const LaurentNumber& x);
json to_json(const Matrix<KElem>& m);
json to_json(const OrePoly<KElem>& e);
json to_json(const BadPrimeSet& s);
json to_json(const CharpolyRecord& cp);
json to_json(const SpecialValueReport& r);
/// The full output of the twist pipeline, named after the example.
json to_json(const TwistExample& ex, const TwistResult& r);

// Readers. Field elements may be digit arrays or integer indices. Each
// reader throws ParseError with the offending fragment on bad input.

/// F_q for a prime power q; InvalidArgument otherwise.
const Field* field_from_q(std::uint64_t q);
/// {"p": p, "e": e, "modulus": [...]} or {"q": q}. A "size" larger than q
/// with a "modulus" denotes a simple extension of F_q.
const Field* field_from_json(const json& j);
/// A string in the polynomial grammar, an integer, or a coefficient array.
APoly apoly_from_json(const Field* F, const json& j);
/// Anything accepted by apoly_from_json, a string "a/b", or
/// {"num": ..., "den": ...}.
KElem kelem_from_json(const Field* F, const json& j);
LaurentNumber laurent_from_json(const json& j);
/// {"shape": [N, N], "terms": [matrix, ...]} with K entries.
OrePoly<KElem> ore_from_json(const Field* F, const json& j);

/// A module file: a field ("field", or "q"/"p" at top level) plus one of
/// "carlitz": true, "drinfeld" or "coeffs": [a_1, ..., a_r] (with optional
/// "rank"), "power_twist": {"f": ..., "n": ...} or "Et": an Ore
/// polynomial. An optional "extra_bad" list names ramified primes.
struct ModuleSpec {
  AndersonModule module;
  std::vector<APoly> extra_bad;
};
ModuleSpec module_from_json(const json& j);

/// A twist request: either {"example": "s3" | "cyclotomic"} or the explicit
/// data "field", "phi", "tower", "action", "rho" and one of "u" (a solution
/// column), "solution" ({"columns", "alpha"}) or "y" (a seed to average).
/// Tower elements are coordinate arrays over K in the tower's monomial
/// basis, or single elements of K.
TwistExample twist_request_from_json(const json& j);

/// Reads and parses a JSON file; ParseError on failure.
json read_file(const std::string& path);

}  // namespace dtw::io

#endif  // DTW_SERIALIZE_HPP
