#include "dtw/serialize.hpp"

#include <fstream>
#include <sstream>

#include "dtw/errors.hpp"

namespace dtw::io {

namespace {

[[noreturn]] void bad(const std::string& what, const json& j) {
  throw ParseError(what + ": " + j.dump());
}

const json& field_of(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'", j);
  return j.at(key);
}

// A field element: its base-p digit array or its integer index.
FieldElem elem_from_json(const Field* F, const json& j) {
  if (j.is_array()) {
    std::vector<std::uint32_t> d;
    for (const auto& x : j) {
      if (!x.is_number_unsigned() || x.get<std::uint64_t>() >= F->characteristic())
        bad("expected a base-p digit", x);
      d.push_back(x.get<std::uint32_t>());
    }
    return {F, F->from_digits(d)};
  }
  if (!j.is_number_integer()) bad("expected a field element", j);
  const long long v = j.get<long long>();
  if (v < 0 || v >= static_cast<long long>(F->size())) bad("field element out of range", j);
  return {F, static_cast<Field::Elem>(v)};
}

std::vector<Field::Elem> elems_from_json(const Field* F, const json& j) {
  if (!j.is_array()) bad("expected an array of field elements", j);
  std::vector<Field::Elem> out;
  for (const auto& x : j) out.push_back(elem_from_json(F, x).v);
  return out;
}

json digits_json(const Field* F, Field::Elem v) { return json(F->digits(v)); }

json elems_json(const Field* F, const std::vector<Field::Elem>& c) {
  json out = json::array();
  for (auto v : c) out.push_back(digits_json(F, v));
  return out;
}

// Strips one pair of enclosing parentheses when they match each other.
std::string strip_parens(std::string s) {
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      depth += s[i] == '(' ? 1 : s[i] == ')' ? -1 : 0;
      if (depth == 0 && i + 1 < s.size()) return s;
    }
    return s.substr(1, s.size() - 2);
  }
  return s;
}

TowerElem tower_elem_from_json(const Tower& T, const json& j) {
  const Field* F = T.field();
  if (!j.is_array()) return T.constant(kelem_from_json(F, j));
  if (j.size() > T.degree()) bad("too many tower coordinates", j);
  std::vector<KElem> c(T.degree(), KElem::zero(F));
  for (std::size_t i = 0; i < j.size(); ++i) c[i] = kelem_from_json(F, j[i]);
  return T.from_coords(std::move(c));
}

std::vector<TowerElem> tower_elems_from_json(const Tower& T, const json& j) {
  if (!j.is_array()) bad("expected a list of tower elements", j);
  std::vector<TowerElem> out;
  for (const auto& x : j) out.push_back(tower_elem_from_json(T, x));
  return out;
}

Matrix<FieldElem> const_matrix_from_json(const Field* G, const json& j) {
  if (!j.is_array() || j.empty()) bad("expected a non-empty matrix", j);
  std::vector<std::vector<FieldElem>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) bad("expected a matrix row", r);
    std::vector<FieldElem> row;
    for (const auto& x : r) row.push_back(elem_from_json(G, x));
    rows.push_back(std::move(row));
  }
  return Matrix<FieldElem>::from_rows(rows);
}

json kelem_text(const KElem& x) { return x.to_string(); }

}  // namespace

std::string dump(const json& j) { return j.dump(2, ' ', false) + "\n"; }

json to_json(const Field* F) {
  const Field* G = F->ground_field();
  json j{{"p", F->characteristic()}, {"q", F->q()}, {"size", F->size()}};
  j["ground_modulus"] = G->is_prime() ? json::array() : elems_json(G->base(), G->modulus());
  if (F != G) j["modulus"] = elems_json(G, F->modulus());
  return j;
}

json to_json(const FieldElem& x) { return digits_json(x.F, x.v); }

json to_json(const APoly& a) { return elems_json(a.field(), a.coeffs()); }
json to_json(const TPoly& a) { return elems_json(a.field(), a.coeffs()); }

json to_json(const KElem& x) {
  return json{{"num", to_json(x.numerator())}, {"den", to_json(x.denominator())}};
}

json to_json(const LaurentNumber& x) {
  json j{{"const_field", to_json(x.field())},
         {"coeffs", elems_json(x.field(), x.coeffs())},
         {"precision", x.precision()},
         {"text", x.to_string()}};
  if (x.is_exact_zero()) {
    j["top_degree"] = nullptr;
    j["error_exponent"] = nullptr;
  } else {
    j["top_degree"] = x.top_degree();
    j["error_exponent"] = x.error_exponent();
  }
  return j;
}

json to_json(const Matrix<KElem>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const OrePoly<KElem>& e) {
  json terms = json::array();
  for (const auto& M : e.terms()) terms.push_back(to_json(M));
  return json{{"shape", {e.rows(), e.cols()}}, {"terms", terms}};
}

json to_json(const BadPrimeSet& s) {
  json out = json::array();
  for (const auto& b : s.primes)
    out.push_back({{"prime", to_json(b.prime)}, {"text", b.prime.to_string()}, {"reason", b.reason}});
  return out;
}

json to_json(const CharpolyRecord& cp) {
  json coeffs = json::array();
  for (const auto& c : cp.coeffs) coeffs.push_back(to_json(c));
  return json{{"prime", to_json(cp.prime.generator)}, {"coeffs", coeffs}, {"unit", to_json(cp.unit)}};
}

json to_json(const SpecialValueReport& r) {
  return json{{"goss", to_json(r.goss)},
              {"euler", to_json(r.euler)},
              {"dirichlet", to_json(r.dirichlet)},
              {"log_value", to_json(r.log_value)},
              {"disc_goss_euler", r.disc_goss_euler},
              {"disc_euler_dirichlet", r.disc_euler_dirichlet},
              {"disc_euler_log", r.disc_euler_log},
              {"disc_dirichlet_log", r.disc_dirichlet_log},
              {"disc_goss_log", r.disc_goss_log},
              {"deg_max", r.deg_max},
              {"k_max", r.k_max},
              {"prec", r.prec},
              {"pass", r.pass}};
}

json to_json(const TwistExample& ex, const TwistResult& r) {
  json failures = json::array();
  for (const auto& [g, ell] : r.solution_check.failures)
    failures.push_back({{"generator", ex.action.names().at(g)}, {"ell", ell}});
  json j{{"example", ex.name},
         {"field", to_json(ex.phi.field())},
         {"solution_check", {{"ok", r.solution_check.ok}, {"failures", failures}}},
         {"fundamental", r.fundamental},
         {"isomorphism", r.isomorphism},
         {"ok", r.ok()}};
  if (r.fvec) {
    json f = json::array(), text = json::array();
    for (const auto& x : r.fvec->f) {
      f.push_back(to_json(x));
      text.push_back(kelem_text(x));
    }
    j["f_vector"] = f;
    j["f_vector_text"] = text;
    j["sign_law"] = r.fvec->sign_law;
    j["moore_det"] = r.fvec->moore_det.to_string();
  }
  if (r.companions) {
    j["Phi"] = to_json(r.companions->Phi);
    j["Psi"] = to_json(r.companions->Psi);
  }
  if (r.model) j["model"] = to_json(r.model->Et());
  if (r.integral) {
    j["integral_model"] = to_json(r.integral->E.Et());
    j["conjugator"] = to_json(r.integral->conjugator);
  }
  return j;
}

const Field* field_from_q(std::uint64_t q) {
  if (q < 2) throw InvalidArgument("q must be a prime power, got " + std::to_string(q));
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  unsigned e = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) throw InvalidArgument("q must be a prime power, got " + std::to_string(q));
  return Field::ground(static_cast<std::uint32_t>(p), e);
}

const Field* field_from_json(const json& j) try {
  if (!j.is_object()) bad("field must be an object", j);
  const Field* G = nullptr;
  if (j.contains("p")) {
    const auto p = j.at("p").get<std::uint32_t>();
    std::vector<Field::Elem> gm;
    const Field* Fp = Field::prime(p);
    if (j.contains("ground_modulus")) gm = elems_from_json(Fp, j.at("ground_modulus"));
    unsigned e = j.value("e", 0u);
    if (e == 0) e = gm.empty() ? 1 : static_cast<unsigned>(gm.size() - 1);
    if (j.contains("q") && !j.contains("e") && gm.empty()) {
      G = field_from_q(j.at("q").get<std::uint64_t>());
      if (G->characteristic() != p) bad("q is not a power of p", j);
    } else {
      if (j.contains("modulus") && !j.contains("size")) gm = elems_from_json(Fp, j.at("modulus"));
      G = Field::ground(p, e, gm);
    }
  } else if (j.contains("q")) {
    G = field_from_q(j.at("q").get<std::uint64_t>());
  } else {
    bad("field needs 'p' or 'q'", j);
  }
  if (j.contains("size") && j.at("size").get<std::uint64_t>() != G->size()) {
    const Field* F = Field::extension(G, elems_from_json(G, field_of(j, "modulus")));
    if (F->size() != j.at("size").get<std::uint64_t>()) bad("field size does not match the modulus", j);
    return F;
  }
  return G;
} catch (const json::exception& e) {
  throw ParseError(std::string("malformed JSON input: ") + e.what());
}

APoly apoly_from_json(const Field* F, const json& j) try {
  if (j.is_string()) return parse_poly(F, j.get<std::string>());
  if (j.is_number_integer()) return APoly::constant(F, F->from_int(j.get<long long>()));
  if (j.is_array()) return APoly(F, elems_from_json(F, j));
  bad("expected a polynomial", j);
} catch (const json::exception& e) {
  throw ParseError(std::string("malformed JSON input: ") + e.what());
}

KElem kelem_from_json(const Field* F, const json& j) try {
  if (j.is_object()) {
    const APoly den = j.contains("den") ? apoly_from_json(F, j.at("den")) : APoly::constant(F, 1);
    if (den.is_zero()) bad("zero denominator", j);
    return KElem(apoly_from_json(F, field_of(j, "num")), den);
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      depth += s[i] == '(' ? 1 : s[i] == ')' ? -1 : 0;
      if (s[i] == '/' && depth == 0) {
        const APoly den = parse_poly(F, strip_parens(s.substr(i + 1)));
        if (den.is_zero()) bad("zero denominator", j);
        return KElem(parse_poly(F, strip_parens(s.substr(0, i))), den);
      }
    }
  }
  return KElem(apoly_from_json(F, j));
} catch (const json::exception& e) {
  throw ParseError(std::string("malformed JSON input: ") + e.what());
}

LaurentNumber laurent_from_json(const json& j) try {
  const Field* F = field_from_json(field_of(j, "const_field"));
  const auto& top = field_of(j, "top_degree");
  auto c = elems_from_json(F, field_of(j, "coeffs"));
  if (top.is_null()) return LaurentNumber::zero(F);
  if (c.empty()) return LaurentNumber::zero_to(F, top.get<long>());
  return LaurentNumber::from_coeffs(F, top.get<long>(), std::move(c));
} catch (const json::exception& e) {
  throw ParseError(std::string("malformed JSON input: ") + e.what());
}

OrePoly<KElem> ore_from_json(const Field* F, const json& j) try {
  const auto& shape = field_of(j, "shape");
  if (!shape.is_array() || shape.size() != 2) bad("shape must be [rows, cols]", j);
  const auto rows = shape[0].get<std::size_t>(), cols = shape[1].get<std::size_t>();
  if (rows == 0 || cols == 0) bad("empty shape", j);
  std::vector<Matrix<KElem>> terms;
  for (const auto& M : field_of(j, "terms")) {
    if (!M.is_array() || M.size() != rows) bad("term has the wrong number of rows", M);
    Matrix<KElem> A(rows, cols, KElem::zero(F));
    for (std::size_t r = 0; r < rows; ++r) {
      if (!M[r].is_array() || M[r].size() != cols) bad("term row has the wrong length", M[r]);
      for (std::size_t c = 0; c < cols; ++c) A(r, c) = kelem_from_json(F, M[r][c]);
    }
    terms.push_back(std::move(A));
  }
  if (terms.empty()) bad("E_t needs at least one term", j);
  return OrePoly<KElem>(std::move(terms));
} catch (const json::exception& e) {
  throw ParseError(std::string("malformed JSON input: ") + e.what());
}

ModuleSpec module_from_json(const json& j) try {
  const Field* F = field_from_json(j.contains("field") ? j.at("field") : j);
  std::vector<APoly> extra;
  if (j.contains("extra_bad"))
    for (const auto& p : j.at("extra_bad")) extra.push_back(apoly_from_json(F, p));
  if (j.contains("carlitz")) return {AndersonModule::from_drinfeld(carlitz(F)), extra};
  if (j.contains("drinfeld") || j.contains("coeffs")) {
    const json& c = j.contains("drinfeld") ? j.at("drinfeld") : j.at("coeffs");
    std::vector<KElem> a;
    for (const auto& x : c) a.push_back(kelem_from_json(F, x));
    if (j.contains("rank") && j.at("rank").get<std::size_t>() != a.size())
      bad("rank differs from the number of coefficients", j);
    return {AndersonModule::from_drinfeld(DrinfeldModule(F, std::move(a))), extra};
  }
  if (j.contains("power_twist")) {
    const auto& pt = j.at("power_twist");
    const PowerTwist tw =
        power_twist_module(apoly_from_json(F, field_of(pt, "f")), field_of(pt, "n").get<unsigned>());
    return {tw.module(), extra};
  }
  if (j.contains("Et")) return {AndersonModule(ore_from_json(F, j.at("Et"))), extra};
  bad("module needs one of 'carlitz', 'drinfeld', 'coeffs', 'power_twist', 'Et'", j);
} catch (const json::exception& e) {
  throw ParseError(std::string("malformed JSON input: ") + e.what());
}

TwistExample twist_request_from_json(const json& j) try {
  if (j.contains("example")) {
    const std::string name = j.at("example").get<std::string>();
    if (name == "s3") return s3_example();
    if (name == "cyclotomic") return cyclotomic_example();
    bad("unknown example '" + name + "'", j);
  }
  const Field* F = field_from_json(field_of(j, "field"));
  std::vector<KElem> a{KElem::one(F)};
  if (j.contains("phi")) {
    const json& pj = j.at("phi").is_object() ? field_of(j.at("phi"), "coeffs") : j.at("phi");
    a.clear();
    for (const auto& x : pj) a.push_back(kelem_from_json(F, x));
  }
  DrinfeldModule phi(F, std::move(a));

  Tower T(F);
  if (j.contains("tower"))
    for (const auto& level : j.at("tower")) T = T.extend(tower_elems_from_json(T, level));

  const json& act = field_of(j, "action");
  std::vector<std::vector<TowerElem>> images;
  for (const auto& g : field_of(act, "images")) images.push_back(tower_elems_from_json(T, g));
  std::vector<std::string> names;
  if (act.contains("names"))
    names = act.at("names").get<std::vector<std::string>>();
  else
    for (std::size_t g = 0; g < images.size(); ++g) names.push_back("g" + std::to_string(g));
  const auto relations = field_of(act, "relations").get<std::vector<std::vector<int>>>();
  GaloisActionTable action(T, names, images, relations);

  const json& rj = field_of(j, "rho");
  const Field* G = F;
  if (rj.contains("const_modulus"))
    G = ExtConstField(F, elems_from_json(F, rj.at("const_modulus"))).field();
  else if (rj.value("const_degree", 1u) > 1)
    G = ExtConstField(F, rj.at("const_degree").get<unsigned>()).field();
  std::vector<Matrix<FieldElem>> mats;
  for (const auto& m : field_of(rj, "matrices")) mats.push_back(const_matrix_from_json(G, m));
  RepresentationTable rho(std::move(mats), relations);

  SolutionMatrix u;
  if (j.contains("seed") || j.contains("y")) {
    u = average_solution(rho, action, tower_elems_from_json(T, j.contains("y") ? j.at("y") : j.at("seed")));
  } else if (j.contains("u")) {
    u = column_solution(tower_elems_from_json(T, j.at("u")));
    u.alpha = {FieldElem{G, 1}};
  } else {
    const json& sj = field_of(j, "solution");
    std::vector<std::vector<TowerElem>> cols;
    for (const auto& c : field_of(sj, "columns")) cols.push_back(tower_elems_from_json(T, c));
    if (cols.empty() || cols[0].empty()) bad("solution needs at least one column", sj);
    Matrix<TowerElem> m(cols[0].size(), cols.size(), T.zero());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != cols[0].size()) bad("ragged solution columns", sj);
      for (std::size_t r = 0; r < cols[c].size(); ++r) m(r, c) = cols[c][r];
    }
    std::vector<FieldElem> alpha{FieldElem{G, 1}};
    if (sj.contains("alpha")) {
      alpha.clear();
      for (const auto& x : sj.at("alpha")) alpha.push_back(elem_from_json(G, x));
    }
    u = SolutionMatrix{std::move(m), std::move(alpha)};
  }
  return TwistExample{j.value("name", std::string("custom")), std::move(phi), std::move(action),
                      std::move(rho), std::move(u)};
} catch (const json::exception& e) {
  throw ParseError(std::string("malformed JSON input: ") + e.what());
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
}

}  // namespace dtw::io
