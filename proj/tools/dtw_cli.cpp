// Command-line front end: prime enumeration, twist construction, L-values,
// log values and reproduction of the worked examples.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dtw/errors.hpp"
#include "dtw/lseries.hpp"
#include "dtw/serialize.hpp"
#include "dtw/special_values.hpp"
#include "dtw/twist.hpp"

namespace {

using dtw::io::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;
constexpr int kExitConvergence = 3;

struct Options {
  std::uint64_t q = 0;
  std::uint32_t p = 0;
  unsigned ext = 1;
  long s = 0;
  int deg_max = -1;
  int k_max = -1;
  std::size_t prec = 0;
  std::string in;
  std::string out;
  unsigned parallel = 1;
  unsigned n = 0;
  std::string f;
  std::string example;
  bool local_factors = false;
};

// The field selected by --q, or by --p and --ext, or the fallback q.
const dtw::Field* select_field(const Options& o, std::uint64_t fallback_q) {
  if (o.q != 0) return dtw::io::field_from_q(o.q);
  if (o.p != 0) return dtw::Field::ground(o.p, o.ext);
  return dtw::io::field_from_q(fallback_q);
}

void emit(const Options& o, const json& j) {
  const std::string text = dtw::io::dump(j);
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw dtw::ParseError("cannot write '" + o.out + "'");
  file << text;
}

int cmd_primes(const Options& o) {
  const dtw::Field* F = select_field(o, 2);
  const int D = o.deg_max < 0 ? 4 : o.deg_max;
  json primes = json::array(), counts = json::array();
  for (int m = 1; m <= D; ++m) {
    const auto part = dtw::monic_irreducibles_of_degree(F, m);
    for (const auto& wp : part)
      primes.push_back({{"degree", m},
                        {"coeffs", dtw::io::to_json(wp.generator)},
                        {"text", wp.generator.to_string()}});
    counts.push_back({{"degree", m},
                      {"count", part.size()},
                      {"necklace", dtw::necklace_count(F->size(), m)}});
  }
  emit(o, {{"field", dtw::io::to_json(F)}, {"deg_max", D}, {"primes", primes}, {"counts", counts}});
  return kExitOk;
}

int cmd_twist(const Options& o) {
  json request;
  if (!o.example.empty())
    request = {{"example", o.example}};
  else if (!o.in.empty())
    request = dtw::io::read_file(o.in);
  else
    throw dtw::InvalidArgument("twist needs --in or --example");
  const dtw::TwistExample ex = dtw::io::twist_request_from_json(request);
  const dtw::TwistResult r = dtw::build_twist(ex);
  emit(o, dtw::io::to_json(ex, r));
  if (!r.ok()) {
    if (!r.solution_check.ok)
      for (const auto& [g, ell] : r.solution_check.failures)
        std::cerr << "solution check failed for generator " << ex.action.names().at(g)
                  << " at twist " << ell << "\n";
    if (r.solution_check.ok && !r.fundamental) std::cerr << "solution is not fundamental\n";
    if (r.fvec && !r.fvec->sign_law) std::cerr << "sign law failed\n";
    if (r.fvec && !r.isomorphism) std::cerr << "separable isomorphism check failed\n";
    return kExitFail;
  }
  return kExitOk;
}

int cmd_lvalue(const Options& o) {
  dtw::io::ModuleSpec spec = o.in.empty()
                                 ? dtw::io::ModuleSpec{dtw::AndersonModule::from_drinfeld(
                                                           dtw::carlitz(select_field(o, 2))),
                                                       {}}
                                 : dtw::io::module_from_json(dtw::io::read_file(o.in));
  const int D = o.deg_max < 0 ? 6 : o.deg_max;
  const std::size_t prec = o.prec == 0 ? dtw::kDefaultPrecision : o.prec;
  const dtw::LValue L =
      dtw::goss_L(spec.module, o.s, D, prec, o.parallel, spec.extra_bad, o.local_factors);
  json j{{"value", dtw::io::to_json(L.value)},
         {"s", o.s},
         {"deg_max", D},
         {"prec", prec},
         {"primes_used", L.primes_used},
         {"excluded_primes", dtw::io::to_json(L.excluded)}};
  if (o.local_factors) {
    json lf = json::array();
    for (const auto& [p, v] : L.local_factors)
      lf.push_back({{"prime", dtw::io::to_json(p)}, {"text", p.to_string()}, {"value", dtw::io::to_json(v)}});
    j["local_factors"] = lf;
  }
  emit(o, j);
  return kExitOk;
}

dtw::PowerTwist power_twist_from(const Options& o) {
  const dtw::Field* F = select_field(o, 3);
  const unsigned n = o.n == 0 ? 2 : o.n;
  const dtw::APoly f = dtw::parse_poly(F, o.f.empty() ? "θ" : o.f);
  return dtw::power_twist_module(f, n);
}

int cmd_logvalue(const Options& o) {
  const dtw::PowerTwist tw = power_twist_from(o);
  const unsigned k_max = o.k_max < 0 ? 4 : static_cast<unsigned>(o.k_max);
  const std::size_t prec = o.prec == 0 ? dtw::kDefaultPrecision : o.prec;
  const dtw::RadiusExponent rad = dtw::convergence_radius(tw);
  const dtw::LaurentNumber v = dtw::log_at_one(tw, k_max, prec);
  const dtw::SignDecomposition sd = dtw::sign_decompose(v);
  emit(o, {{"field", dtw::io::to_json(tw.field())},
           {"f", dtw::io::to_json(tw.f)},
           {"n", tw.n},
           {"k_max", k_max},
           {"prec", prec},
           {"radius_exponent", rad.to_string()},
           {"value", dtw::io::to_json(v)},
           {"sign", sd.sign.v},
           {"degree", sd.degree}});
  return kExitOk;
}

// Constants of the worked examples, little-endian coefficients over F_q.
struct PaperConstants {
  std::uint32_t q;
  std::vector<dtw::Field::Elem> f0, f1;
};
const PaperConstants kCyclotomic{2, {1, 0, 1}, {0, 1, 1}};
const PaperConstants kS3{5, {1, 0, 0, 4, 0, 0, 4}, {0, 2, 0, 0, 1, 0, 0, 0, 0, 0, 1}};

// The τ-coefficient of the published integral model, written in f_0, f_1.
dtw::Matrix<dtw::KElem> expected_model(const std::string& example, const dtw::APoly& f0,
                                       const dtw::APoly& f1) {
  using dtw::KElem;
  const dtw::Field* F = f0.field();
  const KElem one = KElem::one(F), zero = KElem::zero(F);
  if (example == "cyclotomic") return dtw::Matrix<KElem>::from_rows({{f1, one}, {f0, zero}});
  const dtw::APoly c3 = f0 * f0 * f0;
  return dtw::Matrix<KElem>::from_rows({{-(f1 * c3), c3}, {c3 * f0, zero}});
}

int verify_constants(const Options& o, const std::string& example) {
  const PaperConstants& pc = example == "s3" ? kS3 : kCyclotomic;
  const dtw::TwistExample ex = example == "s3" ? dtw::s3_example() : dtw::cyclotomic_example();
  const dtw::TwistResult r = dtw::build_twist(ex);
  const dtw::Field* F = ex.phi.field();
  const dtw::APoly f0(F, pc.f0), f1(F, pc.f1);
  bool f_match = false, model_match = false;
  if (r.fvec) f_match = r.fvec->f == std::vector<dtw::KElem>{f0, f1};
  if (r.integral) {
    const auto& terms = r.integral->E.Et().terms();
    const dtw::KElem theta(dtw::APoly::variable(F));
    model_match = terms.size() == 2 && terms[0] == dtw::Matrix<dtw::KElem>::diagonal(2, theta) &&
                  terms[1] == expected_model(example, f0, f1);
  }
  const bool pass = F->size() == pc.q && f_match && model_match && r.ok();
  emit(o, {{"example", example},
           {"expected", {{"f_vector", {dtw::io::to_json(f0), dtw::io::to_json(f1)}},
                         {"f_vector_text", {f0.to_string(), f1.to_string()}}}},
           {"computed", dtw::io::to_json(ex, r)},
           {"f_vector_match", f_match},
           {"model_match", model_match},
           {"pass", pass}});
  return pass ? kExitOk : kExitFail;
}

int cmd_verify(const Options& o, const std::string& example) {
  if (example == "s3" || example == "cyclotomic") return verify_constants(o, example);
  if (example != "power-residue") throw dtw::InvalidArgument("unknown example '" + example + "'");
  const dtw::PowerTwist tw = power_twist_from(o);
  const int D = o.deg_max < 0 ? 8 : o.deg_max;
  const unsigned k_max = o.k_max < 0 ? 4 : static_cast<unsigned>(o.k_max);
  const std::size_t prec = o.prec == 0 ? 32 : o.prec;
  const dtw::SpecialValueReport r = dtw::taelman_check(tw.f, tw.n, D, k_max, prec, o.parallel);
  json j = dtw::io::to_json(r);
  j["example"] = example;
  j["f"] = dtw::io::to_json(tw.f);
  j["n"] = tw.n;
  j["field"] = dtw::io::to_json(tw.field());
  emit(o, j);
  return r.pass ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Drinfeld module twists and Goss L-values over F_q[θ]"};
  app.require_subcommand(1);
  Options o;
  std::string example;

  auto add_field = [&o](CLI::App* c) {
    c->add_option("--q", o.q, "Constant field size (a prime power)");
    c->add_option("--p", o.p, "Characteristic");
    c->add_option("--ext", o.ext, "Degree of F_q over F_p (with --p)");
  };
  auto add_out = [&o](CLI::App* c) { c->add_option("--out", o.out, "Write JSON here instead of stdout"); };

  CLI::App* primes = app.add_subcommand("primes", "List monic irreducibles up to a degree");
  add_field(primes);
  primes->add_option("--deg-max", o.deg_max, "Largest degree (default 4)");
  add_out(primes);

  CLI::App* twist = app.add_subcommand("twist", "Build the twist model from a request file");
  twist->add_option("--in", o.in, "Twist request JSON");
  twist->add_option("--example", o.example, "Built-in example: s3 or cyclotomic");
  add_out(twist);

  CLI::App* lvalue = app.add_subcommand("lvalue", "Truncated Goss L-value of a module");
  add_field(lvalue);
  lvalue->add_option("--in", o.in, "Module JSON (default: the Carlitz module)");
  lvalue->add_option("--s", o.s, "Integer argument s (default 0)");
  lvalue->add_option("--deg-max", o.deg_max, "Largest prime degree (default 6)");
  lvalue->add_option("--prec", o.prec, "Laurent precision (default 64)");
  lvalue->add_option("--parallel", o.parallel, "Worker threads for local factors");
  lvalue->add_flag("--local-factors", o.local_factors, "Include every local factor");
  add_out(lvalue);

  CLI::App* logvalue = app.add_subcommand("logvalue", "log_E(1) for the power twist by f");
  add_field(logvalue);
  logvalue->add_option("--f", o.f, "f in the polynomial grammar (default θ)");
  logvalue->add_option("--n", o.n, "Order n dividing q-1 (default 2)");
  logvalue->add_option("--k-max", o.k_max, "Last series index (default 4)");
  logvalue->add_option("--prec", o.prec, "Laurent precision (default 64)");
  add_out(logvalue);

  CLI::App* verify = app.add_subcommand("verify", "Rebuild a worked example and check it");
  verify->add_option("example", example, "s3, cyclotomic or power-residue")->required();
  add_field(verify);
  verify->add_option("--f", o.f, "f for power-residue (default θ)");
  verify->add_option("--n", o.n, "n for power-residue (default 2)");
  verify->add_option("--deg-max", o.deg_max, "Largest prime degree (default 8)");
  verify->add_option("--k-max", o.k_max, "Last log index (default 4)");
  verify->add_option("--prec", o.prec, "Laurent precision (default 32)");
  verify->add_option("--parallel", o.parallel, "Worker threads for local factors");
  add_out(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*primes) return cmd_primes(o);
    if (*twist) return cmd_twist(o);
    if (*lvalue) return cmd_lvalue(o);
    if (*logvalue) return cmd_logvalue(o);
    if (*verify) return cmd_verify(o, example);
  } catch (const dtw::ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const dtw::RadiusError& e) {
    std::cerr << "radius error: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const dtw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
