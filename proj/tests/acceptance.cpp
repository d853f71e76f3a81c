// Acceptance checks, one PASS/FAIL line per criterion.
//
// Usage: acceptance [path/to/dtw_cli]
// The command-line tool is needed for the byte-identical rerun check.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dtw/base_algebra.hpp"
#include "dtw/drinfeld.hpp"
#include "dtw/errors.hpp"
#include "dtw/lseries.hpp"
#include "dtw/special_values.hpp"
#include "dtw/twist.hpp"

using namespace dtw;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::uint64_t g_descent_failures = 0;

APoly poly(const Field* F, const std::string& s) { return parse_poly(F, s); }

bool run(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs > limit_s) {
    o.pass = false;
    o.detail += " (over the " + std::to_string(limit_s) + " s limit)";
  }
  std::printf("%s %2d %s: %s [%.3f s]\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str(), secs);
  std::fflush(stdout);
  return o.pass;
}

CharpolyRecord charpoly(const AndersonModule& E, const PrimeIdeal& wp) {
  try {
    return frobenius_charpoly(reduce_module(E, wp));
  } catch (const DescentError&) {
    ++g_descent_failures;
    throw;
  }
}

AndersonModule integral_model(const TwistExample& ex) {
  TwistResult r = build_twist(ex);
  if (!r.integral) throw Error("twist pipeline did not produce an integral model for " + ex.name);
  return r.integral->E;
}

Outcome check_constants(const TwistExample& ex, const APoly& f0, const APoly& f1,
                        const Matrix<KElem>& expected_tau) {
  TwistResult r = build_twist(ex);
  const Field* F = ex.phi.field();
  bool f_ok = r.fvec && r.fvec->f == std::vector<KElem>{KElem(f0), KElem(f1)};
  bool m_ok = false;
  if (r.integral) {
    const auto& t = r.integral->E.Et().terms();
    m_ok = t.size() == 2 && t[0] == Matrix<KElem>::diagonal(2, KElem(APoly::variable(F))) && t[1] == expected_tau;
  }
  std::ostringstream os;
  os << "f = (" << f0 << ", " << f1 << ") " << (f_ok ? "matches" : "differs") << ", integral model "
     << (m_ok ? "matches" : "differs");
  return {f_ok && m_ok && r.ok(), os.str()};
}

Outcome criterion1() {
  const Field* F = Field::prime(2);
  const APoly f0 = poly(F, "θ^2+1"), f1 = poly(F, "θ^2+θ");
  auto M = Matrix<KElem>::from_rows({{KElem(f1), KElem::one(F)}, {KElem(f0), KElem::zero(F)}});
  return check_constants(cyclotomic_example(), f0, f1, M);
}

Outcome criterion2() {
  const Field* F = Field::prime(5);
  const APoly f0 = poly(F, "4θ^6+4θ^3+1"), f1 = poly(F, "θ^10+θ^4+2θ");
  const APoly c3 = f0 * f0 * f0;
  auto M = Matrix<KElem>::from_rows({{KElem(-(f1 * c3)), KElem(c3)}, {KElem(c3 * f0), KElem::zero(F)}});
  return check_constants(s3_example(), f0, f1, M);
}

Outcome criterion3() {
  int ok = 0, total = 0;
  for (const auto& ex : {cyclotomic_example(), s3_example()}) {
    ++total;
    FVector fv = f_vector(ex.u.flatten());
    if (fv.sign_law) ++ok;
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const Field* F = Field::prime(i % 2 == 0 ? 3 : 5);
    std::vector<Field::Elem> num(3), den(2);
    for (auto& c : num) c = static_cast<Field::Elem>(rng() % F->size());
    for (auto& c : den) c = static_cast<Field::Elem>(rng() % F->size());
    den.push_back(1);
    num[2] = 1 + static_cast<Field::Elem>(rng() % (F->size() - 1));
    KElem u(APoly(F, num), APoly(F, den));
    ++total;
    TwistResult r = build_twist(trivial_example(carlitz(F), u));
    if (r.fvec && r.fvec->sign_law) ++ok;
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " cases satisfy the sign law"};
}

Outcome criterion4() {
  int ok = 0;
  for (const auto& ex : {cyclotomic_example(), s3_example()}) {
    TwistResult r = build_twist(ex);
    auto u = ex.u.flatten();
    if (r.model && r.integral &&
        verify_sep_isomorphism(*r.model, ex.phi, u, KElem::one(ex.phi.field())) &&
        verify_sep_isomorphism(r.integral->E, ex.phi, u, r.integral->conjugator))
      ++ok;
  }
  return {ok == 2, std::to_string(ok) + "/2 towers: P E_t = φ_t^⊕N P for the K-model and the integral model"};
}

Outcome criterion5() {
  int ok = 0, total = 0;
  for (std::uint32_t q : {2u, 3u}) {
    const Field* F = Field::prime(q);
    AndersonModule C = AndersonModule::from_drinfeld(carlitz(F));
    for (const auto& wp : enumerate_monic_irreducibles(F, 4)) {
      ++total;
      CharpolyRecord cp = charpoly(C, wp);
      if (cp.degree() == 1 && cp.at_theta(1).is_one() && cp.at_theta(0) == -wp.generator) ++ok;
    }
  }
  return {ok == total && total >= 30, std::to_string(ok) + "/" + std::to_string(total) + " primes give P(X) = X - ℘(t)"};
}

Outcome criterion6() {
  struct Named {
    std::string name;
    AndersonModule E;
  };
  std::vector<Named> mods{{"carlitz q=2", AndersonModule::from_drinfeld(carlitz(Field::prime(2)))},
                          {"carlitz q=3", AndersonModule::from_drinfeld(carlitz(Field::prime(3)))},
                          {"power twist", power_twist_module(poly(Field::prime(3), "θ"), 2).module()},
                          {"s3", integral_model(s3_example())},
                          {"cyclotomic", integral_model(cyclotomic_example())}};
  int ok = 0, total = 0;
  std::string bad;
  for (const auto& m : mods) {
    BadPrimeSet S = detect_bad_primes(m.E);
    for (const auto& wp : enumerate_monic_irreducibles(m.E.field(), 3)) {
      if (S.contains(wp.generator)) continue;
      ++total;
      ReducedModule red = reduce_module(m.E, wp);
      CharpolyRecord cp = charpoly(m.E, wp);
      if (oracle_agrees(cp, module_structure_oracle(red)))
        ++ok;
      else
        bad += " " + m.name + "@" + wp.generator.to_string();
    }
  }
  return {ok == total && total > 0, std::to_string(ok) + "/" + std::to_string(total) + " good primes agree" + bad};
}

Outcome criterion7() {
  SpecialValueReport r = taelman_check(poly(Field::prime(3), "θ"), 2, 8, 4, 32);
  std::ostringstream os;
  os << "discrepancies euler/dirichlet " << r.disc_euler_dirichlet << ", euler/log " << r.disc_euler_log
     << ", dirichlet/log " << r.disc_dirichlet_log << " (need >= 8)";
  bool pass = r.disc_euler_dirichlet >= 8 && r.disc_euler_log >= 8 && r.disc_dirichlet_log >= 8;
  return {pass, os.str()};
}

Outcome criterion8() {
  const Field* F2 = Field::prime(2);
  const Field* F4 = Field::extension(F2, 2u);
  const APoly f = poly(F2, "θ^2+1");
  const int D = 10;
  const std::size_t prec = 40;
  AndersonModule E = integral_model(cyclotomic_example());
  Character chi = Character::with_root(f, FieldElem{F4, 1});
  LValue L = goss_L(E, 0, D, prec, 4, chi.conductor_primes());
  LaurentNumber Lchi = character_L(chi, 1, D, LMethod::Euler, prec);
  const long disc = discrepancy(L.value, norm_down(Lchi));
  std::string excluded;
  for (const auto& b : L.excluded.primes) excluded += " " + b.prime.to_string() + " (" + b.reason + ")";
  return {disc >= D, "valuation of the difference " + (disc > 1000000 ? std::string("exact") : std::to_string(disc)) +
                         " (need >= 10), excluded:" + excluded};
}

Outcome criterion9() {
  std::vector<AndersonModule> mods{AndersonModule::from_drinfeld(carlitz(Field::prime(2))),
                                   AndersonModule::from_drinfeld(carlitz(Field::prime(3))),
                                   power_twist_module(poly(Field::prime(3), "θ"), 2).module(),
                                   power_twist_module(poly(Field::prime(5), "θ+1"), 4).module(),
                                   integral_model(s3_example()),
                                   integral_model(cyclotomic_example())};
  std::uint64_t computed = 0;
  for (const auto& E : mods) {
    BadPrimeSet S = detect_bad_primes(E);
    const int D = E.field()->size() == 5 ? 3 : 4;
    for (const auto& wp : enumerate_monic_irreducibles(E.field(), D)) {
      if (S.contains(wp.generator)) continue;
      try {
        charpoly(E, wp);
        ++computed;
      } catch (const DescentError&) {
      }
    }
  }
  const std::uint64_t passed = descent_checks_passed();
  return {g_descent_failures == 0 && computed > 0,
          std::to_string(passed) + " characteristic polynomials descended to F_q[t] in this run, " +
              std::to_string(g_descent_failures) + " failures"};
}

bool ore_exhaustive() {
  const Field* F4 = Field::extension(Field::prime(2), 2u);
  std::vector<OrePoly<FieldElem>> all;
  for (Field::Elem a = 0; a < 4; ++a)
    for (Field::Elem b = 0; b < 4; ++b)
      all.push_back(a == 0 && b == 0 ? OrePoly<FieldElem>(1, 1, FieldElem{F4, 0})
                                     : OrePoly<FieldElem>::scalar({FieldElem{F4, a}, FieldElem{F4, b}}));
  for (const auto& f : all)
    for (const auto& g : all) {
      for (Field::Elem x = 0; x < 4; ++x) {
        std::vector<FieldElem> v{FieldElem{F4, x}};
        if (!((f * g).apply(v) == f.apply(g.apply(v)))) return false;
      }
      for (const auto& h : all)
        if ((f * g) * h != f * (g * h)) return false;
    }
  return true;
}

bool independent(const std::vector<FieldElem>& u, std::uint32_t q) {
  const std::size_t N = u.size();
  std::vector<std::uint32_t> c(N, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < N && ++c[i] == q) c[i++] = 0;
    if (i == N) return true;
    FieldElem s{u[0].F, 0};
    for (std::size_t k = 0; k < N; ++k) s += FieldElem{u[0].F, c[k]} * u[k];
    if (s.is_zero()) return false;
  }
}

bool moore_independence() {
  std::mt19937_64 rng(11);
  for (std::uint32_t q : {2u, 3u})
    for (unsigned N = 1; N <= 4; ++N) {
      const Field* G = Field::extension(Field::prime(q), N);
      const std::uint64_t size = G->size();
      std::uint64_t total = 1;
      for (unsigned i = 0; i < N; ++i) total *= size;
      const bool all = total <= 70000;
      for (std::uint64_t idx = 0; idx < (all ? total : 4000); ++idx) {
        std::uint64_t code = all ? idx : rng() % total;
        std::vector<FieldElem> u;
        for (unsigned i = 0; i < N; ++i, code /= size) u.push_back(FieldElem{G, static_cast<Field::Elem>(code % size)});
        if (is_fundamental(u) != independent(u, q)) return false;
      }
    }
  return true;
}

bool exp_log_inverse() {
  for (std::uint32_t q : {2u, 3u}) {
    const Field* F = Field::prime(q);
    const KElem theta(APoly::variable(F));
    for (const auto& phi : {carlitz(F), DrinfeldModule(F, {theta, KElem::one(F)})}) {
      auto e = exp_coefficients(phi, 6), l = log_coefficients(phi, 6);
      auto a = compose_series(e, l, 6), b = compose_series(l, e, 6);
      if (!a[0].is_one() || !b[0].is_one()) return false;
      for (unsigned k = 1; k <= 6; ++k)
        if (!a[k].is_zero() || !b[k].is_zero()) return false;
    }
  }
  return true;
}

bool euler_dirichlet() {
  const Field* F3 = Field::prime(3);
  const Field* F2 = Field::prime(2);
  struct Case {
    Character chi;
    int D;
  };
  for (const auto& c : {Case{Character::power_residue(poly(F3, "θ"), 2), 6},
                        Case{Character::cyclotomic(poly(F2, "θ^2+θ+1")), 8}}) {
    LaurentNumber e = character_L(c.chi, 1, c.D, LMethod::Euler, 48);
    LaurentNumber d = character_L(c.chi, 1, c.D, LMethod::Dirichlet, 48);
    if (discrepancy(e, d) < c.D) return false;
  }
  return true;
}

std::string capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  status = pclose(p);
  return out;
}

bool cli_reruns(const std::string& cli, std::string& note) {
  if (cli.empty()) {
    note = "no command-line tool given";
    return false;
  }
  struct Config {
    std::string args;
    bool threaded;
  };
  const std::vector<Config> configs{{"lvalue --q 3 --deg-max 6 --s 1", true},
                                    {"verify power-residue --q 3 --n 2 --f θ --deg-max 6", true},
                                    {"twist --example s3", false},
                                    {"primes --q 2 --deg-max 5", false}};
  for (const auto& c : configs) {
    const std::string base = "'" + cli + "' " + c.args;
    const std::string first = c.threaded ? " --parallel 1" : "";
    const std::string second = c.threaded ? " --parallel 4" : "";
    int s1 = 0, s2 = 0, s3 = 0;
    const std::string a = capture(base + first + " 2>/dev/null", s1);
    const std::string b = capture(base + second + " 2>/dev/null", s2);
    const std::string d = capture(base + first + " 2>/dev/null", s3);
    if (a.empty() || a != b || a != d || s1 != 0 || s2 != 0 || s3 != 0) {
      note = "output differs or fails for '" + c.args + "'";
      return false;
    }
  }
  note = std::to_string(configs.size()) + " configurations byte-identical";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  int failed = 0;
  auto check = [&](int id, const std::string& title, double limit, const std::function<Outcome()>& f) {
    if (!run(id, title, limit, f)) ++failed;
  };
  check(1, "cyclotomic constants", 1.0, criterion1);
  check(2, "S3 constants", 5.0, criterion2);
  check(3, "sign law", 0, criterion3);
  check(4, "separable isomorphism", 0, criterion4);
  check(5, "Carlitz characteristic polynomial law", 0, criterion5);
  check(6, "oracle equivalence", 30.0, criterion6);
  check(7, "three-way special value", 10.0, criterion7);
  check(8, "norm factorization", 0, criterion8);
  check(9, "descent invariant", 0, criterion9);
  check(10, "property suites", 0, [&]() -> Outcome {
    std::string note;
    const bool ore = ore_exhaustive(), moore = moore_independence(), el = exp_log_inverse(),
               ed = euler_dirichlet(), reruns = cli_reruns(cli, note);
    std::ostringstream os;
    os << "ore " << (ore ? "ok" : "FAIL") << ", moore " << (moore ? "ok" : "FAIL") << ", exp/log "
       << (el ? "ok" : "FAIL") << ", euler/dirichlet " << (ed ? "ok" : "FAIL") << ", cli " << note;
    return {ore && moore && el && ed && reruns, os.str()};
  });
  return failed == 0 ? 0 : 1;
}
