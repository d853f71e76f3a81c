#include "doctest.h"
#include "test_util.hpp"

#include "dtw/base_algebra.hpp"
#include "dtw/errors.hpp"
#include "dtw/factor.hpp"

using namespace dtw;
using dtw::test::P;

TEST_CASE("monic irreducibles of degree at most 2 over F_2") {
  const Field* F = Field::prime(2);
  auto ps = enumerate_monic_irreducibles(F, 2);
  REQUIRE(ps.size() == 3);
  CHECK(ps[0].generator == P(F, "θ"));
  CHECK(ps[1].generator == P(F, "θ+1"));
  CHECK(ps[2].generator == P(F, "θ^2+θ+1"));
}

TEST_CASE("every monic linear polynomial over F_3 is irreducible") {
  const Field* F = Field::prime(3);
  auto ps = enumerate_monic_irreducibles(F, 1);
  REQUIRE(ps.size() == 3);
  CHECK(ps[0].generator == P(F, "θ"));
  CHECK(ps[1].generator == P(F, "θ+1"));
  CHECK(ps[2].generator == P(F, "θ+2"));
}

TEST_CASE("degree at most 3 over F_2 gives two cubics") {
  const Field* F = Field::prime(2);
  auto ps = enumerate_monic_irreducibles(F, 3);
  REQUIRE(ps.size() == 5);
  CHECK(ps[3].generator == P(F, "θ^3+θ+1"));
  CHECK(ps[4].generator == P(F, "θ^3+θ^2+1"));
}

TEST_CASE("irreducible counts follow the necklace formula") {
  for (std::uint32_t q : {2u, 3u}) {
    const Field* F = Field::prime(q);
    for (int m = 1; m <= 6; ++m)
      CHECK(monic_irreducibles_of_degree(F, m).size() == necklace_count(q, m));
  }
  const Field* F4 = Field::ground(2, 2);
  for (int m = 1; m <= 3; ++m) CHECK(monic_irreducibles_of_degree(F4, m).size() == necklace_count(4, m));
}

TEST_CASE("irreducibles agree with trial division") {
  const Field* F = Field::prime(3);
  for (int m = 1; m <= 4; ++m) {
    for (const auto& f : monic_polynomials_of_degree(F, m)) {
      bool has_divisor = false;
      for (int k = 1; 2 * k <= m && !has_divisor; ++k)
        for (const auto& g : monic_polynomials_of_degree(F, k))
          if ((f % g).is_zero()) {
            has_divisor = true;
            break;
          }
      CHECK(is_irreducible(f) == !has_divisor);
    }
  }
}

TEST_CASE("power residue symbol values") {
  const Field* F3 = Field::prime(3);
  CHECK(power_residue_symbol(P(F3, "θ"), PrimeIdeal(P(F3, "θ+1")), 2).v == 2);
  for (const auto& wp : enumerate_monic_irreducibles(F3, 3)) {
    if (wp.generator == P(F3, "θ")) continue;
    CHECK(power_residue_symbol(P(F3, "θ^2"), wp, 2).v == 1);
  }
  const Field* F5 = Field::prime(5);
  CHECK(power_residue_symbol(P(F5, "θ"), PrimeIdeal(P(F5, "θ+1")), 4).v == 4);
}

TEST_CASE("power residue symbol errors") {
  const Field* F3 = Field::prime(3);
  CHECK_THROWS_AS(power_residue_symbol(P(F3, "θ^2+θ"), PrimeIdeal(P(F3, "θ")), 2), DividesError);
  CHECK_THROWS_AS(power_residue_symbol(P(F3, "θ"), PrimeIdeal(P(F3, "θ+1")), 3), BadOrderError);
}

TEST_CASE("power residue symbol is multiplicative in f") {
  for (std::uint32_t q : {3u, 5u, 7u}) {
    const Field* F = Field::prime(q);
    for (unsigned n = 1; n < q; ++n) {
      if ((q - 1) % n != 0) continue;
      for (const auto& wp : enumerate_monic_irreducibles(F, 2)) {
        for (int trial = 0; trial < 4; ++trial) {
          APoly f = test::random_nonzero_poly(F, 4), g = test::random_nonzero_poly(F, 4);
          if ((f % wp.generator).is_zero() || (g % wp.generator).is_zero()) continue;
          CHECK(power_residue_symbol(f * g, wp, n) ==
                power_residue_symbol(f, wp, n) * power_residue_symbol(g, wp, n));
        }
      }
    }
  }
}

TEST_CASE("residue norms") {
  const Field* F2 = Field::prime(2);
  ResidueField R2(PrimeIdeal(P(F2, "θ^2+θ+1")));
  CHECK(residue_norm(R2.theta()).v == 1);
  CHECK(residue_norm(FieldElem{R2.field(), 1}).v == 1);
  const Field* F3 = Field::prime(3);
  ResidueField R3(PrimeIdeal(P(F3, "θ^2+1")));
  CHECK(residue_norm(R3.theta()).v == 1);
}

TEST_CASE("residue norm is multiplicative and onto F_q^*") {
  for (std::uint32_t q : {2u, 3u}) {
    const Field* F = Field::prime(q);
    for (const auto& wp : enumerate_monic_irreducibles(F, 3)) {
      ResidueField R(wp);
      const Field* G = R.field();
      std::vector<bool> hit(q, false);
      for (Field::Elem a = 1; a < G->size(); ++a) {
        FieldElem x{G, a};
        FieldElem n = residue_norm(x);
        CHECK(!n.is_zero());
        hit[n.v] = true;
        FieldElem y{G, static_cast<Field::Elem>(1 + (a * 7) % (G->size() - 1))};
        CHECK(residue_norm(x * y) == residue_norm(x) * residue_norm(y));
      }
      for (Field::Elem c = 1; c < q; ++c) CHECK(hit[c]);
    }
  }
}

TEST_CASE("Frobenius twist of constants") {
  const Field* F2 = Field::prime(2);
  ExtConstField E(F2, 2);
  const FieldElem w = E.generator();
  CHECK(frobenius_twist_const(w, 1) == w * w);
  CHECK(frobenius_twist_const(w, 1) == w + FieldElem{E.field(), 1});
  CHECK(frobenius_twist_const(w, 2) == w);
  CHECK(frobenius_twist_const(FieldElem{E.field(), 1}, 1).v == 1);
  ExtConstField E3(Field::prime(3), 3);
  for (Field::Elem a = 0; a < E3.field()->size(); ++a) {
    FieldElem x{E3.field(), a};
    CHECK(frobenius_twist_const(x, 3) == x);
    CHECK(frobenius_twist_const(x, 1) == x.pow(3));
  }
}

TEST_CASE("reduction mod a prime is a ring map") {
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const Field* F = Field::prime(q);
    for (int trial = 0; trial < 30; ++trial) {
      APoly a = test::random_poly(F, 6), b = test::random_poly(F, 6);
      APoly p = test::random_poly(F, 3);
      if (p.degree() < 1) continue;
      CHECK((a * b) % p == ((a % p) * (b % p)) % p);
    }
  }
}

TEST_CASE("residue field reduction and lift") {
  const Field* F = Field::prime(3);
  ResidueField R(PrimeIdeal(P(F, "θ^2+1")));
  CHECK(R.reduce(P(F, "θ^2")) == R.reduce(P(F, "2")));
  CHECK(R.lift(R.reduce(P(F, "θ^3+θ+2"))) == P(F, "2"));
  CHECK(R.reduce(KElem(P(F, "1"), P(F, "θ"))) * R.theta() == FieldElem{R.field(), 1});
  CHECK_THROWS_AS(R.reduce(KElem(P(F, "1"), P(F, "θ^2+1"))), DividesError);
}

TEST_CASE("prime ideals must be monic irreducible") {
  const Field* F = Field::prime(2);
  CHECK_THROWS_AS(PrimeIdeal(P(F, "θ^2+1")), ReducibleError);
  CHECK(PrimeIdeal(P(F, "θ^2+θ+1")).degree == 2);
}

TEST_CASE("extension fields") {
  const Field* F4 = Field::ground(2, 2);
  CHECK(F4->size() == 4);
  CHECK(F4->q() == 4);
  for (Field::Elem a = 1; a < 4; ++a) CHECK(F4->mul(a, F4->inv(a)) == 1);
  const Field* F9 = Field::ground(3, 2);
  for (Field::Elem a = 0; a < 9; ++a) {
    CHECK(F9->from_digits(F9->digits(a)) == a);
    CHECK(F9->frob(a, 1) == a);
  }
  const Field* E = Field::extension(Field::prime(3), 2u);
  CHECK(E->q() == 3);
  for (Field::Elem a = 0; a < 9; ++a) CHECK(E->frob(a, 1) == E->pow(a, 3));
  CHECK_THROWS_AS(Field::prime(4), InvalidArgument);
}

TEST_CASE("factorization reconstructs the input") {
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const Field* F = Field::prime(q);
    for (int trial = 0; trial < 20; ++trial) {
      APoly f = test::random_nonzero_poly(F, 8);
      APoly prod = APoly::constant(F, f.lead());
      for (const auto& fac : factor(f)) {
        CHECK(is_irreducible(fac.prime));
        CHECK(fac.prime.is_monic());
        prod = prod * pow(fac.prime, fac.multiplicity);
      }
      CHECK(prod == f);
    }
  }
  const Field* F2 = Field::prime(2);
  auto fs = factor(P(F2, "θ^2+1"));
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].prime == P(F2, "θ+1"));
  CHECK(fs[0].multiplicity == 2);
}

TEST_CASE("rational functions are reduced with monic denominators") {
  const Field* F = Field::prime(3);
  KElem x(P(F, "θ^2-1"), P(F, "2θ+2"));
  CHECK(x.denominator().is_monic());
  CHECK(x == KElem(P(F, "2θ+1")));
  for (int trial = 0; trial < 30; ++trial) {
    KElem a = test::random_kelem(F, 3);
    CHECK(gcd(a.numerator(), a.denominator()).degree() == 0);
    CHECK(a.denominator().is_monic());
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
  }
  CHECK_THROWS(KElem(P(F, "1"), APoly(F)));
}

TEST_CASE("polynomial grammar") {
  const Field* F = Field::prime(5);
  CHECK(P(F, "θ^10+θ^4+2θ") == APoly(F, {0, 2, 0, 0, 1, 0, 0, 0, 0, 0, 1}));
  CHECK(P(F, "4*x^6 + 4*x^3 + 1") == APoly(F, {1, 0, 0, 4, 0, 0, 4}));
  CHECK(P(F, "(θ+1)^2 - 1") == P(F, "θ^2+2θ"));
  CHECK(P(F, "-1") == P(F, "4"));
  CHECK_THROWS_AS(P(F, "θ^"), ParseError);
  CHECK_THROWS_AS(P(F, "(θ+1"), ParseError);
}
