#include "doctest.h"
#include "test_util.hpp"

#include "dtw/errors.hpp"
#include "dtw/tower.hpp"
#include "dtw/twist.hpp"

using namespace dtw;
using dtw::test::K;
using dtw::test::P;

namespace {

struct S3Tower {
  Tower T1, T;
  TowerElem z1, z2, z3;
};

/// Splitting field of x^3 + θx + 1 over F_5(θ).
S3Tower s3_tower() {
  const Field* F = Field::prime(5);
  Tower K0(F);
  std::vector<KElem> f{K(F, "1"), K(F, "θ"), K(F, "0"), K(F, "1")};
  Tower T1 = K0.extend(poly_from_base(K0, f));
  Tower T = T1.extend(divide_by_root(poly_from_base(T1, f), T1.generator(0)));
  TowerElem z1 = T.generator(0), z2 = T.generator(1);
  return {T1, T, z1, z2, -(z1 + z2)};
}

TowerElem random_tower_elem(const Tower& T) {
  std::vector<KElem> c;
  for (std::size_t i = 0; i < T.degree(); ++i) c.push_back(test::random_kelem(T.field(), 1));
  return T.from_coords(c);
}

/// F_q-linear independence by trying every nonzero coefficient vector.
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

}  // namespace

TEST_CASE("the S3 splitting field") {
  auto s = s3_tower();
  CHECK(s.T1.degree() == 3);
  CHECK(s.T.degree() == 6);
  CHECK(s.T.levels() == 2);
  for (const auto& z : {s.z1, s.z2, s.z3}) {
    TowerElem v = z * z * z + s.T.constant(K(Field::prime(5), "θ")) * z + s.T.one();
    CHECK(v.is_zero());
  }
  CHECK((s.z1 * s.z2 * s.z3) == -s.T.one());
}

TEST_CASE("inseparable levels are rejected") {
  const Field* F = Field::prime(2);
  Tower K0(F);
  CHECK_THROWS_AS(K0.extend(poly_from_base(K0, {K(F, "θ"), K(F, "0"), K(F, "1")})), InseparableError);
  CHECK_THROWS_AS(K0.extend(poly_from_base(K0, {K(F, "θ"), K(F, "θ")})), InvalidArgument);
}

TEST_CASE("field arithmetic in a tower") {
  auto s = s3_tower();
  for (int trial = 0; trial < 5; ++trial) {
    TowerElem a = random_tower_elem(s.T), b = random_tower_elem(s.T);
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    CHECK(a * b == b * a);
    CHECK(a.frobenius_twist(1) == a.pow(5));
    CHECK((a * b).frobenius_twist(1) == a.frobenius_twist(1) * b.frobenius_twist(1));
    CHECK((a + b).frobenius_twist(1) == a.frobenius_twist(1) + b.frobenius_twist(1));
  }
}

TEST_CASE("the S3 action") {
  auto s = s3_tower();
  std::vector<std::vector<int>> rel{{0, 0, 0}, {1, 1}, {1, 0, 1, 0}};
  GaloisActionTable act(s.T, {"r", "s"}, {{s.z2, s.z3}, {s.z2, s.z1}}, rel);
  CHECK(act.apply({0}, s.z1) == s.z2);
  CHECK(act.apply({0}, s.z2) == s.z3);
  CHECK(act.apply({0}, s.z3) == s.z1);
  CHECK(act.apply({1}, s.z3) == s.z3);
  for (const auto& r : rel)
    for (const auto& z : {s.z1, s.z2, s.z3}) CHECK(act.apply(r, z) == z);
  auto all = act.enumerate();
  CHECK(all.size() == 6);
  for (int trial = 0; trial < 3; ++trial) {
    TowerElem a = random_tower_elem(s.T), b = random_tower_elem(s.T);
    for (const auto& g : all) {
      CHECK(act.apply(g, a * b) == act.apply(g, a) * act.apply(g, b));
      CHECK(act.apply(g, a + b) == act.apply(g, a) + act.apply(g, b));
      CHECK(act.apply(g, a.frobenius_twist(1)) == act.apply(g, a).frobenius_twist(1));
    }
    TowerElem sum = s.T.zero();
    for (const auto& g : all) sum += act.apply(g, a);
    CHECK(sum.is_rational());
  }
  CHECK_THROWS_AS(act.apply({2}, s.z1), BadWordError);
  CHECK_THROWS_AS(GaloisActionTable(s.T, {"r"}, {{s.z2, s.z1}}, {{0, 0, 0}}), InvalidArgument);
}

TEST_CASE("descending to K") {
  auto s = s3_tower();
  const Field* F = Field::prime(5);
  CHECK(descend_to_base(s.T.constant(K(F, "θ+2"))) == K(F, "θ+2"));
  CHECK(descend_to_base(s.z1 + s.z2 + s.z3) == K(F, "0"));
  CHECK(descend_to_base(s.z1 * s.z2 + s.z2 * s.z3 + s.z3 * s.z1) == K(F, "θ"));
  CHECK_THROWS_AS(descend_to_base(s.z1), NotRationalError);
}

TEST_CASE("Carlitz torsion polynomials") {
  const Field* F = Field::prime(2);
  auto psi = carlitz_torsion_polynomial(P(F, "θ^2+1"));
  REQUIRE(psi.size() == 4);
  CHECK(psi[0] == K(F, "θ^2+1"));
  CHECK(psi[1] == K(F, "θ^2+θ"));
  CHECK(psi[2] == K(F, "0"));
  CHECK(psi[3] == K(F, "1"));
  auto prim = carlitz_primitive_torsion_polynomial(P(F, "θ^2+1"));
  REQUIRE(prim.size() == 3);
  CHECK(prim == std::vector<KElem>{K(F, "θ+1"), K(F, "θ+1"), K(F, "1")});
  auto irr = carlitz_primitive_torsion_polynomial(P(F, "θ^2+θ+1"));
  CHECK(irr == carlitz_torsion_polynomial(P(F, "θ^2+θ+1")));
}

TEST_CASE("the Carlitz cyclotomic tower for θ^2+1 over F_2") {
  const Field* F = Field::prime(2);
  auto ct = carlitz_cyclotomic_tower(P(F, "θ^2+1"));
  CHECK(ct.tower.degree() == 2);
  REQUIRE(ct.units.size() == 2);
  const TowerElem lambda = ct.tower.generator(0);
  const TowerElem theta = ct.tower.constant(K(F, "θ"));
  TowerElem sigma = carlitz_action(P(F, "θ"), lambda);
  CHECK(sigma == theta * lambda + lambda * lambda);
  CHECK(carlitz_action(P(F, "θ"), sigma) == carlitz_action(P(F, "θ^2"), lambda));
  CHECK(carlitz_action(P(F, "θ^2+1"), lambda).is_zero());
  for (std::size_t g = 0; g < ct.units.size(); ++g)
    CHECK(ct.action.apply({static_cast<int>(g)}, lambda) == carlitz_action(ct.units[g], lambda));
  CHECK(ct.action.enumerate().size() == 2);
}

TEST_CASE("rebasing to a constant extension") {
  auto s = s3_tower();
  Tower R = rebase_constants(s.T, 2);
  CHECK(R.degree() == s.T.degree());
  CHECK(R.field()->size() == 25);
  CHECK(R.field()->q() == 5);
  TowerElem a = random_tower_elem(s.T), b = random_tower_elem(s.T);
  CHECK(R.embed(a * b) == R.embed(a) * R.embed(b));
  CHECK(R.embed(a).frobenius_twist(1) == R.embed(a.frobenius_twist(1)));
  const Field* G = R.field();
  TowerElem w = R.constant(KElem::constant(G, G->generator()));
  CHECK(w.frobenius_twist(2) == w);
  CHECK(w.frobenius_twist(1) != w);
}

TEST_CASE("Moore determinant detects linear independence") {
  for (std::uint32_t q : {2u, 3u}) {
    const Field* Fq = Field::prime(q);
    for (unsigned N = 1; N <= 4; ++N) {
      const Field* G = Field::extension(Fq, N);
      const std::uint64_t size = G->size();
      std::uint64_t total = 1;
      for (unsigned i = 0; i < N; ++i) total *= size;
      const bool exhaustive = total <= 70000;
      const std::uint64_t count = exhaustive ? total : 4000;
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t code = exhaustive ? idx : test::rng()() % total;
        std::vector<FieldElem> u;
        for (unsigned i = 0; i < N; ++i) {
          u.push_back(FieldElem{G, static_cast<Field::Elem>(code % size)});
          code /= size;
        }
        if (is_fundamental(u) != independent(u, q)) {
          FAIL("Moore determinant disagrees with independence for q=" << q << " N=" << N);
        }
      }
    }
  }
}
