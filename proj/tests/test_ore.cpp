#include "doctest.h"
#include "test_util.hpp"

#include "dtw/drinfeld.hpp"
#include "dtw/ore.hpp"

using namespace dtw;
using dtw::test::K;

namespace {

using KOre = OrePoly<KElem>;
using FOre = OrePoly<FieldElem>;

KOre random_matrix_ore(const Field* F, std::size_t n, std::size_t deg) {
  std::vector<Matrix<KElem>> terms;
  for (std::size_t k = 0; k <= deg; ++k) {
    Matrix<KElem> A(n, n, KElem::zero(F));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) A(i, j) = test::random_kelem(F, 1);
    terms.push_back(A);
  }
  return KOre(std::move(terms));
}

}  // namespace

TEST_CASE("τ θτ = θ^2 τ^2 over F_2") {
  const Field* F = Field::prime(2);
  KOre tau = KOre::scalar({K(F, "0"), K(F, "1")});
  KOre theta_tau = KOre::scalar({K(F, "0"), K(F, "θ")});
  KOre expect = KOre::scalar({K(F, "0"), K(F, "0"), K(F, "θ^2")});
  CHECK(tau * theta_tau == expect);
  CHECK(theta_tau * tau == KOre::scalar({K(F, "0"), K(F, "0"), K(F, "θ")}));
}

TEST_CASE("square of the Carlitz operator") {
  for (std::uint32_t q : {2u, 3u}) {
    const Field* F = Field::prime(q);
    KOre C = carlitz(F).phi_t();
    KOre C2 = C * C;
    std::string mid = "θ+θ^" + std::to_string(q);
    CHECK(C2 == KOre::scalar({K(F, "θ^2"), K(F, mid), K(F, "1")}));
    TPoly t2 = TPoly::monomial(F, 1, 2);
    CHECK(image_of(t2, C) == C2);
  }
}

TEST_CASE("evaluation and the differential part") {
  const Field* F = Field::prime(2);
  KOre C = carlitz(F).phi_t();
  auto y = C.apply({K(F, "1")});
  REQUIRE(y.size() == 1);
  CHECK(y[0] == K(F, "θ+1"));
  CHECK(C.apply({K(F, "θ")})[0] == K(F, "0"));
  CHECK(C.d_part()(0, 0) == K(F, "θ"));
  KOre C2 = C * C;
  CHECK(C2.d_part()(0, 0) == K(F, "θ^2"));
}

TEST_CASE("scalar Ore polynomials over F_4 form an associative ring acting by composition") {
  const Field* F4 = Field::extension(Field::prime(2), 2u);
  std::vector<FOre> all;
  for (Field::Elem a = 0; a < 4; ++a)
    for (Field::Elem b = 0; b < 4; ++b) {
      if (a == 0 && b == 0) {
        all.emplace_back(1, 1, FieldElem{F4, 0});
        continue;
      }
      all.push_back(FOre::scalar({FieldElem{F4, a}, FieldElem{F4, b}}));
    }
  for (const auto& f : all)
    for (const auto& g : all) {
      FOre fg = f * g;
      for (Field::Elem x = 0; x < 4; ++x) {
        std::vector<FieldElem> v{FieldElem{F4, x}};
        CHECK(fg.apply(v) == f.apply(g.apply(v)));
      }
      for (const auto& h : all) CHECK((f * g) * h == f * (g * h));
    }
}

TEST_CASE("matrix Ore polynomials over K with constants F_9") {
  const Field* F9 = Field::ground(3, 2);
  for (int trial = 0; trial < 6; ++trial) {
    KOre a = random_matrix_ore(F9, 2, 1), b = random_matrix_ore(F9, 2, 1), c = random_matrix_ore(F9, 2, 1);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    std::vector<KElem> v{test::random_kelem(F9, 1), test::random_kelem(F9, 1)};
    CHECK((a * b).apply(v) == a.apply(b.apply(v)));
  }
}

TEST_CASE("the Ore ring is not commutative") {
  const Field* F = Field::prime(3);
  KOre tau = KOre::scalar({K(F, "0"), K(F, "1")});
  KOre theta = KOre::scalar({K(F, "θ")});
  CHECK(tau * theta != theta * tau);
  CHECK(tau * theta == KOre::scalar({K(F, "0"), K(F, "θ^3")}));
}

TEST_CASE("shape errors") {
  const Field* F = Field::prime(2);
  KOre a = KOre::identity(2, K(F, "1"));
  KOre b = KOre::identity(3, K(F, "1"));
  CHECK_THROWS_AS(a * b, ShapeError);
  CHECK_THROWS_AS(a + b, ShapeError);
  CHECK_THROWS_AS(a.apply({K(F, "1")}), ShapeError);
}

TEST_CASE("direct sums act diagonally") {
  const Field* F = Field::prime(3);
  KOre C = carlitz(F).phi_t();
  KOre D = direct_sum(C, 2);
  auto y = D.apply({K(F, "1"), K(F, "θ")});
  CHECK(y[0] == C.apply({K(F, "1")})[0]);
  CHECK(y[1] == C.apply({K(F, "θ")})[0]);
  CHECK(D * D == direct_sum(C * C, 2));
}
