#include <random>

#include "doctest.h"
#include "klv/laurent.hpp"

using klv::LaurentPoly;

namespace {

LaurentPoly q_poly(std::initializer_list<std::int64_t> cs) {
  // c0 + c1 q + c2 q^2 + ... as a Laurent polynomial in v
  LaurentPoly f;
  int e = 0;
  for (auto c : cs) {
    f = f + LaurentPoly::monomial(c, e);
    e += 2;
  }
  return f;
}

LaurentPoly random_poly(std::mt19937_64& rng, bool nonneg = false) {
  std::uniform_int_distribution<int> exp(-4, 4), coef(nonneg ? 0 : -5, 5);
  LaurentPoly f;
  for (int i = 0; i < 5; ++i)
    f = f + LaurentPoly::monomial(coef(rng), exp(rng));
  return f;
}

}  // namespace

TEST_CASE("ring operations") {
  auto u = LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(1, -1);
  CHECK(u * u == q_poly({1, 2, 1}).shifted(-2));
  CHECK((u * u).to_string() == "v^-2 + 2 + v^2");
  auto f = q_poly({1, 1});
  CHECK(f * f == q_poly({1, 2, 1}));
  CHECK(f + LaurentPoly::zero() == f);
  CHECK(f - f == LaurentPoly::zero());
  CHECK(f.scaled(-3) == q_poly({-3, -3}));
  CHECK(LaurentPoly::monomial(2, 1).coeff(1) == 2);
  CHECK((LaurentPoly::monomial(1, 3) + LaurentPoly::monomial(2, 1)).coeff(1) == 2);
}

TEST_CASE("degree conventions") {
  CHECK(LaurentPoly::zero().degree() == 0);
  CHECK(q_poly({1, 1}).degree() == 2);
  CHECK(LaurentPoly::monomial(1, -3).degree() == -3);
}

TEST_CASE("substitute_v2") {
  CHECK(q_poly({1, 1}).substitute_v2() == q_poly({1, 0, 1}));
  auto u = LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(1, -1);
  CHECK(u.substitute_v2() ==
        LaurentPoly::monomial(1, 2) + LaurentPoly::monomial(1, -2));
  CHECK(LaurentPoly::zero().substitute_v2() == LaurentPoly::zero());
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    auto f = random_poly(rng), g = random_poly(rng);
    CHECK((f * g).substitute_v2() == f.substitute_v2() * g.substitute_v2());
  }
}

TEST_CASE("predicates") {
  CHECK(q_poly({1, 1}).is_nonneg());
  CHECK_FALSE(q_poly({-1, 1}).is_nonneg());
  auto u = LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(1, -1);
  CHECK(u.is_balanced());
  CHECK((u * u).is_balanced());
  CHECK_FALSE(q_poly({1, 1}).is_balanced());
  CHECK(LaurentPoly::zero().is_balanced_unimodal());
  CHECK((u * u).is_balanced_unimodal());
  auto spiky = LaurentPoly::monomial(1, 2) + LaurentPoly::monomial(-2, 0) +
               LaurentPoly::monomial(1, -2);
  CHECK_FALSE(spiky.is_balanced_unimodal());
  auto dip = LaurentPoly::monomial(2, 2) + LaurentPoly::monomial(1, 0) +
             LaurentPoly::monomial(2, -2);
  CHECK(dip.is_balanced());
  CHECK_FALSE(dip.is_balanced_unimodal());
  CHECK(q_poly({1, 2, 1}).is_poly_in_q());
  CHECK_FALSE(u.is_poly_in_q());
}

TEST_CASE("half_split worked examples") {
  auto [p1, m1] = LaurentPoly::one().half_split();
  CHECK(p1 == LaurentPoly::one());
  CHECK(m1 == LaurentPoly::zero());

  auto [p2, m2] = q_poly({1, 1}).half_split();
  CHECK(p2 == q_poly({1, 1, 1}));
  CHECK(m2 == q_poly({0, 1}));

  auto u = LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(1, -1);
  auto [p3, m3] = u.half_split();
  CHECK(p3 == q_poly({1, 1, 1}).shifted(-2));
  CHECK(m3 == LaurentPoly::one());
}

TEST_CASE("half_split preserves positivity and unimodality") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    auto f = random_poly(rng, true);
    auto [fp, fm] = f.half_split();
    CHECK(fp.is_nonneg());
    CHECK(fm.is_nonneg());
    CHECK(fp - fm == f.substitute_v2());
    CHECK(fp + fm == f * f);
  }
  // balanced unimodal inputs: built as sums a_i (v^-d)(q^i + ... + q^(d-i))
  for (int i = 0; i < 100; ++i) {
    int d = 1 + static_cast<int>(rng() % 5);
    LaurentPoly f;
    for (int j = 0; 2 * j <= d; ++j) {
      std::int64_t a = rng() % 3 + (j == 0 ? 1 : 0);
      LaurentPoly run;
      for (int k = j; k <= d - j; ++k)
        run = run + LaurentPoly::monomial(1, 2 * k - d);
      f = f + run.scaled(a);
    }
    REQUIRE(f.is_balanced_unimodal());
    auto [fp, fm] = f.half_split();
    CHECK(fp.is_balanced_unimodal());
    CHECK(fm.is_balanced_unimodal());
  }
}

TEST_CASE("unimodal products and same-parity sums stay unimodal") {
  auto u = LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(1, -1);
  auto f = u * u;
  CHECK((f * f).is_balanced_unimodal());
  CHECK((f + f * f * LaurentPoly::zero() + f).is_balanced_unimodal());
  CHECK((u * f).is_balanced_unimodal());
}

TEST_CASE("div_exact and eval at q = -1") {
  auto f = q_poly({1, 2, 1});
  CHECK(f.div_exact(q_poly({1, 1})) == q_poly({1, 1}));
  CHECK_THROWS_AS(q_poly({1, 0, 1}).div_exact(q_poly({1, 1})),
                  std::domain_error);
  CHECK_THROWS_AS(f.div_exact(LaurentPoly::zero()), std::domain_error);
  CHECK(q_poly({1, 2, 1}).eval_q_minus1() == 0);
  CHECK(q_poly({3, 0, 1}).eval_q_minus1() == 4);
  auto u = LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(1, -1);
  CHECK_THROWS_AS(u.eval_q_minus1(), std::domain_error);
}

TEST_CASE("overflow is detected, not wrapped") {
  auto big = LaurentPoly::monomial(INT64_MAX / 2 + 1, 0);
  CHECK_THROWS_AS(big + big, klv::OverflowError);
  CHECK_THROWS_AS(big * LaurentPoly::monomial(4, 0), klv::OverflowError);
  CHECK_THROWS_AS(big.scaled(3), klv::OverflowError);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    auto f = random_poly(rng), g = random_poly(rng), h = random_poly(rng);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f.bar().bar() == f);
    CHECK((f * g).bar() == f.bar() * g.bar());
  }
}

TEST_CASE("interning pool canonicalizes") {
  klv::PolyPool pool;
  CHECK(pool.intern(LaurentPoly::zero()) == 0);
  CHECK(pool.intern(LaurentPoly::one()) == 1);
  auto id = pool.intern(q_poly({1, 1}));
  CHECK(pool.intern(q_poly({1, 1})) == id);
  CHECK(pool[id] == q_poly({1, 1}));
}
