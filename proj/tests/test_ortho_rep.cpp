#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"

using namespace ytwo;

namespace {

LaurentScalar L(std::initializer_list<int> exps) { return LaurentScalar::from_exponents(exps); }

LMatrix rows(const std::vector<std::vector<LaurentScalar>>& r) {
  std::vector<LVec> v(r.begin(), r.end());
  return LMatrix::from_rows(v);
}

}  // namespace

TEST_CASE("generator matrices match products of directly built transvections") {
  for (int m = 3; m <= 6; ++m) {
    const PhiRep phi(m);
    const QuadSpace& V = phi.space();
    const int n = m + 1;
    const LMatrix ru = oracle::transvection(V, oracle::gf2_vector(n, {0}));
    const LMatrix rv1 = oracle::transvection(V, oracle::gf2_vector(n, {1}));
    CHECK(phi.image(Gen::tau()) == ru);
    CHECK(phi.image(Gen::a()) == ru * rv1);
    CHECK(phi.image(Gen::a_inv()) == rv1 * ru);
    CHECK((phi.image(Gen::a()) * phi.image(Gen::a_inv())).is_identity());
    for (int i = 1; i < m; ++i) {
      const LMatrix r = oracle::transvection(V, oracle::gf2_vector(n, {i, i + 1}));
      CHECK(phi.image(Gen::s_tilde(i)) == r);
      CHECK(phi.image(Gen::s(i)) == ru * r);
    }
    for (const Gen& g : {Gen::a(), Gen::a_inv(), Gen::tau()}) CHECK(V.preserves_form(phi.image(g)));
    for (int i = 1; i < m; ++i) {
      CHECK(V.preserves_form(phi.image(Gen::s(i))));
      CHECK(V.preserves_form(phi.image(Gen::s_tilde(i))));
    }
  }
}

TEST_CASE("explicit generator rows for m = 3") {
  const PhiRep phi(3);
  const auto o = LaurentScalar{}, one = LaurentScalar::one(), t = LaurentScalar::t();
  // u -> u + t v1, v1 -> u + (1+t) v1, v_j -> u + v_j
  CHECK(phi.image(Gen::a()) == rows({{one, t, o, o}, {one, one + t, o, o}, {one, o, one, o}, {one, o, o, one}}));
  CHECK(phi.image(Gen::tau()) == rows({{one, o, o, o}, {one, one, o, o}, {one, o, one, o}, {one, o, o, one}}));
  CHECK(phi.image(Gen::s_tilde(1)) == rows({{one, o, o, o}, {o, o, one, o}, {o, one, o, o}, {o, o, o, one}}));
  CHECK(entries_in_t_polynomials(phi.image(Gen::a())));
}

TEST_CASE("relators under phi") {
  for (int m = 3; m <= 5; ++m) {
    const PhiRep phi(m);
    for (const auto& r : schedule(m, 20, Flavor::y_tilde).relators) {
      CAPTURE(m, r.name);
      CHECK(evaluate(r.word, phi).is_identity());
    }
  }
}

TEST_CASE("closed-form conjugate") {
  const QuadSpace V(4);
  const auto t = LaurentScalar::t(), one = LaurentScalar::one(), o = LaurentScalar{};
  const LMatrix k1 = to_laurent(closed_form_conjugate(V, 1));
  // oracle: a^-1 s1 a multiplied out from the transvections
  const LMatrix ru = oracle::transvection(V, oracle::gf2_vector(5, {0}));
  const LMatrix rv1 = oracle::transvection(V, oracle::gf2_vector(5, {1}));
  const LMatrix rs1 = ru * oracle::transvection(V, oracle::gf2_vector(5, {1, 2}));
  CHECK(k1 == rv1 * ru * rs1 * ru * rv1);
  CHECK(k1 == rows({{t + one, t, t, o, o},
                    {one, o, one, o, o},
                    {t + one, t + one, t, o, o},
                    {t + one, o, t, one, o},
                    {t + one, o, t, o, one}}));
  CHECK(to_laurent(closed_form_conjugate(V, 0)) == PhiRep(V).image(Gen::s(1)));
  CHECK(conjugation_word(2) == parse_word("AAs1aa"));

  for (int m = 3; m <= 6; ++m) {
    const PhiRep phi(m);
    for (int k = 0; k <= 20; ++k) {
      CAPTURE(m, k);
      const LMatrix cf = to_laurent(closed_form_conjugate(phi.space(), k));
      REQUIRE(cf == evaluate(conjugation_word(k), phi));
      REQUIRE(entries_in_t_polynomials(cf));
      const auto f = form_coefficients(cf);
      REQUIRE((f[0] + f[1] + f[2]).is_zero());
      REQUIRE(cf == commuting_form_map(phi.space(), f[0], f[1], f[2]));
    }
  }
  try {
    (void)closed_form_conjugate(V, -1);
    FAIL("negative k accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NegativeK);
  }
}

TEST_CASE("sigma sums") {
  CHECK(sigma_sum(-1).is_zero());
  CHECK(sigma_sum(0).is_one());
  // 1 + alpha^2 + alpha^-2 = 1 + t
  CHECK(sigma_sum(1) == QEScalar(L({0, 2})));
}

TEST_CASE("matrices in the commuting form commute") {
  std::mt19937_64 rng(42);
  auto rnd = [&] {
    std::vector<int> e;
    for (int i = static_cast<int>(rng() % 4); i > 0; --i) e.push_back(2 * static_cast<int>(rng() % 7) - 6);
    return LaurentScalar::from_exponents(e);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const QuadSpace V(3 + static_cast<int>(rng() % 4));
    const auto f0 = rnd(), f1 = rnd(), g0 = rnd(), g1 = rnd();
    const LMatrix F = commuting_form_map(V, f0, f1, f0 + f1);
    const LMatrix G = commuting_form_map(V, g0, g1, g0 + g1);
    REQUIRE(F * G == G * F);
  }
  CHECK_THROWS_AS(commuting_form_map(QuadSpace(3), LaurentScalar::one(), {}, {}), Error);
}

TEST_CASE("entries stay in F2[t] along random words") {
  std::mt19937_64 rng(42);
  const PhiRep phi(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Word w = random_word(rng, 5, 30);
    REQUIRE(entries_in_t_polynomials(evaluate(w, phi)));
  }
  LMatrix odd = LMatrix::identity(2);
  odd(0, 1) = LaurentScalar::s();
  CHECK_FALSE(entries_in_t_polynomials(odd));
}

TEST_CASE("conversion to the base ring") {
  QEMatrix M = QEMatrix::identity(2);
  CHECK(to_laurent(M).is_identity());
  M(0, 1) = QEScalar::alpha();
  try {
    (void)to_laurent(M);
    FAIL("alpha entry accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Mismatch);
  }
}
