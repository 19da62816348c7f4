#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"

using namespace ytwo;

TEST_CASE("word helpers") {
  const Word w = parse_word("aS1s2A");
  CHECK(to_string(w) == "aS1s2A");
  CHECK(to_string(inverse(w)) == "as2S1A");
  CHECK(to_string(power({Gen::a()}, 3)) == "aaa");
  CHECK(to_string(power({Gen::a()}, -2)) == "AA");
  CHECK(power(w, 0).empty());
  CHECK(to_string(conjugate({Gen::a()}, {Gen::s(1)})) == "s1as1");
  CHECK(to_string(commutator({Gen::a()}, {Gen::tau()})) == "Atat");
  CHECK(parse_word(" a t  s12 ") == Word{Gen::a(), Gen::tau(), Gen::s(12)});
  CHECK_THROWS_AS(parse_word("x"), Error);
  CHECK_THROWS_AS(parse_word("s"), Error);
  CHECK(Gen::a().inverse() == Gen::a_inv());
  CHECK(Gen::s_tilde(2).inverse() == Gen::s_tilde(2));
}

TEST_CASE("b-words") {
  CHECK(b_word(1, 4) == Word{Gen::a()});
  CHECK(b_word(2, 4) == Word{Gen::s_tilde(1), Gen::a(), Gen::s_tilde(1)});
  CHECK(b_word(3, 4) == Word{Gen::s_tilde(2), Gen::s_tilde(1), Gen::a(), Gen::s_tilde(1), Gen::s_tilde(2)});
  CHECK(to_string(b_power(2, -2, 3)) == "S1AAS1");
  CHECK_THROWS_AS(b_word(0, 3), Error);
  CHECK_THROWS_AS(b_word(4, 3), Error);
  try {
    check_gen(Gen::s(3), 3);
    FAIL("index accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IndexOutOfRange);
  }
}

TEST_CASE("tau elimination") {
  CHECK(to_string(eliminate_tau(parse_word("tat"))) == "A");
  CHECK(to_string(eliminate_tau(parse_word("S1aS2"))) == "s1As2");
  CHECK(to_string(eliminate_tau(b_word(3, 3))) == "s2s1as1s2");
  CHECK_THROWS_AS(eliminate_tau(parse_word("ta")), Error);

  // the rewrite preserves the value under a representation of the larger group
  const PhiRep phi(4);
  std::mt19937_64 rng(42);
  int tested = 0;
  while (tested < 100) {
    const Word w = random_word(rng, 4, 20, true);
    try {
      const Word r = eliminate_tau(w);
      REQUIRE(evaluate(r, phi) == evaluate(w, phi));
      ++tested;
    } catch (const Error&) {
    }
  }
}

TEST_CASE("schedule contents") {
  const auto t = schedule(3, 2, Flavor::y_tilde);
  for (const char* name : {"tau_sq", "braid_12", "comm_k1", "comm_k2", "inv_s2", "tau_inverts_a", "sq_1", "sq_2"}) {
    CHECK(t.find(name) != nullptr);
  }
  CHECK(t.find("comm_k3") == nullptr);

  const auto y = schedule(3, 1, Flavor::y);
  CHECK(y.find("sq_1")->word == parse_word("s1s1"));
  CHECK(y.find("sq_2")->word == parse_word("s2s2"));
  CHECK(y.find("braid_12")->word == parse_word("s1s2s1s2s1s2"));
  CHECK(y.find("tau_sq") == nullptr);

  const auto Y = schedule(4, 1, Flavor::Y);
  CHECK(Y.relators.size() == 24);  // 12 ordered pairs, k = +-1
  CHECK(Y.find("pair_1_2_k1")->word == power(b_word(1, 4) + b_word(2, 4), 2));
  CHECK(Y.find("pair_4_3_k-1") != nullptr);

  const auto far = schedule(5, 1, Flavor::y);
  CHECK(far.find("far_13") != nullptr);
  CHECK(far.find("far_24") != nullptr);
  CHECK(far.find("far_12") == nullptr);

  CHECK_THROWS_AS(schedule(2, 5, Flavor::y), Error);
  CHECK_THROWS_AS(schedule(3, 0, Flavor::y), Error);
}

TEST_CASE("evaluation examples under phi") {
  const PhiRep phi(3);
  const QuadSpace& V = phi.space();
  CHECK(evaluate(Word{}, phi).is_identity());
  CHECK(evaluate(parse_word("tata"), phi).is_identity());
  const LMatrix ru = oracle::transvection(V, oracle::gf2_vector(4, {0}));
  const LMatrix rv2 = oracle::transvection(V, oracle::gf2_vector(4, {2}));
  CHECK(evaluate(b_word(2, 3), phi) == ru * rv2);
}

TEST_CASE("evaluate is a monoid homomorphism") {
  std::mt19937_64 rng(42);
  const PhiRep phi(4);
  const PsiRep psi(4);
  for (int trial = 0; trial < 100; ++trial) {
    const Word x = random_word(rng, 4, 15), y = random_word(rng, 4, 15);
    REQUIRE(evaluate(x + y, phi) == evaluate(x, phi) * evaluate(y, phi));
    REQUIRE(evaluate(x + y, psi) == evaluate(x, psi) * evaluate(y, psi));
  }
}

TEST_CASE("s-tilde equals tau times s") {
  for (int m = 3; m <= 6; ++m) {
    const PhiRep phi(m);
    const PsiRep psi(m);
    for (int i = 1; i < m; ++i) {
      CHECK(evaluate({Gen::s_tilde(i)}, phi) == evaluate({Gen::tau(), Gen::s(i)}, phi));
      CHECK(evaluate({Gen::s_tilde(i)}, psi) == evaluate({Gen::tau(), Gen::s(i)}, psi));
    }
  }
}

namespace {

// Permutation of basis indices induced by a matrix, or empty if it is not monomial 0/1.
std::vector<int> basis_permutation(const LMatrix& M) {
  std::vector<int> p(static_cast<std::size_t>(M.size()), -1);
  for (int i = 0; i < M.size(); ++i) {
    for (int j = 0; j < M.size(); ++j) {
      if (M(i, j).is_zero()) continue;
      if (!M(i, j).is_one() || p[static_cast<std::size_t>(i)] != -1) return {};
      p[static_cast<std::size_t>(i)] = j;
    }
  }
  return p;
}

std::size_t closure_size(const std::vector<std::vector<int>>& gens) {
  std::set<std::vector<int>> seen;
  std::vector<int> id(gens.front().size());
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> todo{id};
  seen.insert(id);
  while (!todo.empty()) {
    const auto x = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      std::vector<int> y(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) y[i] = g[static_cast<std::size_t>(x[i])];
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen.size();
}

}  // namespace

TEST_CASE("s-tilde images permute v_1..v_m as the full symmetric group") {
  std::size_t factorial = 2;
  for (int m = 3; m <= 6; ++m) {
    factorial *= static_cast<std::size_t>(m);
    const PhiRep phi(m);
    const PsiRep psi(m);
    std::vector<std::vector<int>> from_phi, from_psi;
    for (int i = 1; i < m; ++i) {
      const auto p = basis_permutation(phi.image(Gen::s_tilde(i)));
      REQUIRE(p.size() == static_cast<std::size_t>(m + 1));
      CHECK(p[0] == 0);
      from_phi.push_back(p);
      from_psi.push_back(basis_permutation(pi_matrix(psi.image(Gen::s_tilde(i)))));
      REQUIRE(from_psi.back() == p);
    }
    CHECK(closure_size(from_phi) == factorial);
  }
}
