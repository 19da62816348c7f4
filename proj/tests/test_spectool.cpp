#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"

using namespace ytwo;

namespace {

std::vector<BlockElement> reversed(std::vector<BlockElement> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

const CheckResult& find_check(const GroupReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return c;
  }
  FAIL("no check named " << name);
  throw;
}

}  // namespace

TEST_CASE("order formulas agree with hand counts") {
  // |SL_2(q)| = q (q^2 - 1)
  CHECK(to_string(omega_even_order(2, 4, -1)) == std::to_string(16ULL * (16 * 16 - 1)));
  // Omega+(4, 8) = SL_2(8) x SL_2(8)
  CHECK(to_string(omega_even_order(2, 8, +1)) == std::to_string((8ULL * 63) * (8ULL * 63)));
  // |Sp_4(4)| = 4^4 (4^2 - 1)(4^4 - 1)
  CHECK(to_string(omega_odd_order(2, 4)) == std::to_string(256ULL * 15 * 255));
  // |Omega^-(6, 4)| = 4^6 (4^3 + 1)(4^2 - 1)(4^4 - 1)
  CHECK(to_string(omega_even_order(3, 4, -1)) == std::to_string(4096ULL * 65 * 15 * 255));
  CHECK(to_string(omega_even_order(2, 4, -1)) == "4080");
  CHECK(to_string(omega_even_order(2, 8, +1)) == "254016");
  CHECK(to_string(omega_odd_order(2, 4)) == "979200");
  CHECK(to_string(Order{0}) == "0");
  CHECK(to_string(ipow(10, 30)) == "1" + std::string(30, '0'));
}

TEST_CASE("small case table") {
  CHECK(small_cases().size() == 15);
  const SmallCase* c = find_small_case(6, 5);
  REQUIRE(c != nullptr);
  CHECK(to_string(c->order) == std::to_string(4096ULL * 4096ULL * 65 * 15 * 255));
  CHECK(find_small_case(3, 5)->group == "SL_2(16) = Omega^-(4,4)");
  CHECK(find_small_case(3, 13) == nullptr);
}

TEST_CASE("specialized generators for (3, 5)") {
  const auto phi = specialize(3, 5, RepKind::Phi);
  const auto eta = specialize(3, 5, RepKind::Eta);
  const FiniteField& F = phi.F();
  CHECK(F.modulus() == 0b10011U);
  CHECK(phi.orbit_reps == std::vector<int>{1});
  CHECK(element_order(phi.a, F) == 5);
  CHECK(element_order(eta.a, F) == 5);
  const FFElement z = phi.primary_map().zeta;
  CHECK(eta.a.blocks.at(0)(0, 0) == z);
  CHECK(eta.a.blocks.at(0)(1, 1) == F.inv(z));
  CHECK(eta.a.blocks.at(0)(0, 1) == 0U);
  CHECK(generated_subfield_degree(eval_apply(phi.primary_map(), LaurentScalar::t()), F) == 2);
  CHECK(entries_in_subfield(phi.a, F, 2));
  for (const auto& b : phi.b) CHECK(entries_in_subfield(b, F, 2));
  CHECK_FALSE(entries_in_subfield(eta.a, F, 2));
  CHECK(failing_relators(phi, 10).empty());
  CHECK(failing_relators(eta, 10).empty());
  CHECK_THROWS_AS(eta.image(Gen::tau()), Error);
}

TEST_CASE("specialized b-generators have order n") {
  for (auto [m, n] : {std::pair{3, 5}, {3, 7}, {4, 5}}) {
    const auto phi = specialize(m, n, RepKind::Phi);
    for (const auto& b : phi.b) CHECK(element_order(b, phi.F()) == n);
  }
}

TEST_CASE("augmentation blocks for n = 7") {
  const auto phi = specialize(3, 7, RepKind::Phi);
  CHECK(phi.orbit_reps == std::vector<int>{1, 3});
  CHECK(phi.a.blocks.size() == 2);
  CHECK(phi.F().degree() == 3);
  CHECK(phi.maps.at(1).zeta == phi.F().pow(phi.maps.at(0).zeta, 3));
}

TEST_CASE("breadth-first enumeration") {
  const auto phi = specialize(3, 5, RepKind::Phi);
  CHECK(group_order_bfs({}, phi.F(), 10) == 1);
  CHECK(group_order_bfs(phi.s_tilde, phi.F(), 100) == 6);
  CHECK(group_order_bfs({phi.a}, phi.F(), 100) == 5);

  const auto n1 = group_order_bfs(phi.b, phi.F(), 100000, 1);
  const auto n4 = group_order_bfs(phi.b, phi.F(), 100000, 4);
  const auto nr = group_order_bfs(reversed(phi.b), phi.F(), 100000, 3);
  CHECK(n1 == 4080);
  CHECK(n4 == n1);
  CHECK(nr == n1);

  const auto eta = specialize(3, 5, RepKind::Eta);
  CHECK(group_order_bfs(eta.b, eta.F(), 100000, 2) == 4080);

  try {
    (void)group_order_bfs(phi.b, phi.F(), 1000);
    FAIL("cap ignored");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CapExceeded);
  }
}

TEST_CASE("another modulus and root give the same order") {
  const gf2x::Poly alt = 0b11001;  // x^4 + x^3 + 1
  REQUIRE(gf2x::is_irreducible(alt));
  const auto phi = specialize(3, 5, RepKind::Phi, alt);
  CHECK(phi.F().modulus() == alt);
  CHECK(element_order(phi.a, phi.F()) == 5);
  CHECK(group_order_bfs(phi.b, phi.F(), 100000, 2) == 4080);
  CHECK_THROWS_AS(make_eval_map(5, gf2x::Poly{0b1011}), Error);
}

TEST_CASE("packed encoding") {
  const FiniteField F(0b10011);
  FFMatrix M = FFMatrix::identity(5);
  std::string out;
  M.append_bytes(out, F.degree());
  CHECK(out.size() == 13);
  CHECK(static_cast<unsigned char>(out[0]) == 1U);
  M(0, 0) = 0b1010;
  std::string out2;
  M.append_bytes(out2, F.degree());
  CHECK(static_cast<unsigned char>(out2[0]) == 0b1010U);
}

TEST_CASE("dickson invariant") {
  const EvalMap map = make_eval_map(5);
  const FiniteField& F = map.F();
  const QuadSpace V(4);
  CHECK(dickson(specialize_matrix(oracle::transvection(V, oracle::gf2_vector(5, {0})), map), F) == 1);
  CHECK(dickson(FFMatrix::identity(5), F) == 0);
  const PhiRep phi(V);
  CHECK(dickson(specialize_matrix(phi.image(Gen::a()), map), F) == 0);

  // random products of transvections r_w, w a 0/1 vector of unit norm, on the
  // nondegenerate rank-6 form
  const QuadSpace W(5);
  std::vector<FFMatrix> refl;
  for (std::uint64_t mask = 1; mask < 64; ++mask) {
    LVec w(6);
    std::vector<oracle::Laurent> ow(6);
    for (int i = 0; i < 6; ++i) {
      if (mask >> i & 1U) {
        w[static_cast<std::size_t>(i)] = LaurentScalar::one();
        ow[static_cast<std::size_t>(i)] = oracle::Laurent{{0}};
      }
    }
    if (W.q(w).is_monomial()) refl.push_back(specialize_matrix(oracle::transvection(W, ow), map));
  }
  REQUIRE(refl.size() > 4);
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const int len = 2 * (1 + static_cast<int>(rng() % 6));
    FFMatrix g = FFMatrix::identity(6);
    for (int i = 0; i < len; ++i) g = g.mul(refl[rng() % refl.size()], F);
    REQUIRE(dickson(g, F) == 0);
    REQUIRE(dickson(g.mul(refl[rng() % refl.size()], F), F) == 1);
  }
  CHECK(dickson(FFMatrix::identity(5), F, 4).caveat);
  CHECK_FALSE(dickson(FFMatrix::identity(4), F, 3).caveat);
}

TEST_CASE("radical rank") {
  for (int m = 3; m <= 12; ++m) CHECK(radical_rank(m) == (m % 2 == 0 ? 1 : 0));
}

TEST_CASE("small table rows") {
  TableOptions opt;
  opt.threads = 2;
  const auto r35 = table1_check(3, 5, opt);
  CHECK(r35.status() == Status::Pass);
  CHECK(find_check(r35, "phi_order").actual == "4080");
  CHECK(find_check(r35, "eta_order").actual == "4080");
  CHECK(find_check(r35, "radical_rank").actual == "0");
  CHECK(find_check(r35, "phi_a_order").actual == "5");
  for (const auto& c : r35.checks) {
    CAPTURE(c.name);
    CHECK(c.status == Status::Pass);
  }

  const auto r65 = table1_check(6, 5, opt);
  CHECK(r65.status() == Status::Pass);
  CHECK(find_check(r65, "radical_rank").actual == "1");
  CHECK(find_check(r65, "q(r)").actual == "0");
  CHECK(find_check(r65, "phi_order").status == Status::Skip);

  const auto r55 = table1_check(5, 5, opt);
  CHECK(r55.status() == Status::Pass);
  CHECK(find_check(r55, "phi_order").status == Status::Skip);
  CHECK(find_check(r55, "phi_relators_K10").status == Status::Pass);
}

TEST_CASE("check results") {
  const auto ok = make_check("x", true);
  CHECK(ok.status == Status::Pass);
  const auto bad = expect_eq("y", "1", "2");
  CHECK(bad.status == Status::Fail);
  CHECK((bad.expected.has_value() || bad.detail.has_value()));
  GroupReport g;
  CHECK(g.status() == Status::Skip);
  g.checks.push_back(ok);
  CHECK(g.status() == Status::Pass);
  g.checks.push_back(bad);
  CHECK(g.status() == Status::Fail);
}
