#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace ytwo;

namespace {

QEMatrix qrows(const std::vector<std::vector<QEScalar>>& r) {
  std::vector<Vec<QEScalar>> v(r.begin(), r.end());
  return QEMatrix::from_rows(v);
}

std::vector<std::string> labels(const WBasis& b) {
  std::vector<std::string> out;
  for (const auto& w : b.words) out.push_back(word_label(w));
  return out;
}

}  // namespace

TEST_CASE("eta generator matrices for m = 3 and m = 4") {
  const QEScalar o, one = QEScalar::one(), a = QEScalar::alpha(), ai = QEScalar::alpha_inv();
  const EtaRep e3(3);
  CHECK(e3.dimension() == 2);
  CHECK(e3.image(Gen::a()) == qrows({{a, o}, {o, ai}}));
  CHECK(e3.image(Gen::s(2)) == qrows({{o, one}, {one, o}}));
  CHECK(e3.image(Gen::s(1)).row(1) == Vec<QEScalar>{one, one});
  CHECK((e3.image(Gen::a()) * e3.image(Gen::a_inv())).is_identity());

  const EtaRep e4(4);
  CHECK(e4.dimension() == 4);
  CHECK(e4.image(Gen::s(2)) == qrows({{o, o, one, o}, {o, o, o, one}, {one, o, o, o}, {o, one, o, o}}));
  CHECK_THROWS_AS(e4.image(Gen::tau()), Error);
  CHECK_THROWS_AS(e4.image(Gen::s_tilde(1)), Error);
}

TEST_CASE("relators under eta") {
  for (int m = 3; m <= 6; ++m) {
    const EtaRep eta(m);
    for (const auto& r : schedule(m, 20, Flavor::y).relators) {
      CAPTURE(m, r.name);
      CHECK(evaluate(r.word, eta).is_identity());
    }
  }
}

TEST_CASE("eigenvector w") {
  for (int m = 3; m <= 6; ++m) {
    const auto c = check_eigenvector(CliffordAlgebra::standard(m));
    CHECK(c.a_eigen);
    CHECK(c.s1_fixed);
    CHECK(c.uv2_eigen);
  }
  // direct products for m = 3
  const auto alg = CliffordAlgebra::standard(3);
  const QCliff w = eigenvector_w(alg);
  const QCliff psi_a = PsiRep(alg).image(Gen::a()).cast<QEScalar>();
  CHECK(w * psi_a == QEScalar::alpha() * w);
}

TEST_CASE("basis words") {
  const auto a3 = CliffordAlgebra::standard(3), a4 = CliffordAlgebra::standard(4);
  CHECK(labels(basis(a3, BasisFlavor::X)) == std::vector<std::string>{"w", "ws2"});
  CHECK(labels(basis(a4, BasisFlavor::X)) == std::vector<std::string>{"w", "ws3", "ws2", "ws3s2"});
  CHECK(labels(basis(a4, BasisFlavor::Y)) == std::vector<std::string>{"w", "ws2", "ws3", "ws2s3"});
  const QCliff w = eigenvector_w(a3);
  const QCliff s2 = PsiRep(a3).image(Gen::s(2)).cast<QEScalar>();
  const auto X3 = basis(a3, BasisFlavor::X);
  CHECK(X3.elements.at(0) == w);
  CHECK(X3.elements.at(1) == w * s2);
  for (int m = 3; m <= 8; ++m) {
    CHECK(basis(CliffordAlgebra::standard(m), BasisFlavor::X).elements.size() == (std::size_t{1} << (m - 2)));
  }
}

TEST_CASE("independence certificates") {
  for (int m = 3; m <= 6; ++m) {
    const auto r = independence_certificate(basis(CliffordAlgebra::standard(m), BasisFlavor::X).elements);
    CHECK(r.certified);
  }
  const QCliff w = eigenvector_w(CliffordAlgebra::standard(3));
  const auto dup = independence_certificate({w, w});
  CHECK_FALSE(dup.certified);
  CHECK(dup.attempts.size() == 3);
  for (const auto& [n, rank] : dup.attempts) CHECK(rank == 1);
}

TEST_CASE("action of y(m) on the basis") {
  for (int m = 3; m <= 6; ++m) {
    const auto alg = CliffordAlgebra::standard(m);
    const WBasis X = basis(alg, BasisFlavor::X);
    const EtaRep eta(m);
    for (const Gen& g : y_generators(m)) {
      const auto r = verify_action(X, eta, g);
      CAPTURE(m, to_string(Word{g}), r.witness);
      CHECK(r.ok);
    }
  }
}

TEST_CASE("a wrong matrix is caught with a witness") {
  const auto alg = CliffordAlgebra::standard(3);
  const WBasis X = basis(alg, BasisFlavor::X);
  const EtaRep eta(3);
  const QCliff g = PsiRep(alg).image(Gen::s(2)).cast<QEScalar>();
  const auto r = compare_action(X.elements, g, eta.image(Gen::s(1)), "s2");
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.witness.empty());
}

TEST_CASE("s images satisfy the near-commutation rule") {
  for (int m = 3; m <= 6; ++m) {
    const PsiRep psi(m);
    const LCliff one = psi.identity();
    for (int i = 1; i < m; ++i) {
      for (int j = 1; j < m; ++j) {
        const LCliff x = psi.image(Gen::tau()) * psi.image(Gen::s_tilde(i));
        const LCliff y = psi.image(Gen::tau()) * psi.image(Gen::s_tilde(j));
        CAPTURE(m, i, j);
        if (std::abs(i - j) == 1) {
          CHECK(x * y == y * x + one);
        } else {
          CHECK(x * y == y * x);
        }
      }
    }
  }
}

TEST_CASE("extended action on X and Xu") {
  const QEScalar o, one = QEScalar::one(), a = QEScalar::alpha(), ai = QEScalar::alpha_inv();
  const EtaRep e3(3);
  CHECK(extended_block(e3, Gen::tau()) ==
        qrows({{o, o, one, o}, {o, o, o, one}, {one, o, o, o}, {o, one, o, o}}));
  CHECK(extended_block(e3, Gen::a()) == qrows({{a, o, o, o}, {o, ai, o, o}, {o, o, ai, o}, {o, o, o, a}}));
  for (int m = 3; m <= 5; ++m) {
    const auto r = verify_extended_action(m);
    CHECK(r.independence.certified);
    for (const auto& [name, rep] : r.actions) {
      CAPTURE(m, name, rep.witness);
      CHECK(rep.ok);
    }
    CHECK(r.ok());
  }
}

TEST_CASE("alternative ordering spans the same module") {
  for (int m = 3; m <= 6; ++m) {
    const auto alg = CliffordAlgebra::standard(m);
    const EtaRep eta(m);
    const WBasis X = basis(alg, BasisFlavor::X), Y = basis(alg, BasisFlavor::Y);
    CHECK(same_span(X, Y, eta));
    CHECK(parity_rule_holds(X, eta));
  }
}
