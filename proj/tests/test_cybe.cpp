#include <doctest.h>

#include "lbw/enumerate.hpp"
#include "support.hpp"

using namespace lbw;

namespace {

const std::vector<Scalar> kTri{-1, 0, 1};

Matrix e(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

// Skew r on a 2-dim algebra is c e0^e1.
RMatrix skew2(const LieAlgebra& L, const Scalar& c) { return RMatrix(L, Tensor2(c * test::wedge_matrix(2, 0, 1))); }

}  // namespace

TEST_SUITE("cybe") {
  TEST_CASE("CYBE tensor matches the term-by-term oracle") {
    test::Rng rng(51);
    for (const LieAlgebra& L : {fixtures::nonabelian2(), fixtures::sl2(), fixtures::heisenberg3(),
                                fixtures::book3()}) {
      for (int t = 0; t < 15; ++t) {
        Matrix r = rng.matrix(L.dim(), L.dim());
        RMatrix R(L, Tensor2(r));
        test::T3 want = test::naive_cybe(L, r);
        CHECK(test::equal(want, cybe_lhs(R)));
        bool zero = true;
        for (const auto& a : want)
          for (const auto& b : a)
            for (const auto& c : b) zero = zero && c == 0;
        CHECK(check_cybe(R).pass() == zero);
      }
    }
  }

  TEST_CASE("known solutions and non-solutions") {
    CHECK(check_cybe(skew2(fixtures::nonabelian2(), 1)).pass());
    CHECK(check_cybe(skew2(fixtures::nonabelian2(), 5)).pass());
    RMatrix st(fixtures::sl2(), fixtures::sl2_standard_r());
    CHECK(check_cybe(st).pass());
    CHECK(check_sym_invariance(st).pass());
    CHECK_FALSE(is_skew(st.r()));
    Report ef = check_cybe(RMatrix(fixtures::sl2(), fixtures::wedge(3, 0, 2)));
    CHECK_FALSE(ef.pass());
    CHECK(ef.first_failure()->witness.size() == 3);
    // e^h spans a 2-dim subalgebra, so it solves
    CHECK(check_cybe(RMatrix(fixtures::sl2(), fixtures::wedge(3, 0, 1))).pass());
    CHECK_THROWS_AS(RMatrix(fixtures::sl2(), Tensor2(2, 2)), ShapeError);
  }

  TEST_CASE("sym-invariance") {
    LieAlgebra L = fixtures::sl2();
    test::Rng rng(52);
    for (int t = 0; t < 10; ++t) {
      Matrix a = rng.matrix(3, 3);
      CHECK(check_sym_invariance(RMatrix(L, Tensor2(a - a.transpose()))).pass());
    }
    Matrix casimir = inverse(killing_form(L).gram());
    CHECK(check_sym_invariance(RMatrix(L, Tensor2(casimir))).pass());
    Report id = check_sym_invariance(RMatrix(L, Tensor2(Matrix::identity(3))));
    CHECK_FALSE(id.pass());
    CHECK(id.first_failure()->witness.size() == 1);
  }

  TEST_CASE("coboundary cobracket matches the oracle") {
    test::Rng rng(53);
    for (const LieAlgebra& L : {fixtures::nonabelian2(), fixtures::sl2(), fixtures::book3()}) {
      for (int t = 0; t < 10; ++t) {
        Matrix r = rng.matrix(L.dim(), L.dim());
        Cobracket d = coboundary_cobracket(RMatrix(L, Tensor2(r)));
        std::vector<Matrix> want = test::naive_delta_r(L, r);
        for (std::size_t k = 0; k < L.dim(); ++k) CHECK(d.slice(k) == want[k]);
      }
    }
  }

  TEST_CASE("sym-invariant CYBE solutions give coboundary bialgebras") {
    LieAlgebra L = fixtures::nonabelian2();
    int solutions = 0;
    for_each_matrix(2, 2, kTri, [&](const Matrix& r) {
      RMatrix R(L, Tensor2(r));
      if (check_cybe(R).pass() && check_sym_invariance(R).pass()) {
        CHECK(bialgebra_verdict(L, coboundary_cobracket(R)).pass());
        ++solutions;
      }
      return true;
    });
    CHECK(solutions > 1);
    RMatrix st(fixtures::sl2(), fixtures::sl2_standard_r());
    CHECK(bialgebra_verdict(fixtures::sl2(), coboundary_cobracket(st)).pass());
  }

  TEST_CASE("coboundary endo conditions for lambda scalings") {
    LieAlgebra L = fixtures::nonabelian2();
    for (int lam : {-1, 1, 2}) {
      Matrix phi = fixtures::lambda_scaling(lam), psi = inverse(phi);
      EndoLieAlgebra E(L, phi);
      for (int c : {0, 1, 2}) {
        RMatrix R = skew2(L, c);
        Report rep = check_coboundary_endo(E, psi, R);
        CHECK(rep.item("agrees with direct endo Lie bialgebra check").pass);
        bool direct = check_endo_lie_bialgebra(LieBialgebra(L, coboundary_cobracket(R)), phi, psi).pass();
        CHECK(rep.pass() == direct);
      }
    }
    // 2 e0^e1 under (diag(1,2), diag(1,1/2)) fails the delta-phi condition
    Matrix phi = fixtures::lambda_scaling(2);
    Report rep = check_coboundary_endo(EndoLieAlgebra(L, phi), inverse(phi), skew2(L, 2));
    CHECK(rep.item("delta-phi condition").pass ==
          check_endo_lie_bialgebra(LieBialgebra(L, coboundary_cobracket(skew2(L, 2))), phi, inverse(phi)).pass());
  }

  TEST_CASE("coboundary endo conditions agree with the direct check, exhaustively") {
    LieAlgebra L = fixtures::nonabelian2();
    int pass = 0, fail = 0;
    for_each_matrix(2, 2, kTri, [&](const Matrix& phi) {
      EndoLieAlgebra E(L, phi);
      if (!check_endo_lie(E).pass()) return true;
      for_each_matrix(2, 2, kTri, [&](const Matrix& psi) {
        if (!check_dually_represents(E, adjoint_rep(L), psi).pass()) {
          CHECK_THROWS_AS(check_coboundary_endo(E, psi, skew2(L, 1)), InvalidInput);
          return true;
        }
        for_each_matrix(2, 2, kTri, [&](const Matrix& r) {
          Report rep = check_coboundary_endo(E, psi, RMatrix(L, Tensor2(r)));
          CHECK(rep.item("agrees with direct endo Lie bialgebra check").pass);
          (rep.pass() ? pass : fail)++;
          return true;
        });
        return true;
      });
      return true;
    });
    CHECK(pass > 0);
    CHECK(fail > 0);
    CHECK_THROWS_AS(check_coboundary_endo(EndoLieAlgebra(L, Matrix{{0, 1}, {1, 0}}), Matrix::identity(2),
                                          skew2(L, 1)),
                    InvalidInput);
  }

  TEST_CASE("coherent homomorphisms of r-matrices") {
    LieAlgebra L = fixtures::nonabelian2();
    RMatrix r1 = skew2(L, 1), r2 = skew2(L, 2);
    Matrix phi = fixtures::lambda_scaling(2);
    CHECK(check_coherent_hom_r(r1, r1, MapPair(Matrix::identity(2), Matrix::identity(2))).pass());
    CHECK(check_coherent_hom_r(r1, r2, MapPair(phi, inverse(phi))).pass());
    Report wrong = check_coherent_hom_r(r2, r1, MapPair(phi, inverse(phi)));
    CHECK_FALSE(wrong.pass());
    CHECK_FALSE(wrong.item("left balance").pass);
    CHECK(wrong.item("equivalence of r-matrices").pass);
    CHECK_THROWS_AS(check_coherent_hom_r(r1, RMatrix(fixtures::sl2(), Tensor2(3, 3)),
                                         MapPair(Matrix(2, 2), Matrix(2, 2))),
                    ShapeError);
  }

  TEST_CASE("invertible coherent pairs are equivalences of r-matrices") {
    LieAlgebra L = fixtures::nonabelian2();
    int eq = 0;
    for (int a : {0, 1, 2})
      for (int b : {0, 1, 2}) {
        RMatrix Rg = skew2(L, a), Rh = skew2(L, b);
        for_each_matrix(2, 2, kTri, [&](const Matrix& phi) {
          if (!is_invertible(phi)) return true;
          Report rep = check_coherent_hom_r(Rg, Rh, MapPair(phi, inverse(phi)));
          REQUIRE(rep.has("equivalence of r-matrices"));
          CHECK(rep.item("equivalence of r-matrices").pass);
          eq += rep.pass();
          return true;
        });
      }
    CHECK(eq > 0);
  }

  TEST_CASE("coherent r-matrix homs are coherent bialgebra homs") {
    LieAlgebra L = fixtures::nonabelian2();
    int hits = 0;
    for (int a : {0, 1, -1})
      for (int b : {0, 1, -1}) {
        RMatrix Rg = skew2(L, a), Rh = skew2(L, b);
        LieBialgebra Bg(L, coboundary_cobracket(Rg)), Bh(L, coboundary_cobracket(Rh));
        for_each_matrix(2, 2, kTri, [&](const Matrix& phi) {
          for_each_matrix(2, 2, kTri, [&](const Matrix& psi) {
            MapPair p(phi, psi);
            if (check_coherent_hom_r(Rg, Rh, p).pass()) {
              CHECK(check_coherent_hom(Bg, Bh, p).pass());
              ++hits;
            }
            return true;
          });
          return true;
        });
      }
    CHECK(hits > 9);
  }

  TEST_CASE("psi-CYBE and the skew shortcut") {
    LieAlgebra L = fixtures::nonabelian2();
    for (int lam : {-1, 2}) {
      Matrix phi = fixtures::lambda_scaling(lam);
      EndoLieAlgebra E(L, phi);
      for_each_matrix(2, 2, kTri, [&](const Matrix& psi) {
        for (int c : {0, 1, -1}) {
          Report rep = check_psi_cybe(E, psi, skew2(L, c));
          CHECK(rep.item("skew shortcut").pass);
          CHECK(rep.item("phi-psi balance").pass == rep.item("psi-phi balance").pass);
        }
        return true;
      });
    }
    // Non-skew r: the two balances can differ and the shortcut has nothing to say.
    LieAlgebra ab = LieAlgebra::abelian(2);
    Report rep = check_psi_cybe(EndoLieAlgebra(ab, Matrix::diagonal({1, 0})), Matrix::identity(2),
                                RMatrix(ab, Tensor2(e(2, 0, 1))));
    CHECK(rep.item("phi-psi balance").pass);
    CHECK_FALSE(rep.item("psi-phi balance").pass);
    CHECK(rep.item("skew shortcut").pass);
    CHECK_FALSE(rep.item("skew shortcut").note.empty());
    CHECK_FALSE(rep.pass());
  }

  TEST_CASE("double of a Lie bialgebra") {
    LieAlgebra L = fixtures::nonabelian2();
    for (const LieBialgebra& B : {LieBialgebra(L, Cobracket::zero(2)),
                                  LieBialgebra(L, coboundary_cobracket(skew2(L, 1))),
                                  LieBialgebra(fixtures::sl2(), coboundary_cobracket(RMatrix(
                                                                    fixtures::sl2(), fixtures::sl2_standard_r())))}) {
      DoubleResult d = double_rmatrix(B);
      CHECK(d.report.pass());
      CHECK_FALSE(d.endo.has_value());
      CHECK(d.big == manin_from_bialgebra(B).big());
      CHECK(check_cybe(d.r).pass());
      CHECK(check_sym_invariance(d.r).pass());
      CHECK(d.delta_r == coboundary_cobracket(d.r));
    }
    LieBialgebra B0(L, Cobracket::zero(2));
    for (int lam : {-1, 1, 2}) {
      Matrix phi = fixtures::lambda_scaling(lam);
      DoubleResult d = double_rmatrix(B0, std::make_pair(phi, inverse(phi)));
      CHECK(d.report.pass());
      REQUIRE(d.endo.has_value());
      CHECK(d.endo->fwd() == block_diag(phi, inverse(phi).transpose()));
      CHECK(d.endo->bwd() == block_diag(inverse(phi), phi.transpose()));
    }
    LieAlgebra bad = LieAlgebra::from_brackets(3, {{0, 1, {0, 1, 0}}, {1, 2, {1, 0, 0}}});
    CHECK_THROWS_AS(double_rmatrix(LieBialgebra(bad, Cobracket::zero(3))), InvalidInput);
    CHECK_THROWS_AS(double_rmatrix(B0, std::make_pair(Matrix{{0, 1}, {1, 0}}, Matrix::identity(2))),
                    InvalidInput);
  }
}
