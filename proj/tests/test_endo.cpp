#include <doctest.h>

#include "support.hpp"

using namespace lbw;

namespace {

// Torus automorphism of sl2: e -> 2e, h -> h, f -> f/2.
Matrix sl2_torus() { return Matrix::diagonal({2, 1, Scalar(1, 2)}); }

}  // namespace

TEST_SUITE("endo") {
  TEST_CASE("endo Lie algebras") {
    LieAlgebra L = fixtures::nonabelian2();
    for (int lam : {-1, 0, 1, 2, 3}) CHECK(check_endo_lie(EndoLieAlgebra(L, fixtures::lambda_scaling(lam))).pass());
    Report r = check_endo_lie(EndoLieAlgebra(L, Matrix{{0, 1}, {1, 0}}));
    CHECK_FALSE(r.pass());
    CHECK(r.first_failure()->witness.size() == 2);
    CHECK(check_endo_lie(EndoLieAlgebra(fixtures::sl2(), sl2_torus())).pass());
    CHECK_THROWS_AS(EndoLieAlgebra(L, Matrix(3, 3)), ShapeError);
  }

  TEST_CASE("adjoint endo representation") {
    LieAlgebra L = fixtures::nonabelian2();
    Matrix phi = fixtures::lambda_scaling(2);
    EndoLieAlgebra E(L, phi);
    CHECK(check_endo_rep(E, EndoRepresentation(adjoint_rep(L), phi)).pass());
    // alpha = id is not compatible with phi = diag(1, 2)
    CHECK_FALSE(check_endo_rep(E, EndoRepresentation(adjoint_rep(L), Matrix::identity(2))).pass());
  }

  TEST_CASE("dual endo representation from a dually representing map") {
    LieAlgebra L = fixtures::nonabelian2();
    Matrix phi = fixtures::lambda_scaling(2);
    EndoLieAlgebra E(L, phi);
    Representation ad = adjoint_rep(L);
    Matrix beta = inverse(phi);
    CHECK(check_dually_represents(E, ad, beta).pass());
    EndoRepresentation D = build_dual_endo_rep(E, ad, beta);
    CHECK(D.rep() == dual_rep(ad));
    CHECK(D.alpha() == beta.transpose());
    CHECK(check_endo_rep(E, D).pass());
    CHECK_FALSE(check_dually_represents(E, ad, phi).pass());
    CHECK_THROWS_AS(build_dual_endo_rep(E, ad, phi), InvalidInput);
  }

  TEST_CASE("dual construction commutes with the check on random scalings") {
    // beta dually represents <=> (V*, rho*, beta^T) is an endo rep, over many betas.
    LieAlgebra L = fixtures::nonabelian2();
    EndoLieAlgebra E(L, fixtures::lambda_scaling(-1));
    Representation ad = adjoint_rep(L);
    test::Rng rng(17);
    int yes = 0;
    for (int t = 0; t < 200; ++t) {
      Matrix beta(2, 2);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) beta(i, j) = rng.range(-1, 1);
      bool d = check_dually_represents(E, ad, beta).pass();
      bool e = check_endo_rep(E, EndoRepresentation(dual_rep(ad), beta.transpose())).pass();
      CHECK(d == e);
      yes += d;
    }
    CHECK(yes > 0);
  }

  TEST_CASE("endo semidirect product") {
    LieAlgebra L = fixtures::nonabelian2();
    Matrix phi = fixtures::lambda_scaling(2);
    EndoLieAlgebra E(L, phi);
    EndoLieAlgebra S = endo_semidirect(E, EndoRepresentation(adjoint_rep(L), phi));
    CHECK(S.phi() == block_diag(phi, phi));
    CHECK(check_lie_algebra(S.algebra()).pass());
    CHECK(check_endo_lie(S).pass());
    EndoRepresentation bad(adjoint_rep(L), Matrix::identity(2));
    CHECK_THROWS_AS(endo_semidirect(E, bad), InvalidInput);
    CHECK_FALSE(check_endo_lie(endo_semidirect(unchecked, E, bad)).pass());
  }

  TEST_CASE("representation equivalence") {
    LieAlgebra L = fixtures::nonabelian2();
    EndoRepresentation A(adjoint_rep(L), fixtures::lambda_scaling(2));
    CHECK(check_rep_equivalence(A, A, Matrix::identity(2)).pass());
    CHECK(check_rep_equivalence(A, A, Scalar(3) * Matrix::identity(2)).pass());
    Report z = check_rep_equivalence(A, A, Matrix(2, 2));
    CHECK_FALSE(z.item("invertible").pass);
    Report s = check_rep_equivalence(A, A, Matrix{{0, 1}, {1, 0}});
    CHECK(s.item("invertible").pass);
    CHECK_FALSE(s.item("intertwines-rho").pass);
  }

  TEST_CASE("quadratic endo Lie algebra: Killing adjoint and Gram equivalence") {
    LieAlgebra L = fixtures::sl2();
    BilinearForm K = killing_form(L);
    Matrix phi = sl2_torus();
    EndoLieAlgebra E(L, phi);
    Representation ad = adjoint_rep(L);
    Matrix hat = adjoint_of_endomorphism(L, K, phi);
    CHECK(hat == inverse(K.gram()) * phi.transpose() * K.gram());
    CHECK(check_dually_represents(E, ad, hat).pass());
    EndoRepresentation dual = build_dual_endo_rep(E, ad, hat);
    EndoRepresentation self(ad, phi);
    CHECK(check_rep_equivalence(self, dual, K.gram()).pass());
    // Converse direction: the equivalence's matrix is again an invariant form.
    CHECK(check_invariant_form(L, BilinearForm(K.gram())).pass());
  }

  TEST_CASE("equivalence to the coadjoint forces an invariant form") {
    // Over all 3x3 maps with entries in {-1,0,1} vs (sl2, ad, id) -> (sl2*, ad*, id):
    // equivalences are exactly the nondegenerate invariant forms.
    LieAlgebra L = fixtures::sl2();
    EndoRepresentation self(adjoint_rep(L), Matrix::identity(3));
    EndoRepresentation co(dual_rep(adjoint_rep(L)), Matrix::identity(3));
    std::size_t n_eq = 0;
    std::vector<Scalar> vals{-1, 0, 1};
    for (std::size_t code = 0; code < 19683; ++code) {
      std::size_t c = code;
      Matrix m(3, 3);
      for (std::size_t k = 0; k < 9; ++k, c /= 3) m(k / 3, k % 3) = vals[c % 3];
      bool eq = check_rep_equivalence(self, co, m).pass();
      Report f = check_invariant_form(L, BilinearForm(m));
      bool form = f.item("nondegenerate").pass && f.item("invariant").pass;
      CHECK(eq == form);
      n_eq += eq;
    }
    // Invariant forms are multiples of the Killing form (entries 4 and 8), so
    // none has all entries in {-1,0,1}; the scaled one with entries 1/2, 1 does.
    CHECK(n_eq == 0);
    Matrix k8 = Scalar(1, 8) * killing_form(L).gram();
    CHECK(check_rep_equivalence(self, co, k8).pass());
    CHECK(check_rep_equivalence(self, co, -k8).pass());
  }
}
