#pragma once

#include <optional>

#include "lbw/cybe.hpp"

namespace lbw {

// T: V -> g stored as a dim(g) x dim(V) matrix.
class OOperator {
 public:
  OOperator() = default;
  OOperator(LieAlgebra algebra, Representation rep, LinearMap T,
            std::optional<LinearMap> phi = std::nullopt,
            std::optional<LinearMap> alpha = std::nullopt);

  const LieAlgebra& algebra() const { return algebra_; }
  const Representation& rep() const { return rep_; }
  const LinearMap& T() const { return T_; }
  const std::optional<LinearMap>& phi() const { return phi_; }
  const std::optional<LinearMap>& alpha() const { return alpha_; }
  bool has_endo() const { return phi_.has_value(); }

 private:
  LieAlgebra algebra_;
  Representation rep_;
  LinearMap T_;
  std::optional<LinearMap> phi_, alpha_;
};

Report check_ooperator(const OOperator& O);

// r# : g* -> g, entry (j, i) = r(i, j); the operator is on the coadjoint rep.
OOperator rsharp_of(const RMatrix& R);
// Same, carrying endo data (phi, psi^T).
OOperator rsharp_of(const EndoLieAlgebra& E, const LinearMap& psi, const RMatrix& R);
RMatrix r_of_sharp(const LinearMap& f, const LieAlgebra& L);
// psi-CYBE verdict next to the endo O-operator verdict of r#; they must agree
// for skew r.
Report check_sharp_bridge(const EndoLieAlgebra& E, const LinearMap& psi, const RMatrix& R);

// phi: g -> h, alpha: V_g -> V_h.
Report check_hom_ooperators(const OOperator& Og, const OOperator& Oh, const LinearMap& phi,
                            const LinearMap& alpha);

// r_T = T - sigma(T) on g |x rho* V*.
RMatrix lift_to_rmatrix(const OOperator& O);

struct LiftedHom {
  MapPair pair;  // (phi + beta*, psi + alpha*)
  Report report;
};

// psi: h -> g, beta: V_h -> V_g. Throws InvalidInput unless (phi, alpha) is a
// homomorphism of O-operators.
LiftedHom lift_hom_to_double(const OOperator& Og, const OOperator& Oh, const LinearMap& phi,
                             const LinearMap& alpha, const LinearMap& psi, const LinearMap& beta);

// e_i . e_j = sum_k p(i,j,k) e_k.
class PreLieAlgebra {
 public:
  PreLieAlgebra() = default;
  explicit PreLieAlgebra(Tensor3 p);
  std::size_t dim() const { return p_.dim0(); }
  const Tensor3& constants() const { return p_; }
  const Scalar& p(std::size_t i, std::size_t j, std::size_t k) const { return p_(i, j, k); }
  Vector product(const Vector& x, const Vector& y) const;

  friend bool operator==(const PreLieAlgebra& a, const PreLieAlgebra& b) { return a.p_ == b.p_; }

 private:
  Tensor3 p_;
};

Report check_prelie(const PreLieAlgebra& A);
// f: A -> B with f(x.y) = f(x).f(y).
Report check_prelie_hom(const PreLieAlgebra& A, const PreLieAlgebra& B, const LinearMap& f);

struct SubAdjacent {
  LieAlgebra lie;
  Representation left;  // L(e_i) e_j = e_i . e_j
};
SubAdjacent sub_adjacent(const PreLieAlgebra& A);

struct OHom {
  LinearMap phi;
  LinearMap alpha;
};

// id_A : A -> g(A) on (A, L).
OOperator functor_F(const PreLieAlgebra& A);
OHom functor_F(const PreLieAlgebra& A, const PreLieAlgebra& B, const LinearMap& f);
// u . v = rho(T u) v.
PreLieAlgebra functor_G(const OOperator& O);
LinearMap functor_G(const OOperator& Og, const OOperator& Oh, const OHom& h);

// Hom(F(A), O) -> Hom(A, G(O)): (phi, alpha) -> alpha, requires phi = T alpha.
LinearMap adjunction_forward(const PreLieAlgebra& A, const OOperator& O, const OHom& h);
// alpha -> (T alpha, alpha).
OHom adjunction_backward(const PreLieAlgebra& A, const OOperator& O, const LinearMap& alpha);

// Throws InvalidInput if phi is not a pre-Lie endomorphism.
Report check_prelie_endo_conditions(const PreLieAlgebra& A, const LinearMap& phi);

// (phi + theta psi*, theta psi + phi*) between the doubles of A and B.
MapPair theta_lift(const LinearMap& phi, const LinearMap& psi, const Scalar& theta);
// r_id on g(A) |x L* A*, with its coboundary bialgebra.
RMatrix prelie_double(const PreLieAlgebra& A);

}  // namespace lbw
