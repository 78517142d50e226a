#pragma once

#include "lbw/lie.hpp"

namespace lbw {

// A Lie algebra with a linear endomorphism phi (not required invertible).
class EndoLieAlgebra {
 public:
  EndoLieAlgebra() = default;
  EndoLieAlgebra(LieAlgebra algebra, LinearMap phi);
  const LieAlgebra& algebra() const { return algebra_; }
  const LinearMap& phi() const { return phi_; }

 private:
  LieAlgebra algebra_;
  LinearMap phi_;
};

// (V, rho, alpha).
class EndoRepresentation {
 public:
  EndoRepresentation() = default;
  EndoRepresentation(Representation rep, LinearMap alpha);
  const Representation& rep() const { return rep_; }
  const LinearMap& alpha() const { return alpha_; }

 private:
  Representation rep_;
  LinearMap alpha_;
};

Report check_endo_lie(const EndoLieAlgebra& E);
// alpha rho(x) = rho(phi x) alpha.
Report check_endo_rep(const EndoLieAlgebra& E, const EndoRepresentation& ER);
// beta rho(phi x) = rho(x) beta.
Report check_dually_represents(const EndoLieAlgebra& E, const Representation& R,
                               const LinearMap& beta);
// (V*, rho*, beta^T); throws InvalidInput unless beta dually represents.
EndoRepresentation build_dual_endo_rep(const EndoLieAlgebra& E, const Representation& R,
                                       const LinearMap& beta);

EndoLieAlgebra endo_semidirect(const EndoLieAlgebra& E, const EndoRepresentation& ER);
EndoLieAlgebra endo_semidirect(Unchecked, const EndoLieAlgebra& E, const EndoRepresentation& ER);

// vphi: V1 -> V2 invertible, intertwining rho and alpha.
Report check_rep_equivalence(const EndoRepresentation& ER1, const EndoRepresentation& ER2,
                             const LinearMap& vphi);

}  // namespace lbw
