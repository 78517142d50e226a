#pragma once

#include <optional>

#include "lbw/manin.hpp"

namespace lbw {

class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(LieAlgebra algebra, Tensor2 r);
  const LieAlgebra& algebra() const { return algebra_; }
  const Tensor2& r() const { return r_; }
  std::size_t dim() const { return algebra_.dim(); }

 private:
  LieAlgebra algebra_;
  Tensor2 r_;
};

// delta_r(x) = (id (x) ad x + ad x (x) id)(r).
Cobracket coboundary_cobracket(const RMatrix& R);
Report check_sym_invariance(const RMatrix& R);
// [r12,r13] + [r13,r23] + [r12,r23], with [r12,r23] = sum a_i (x) [b_i,a_j] (x) b_j.
Tensor3 cybe_lhs(const RMatrix& R);
Report check_cybe(const RMatrix& R);
bool is_skew(const Tensor2& r);

Report check_psi_cybe(const EndoLieAlgebra& E, const LinearMap& psi, const RMatrix& R);
// Throws InvalidInput unless phi is an endomorphism and psi dually represents (g, phi).
Report check_coboundary_endo(const EndoLieAlgebra& E, const LinearMap& psi, const RMatrix& R);
Report check_coherent_hom_r(const RMatrix& Rg, const RMatrix& Rh, const MapPair& p);

struct DoubleResult {
  LieAlgebra big;
  RMatrix r;
  Cobracket delta_r;
  std::optional<MapPair> endo;  // (phi + psi*, psi + phi*) when an endo pair was given
  Report report;
};

// Throws InvalidInput if B is not a Lie bialgebra or (phi, psi) fails
// check_endo_lie_bialgebra.
DoubleResult double_rmatrix(const LieBialgebra& B,
                            const std::optional<std::pair<LinearMap, LinearMap>>& endo = std::nullopt);

}  // namespace lbw
