#include "lbw/endo.hpp"

#include <string>

namespace lbw {

namespace {

void require_square(const LinearMap& m, std::size_t n, const char* what) {
  if (m.rows() != n || m.cols() != n)
    throw ShapeError(std::string(what) + " must be " + std::to_string(n) + "x" +
                     std::to_string(n) + ", got " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()));
}

}  // namespace

EndoLieAlgebra::EndoLieAlgebra(LieAlgebra algebra, LinearMap phi)
    : algebra_(std::move(algebra)), phi_(std::move(phi)) {
  require_square(phi_, algebra_.dim(), "endomorphism");
}

EndoRepresentation::EndoRepresentation(Representation rep, LinearMap alpha)
    : rep_(std::move(rep)), alpha_(std::move(alpha)) {
  require_square(alpha_, rep_.dim_v(), "representation operator");
}

Report check_endo_lie(const EndoLieAlgebra& E) {
  Report rep("endo-lie");
  rep.add_from("phi-endomorphism", "phi([x,y]) = [phi(x),phi(y)]",
               check_lie_hom(E.algebra(), E.algebra(), E.phi()));
  return rep;
}

Report check_endo_rep(const EndoLieAlgebra& E, const EndoRepresentation& ER) {
  const LieAlgebra& L = E.algebra();
  const Representation& R = ER.rep();
  if (R.algebra().dim() != L.dim()) throw ShapeError("representation is of another algebra");
  Report rep("endo-rep");
  auto& it = rep.add("alpha-intertwines", "alpha(rho(x)v) = rho(phi(x))(alpha(v))");
  for (std::size_t i = 0; i < L.dim() && it.pass; ++i) {
    Matrix d = ER.alpha() * R.rho(i) - R.act(E.phi().column(i)) * ER.alpha();
    if (!d.is_zero()) Report::fail(it, {i}, to_string(d));
  }
  return rep;
}

Report check_dually_represents(const EndoLieAlgebra& E, const Representation& R,
                               const LinearMap& beta) {
  const LieAlgebra& L = E.algebra();
  if (R.algebra().dim() != L.dim()) throw ShapeError("representation is of another algebra");
  require_square(beta, R.dim_v(), "beta");
  Report rep("dually-represents");
  auto& it = rep.add("beta-dual-intertwines", "beta(rho(phi(x))v) = rho(x)(beta(v))");
  for (std::size_t i = 0; i < L.dim() && it.pass; ++i) {
    Matrix d = beta * R.act(E.phi().column(i)) - R.rho(i) * beta;
    if (!d.is_zero()) Report::fail(it, {i}, to_string(d));
  }
  return rep;
}

EndoRepresentation build_dual_endo_rep(const EndoLieAlgebra& E, const Representation& R,
                                       const LinearMap& beta) {
  Report r = check_dually_represents(E, R, beta);
  if (const ReportItem* f = r.first_failure())
    throw InvalidInput("beta does not dually represent: witness x=e_" +
                       std::to_string(f->witness.at(0)) + ", residual " + f->residual);
  return EndoRepresentation(dual_rep(R), beta.transpose());
}

EndoLieAlgebra endo_semidirect(const EndoLieAlgebra& E, const EndoRepresentation& ER) {
  Report r = check_endo_rep(E, ER);
  if (const ReportItem* f = r.first_failure())
    throw InvalidInput("not an endo representation: witness x=e_" +
                       std::to_string(f->witness.at(0)) + ", residual " + f->residual);
  return EndoLieAlgebra(semidirect_product(E.algebra(), ER.rep()), block_diag(E.phi(), ER.alpha()));
}

EndoLieAlgebra endo_semidirect(Unchecked, const EndoLieAlgebra& E, const EndoRepresentation& ER) {
  return EndoLieAlgebra(semidirect_product(unchecked, E.algebra(), ER.rep()),
                        block_diag(E.phi(), ER.alpha()));
}

Report check_rep_equivalence(const EndoRepresentation& ER1, const EndoRepresentation& ER2,
                             const LinearMap& vphi) {
  const Representation& R1 = ER1.rep();
  const Representation& R2 = ER2.rep();
  if (R1.algebra().dim() != R2.algebra().dim())
    throw ShapeError("representations of algebras of different dimension");
  if (vphi.rows() != R2.dim_v() || vphi.cols() != R1.dim_v())
    throw ShapeError("equivalence map has the wrong shape");
  Report rep("rep-equivalence");
  auto& inv = rep.add("invertible", "vphi is a linear isomorphism");
  if (!is_invertible(vphi)) Report::fail(inv, {}, "not invertible");
  auto& rho = rep.add("intertwines-rho", "vphi(rho1(x)v) = rho2(x)(vphi(v))");
  for (std::size_t i = 0; i < R1.algebra().dim() && rho.pass; ++i) {
    Matrix d = vphi * R1.rho(i) - R2.rho(i) * vphi;
    if (!d.is_zero()) Report::fail(rho, {i}, to_string(d));
  }
  auto& al = rep.add("intertwines-alpha", "vphi alpha1 = alpha2 vphi");
  Matrix d = vphi * ER1.alpha() - ER2.alpha() * vphi;
  if (!d.is_zero()) Report::fail(al, {}, to_string(d));
  return rep;
}

}  // namespace lbw
