#include "lbw/bialg.hpp"

#include <string>

namespace lbw {

namespace {

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols)
    throw ShapeError(std::string(what) + " must be " + std::to_string(rows) + "x" +
                     std::to_string(cols) + ", got " + shape(m));
}

// (id (x) phi) delta_g = (psi (x) id) delta_h phi, phi: g -> h, psi: h -> g.
void polarized_delta(Report& rep, const Cobracket& dg, const Cobracket& dh, const LinearMap& phi,
                     const LinearMap& psi, const char* identity) {
  auto& it = rep.add(identity, "(id (x) phi) delta_g(x) = (psi (x) id) delta_h(phi(x))");
  for (std::size_t i = 0; i < dg.dim() && it.pass; ++i) {
    Matrix d = dg.slice(i) * phi.transpose() - psi * dh.apply(phi.column(i));
    if (!d.is_zero()) Report::fail(it, {i}, to_string(d));
  }
}

// psi[phi(x), y]_h = [x, psi(y)]_g.
void polarized_bracket(Report& rep, const LieAlgebra& g, const LieAlgebra& h,
                       const LinearMap& phi, const LinearMap& psi, const char* identity) {
  auto& it = rep.add(identity, "psi[phi(x),y]_h = [x,psi(y)]_g");
  for (std::size_t i = 0; i < g.dim() && it.pass; ++i) {
    Vector px = phi.column(i);
    for (std::size_t j = 0; j < h.dim() && it.pass; ++j) {
      Vector d = psi * h.bracket(px, basis_vector(h.dim(), j)) -
                 g.bracket(basis_vector(g.dim(), i), psi.column(j));
      if (!is_zero(d)) Report::fail(it, {i, j}, to_string(d));
    }
  }
}

}  // namespace

Cobracket::Cobracket(Tensor3 d) : d_(std::move(d)) {
  if (!d_.is_cubic()) throw ShapeError("cobracket constants must form an n x n x n array");
  const std::size_t n = d_.dim0();
  for (std::size_t k = 0; k < n; ++k) {
    Matrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s(i, j) = d_(k, i, j);
    slices_.push_back(std::move(s));
  }
}

Matrix Cobracket::apply(const Vector& x) const {
  if (x.size() != dim()) throw ShapeError("cobracket argument length mismatch");
  Matrix t(dim(), dim());
  for (std::size_t k = 0; k < dim(); ++k)
    if (sgn(x[k]) != 0) t += x[k] * slices_[k];
  return t;
}

LieBialgebra::LieBialgebra(LieAlgebra algebra, Cobracket delta)
    : algebra_(std::move(algebra)), delta_(std::move(delta)) {
  if (algebra_.dim() != delta_.dim())
    throw ShapeError("bialgebra: algebra has dim " + std::to_string(algebra_.dim()) +
                     ", cobracket has dim " + std::to_string(delta_.dim()));
}

MapPair::MapPair(LinearMap fwd, LinearMap bwd) : fwd_(std::move(fwd)), bwd_(std::move(bwd)) {
  if (fwd_.rows() != bwd_.cols() || fwd_.cols() != bwd_.rows())
    throw ShapeError("map pair shapes do not match: fwd " + shape(fwd_) + ", bwd " + shape(bwd_));
}

MapPair compose(const MapPair& first, const MapPair& second) {
  return MapPair(second.fwd() * first.fwd(), first.bwd() * second.bwd());
}

Report check_lie_coalgebra(const Cobracket& delta) {
  const std::size_t n = delta.dim();
  Report rep("lie-coalgebra");
  auto& anti = rep.add("coantisymmetry", "delta = -tau delta");
  for (std::size_t k = 0; k < n && anti.pass; ++k) {
    Matrix s = delta.slice(k) + delta.slice(k).transpose();
    if (!s.is_zero()) Report::fail(anti, {k}, to_string(s));
  }
  auto& cj = rep.add("co-jacobi", "(id + sigma + sigma^2)(id (x) delta) delta = 0");
  for (std::size_t k = 0; k < n && cj.pass; ++k) {
    Tensor3 t(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& dkij = delta.d(k, i, j);
        if (sgn(dkij) == 0) continue;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) t(i, a, b) += dkij * delta.d(j, a, b);
      }
    Tensor3 s1 = cyclic_rotate(t);
    Tensor3 res = t + s1 + cyclic_rotate(s1);
    if (!res.is_zero()) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c)
            if (sgn(res(a, b, c)) != 0 && cj.pass)
              Report::fail(cj, {k, a, b, c}, to_string(res(a, b, c)));
    }
  }
  return rep;
}

LieAlgebra dualize(const Cobracket& delta) {
  Report r = check_lie_coalgebra(delta);
  if (const ReportItem* f = r.first_failure())
    throw InvalidInput("not a Lie coalgebra: " + f->identity + " fails, residual " + f->residual);
  return dualize(unchecked, delta);
}

LieAlgebra dualize(Unchecked, const Cobracket& delta) {
  const std::size_t n = delta.dim();
  Tensor3 c(n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c(i, j, k) = delta.d(k, i, j);
  return LieAlgebra::from_constants(std::move(c));
}

Cobracket dualize_inv(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  Tensor3 d(n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) d(k, i, j) = L.c(i, j, k);
  return Cobracket(std::move(d));
}

Report check_coalgebra_hom(const Cobracket& src, const Cobracket& tgt, const LinearMap& f) {
  require_shape(f, tgt.dim(), src.dim(), "coalgebra map");
  Report rep("coalgebra-hom");
  auto& it = rep.add("cobracket-preserved", "(f (x) f) delta_src = delta_tgt f");
  for (std::size_t k = 0; k < src.dim() && it.pass; ++k) {
    Matrix d = f * src.slice(k) * f.transpose() - tgt.apply(f.column(k));
    if (!d.is_zero()) Report::fail(it, {k}, to_string(d));
  }
  return rep;
}

namespace {

void cocycle(Report& rep, const LieAlgebra& L, const Cobracket& delta) {
  const std::size_t n = L.dim();
  auto& it = rep.add("cocycle",
                     "delta[x,y] = (ad x (x) 1 + 1 (x) ad x) delta(y) - (ad y (x) 1 + 1 (x) ad y) "
                     "delta(x)");
  for (std::size_t i = 0; i < n && it.pass; ++i)
    for (std::size_t j = i + 1; j < n && it.pass; ++j) {
      const Matrix& ai = L.ad(i);
      const Matrix& aj = L.ad(j);
      const Matrix& di = delta.slice(i);
      const Matrix& dj = delta.slice(j);
      Matrix d = delta.apply(L.bracket(i, j)) - (ai * dj + dj * ai.transpose()) +
                 (aj * di + di * aj.transpose());
      if (!d.is_zero()) Report::fail(it, {i, j}, to_string(d));
    }
}

}  // namespace

Report bialgebra_verdict(const LieAlgebra& L, const Cobracket& delta) {
  if (L.dim() != delta.dim()) throw ShapeError("bialgebra: algebra and cobracket dims differ");
  Report rep("lie-bialgebra");
  rep.add_from("lie-algebra", "antisymmetry and Jacobi", check_lie_algebra(L));
  rep.add_from("lie-coalgebra", "coantisymmetry and co-Jacobi", check_lie_coalgebra(delta));
  cocycle(rep, L, delta);
  return rep;
}

Report check_lie_bialgebra(const LieBialgebra& B) {
  Report alg = check_lie_algebra(B.algebra());
  if (const ReportItem* f = alg.first_failure())
    throw InvalidInput("bialgebra component 'algebra' is not a Lie algebra: " + f->identity +
                       " fails, residual " + f->residual);
  Report co = check_lie_coalgebra(B.delta());
  if (const ReportItem* f = co.first_failure())
    throw InvalidInput("bialgebra component 'delta' is not a Lie coalgebra: " + f->identity +
                       " fails, residual " + f->residual);
  Report rep("lie-bialgebra");
  cocycle(rep, B.algebra(), B.delta());
  return rep;
}

Report check_endo_lie_bialgebra(const LieBialgebra& B, const LinearMap& phi,
                                const LinearMap& psi) {
  const std::size_t n = B.dim();
  require_shape(phi, n, n, "phi");
  require_shape(psi, n, n, "psi");
  Report rep("endo-lie-bialgebra");
  rep.add_from("phi-lie-endomorphism", "phi([x,y]) = [phi(x),phi(y)]",
               check_lie_hom(B.algebra(), B.algebra(), phi));
  rep.add_from("psi-coalgebra-endomorphism", "(psi (x) psi) delta = delta psi",
               check_coalgebra_hom(B.delta(), B.delta(), psi));
  polarized_delta(rep, B.delta(), B.delta(), phi, psi, "delta-phi-psi-compatibility");
  polarized_bracket(rep, B.algebra(), B.algebra(), phi, psi, "bracket-phi-psi-compatibility");
  return rep;
}

Report check_coherent_hom(const LieBialgebra& Bg, const LieBialgebra& Bh, const MapPair& p) {
  require_shape(p.fwd(), Bh.dim(), Bg.dim(), "forward map");
  Report rep("coherent-hom");
  rep.add_from("fwd-lie-hom", "phi([x,y]_g) = [phi(x),phi(y)]_h",
               check_lie_hom(Bg.algebra(), Bh.algebra(), p.fwd()));
  rep.add_from("bwd-coalgebra-hom", "(psi (x) psi) delta_h = delta_g psi",
               check_coalgebra_hom(Bh.delta(), Bg.delta(), p.bwd()));
  polarized_delta(rep, Bg.delta(), Bh.delta(), p.fwd(), p.bwd(), "polarized-delta-compatibility");
  polarized_bracket(rep, Bg.algebra(), Bh.algebra(), p.fwd(), p.bwd(),
                    "polarized-bracket-compatibility");
  return rep;
}

Report check_standard_hom(const LieBialgebra& Bg, const LieBialgebra& Bh, const LinearMap& f) {
  require_shape(f, Bh.dim(), Bg.dim(), "map");
  Report rep("standard-hom");
  rep.add_from("lie-hom", "f([x,y]_g) = [f(x),f(y)]_h", check_lie_hom(Bg.algebra(), Bh.algebra(), f));
  rep.add_from("coalgebra-hom", "delta_h f = (f (x) f) delta_g",
               check_coalgebra_hom(Bg.delta(), Bh.delta(), f));
  return rep;
}

Report check_tbgs_weak_hom(const LieBialgebra& Bg, const LieBialgebra& Bh, const MapPair& p) {
  if (!(Bg.algebra() == Bh.algebra()))
    throw InvalidInput("weak homomorphisms need both bialgebras on the same Lie algebra");
  const std::size_t n = Bg.dim();
  require_shape(p.fwd(), n, n, "phi");
  Report rep("tbgs-weak-hom");
  rep.add_from("phi-lie-endomorphism", "phi([x,y]) = [phi(x),phi(y)]",
               check_lie_hom(Bg.algebra(), Bg.algebra(), p.fwd()));
  rep.add_from("psi-coalgebra-hom (g,delta_h) -> (g,delta_g)",
               "(psi (x) psi) delta_h = delta_g psi",
               check_coalgebra_hom(Bh.delta(), Bg.delta(), p.bwd()));
  polarized_bracket(rep, Bg.algebra(), Bg.algebra(), p.fwd(), p.bwd(), "bracket-phi-psi-compatibility");
  Report pp;
  polarized_delta(pp, Bg.delta(), Bh.delta(), p.fwd(), p.bwd(), "x");
  auto& diag = rep.add_diagnostic("polarized-delta-compatibility (coherent condition)",
                                  "(id (x) phi) delta_g = (psi (x) id) delta_h phi");
  diag.pass = pp.pass();
  if (!diag.pass) {
    diag.witness = pp.items().front().witness;
    diag.residual = pp.items().front().residual;
  }
  return rep;
}

}  // namespace lbw
