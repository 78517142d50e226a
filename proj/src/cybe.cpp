#include "lbw/cybe.hpp"

#include <string>

namespace lbw {

namespace {

void require_square(const Matrix& m, std::size_t n, const char* what) {
  if (m.rows() != n || m.cols() != n)
    throw ShapeError(std::string(what) + " must be " + std::to_string(n) + "x" +
                     std::to_string(n));
}

void first_nonzero(const Tensor3& t, ReportItem& it, std::vector<std::size_t> prefix) {
  for (std::size_t a = 0; a < t.dim0(); ++a)
    for (std::size_t b = 0; b < t.dim1(); ++b)
      for (std::size_t c = 0; c < t.dim2(); ++c)
        if (sgn(t(a, b, c)) != 0) {
          auto w = prefix;
          w.insert(w.end(), {a, b, c});
          Report::fail(it, w, to_string(t(a, b, c)));
          return;
        }
}

}  // namespace

RMatrix::RMatrix(LieAlgebra algebra, Tensor2 r) : algebra_(std::move(algebra)), r_(std::move(r)) {
  if (r_.dim_left() != algebra_.dim() || r_.dim_right() != algebra_.dim())
    throw ShapeError("r-matrix must be " + std::to_string(algebra_.dim()) + "x" +
                     std::to_string(algebra_.dim()));
}

bool is_skew(const Tensor2& r) { return (r + flip(r)).is_zero(); }

Cobracket coboundary_cobracket(const RMatrix& R) {
  const LieAlgebra& L = R.algebra();
  const std::size_t n = L.dim();
  const Matrix& r = R.r().entries();
  Tensor3 d(n, n, n);
  for (std::size_t k = 0; k < n; ++k) {
    Matrix s = L.ad(k) * r + r * L.ad(k).transpose();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d(k, i, j) = s(i, j);
  }
  return Cobracket(std::move(d));
}

Report check_sym_invariance(const RMatrix& R) {
  const LieAlgebra& L = R.algebra();
  Matrix s = (R.r() + flip(R.r())).entries();
  Report rep("sym-invariance");
  auto& it = rep.add("r+tau(r) ad-invariant", "(ad(x) (x) id + id (x) ad(x))(r + tau(r)) = 0");
  for (std::size_t k = 0; k < L.dim() && it.pass; ++k) {
    Matrix d = L.ad(k) * s + s * L.ad(k).transpose();
    if (!d.is_zero()) Report::fail(it, {k}, to_string(d));
  }
  return rep;
}

Tensor3 cybe_lhs(const RMatrix& R) {
  const LieAlgebra& L = R.algebra();
  const std::size_t n = L.dim();
  const Tensor2& r = R.r();
  Tensor3 t(n, n, n);
  // [r12,r13] = sum r^{ij} r^{kl} [e_i,e_k] (x) e_j (x) e_l
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t a = 0; a < n; ++a) {
        const Scalar& c = L.c(i, k, a);
        if (sgn(c) == 0) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (sgn(r(i, b)) == 0) continue;
          Scalar cb = c * r(i, b);
          for (std::size_t e = 0; e < n; ++e) t(a, b, e) += cb * r(k, e);
        }
      }
  // [r13,r23] = sum r^{ij} r^{kl} e_i (x) e_k (x) [e_j,e_l]
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t e = 0; e < n; ++e) {
        const Scalar& c = L.c(j, l, e);
        if (sgn(c) == 0) continue;
        for (std::size_t a = 0; a < n; ++a) {
          if (sgn(r(a, j)) == 0) continue;
          Scalar ca = c * r(a, j);
          for (std::size_t b = 0; b < n; ++b) t(a, b, e) += ca * r(b, l);
        }
      }
  // [r12,r23] = sum r^{ij} r^{kl} e_i (x) [e_j,e_k] (x) e_l
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t b = 0; b < n; ++b) {
        const Scalar& c = L.c(j, k, b);
        if (sgn(c) == 0) continue;
        for (std::size_t a = 0; a < n; ++a) {
          if (sgn(r(a, j)) == 0) continue;
          Scalar ca = c * r(a, j);
          for (std::size_t e = 0; e < n; ++e) t(a, b, e) += ca * r(k, e);
        }
      }
  return t;
}

Report check_cybe(const RMatrix& R) {
  Report rep("cybe");
  auto& it = rep.add("cybe", "[r12,r13] + [r13,r23] + [r12,r23] = 0");
  first_nonzero(cybe_lhs(R), it, {});
  return rep;
}

Report check_psi_cybe(const EndoLieAlgebra& E, const LinearMap& psi, const RMatrix& R) {
  const std::size_t n = E.algebra().dim();
  if (R.dim() != n) throw ShapeError("r-matrix and endo Lie algebra dims differ");
  require_square(psi, n, "psi");
  const Matrix& r = R.r().entries();
  const Matrix& phi = E.phi();
  Report rep("psi-cybe");
  rep.add_from("cybe", "[r12,r13] + [r13,r23] + [r12,r23] = 0", check_cybe(R));
  auto& b1 = rep.add("phi-psi balance", "(phi (x) id - id (x) psi)(r) = 0");
  Matrix d1 = phi * r - r * psi.transpose();
  if (!d1.is_zero()) Report::fail(b1, {}, to_string(d1));
  auto& b2 = rep.add("psi-phi balance", "(psi (x) id - id (x) phi)(r) = 0");
  Matrix d2 = psi * r - r * phi.transpose();
  if (!d2.is_zero()) Report::fail(b2, {}, to_string(d2));
  const bool skew = is_skew(R.r());
  auto& sc = rep.add("skew shortcut", "r skew => the two balance conditions agree");
  if (skew && b1.pass != b2.pass) Report::fail(sc, {}, "balance verdicts differ for skew r");
  if (!skew) sc.note = "r is not skew; nothing to assert";
  return rep;
}

Report check_coboundary_endo(const EndoLieAlgebra& E, const LinearMap& psi, const RMatrix& R) {
  const LieAlgebra& L = E.algebra();
  const std::size_t n = L.dim();
  if (R.dim() != n) throw ShapeError("r-matrix and endo Lie algebra dims differ");
  require_square(psi, n, "psi");
  Report pre = check_endo_lie(E);
  if (const ReportItem* f = pre.first_failure())
    throw InvalidInput("phi is not a Lie algebra endomorphism, residual " + f->residual);
  Report dual = check_dually_represents(E, adjoint_rep(L), psi);
  if (const ReportItem* f = dual.first_failure())
    throw InvalidInput("psi does not dually represent (g,phi): witness x=e_" +
                       std::to_string(f->witness.at(0)) + ", residual " + f->residual);

  const Matrix& r = R.r().entries();
  const Matrix& phi = E.phi();
  Report rep("coboundary-endo");
  rep.add_from("r+tau(r) ad-invariant", "(ad(x) (x) id + id (x) ad(x))(r + tau(r)) = 0",
               check_sym_invariance(R));
  auto& inv = rep.add("CYBE tensor ad-invariant",
                      "(ad x (x) id (x) id + id (x) ad x (x) id + id (x) id (x) ad x)(CYBE(r)) = 0");
  Tensor3 t = cybe_lhs(R);
  for (std::size_t k = 0; k < n && inv.pass; ++k) first_nonzero(derivation_action(L.ad(k), t), inv, {k});

  const Matrix A = r * psi.transpose() - phi * r;  // (id (x) psi - phi (x) id)(r)
  const Matrix Bm = psi * r - r * phi.transpose();  // (psi (x) id - id (x) phi)(r)
  auto& co = rep.add("psi coalgebra condition",
                     "(psi ad(x) (x) id)(id (x) psi - phi (x) id)(r) + "
                     "(id (x) psi ad(x))(psi (x) id - id (x) phi)(r) = 0");
  for (std::size_t k = 0; k < n && co.pass; ++k) {
    Matrix pa = psi * L.ad(k);
    Matrix d = pa * A + Bm * pa.transpose();
    if (!d.is_zero()) Report::fail(co, {k}, to_string(d));
  }
  const Matrix C = r * phi.transpose() - psi * r;  // (id (x) phi - psi (x) id)(r)
  auto& dp = rep.add("delta-phi condition",
                     "(ad(x) (x) id + id (x) ad(phi(x)))(id (x) phi - psi (x) id)(r) = 0");
  for (std::size_t k = 0; k < n && dp.pass; ++k) {
    Matrix d = L.ad(k) * C + C * L.ad(phi.column(k)).transpose();
    if (!d.is_zero()) Report::fail(dp, {k}, to_string(d));
  }

  const bool four = rep.pass();
  Cobracket dr = coboundary_cobracket(R);
  const bool direct = bialgebra_verdict(L, dr).pass() &&
                      check_endo_lie_bialgebra(LieBialgebra(L, dr), phi, psi).pass();
  auto& ag = rep.add("agrees with direct endo Lie bialgebra check",
                     "conditions above <=> ((g,phi), delta_r, psi) endo Lie bialgebra");
  if (four != direct)
    Report::fail(ag, {}, std::string("conditions ") + (four ? "pass" : "fail") + ", direct check " +
                             (direct ? "passes" : "fails"));
  return rep;
}

Report check_coherent_hom_r(const RMatrix& Rg, const RMatrix& Rh, const MapPair& p) {
  const std::size_t n = Rg.dim(), m = Rh.dim();
  if (p.fwd().rows() != m || p.fwd().cols() != n)
    throw ShapeError("forward map must be " + std::to_string(m) + "x" + std::to_string(n));
  const Matrix& rg = Rg.r().entries();
  const Matrix& rh = Rh.r().entries();
  const Matrix& phi = p.fwd();
  const Matrix& psi = p.bwd();
  Report rep("coherent-hom-r");
  rep.add_from("fwd-lie-hom", "phi([x,y]_g) = [phi(x),phi(y)]_h",
               check_lie_hom(Rg.algebra(), Rh.algebra(), phi));
  auto& l = rep.add("left balance", "(psi (x) id_h)(r_h) = (id_g (x) phi)(r_g)");
  Matrix dl = psi * rh - rg * phi.transpose();
  if (!dl.is_zero()) Report::fail(l, {}, to_string(dl));
  auto& r = rep.add("right balance", "(id_h (x) psi)(r_h) = (phi (x) id_g)(r_g)");
  Matrix dr = rh * psi.transpose() - phi * rg;
  if (!dr.is_zero()) Report::fail(r, {}, to_string(dr));
  auto& b = rep.add("bracket compatibility", "psi[phi(x),y]_h = [x,psi(y)]_g");
  for (std::size_t i = 0; i < n && b.pass; ++i)
    for (std::size_t j = 0; j < m && b.pass; ++j) {
      Vector d = psi * Rh.algebra().bracket(phi.column(i), basis_vector(m, j)) -
                 Rg.algebra().bracket(basis_vector(n, i), psi.column(j));
      if (!is_zero(d)) Report::fail(b, {i, j}, to_string(d));
    }
  if (n == m && is_invertible(phi) && psi == inverse(phi)) {
    const bool verdict = rep.pass();
    const bool equiv =
        rep.item("fwd-lie-hom").pass && phi * rg * phi.transpose() == rh;
    auto& e = rep.add_diagnostic("equivalence of r-matrices",
                                 "(phi, phi^-1) passes <=> (phi (x) phi)(r_g) = r_h");
    if (verdict != equiv) Report::fail(e, {}, "coherent verdict and equivalence disagree");
  }
  return rep;
}

DoubleResult double_rmatrix(const LieBialgebra& B,
                            const std::optional<std::pair<LinearMap, LinearMap>>& endo) {
  Report br = check_lie_bialgebra(B);
  if (const ReportItem* f = br.first_failure())
    throw InvalidInput("not a Lie bialgebra: " + f->identity + " fails, residual " + f->residual);
  const std::size_t n = B.dim();
  if (endo) {
    Report er = check_endo_lie_bialgebra(B, endo->first, endo->second);
    if (const ReportItem* f = er.first_failure())
      throw InvalidInput("endo pair is not an endo Lie bialgebra structure: " + f->identity +
                         " fails, residual " + f->residual);
  }
  LieAlgebra big = bowtie(standard_matched_pair(B.algebra(), B.delta()));
  Tensor2 r(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) r(i, n + i) = 1;
  RMatrix R(big, r);
  Cobracket dr = coboundary_cobracket(R);

  Report rep("double");
  rep.add_from("double is a Lie algebra", "antisymmetry and Jacobi", check_lie_algebra(big));
  rep.add_from("delta_r Lie bialgebra", "coalgebra axioms and cocycle", bialgebra_verdict(big, dr));

  auto& g_block = rep.add("delta_r restricts to delta on g", "delta_r(e_k) = delta(e_k)");
  for (std::size_t k = 0; k < n && g_block.pass; ++k) {
    Matrix want(2 * n, 2 * n);
    want.set_block(0, 0, B.delta().slice(k));
    Matrix d = dr.slice(k) - want;
    if (!d.is_zero()) Report::fail(g_block, {k}, to_string(d));
  }
  auto& d_block = rep.add("delta_r restricts to -alpha on g*",
                          "delta_r(e^k) = -alpha(e^k), alpha dual to [ , ]_g");
  for (std::size_t k = 0; k < n && d_block.pass; ++k) {
    Matrix want(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) want(n + i, n + j) = -B.algebra().c(i, j, k);
    Matrix d = dr.slice(n + k) - want;
    if (!d.is_zero()) Report::fail(d_block, {n + k}, to_string(d));
  }

  std::optional<MapPair> pair;
  if (endo) {
    const Matrix F = block_diag(endo->first, endo->second.transpose());
    const Matrix G = block_diag(endo->second, endo->first.transpose());
    auto& b1 = rep.add("r balanced by (phi+psi*, psi+phi*)",
                       "((phi+psi*) (x) id - id (x) (psi+phi*))(r) = 0");
    Matrix d1 = F * r.entries() - r.entries() * G.transpose();
    if (!d1.is_zero()) Report::fail(b1, {}, to_string(d1));
    auto& b2 = rep.add("r balanced by (psi+phi*, phi+psi*)",
                       "((psi+phi*) (x) id - id (x) (phi+psi*))(r) = 0");
    Matrix d2 = G * r.entries() - r.entries() * F.transpose();
    if (!d2.is_zero()) Report::fail(b2, {}, to_string(d2));
    rep.add_from("double endo Lie bialgebra", "((g+g*, phi+psi*), delta_r, psi+phi*)",
                 check_endo_lie_bialgebra(LieBialgebra(big, dr), F, G));
    pair = MapPair(F, G);
  }
  return DoubleResult{std::move(big), std::move(R), std::move(dr), std::move(pair), std::move(rep)};
}

}  // namespace lbw
