#include "lbw/manin.hpp"

#include <string>

namespace lbw {

MatchedPair::MatchedPair(LieAlgebra g, LieAlgebra h, Representation rho, Representation mu)
    : g_(std::move(g)), h_(std::move(h)), rho_(std::move(rho)), mu_(std::move(mu)) {
  if (rho_.algebra().dim() != g_.dim() || rho_.dim_v() != h_.dim())
    throw ShapeError("matched pair: rho must be a representation of g on h");
  if (mu_.algebra().dim() != h_.dim() || mu_.dim_v() != g_.dim())
    throw ShapeError("matched pair: mu must be a representation of h on g");
}

Report check_matched_pair(const MatchedPair& M, const std::optional<EndoPair>& endo) {
  const LieAlgebra& g = M.g();
  const LieAlgebra& h = M.h();
  const std::size_t n = g.dim(), m = h.dim();
  Report rep("matched-pair");
  rep.add_from("mu-representation", "mu([a,b]_h) = [mu(a),mu(b)]", check_representation(M.mu()));
  rep.add_from("rho-representation", "rho([x,y]_g) = [rho(x),rho(y)]",
               check_representation(M.rho()));

  auto& c1 = rep.add("rho-compatibility",
                     "rho(x)[a,b] - [rho(x)a,b] - [a,rho(x)b] + rho(mu(a)x)b - rho(mu(b)x)a = 0");
  for (std::size_t i = 0; i < n && c1.pass; ++i) {
    const Matrix& rx = M.rho().rho(i);
    for (std::size_t a = 0; a < m && c1.pass; ++a)
      for (std::size_t b = a + 1; b < m && c1.pass; ++b) {
        Vector d = rx * h.bracket(a, b) - h.bracket(rx.column(a), basis_vector(m, b)) -
                   h.bracket(basis_vector(m, a), rx.column(b)) +
                   M.rho().act(M.mu().rho(a).column(i)).column(b) -
                   M.rho().act(M.mu().rho(b).column(i)).column(a);
        if (!is_zero(d)) Report::fail(c1, {i, a, b}, to_string(d));
      }
  }
  auto& c2 = rep.add("mu-compatibility",
                     "mu(a)[x,y] - [mu(a)x,y] - [x,mu(a)y] + mu(rho(x)a)y - mu(rho(y)a)x = 0");
  for (std::size_t a = 0; a < m && c2.pass; ++a) {
    const Matrix& ma = M.mu().rho(a);
    for (std::size_t x = 0; x < n && c2.pass; ++x)
      for (std::size_t y = x + 1; y < n && c2.pass; ++y) {
        Vector d = ma * g.bracket(x, y) - g.bracket(ma.column(x), basis_vector(n, y)) -
                   g.bracket(basis_vector(n, x), ma.column(y)) +
                   M.mu().act(M.rho().rho(x).column(a)).column(y) -
                   M.mu().act(M.rho().rho(y).column(a)).column(x);
        if (!is_zero(d)) Report::fail(c2, {a, x, y}, to_string(d));
      }
  }

  if (endo) {
    EndoLieAlgebra eg(g, endo->phi_g);
    EndoLieAlgebra eh(h, endo->phi_h);
    rep.add_from("phi_g-endomorphism", "phi_g([x,y]) = [phi_g(x),phi_g(y)]", check_endo_lie(eg));
    rep.add_from("phi_h-endomorphism", "phi_h([a,b]) = [phi_h(a),phi_h(b)]", check_endo_lie(eh));
    rep.add_from("(g,mu,phi_g) endo rep of (h,phi_h)", "phi_g(mu(a)x) = mu(phi_h(a))(phi_g(x))",
                 check_endo_rep(eh, EndoRepresentation(M.mu(), endo->phi_g)));
    rep.add_from("(h,rho,phi_h) endo rep of (g,phi_g)", "phi_h(rho(x)a) = rho(phi_g(x))(phi_h(a))",
                 check_endo_rep(eg, EndoRepresentation(M.rho(), endo->phi_h)));
  }
  return rep;
}

LieAlgebra bowtie(const MatchedPair& M) {
  const LieAlgebra& g = M.g();
  const LieAlgebra& h = M.h();
  const std::size_t n = g.dim(), m = h.dim(), N = n + m;
  Tensor3 c(N, N, N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c(i, j, k) = g.c(i, j, k);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t k = 0; k < m; ++k) c(n + a, n + b, n + k) = h.c(a, b, k);
  // [e_i, f_b] = -mu(f_b) e_i + rho(e_i) f_b
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t k = 0; k < n; ++k) {
        c(i, n + b, k) = -M.mu().rho(b)(k, i);
        c(n + b, i, k) = M.mu().rho(b)(k, i);
      }
      for (std::size_t a = 0; a < m; ++a) {
        c(i, n + b, n + a) = M.rho().rho(i)(a, b);
        c(n + b, i, n + a) = -M.rho().rho(i)(a, b);
      }
    }
  return LieAlgebra::from_constants(std::move(c));
}

MatchedPair standard_matched_pair(const LieAlgebra& g, const Cobracket& delta) {
  if (g.dim() != delta.dim()) throw ShapeError("algebra and cobracket dims differ");
  LieAlgebra gs = dualize(unchecked, delta);
  return MatchedPair(g, gs, dual_rep(adjoint_rep(g)), dual_rep(adjoint_rep(gs)));
}

Matrix hyperbolic_gram(std::size_t n) {
  Matrix G(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    G(i, n + i) = 1;
    G(n + i, i) = 1;
  }
  return G;
}

ManinTriple::ManinTriple(LieAlgebra big, std::size_t n) : big_(std::move(big)), n_(n) {
  if (big_.dim() != 2 * n_)
    throw ShapeError("Manin triple: big algebra has dim " + std::to_string(big_.dim()) +
                     ", expected " + std::to_string(2 * n_));
  g_ = restrict_to_block(big_, 0, n_);
  g_star_ = restrict_to_block(big_, n_, n_);
}

Report check_manin_triple(const ManinTriple& MT) {
  Report rep("manin-triple");
  rep.add_from("big-lie-algebra", "antisymmetry and Jacobi on g + g*", check_lie_algebra(MT.big()));
  Report form = check_invariant_form(MT.big(), BilinearForm(hyperbolic_gram(MT.n())));
  rep.add_from("B_d-invariant", "B_d([x,y],z) = B_d(x,[y,z])", form);
  return rep;
}

ManinTriple manin_candidate(const LieAlgebra& g, const Cobracket& delta) {
  return ManinTriple(bowtie(standard_matched_pair(g, delta)), g.dim());
}

ManinTriple manin_from_bialgebra(const LieBialgebra& B) {
  Report r = check_lie_bialgebra(B);
  if (const ReportItem* f = r.first_failure())
    throw InvalidInput("not a Lie bialgebra: " + f->identity + " fails, residual " + f->residual);
  return manin_candidate(B.algebra(), B.delta());
}

LieBialgebra bialgebra_from_manin(const ManinTriple& MT) {
  Report r = check_manin_triple(MT);
  if (const ReportItem* f = r.first_failure())
    throw InvalidInput("not a Manin triple: " + f->identity + " fails (" + f->note + "), residual " +
                       f->residual);
  Cobracket delta = dualize_inv(MT.g_star());
  if (!(bowtie(standard_matched_pair(MT.g(), delta)) == MT.big()))
    throw InvalidInput("Manin triple mixed brackets are not the coadjoint actions");
  return LieBialgebra(MT.g(), std::move(delta));
}

Report check_endo_manin_triple(const ManinTriple& MT, const LinearMap& phi, const LinearMap& psi) {
  const std::size_t n = MT.n();
  if (phi.rows() != n || phi.cols() != n || psi.rows() != n || psi.cols() != n)
    throw ShapeError("endo Manin triple: phi and psi must be " + std::to_string(n) + "x" +
                     std::to_string(n));
  const Matrix F = block_diag(phi, psi.transpose());
  const Matrix G = block_diag(psi, phi.transpose());
  Report rep("endo-manin-triple");
  rep.add_from("phi+psi* endomorphism of the double", "f([u,v]) = [f(u),f(v)], f = phi + psi*",
               check_lie_hom(MT.big(), MT.big(), F));
  Matrix adj = adjoint_of_endomorphism(MT.big(), BilinearForm(hyperbolic_gram(n)), F);
  auto& a = rep.add("B_d-adjoint of phi+psi* is psi+phi*", "B_d(f(u),v) = B_d(u,(psi+phi*)(v))");
  if (!(adj == G)) Report::fail(a, {}, to_string(adj - G));
  rep.add_from("psi dually represents (g,phi)", "psi[phi(x),y] = [x,psi(y)]",
               check_dually_represents(EndoLieAlgebra(MT.g(), phi), adjoint_rep(MT.g()), psi));
  rep.add_from("phi* dually represents (g*,psi*)", "phi*[psi*(a),b] = [a,phi*(b)]",
               check_dually_represents(EndoLieAlgebra(MT.g_star(), psi.transpose()),
                                       adjoint_rep(MT.g_star()), phi.transpose()));
  return rep;
}

LinearMap transport_to_manin(const MapPair& p) {
  return block_diag(p.fwd(), p.bwd().transpose());
}

MapPair transport_to_bialgebra(const LinearMap& f, std::size_t n_g, std::size_t n_h) {
  if (f.rows() != 2 * n_h || f.cols() != 2 * n_g)
    throw ShapeError("block map must be " + std::to_string(2 * n_h) + "x" +
                     std::to_string(2 * n_g));
  if (!f.block(n_h, 0, n_h, n_g).is_zero())
    throw InvalidInput("block map sends g outside h");
  if (!f.block(0, n_g, n_h, n_g).is_zero())
    throw InvalidInput("block map sends g* outside h*");
  return MapPair(f.block(0, 0, n_h, n_g), f.block(n_h, n_g, n_h, n_g).transpose());
}

namespace {

void coherent_items(Report& rep, const ManinTriple& MTg, const ManinTriple& MTh,
                    const LinearMap& f) {
  const std::size_t n = MTg.n(), m = MTh.n();
  if (f.rows() != 2 * m || f.cols() != 2 * n)
    throw ShapeError("Manin hom must be " + std::to_string(2 * m) + "x" + std::to_string(2 * n));
  auto& b1 = rep.add("maps g into h", "f(g) in h");
  Matrix lo = f.block(m, 0, m, n);
  if (!lo.is_zero()) Report::fail(b1, {}, to_string(lo));
  auto& b2 = rep.add("maps g* into h*", "f(g*) in h*");
  Matrix hi = f.block(0, n, m, n);
  if (!hi.is_zero()) Report::fail(b2, {}, to_string(hi));
  rep.add_from("lie-hom of doubles", "f([u,v]) = [f(u),f(v)]",
               check_lie_hom(MTg.big(), MTh.big(), f));
}

}  // namespace

Report check_coherent_hom_manin(const ManinTriple& MTg, const ManinTriple& MTh, const LinearMap& f) {
  Report rep("coherent-hom-manin");
  coherent_items(rep, MTg, MTh, f);
  return rep;
}

Report check_strong_hom_manin(const ManinTriple& MTg, const ManinTriple& MTh, const LinearMap& f) {
  Report rep("strong-hom-manin");
  coherent_items(rep, MTg, MTh, f);
  const bool blocks = rep.item("maps g into h").pass && rep.item("maps g* into h*").pass;
  const std::size_t n = MTg.n(), m = MTh.n();
  Matrix Gg = hyperbolic_gram(n);
  Matrix pulled = f.transpose() * hyperbolic_gram(m) * f;
  auto& form = rep.add("form-compatible", "B_g,d(u,v) = B_h,d(f(u),f(v))");
  for (std::size_t i = 0; i < 2 * n && form.pass; ++i)
    for (std::size_t j = 0; j < 2 * n && form.pass; ++j)
      if (pulled(i, j) != Gg(i, j)) Report::fail(form, {i, j}, to_string(pulled(i, j) - Gg(i, j)));
  auto& pp = rep.add("psi phi = id", "forced by form compatibility");
  if (form.pass && blocks) {
    MapPair p = transport_to_bialgebra(f, n, m);
    Matrix d = p.bwd() * p.fwd() - Matrix::identity(n);
    if (!d.is_zero()) Report::fail(pp, {}, to_string(d));
  } else {
    pp.note = "vacuous: form compatibility or block structure fails";
  }
  return rep;
}

}  // namespace lbw
