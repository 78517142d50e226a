#include "lbw/oop_prelie.hpp"

#include <string>

namespace lbw {

namespace {

std::string sz(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols)
    throw ShapeError(std::string(what) + " must be " + sz(rows, cols) + ", got " +
                     sz(m.rows(), m.cols()));
}

[[noreturn]] void reject(const std::string& what, const Report& r) {
  const ReportItem* f = r.first_failure();
  std::string msg = what + ": " + f->identity + " fails";
  if (!f->witness.empty()) {
    msg += " at (";
    for (std::size_t i = 0; i < f->witness.size(); ++i)
      msg += (i ? "," : "") + std::to_string(f->witness[i]);
    msg += ")";
  }
  if (!f->residual.empty()) msg += ", residual " + f->residual;
  throw InvalidInput(msg);
}

std::vector<Matrix> left_mult(const PreLieAlgebra& A) {
  const std::size_t n = A.dim();
  std::vector<Matrix> L;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(k, j) = A.p(i, j, k);
    L.push_back(std::move(m));
  }
  return L;
}

Matrix combine(const std::vector<Matrix>& L, const Vector& x) {
  Matrix m(L.front().rows(), L.front().cols());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) m += x[i] * L[i];
  return m;
}

}  // namespace

OOperator::OOperator(LieAlgebra algebra, Representation rep, LinearMap T,
                     std::optional<LinearMap> phi, std::optional<LinearMap> alpha)
    : algebra_(std::move(algebra)),
      rep_(std::move(rep)),
      T_(std::move(T)),
      phi_(std::move(phi)),
      alpha_(std::move(alpha)) {
  const std::size_t n = algebra_.dim(), m = rep_.dim_v();
  if (rep_.algebra().dim() != n) throw ShapeError("O-operator: representation of another algebra");
  require_shape(T_, n, m, "T");
  if (phi_.has_value() != alpha_.has_value())
    throw ShapeError("O-operator endo data needs both phi and alpha");
  if (phi_) {
    require_shape(*phi_, n, n, "phi");
    require_shape(*alpha_, m, m, "alpha");
  }
}

Report check_ooperator(const OOperator& O) {
  const LieAlgebra& g = O.algebra();
  const Representation& R = O.rep();
  const Matrix& T = O.T();
  const std::size_t m = R.dim_v();
  Report rep("o-operator");
  auto& it = rep.add("o-operator identity", "[T(u),T(v)] = T(rho(T(u))v - rho(T(v))u)");
  for (std::size_t a = 0; a < m && it.pass; ++a)
    for (std::size_t b = a + 1; b < m && it.pass; ++b) {
      Vector ta = T.column(a), tb = T.column(b);
      Vector d = g.bracket(ta, tb) - T * (R.act(ta).column(b) - R.act(tb).column(a));
      if (!is_zero(d)) Report::fail(it, {a, b}, to_string(d));
    }
  if (O.has_endo()) {
    auto& c = rep.add("phi T = T alpha", "phi T = T alpha");
    Matrix d = *O.phi() * T - T * *O.alpha();
    if (!d.is_zero()) Report::fail(c, {}, to_string(d));
    Report er = check_endo_rep(EndoLieAlgebra(g, *O.phi()), EndoRepresentation(R, *O.alpha()));
    auto& di = rep.add_diagnostic("(V,rho,alpha) endo rep of (g,phi)",
                                  "alpha(rho(x)v) = rho(phi(x))(alpha(v))");
    if (const ReportItem* f = er.first_failure()) Report::fail(di, f->witness, f->residual);
  }
  return rep;
}

OOperator rsharp_of(const RMatrix& R) {
  return OOperator(R.algebra(), dual_rep(adjoint_rep(R.algebra())), R.r().entries().transpose());
}

OOperator rsharp_of(const EndoLieAlgebra& E, const LinearMap& psi, const RMatrix& R) {
  if (R.dim() != E.algebra().dim()) throw ShapeError("r-matrix and endo Lie algebra dims differ");
  return OOperator(R.algebra(), dual_rep(adjoint_rep(R.algebra())), R.r().entries().transpose(),
                   E.phi(), psi.transpose());
}

RMatrix r_of_sharp(const LinearMap& f, const LieAlgebra& L) {
  require_shape(f, L.dim(), L.dim(), "r#");
  return RMatrix(L, Tensor2(f.transpose()));
}

Report check_sharp_bridge(const EndoLieAlgebra& E, const LinearMap& psi, const RMatrix& R) {
  Report rep("sharp-bridge");
  const Matrix T = R.r().entries().transpose();
  auto& sk = rep.add_diagnostic("r skew", "<r#(a*),b*> + <a*,r#(b*)> = 0");
  Matrix s = T + T.transpose();
  if (!s.is_zero()) Report::fail(sk, {}, to_string(s));
  Report pc = check_psi_cybe(E, psi, R);
  Report oo = check_ooperator(rsharp_of(E, psi, R));
  rep.add_from("psi-CYBE", "CYBE with both balance conditions", pc);
  rep.add_from("r# endo O-operator on the coadjoint rep", "O-operator identity and phi T = T psi*",
               oo);
  auto& ag = rep.add("verdicts agree for skew r", "skew r: psi-CYBE <=> r# endo O-operator");
  if (sk.pass && pc.pass() != oo.pass()) Report::fail(ag, {}, "verdicts differ");
  return rep;
}

Report check_hom_ooperators(const OOperator& Og, const OOperator& Oh, const LinearMap& phi,
                            const LinearMap& alpha) {
  const std::size_t n = Og.algebra().dim(), m = Og.rep().dim_v();
  require_shape(phi, Oh.algebra().dim(), n, "phi");
  require_shape(alpha, Oh.rep().dim_v(), m, "alpha");
  Report rep("hom-ooperators");
  rep.add_from("phi lie hom", "phi([x,y]_g) = [phi(x),phi(y)]_h",
               check_lie_hom(Og.algebra(), Oh.algebra(), phi));
  auto& tw = rep.add("intertwining", "alpha(rho_g(x)v) = rho_h(phi(x))(alpha(v))");
  for (std::size_t i = 0; i < n && tw.pass; ++i) {
    Matrix d = alpha * Og.rep().rho(i) - Oh.rep().act(phi.column(i)) * alpha;
    if (!d.is_zero()) Report::fail(tw, {i}, to_string(d));
  }
  auto& sq = rep.add("commuting square", "T_h alpha = phi T_g");
  Matrix d = Oh.T() * alpha - phi * Og.T();
  if (!d.is_zero()) Report::fail(sq, {}, to_string(d));
  return rep;
}

RMatrix lift_to_rmatrix(const OOperator& O) {
  const std::size_t n = O.algebra().dim(), m = O.rep().dim_v();
  LieAlgebra big = semidirect_product(unchecked, O.algebra(), dual_rep(O.rep()));
  Tensor2 r(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a) {
      r(i, n + a) = O.T()(i, a);
      r(n + a, i) = -O.T()(i, a);
    }
  return RMatrix(std::move(big), std::move(r));
}

LiftedHom lift_hom_to_double(const OOperator& Og, const OOperator& Oh, const LinearMap& phi,
                             const LinearMap& alpha, const LinearMap& psi, const LinearMap& beta) {
  Report pre = check_hom_ooperators(Og, Oh, phi, alpha);
  if (!pre.pass()) reject("(phi, alpha) is not a homomorphism of O-operators", pre);
  const LieAlgebra& g = Og.algebra();
  const LieAlgebra& h = Oh.algebra();
  const Representation& rg = Og.rep();
  const Representation& rh = Oh.rep();
  const std::size_t n = g.dim(), m = h.dim();
  require_shape(psi, n, m, "psi");
  require_shape(beta, rg.dim_v(), rh.dim_v(), "beta");

  Report rep("lift-hom");
  auto& b = rep.add("bracket compatibility", "psi[phi(x),y]_h = [x,psi(y)]_g");
  for (std::size_t i = 0; i < n && b.pass; ++i)
    for (std::size_t j = 0; j < m && b.pass; ++j) {
      Vector d = psi * h.bracket(phi.column(i), basis_vector(m, j)) -
                 g.bracket(basis_vector(n, i), psi.column(j));
      if (!is_zero(d)) Report::fail(b, {i, j}, to_string(d));
    }
  auto& t = rep.add("T_g beta = psi T_h", "T_g beta = psi T_h");
  Matrix dt = Og.T() * beta - psi * Oh.T();
  if (!dt.is_zero()) Report::fail(t, {}, to_string(dt));
  auto& h1 = rep.add("beta rho_h(phi x) = rho_g(x) beta", "beta(rho_h(phi(x))b) = rho_g(x)(beta(b))");
  for (std::size_t i = 0; i < n && h1.pass; ++i) {
    Matrix d = beta * rh.act(phi.column(i)) - rg.rho(i) * beta;
    if (!d.is_zero()) Report::fail(h1, {i}, to_string(d));
  }
  auto& h2 = rep.add("beta rho_h(y) alpha = rho_g(psi y)", "beta(rho_h(y)alpha(a)) = rho_g(psi(y))a");
  for (std::size_t j = 0; j < m && h2.pass; ++j) {
    Matrix d = beta * rh.rho(j) * alpha - rg.act(psi.column(j));
    if (!d.is_zero()) Report::fail(h2, {j}, to_string(d));
  }

  MapPair pair(block_diag(phi, beta.transpose()), block_diag(psi, alpha.transpose()));
  const bool four = rep.pass();
  Report direct = check_coherent_hom_r(lift_to_rmatrix(Og), lift_to_rmatrix(Oh), pair);
  rep.add_from("direct coherent-hom verdict on the lifted pair", "coherent hom r_Tg -> r_Th", direct)
      .diagnostic = true;
  auto& ag = rep.add("conditions agree with direct verdict", "four conditions <=> lifted pair coherent");
  if (four != direct.pass())
    Report::fail(ag, {}, std::string("conditions ") + (four ? "pass" : "fail") + ", direct " +
                             (direct.pass() ? "passes" : "fails"));
  return LiftedHom{std::move(pair), std::move(rep)};
}

PreLieAlgebra::PreLieAlgebra(Tensor3 p) : p_(std::move(p)) {
  if (!p_.is_cubic()) throw ShapeError("pre-Lie constants must form an n x n x n array");
}

Vector PreLieAlgebra::product(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw ShapeError("product argument length mismatch");
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) v[k] += xy * p_(i, j, k);
    }
  }
  return v;
}

Report check_prelie(const PreLieAlgebra& A) {
  const std::size_t n = A.dim();
  Report rep("prelie");
  auto& it = rep.add("left-symmetry", "x.(y.z) - (x.y).z = y.(x.z) - (y.x).z");
  if (n == 0) return rep;
  std::vector<Matrix> L = left_mult(A);
  for (std::size_t i = 0; i < n && it.pass; ++i)
    for (std::size_t j = i + 1; j < n && it.pass; ++j) {
      Vector c(n);
      for (std::size_t k = 0; k < n; ++k) c[k] = A.p(i, j, k) - A.p(j, i, k);
      Matrix d = L[i] * L[j] - L[j] * L[i] - combine(L, c);
      for (std::size_t k = 0; k < n && it.pass; ++k) {
        Vector col = d.column(k);
        if (!is_zero(col)) Report::fail(it, {i, j, k}, to_string(col));
      }
    }
  return rep;
}

Report check_prelie_hom(const PreLieAlgebra& A, const PreLieAlgebra& B, const LinearMap& f) {
  require_shape(f, B.dim(), A.dim(), "pre-Lie map");
  Report rep("prelie-hom");
  auto& it = rep.add("product preserved", "f(x.y) = f(x).f(y)");
  for (std::size_t i = 0; i < A.dim() && it.pass; ++i)
    for (std::size_t j = 0; j < A.dim() && it.pass; ++j) {
      Vector xy(A.dim());
      for (std::size_t k = 0; k < A.dim(); ++k) xy[k] = A.p(i, j, k);
      Vector d = f * xy - B.product(f.column(i), f.column(j));
      if (!is_zero(d)) Report::fail(it, {i, j}, to_string(d));
    }
  return rep;
}

SubAdjacent sub_adjacent(const PreLieAlgebra& A) {
  Report r = check_prelie(A);
  if (!r.pass()) reject("not a pre-Lie algebra", r);
  const std::size_t n = A.dim();
  Tensor3 c(n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c(i, j, k) = A.p(i, j, k) - A.p(j, i, k);
  LieAlgebra lie = LieAlgebra::from_constants(std::move(c));
  Representation left(lie, n, n ? left_mult(A) : std::vector<Matrix>{});
  return SubAdjacent{std::move(lie), std::move(left)};
}

OOperator functor_F(const PreLieAlgebra& A) {
  SubAdjacent s = sub_adjacent(A);
  return OOperator(s.lie, s.left, Matrix::identity(A.dim()));
}

OHom functor_F(const PreLieAlgebra& A, const PreLieAlgebra& B, const LinearMap& f) {
  Report r = check_prelie_hom(A, B, f);
  if (!r.pass()) reject("not a pre-Lie homomorphism", r);
  return OHom{f, f};
}

PreLieAlgebra functor_G(const OOperator& O) {
  Report r = check_ooperator(O);
  if (!r.pass()) reject("not an O-operator", r);
  const std::size_t m = O.rep().dim_v();
  Tensor3 p(m, m, m);
  for (std::size_t i = 0; i < m; ++i) {
    Matrix a = O.rep().act(O.T().column(i));
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) p(i, j, k) = a(k, j);
  }
  return PreLieAlgebra(std::move(p));
}

LinearMap functor_G(const OOperator& Og, const OOperator& Oh, const OHom& h) {
  Report r = check_hom_ooperators(Og, Oh, h.phi, h.alpha);
  if (!r.pass()) reject("not a homomorphism of O-operators", r);
  return h.alpha;
}

LinearMap adjunction_forward(const PreLieAlgebra& A, const OOperator& O, const OHom& h) {
  require_shape(h.alpha, O.rep().dim_v(), A.dim(), "alpha");
  if (!(h.phi == O.T() * h.alpha))
    throw InvalidInput("not a hom out of F(A): phi differs from T alpha by " +
                       to_string(h.phi - O.T() * h.alpha));
  Report r = check_hom_ooperators(functor_F(A), O, h.phi, h.alpha);
  if (!r.pass()) reject("not a homomorphism of O-operators", r);
  return h.alpha;
}

OHom adjunction_backward(const PreLieAlgebra& A, const OOperator& O, const LinearMap& alpha) {
  Report r = check_prelie_hom(A, functor_G(O), alpha);
  if (!r.pass()) reject("not a pre-Lie homomorphism into G(O)", r);
  return OHom{O.T() * alpha, alpha};
}

MapPair theta_lift(const LinearMap& phi, const LinearMap& psi, const Scalar& theta) {
  return MapPair(block_diag(phi, theta * psi.transpose()), block_diag(theta * psi, phi.transpose()));
}

RMatrix prelie_double(const PreLieAlgebra& A) { return lift_to_rmatrix(functor_F(A)); }

Report check_prelie_endo_conditions(const PreLieAlgebra& A, const LinearMap& phi) {
  const std::size_t n = A.dim();
  require_shape(phi, n, n, "phi");
  Report hom = check_prelie_hom(A, A, phi);
  if (!hom.pass()) reject("phi is not a pre-Lie endomorphism", hom);

  Report rep("prelie-endo");
  rep.add_from("phi pre-Lie endomorphism", "phi(x.y) = phi(x).phi(y)", hom);
  const Matrix q = phi * phi - Matrix::identity(n);
  auto& l = rep.add("(phi^2-id)(x).phi(y) = 0", "(phi^2-id)(x).phi(y) = 0");
  auto& r = rep.add("phi(x).(phi^2-id)(y) = 0", "phi(x).(phi^2-id)(y) = 0");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector a = A.product(q.column(i), phi.column(j));
      if (!is_zero(a)) Report::fail(l, {i, j}, to_string(a));
      Vector b = A.product(phi.column(i), q.column(j));
      if (!is_zero(b)) Report::fail(r, {i, j}, to_string(b));
    }

  // The same data read as T = id, rho = L, alpha = phi on g(A).
  SubAdjacent s = sub_adjacent(A);
  auto& s1 = rep.add_diagnostic("alpha L(x) = L(phi x) alpha", "alpha rho(x) = rho(phi(x)) alpha");
  auto& s2 = rep.add_diagnostic("L(x) alpha = alpha L(phi x)", "rho(x) alpha = alpha rho(phi(x))");
  auto& s3 = rep.add_diagnostic("[phi^2 x, phi y] = [x, phi y]", "[phi^2(x),phi(y)] = [x,phi(y)]");
  auto& s4 = rep.add_diagnostic("alpha L(x) alpha = L(phi x)", "alpha rho(x) alpha = rho(phi(x))");
  const Matrix phi2 = phi * phi;
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix& Li = s.left.rho(i);
    Matrix Lpi = s.left.act(phi.column(i));
    Matrix d1 = phi * Li - Lpi * phi;
    if (!d1.is_zero()) Report::fail(s1, {i}, to_string(d1));
    Matrix d2 = Li * phi - phi * Lpi;
    if (!d2.is_zero()) Report::fail(s2, {i}, to_string(d2));
    Matrix d4 = phi * Li * phi - Lpi;
    if (!d4.is_zero()) Report::fail(s4, {i}, to_string(d4));
    for (std::size_t j = 0; j < n; ++j) {
      Vector d3 = s.lie.bracket(phi2.column(i), phi.column(j)) -
                  s.lie.bracket(basis_vector(n, i), phi.column(j));
      if (!is_zero(d3)) Report::fail(s3, {i, j}, to_string(d3));
    }
  }

  if (l.pass && r.pass) {
    RMatrix D = prelie_double(A);
    LieBialgebra BD(D.algebra(), coboundary_cobracket(D));
    for (int sign : {1, -1}) {
      Scalar sg(sign);
      MapPair p(block_diag(phi, sg * phi.transpose()), block_diag(sg * phi, phi.transpose()));
      std::string name = sign > 0 ? "(phi+phi*, phi+phi*)" : "(phi-phi*, -phi+phi*)";
      rep.add_from(name + " coherent endomorphism of r_id", "coherent hom r_id -> r_id",
                   check_coherent_hom_r(D, D, p));
      rep.add_from(name + " coherent endomorphism of the triangular bialgebra",
                   "coherent hom of (g(A) |x A*, delta_r)", check_coherent_hom(BD, BD, p));
    }
  }
  return rep;
}

}  // namespace lbw
