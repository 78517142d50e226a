#include "lbw/lie.hpp"

#include <string>

namespace lbw {

namespace {

std::string dims(std::size_t a, std::size_t b) {
  return std::to_string(a) + " vs " + std::to_string(b);
}

}  // namespace

LieAlgebra::LieAlgebra(Tensor3 c) : c_(std::move(c)) {
  const std::size_t n = c_.dim0();
  ad_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix a(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) a(k, j) = c_(i, j, k);
    ad_.push_back(std::move(a));
  }
}

LieAlgebra LieAlgebra::abelian(std::size_t n) { return LieAlgebra(Tensor3(n, n, n)); }

LieAlgebra LieAlgebra::from_brackets(std::size_t n, const std::vector<BracketEntry>& entries) {
  Tensor3 c(n, n, n);
  std::vector<bool> seen(n * n, false);
  for (const auto& e : entries) {
    if (e.i >= n || e.j >= n) throw ShapeError("bracket index out of range");
    if (e.i >= e.j)
      throw InvalidInput("bracket entries must have i < j (got " + std::to_string(e.i) + ", " +
                         std::to_string(e.j) + ")");
    if (e.out.size() != n) throw ShapeError("bracket output length " + dims(e.out.size(), n));
    if (seen[e.i * n + e.j])
      throw InvalidInput("duplicate bracket entry (" + std::to_string(e.i) + ", " +
                         std::to_string(e.j) + ")");
    seen[e.i * n + e.j] = true;
    for (std::size_t k = 0; k < n; ++k) {
      c(e.i, e.j, k) = e.out[k];
      c(e.j, e.i, k) = -e.out[k];
    }
  }
  return LieAlgebra(std::move(c));
}

LieAlgebra LieAlgebra::from_constants(Tensor3 c) {
  if (!c.is_cubic()) throw ShapeError("structure constants must form an n x n x n array");
  return LieAlgebra(std::move(c));
}

Vector LieAlgebra::bracket(std::size_t i, std::size_t j) const {
  const std::size_t n = dim();
  Vector v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = c_(i, j, k);
  return v;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw ShapeError("bracket argument length mismatch");
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(c_(i, j, k)) != 0) v[k] += xy * c_(i, j, k);
    }
  }
  return v;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  const std::size_t n = dim();
  if (x.size() != n) throw ShapeError("ad argument length mismatch");
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(x[i]) != 0) a += x[i] * ad_[i];
  return a;
}

Representation::Representation(LieAlgebra algebra, std::size_t dim_v, std::vector<Matrix> rho)
    : algebra_(std::move(algebra)), dim_v_(dim_v), rho_(std::move(rho)) {
  if (rho_.size() != algebra_.dim())
    throw ShapeError("representation needs one matrix per basis vector (" +
                     dims(rho_.size(), algebra_.dim()) + ")");
  for (const auto& m : rho_)
    if (m.rows() != dim_v_ || m.cols() != dim_v_)
      throw ShapeError("representation matrix is " + std::to_string(m.rows()) + "x" +
                       std::to_string(m.cols()) + ", expected " + std::to_string(dim_v_) +
                       "x" + std::to_string(dim_v_));
}

Matrix Representation::act(const Vector& x) const {
  if (x.size() != rho_.size()) throw ShapeError("representation argument length mismatch");
  Matrix a(dim_v_, dim_v_);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) a += x[i] * rho_[i];
  return a;
}

BilinearForm::BilinearForm(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square()) throw ShapeError("gram matrix must be square");
}

Scalar BilinearForm::operator()(const Vector& x, const Vector& y) const {
  Vector gy = gram_ * y;
  if (x.size() != gy.size()) throw ShapeError("form argument length mismatch");
  Scalar s;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * gy[i];
  return s;
}

Report check_lie_algebra(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  Report rep("lie-algebra");
  auto& anti = rep.add("antisymmetry", "[e_i,e_j] + [e_j,e_i] = 0");
  for (std::size_t i = 0; i < n && anti.pass; ++i)
    for (std::size_t j = i; j < n && anti.pass; ++j) {
      Vector s = L.bracket(i, j) + L.bracket(j, i);
      if (!is_zero(s)) Report::fail(anti, {i, j}, to_string(s));
    }
  auto& jac = rep.add("jacobi", "[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0");
  for (std::size_t i = 0; i < n && jac.pass; ++i)
    for (std::size_t j = 0; j < n && jac.pass; ++j)
      for (std::size_t k = 0; k < n && jac.pass; ++k) {
        Vector s = L.ad(i) * L.bracket(j, k) + L.ad(j) * L.bracket(k, i) +
                   L.ad(k) * L.bracket(i, j);
        if (!is_zero(s)) Report::fail(jac, {i, j, k}, to_string(s));
      }
  return rep;
}

Report check_representation(const Representation& R) {
  const LieAlgebra& L = R.algebra();
  const std::size_t n = L.dim();
  Report rep("representation");
  auto& hom = rep.add("bracket-to-commutator", "rho([x,y]) = rho(x)rho(y) - rho(y)rho(x)");
  for (std::size_t i = 0; i < n && hom.pass; ++i)
    for (std::size_t j = i + 1; j < n && hom.pass; ++j) {
      Matrix d = R.rho(i) * R.rho(j) - R.rho(j) * R.rho(i) - R.act(L.bracket(i, j));
      if (!d.is_zero()) Report::fail(hom, {i, j}, to_string(d));
    }
  return rep;
}

Report check_lie_hom(const LieAlgebra& g, const LieAlgebra& h, const LinearMap& f) {
  if (f.rows() != h.dim() || f.cols() != g.dim())
    throw ShapeError("Lie hom map must be " + std::to_string(h.dim()) + "x" +
                     std::to_string(g.dim()));
  Report rep("lie-hom");
  auto& it = rep.add("bracket-preserved", "f([x,y]) = [f(x),f(y)]");
  for (std::size_t i = 0; i < g.dim() && it.pass; ++i)
    for (std::size_t j = i + 1; j < g.dim() && it.pass; ++j) {
      Vector d = f * g.bracket(i, j) - h.bracket(f.column(i), f.column(j));
      if (!is_zero(d)) Report::fail(it, {i, j}, to_string(d));
    }
  return rep;
}

Representation adjoint_rep(const LieAlgebra& L) {
  std::vector<Matrix> rho;
  for (std::size_t i = 0; i < L.dim(); ++i) rho.push_back(L.ad(i));
  return Representation(L, L.dim(), std::move(rho));
}

Representation zero_rep(const LieAlgebra& L, std::size_t dim_v) {
  return Representation(L, dim_v, std::vector<Matrix>(L.dim(), Matrix(dim_v, dim_v)));
}

Representation dual_rep(const Representation& R) {
  std::vector<Matrix> rho;
  for (const auto& m : R.maps()) rho.push_back(-m.transpose());
  return Representation(R.algebra(), R.dim_v(), std::move(rho));
}

LieAlgebra semidirect_product(const LieAlgebra& L, const Representation& R) {
  Report r = check_representation(R);
  if (const ReportItem* f = r.first_failure())
    throw InvalidInput("semidirect product needs a representation; " + f->identity +
                       " fails, residual " + f->residual);
  return semidirect_product(unchecked, L, R);
}

LieAlgebra semidirect_product(Unchecked, const LieAlgebra& L, const Representation& R) {
  if (R.algebra().dim() != L.dim()) throw ShapeError("representation is of another algebra");
  const std::size_t n = L.dim(), m = R.dim_v(), N = n + m;
  Tensor3 c(N, N, N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c(i, j, k) = L.c(i, j, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t a = 0; a < m; ++a) {
        c(i, n + b, n + a) = R.rho(i)(a, b);
        c(n + b, i, n + a) = -R.rho(i)(a, b);
      }
  return LieAlgebra::from_constants(std::move(c));
}

Report check_invariant_form(const LieAlgebra& L, const BilinearForm& B) {
  const std::size_t n = L.dim();
  if (B.dim() != n) throw ShapeError("form dimension " + dims(B.dim(), n));
  const Matrix& G = B.gram();
  Report rep("invariant-form");
  auto& sym = rep.add("symmetric", "B(x,y) = B(y,x)");
  for (std::size_t i = 0; i < n && sym.pass; ++i)
    for (std::size_t j = i + 1; j < n && sym.pass; ++j)
      if (G(i, j) != G(j, i)) Report::fail(sym, {i, j}, to_string(G(i, j) - G(j, i)));
  auto& nd = rep.add("nondegenerate", "det(gram) != 0");
  if (sgn(determinant(G)) == 0) Report::fail(nd, {}, "det = 0");
  auto& inv = rep.add("invariant", "B([x,y],z) = B(x,[y,z])");
  for (std::size_t i = 0; i < n && inv.pass; ++i)
    for (std::size_t j = 0; j < n && inv.pass; ++j)
      for (std::size_t k = 0; k < n && inv.pass; ++k) {
        Scalar d = B(L.bracket(i, j), basis_vector(n, k)) - B(basis_vector(n, i), L.bracket(j, k));
        if (sgn(d) != 0) Report::fail(inv, {i, j, k}, to_string(d));
      }
  return rep;
}

BilinearForm killing_form(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix p = L.ad(i) * L.ad(j);
      for (std::size_t k = 0; k < n; ++k) g(i, j) += p(k, k);
    }
  return BilinearForm(std::move(g));
}

LinearMap adjoint_of_endomorphism(const LieAlgebra& L, const BilinearForm& B,
                                  const LinearMap& phi) {
  const std::size_t n = L.dim();
  if (B.dim() != n || phi.rows() != n || phi.cols() != n)
    throw ShapeError("adjoint: form and map must be " + std::to_string(n) + "x" +
                     std::to_string(n));
  if (sgn(determinant(B.gram())) == 0) throw SingularForm("bilinear form is degenerate");
  return inverse(B.gram()) * phi.transpose() * B.gram();
}

LieAlgebra restrict_to_block(const LieAlgebra& L, std::size_t offset, std::size_t count) {
  if (offset + count > L.dim()) throw ShapeError("block out of range");
  Tensor3 c(count, count, count);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      for (std::size_t k = 0; k < L.dim(); ++k) {
        const Scalar& v = L.c(offset + i, offset + j, k);
        if (k >= offset && k < offset + count)
          c(i, j, k - offset) = v;
        else if (sgn(v) != 0)
          throw InvalidInput("block starting at " + std::to_string(offset) +
                             " is not a subalgebra: [e_" + std::to_string(offset + i) + ",e_" +
                             std::to_string(offset + j) + "] leaves it");
      }
  return LieAlgebra::from_constants(std::move(c));
}

}  // namespace lbw
