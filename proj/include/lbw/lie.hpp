#pragma once

#include <cstddef>
#include <vector>

#include "lbw/kernel.hpp"
#include "lbw/report.hpp"

namespace lbw {

// Tag selecting the construction overloads that skip precondition checks.
struct Unchecked {};
inline constexpr Unchecked unchecked{};

// [e_i, e_j] = out, for i < j.
struct BracketEntry {
  std::size_t i;
  std::size_t j;
  Vector out;
};

// [e_i, e_j] = sum_k c(i,j,k) e_k.
class LieAlgebra {
 public:
  LieAlgebra() = default;

  static LieAlgebra abelian(std::size_t n);
  // Antisymmetric completion of the listed brackets; unlisted pairs bracket to 0.
  static LieAlgebra from_brackets(std::size_t n, const std::vector<BracketEntry>& entries);
  // Raw constants, no antisymmetry imposed (check_lie_algebra reports it).
  static LieAlgebra from_constants(Tensor3 c);

  std::size_t dim() const { return c_.dim0(); }
  const Tensor3& constants() const { return c_; }
  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return c_(i, j, k); }

  Vector bracket(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& x, const Vector& y) const;
  // ad(e_i): e_j -> [e_i, e_j].
  const Matrix& ad(std::size_t i) const { return ad_.at(i); }
  Matrix ad(const Vector& x) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.c_ == b.c_; }

 private:
  explicit LieAlgebra(Tensor3 c);
  Tensor3 c_{0, 0, 0};
  std::vector<Matrix> ad_;
};

// rho[i] = rho(e_i) acting on a space of dimension dimV.
class Representation {
 public:
  Representation() = default;
  Representation(LieAlgebra algebra, std::size_t dim_v, std::vector<Matrix> rho);

  const LieAlgebra& algebra() const { return algebra_; }
  std::size_t dim_v() const { return dim_v_; }
  const Matrix& rho(std::size_t i) const { return rho_.at(i); }
  const std::vector<Matrix>& maps() const { return rho_; }
  Matrix act(const Vector& x) const;

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  LieAlgebra algebra_;
  std::size_t dim_v_ = 0;
  std::vector<Matrix> rho_;
};

// B(e_i, e_j) = gram(i, j).
class BilinearForm {
 public:
  explicit BilinearForm(Matrix gram);
  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  Scalar operator()(const Vector& x, const Vector& y) const;

 private:
  Matrix gram_;
};

Report check_lie_algebra(const LieAlgebra& L);
Report check_representation(const Representation& R);
// f: g -> h preserves brackets.
Report check_lie_hom(const LieAlgebra& g, const LieAlgebra& h, const LinearMap& f);

Representation adjoint_rep(const LieAlgebra& L);
Representation zero_rep(const LieAlgebra& L, std::size_t dim_v);
Representation dual_rep(const Representation& R);

// Ordered blocks (L, V); V is an abelian ideal.
LieAlgebra semidirect_product(const LieAlgebra& L, const Representation& R);
LieAlgebra semidirect_product(Unchecked, const LieAlgebra& L, const Representation& R);

// Items: "symmetric", "nondegenerate", "invariant".
Report check_invariant_form(const LieAlgebra& L, const BilinearForm& B);
BilinearForm killing_form(const LieAlgebra& L);
// gram^-1 phi^T gram; throws SingularForm on a degenerate form.
LinearMap adjoint_of_endomorphism(const LieAlgebra& L, const BilinearForm& B, const LinearMap& phi);

// Restriction of L to the span of e_offset .. e_{offset+count-1}; throws
// InvalidInput if that span is not a subalgebra.
LieAlgebra restrict_to_block(const LieAlgebra& L, std::size_t offset, std::size_t count);

}  // namespace lbw
