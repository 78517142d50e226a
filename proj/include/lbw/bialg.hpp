#pragma once

#include <vector>

#include "lbw/endo.hpp"

namespace lbw {

// delta(e_k) = sum_{i,j} d(k,i,j) e_i (x) e_j.
class Cobracket {
 public:
  Cobracket() = default;
  explicit Cobracket(Tensor3 d);
  static Cobracket zero(std::size_t n) { return Cobracket(Tensor3(n, n, n)); }

  std::size_t dim() const { return d_.dim0(); }
  const Tensor3& constants() const { return d_; }
  const Scalar& d(std::size_t k, std::size_t i, std::size_t j) const { return d_(k, i, j); }
  // delta(e_k) as an n x n tensor.
  const Matrix& slice(std::size_t k) const { return slices_.at(k); }
  Matrix apply(const Vector& x) const;

  friend bool operator==(const Cobracket& a, const Cobracket& b) { return a.d_ == b.d_; }

 private:
  Tensor3 d_;
  std::vector<Matrix> slices_;
};

class LieBialgebra {
 public:
  LieBialgebra() = default;
  LieBialgebra(LieAlgebra algebra, Cobracket delta);
  const LieAlgebra& algebra() const { return algebra_; }
  const Cobracket& delta() const { return delta_; }
  std::size_t dim() const { return algebra_.dim(); }

  friend bool operator==(const LieBialgebra&, const LieBialgebra&) = default;

 private:
  LieAlgebra algebra_;
  Cobracket delta_;
};

// fwd: g -> h, bwd: h -> g.
class MapPair {
 public:
  MapPair() = default;
  MapPair(LinearMap fwd, LinearMap bwd);
  const LinearMap& fwd() const { return fwd_; }
  const LinearMap& bwd() const { return bwd_; }

  friend bool operator==(const MapPair&, const MapPair&) = default;

 private:
  LinearMap fwd_;
  LinearMap bwd_;
};

// second o first: (fwd2 fwd1, bwd1 bwd2).
MapPair compose(const MapPair& first, const MapPair& second);

Report check_lie_coalgebra(const Cobracket& delta);
// [e^i, e^j] = sum_k d(k,i,j) e^k on the dual space.
LieAlgebra dualize(const Cobracket& delta);
LieAlgebra dualize(Unchecked, const Cobracket& delta);
Cobracket dualize_inv(const LieAlgebra& L);

// (f (x) f) delta_src = delta_tgt f, for f: src -> tgt.
Report check_coalgebra_hom(const Cobracket& src, const Cobracket& tgt, const LinearMap& f);

// Throws InvalidInput if the algebra or the coalgebra is invalid.
Report check_lie_bialgebra(const LieBialgebra& B);
// Coalgebra axioms and cocycle condition as one non-throwing report.
Report bialgebra_verdict(const LieAlgebra& L, const Cobracket& delta);

Report check_endo_lie_bialgebra(const LieBialgebra& B, const LinearMap& phi,
                                const LinearMap& psi);
Report check_coherent_hom(const LieBialgebra& Bg, const LieBialgebra& Bh, const MapPair& p);
Report check_standard_hom(const LieBialgebra& Bg, const LieBialgebra& Bh, const LinearMap& f);
// Bg = (g, delta_1), Bh = (g, delta_2); psi is checked as a coalgebra map
// (g, delta_2) -> (g, delta_1).
Report check_tbgs_weak_hom(const LieBialgebra& Bg, const LieBialgebra& Bh, const MapPair& p);

}  // namespace lbw
