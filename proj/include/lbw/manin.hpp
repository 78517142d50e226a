#pragma once

#include <optional>

#include "lbw/bialg.hpp"

namespace lbw {

// rho: g acting on h's space; mu: h acting on g's space.
class MatchedPair {
 public:
  MatchedPair(LieAlgebra g, LieAlgebra h, Representation rho, Representation mu);
  const LieAlgebra& g() const { return g_; }
  const LieAlgebra& h() const { return h_; }
  const Representation& rho() const { return rho_; }
  const Representation& mu() const { return mu_; }

 private:
  LieAlgebra g_, h_;
  Representation rho_, mu_;
};

struct EndoPair {
  LinearMap phi_g;
  LinearMap phi_h;
};

Report check_matched_pair(const MatchedPair& M, const std::optional<EndoPair>& endo = std::nullopt);
// Ordered blocks (g, h).
LieAlgebra bowtie(const MatchedPair& M);
// (g, g*, ad*, ad*) where g* carries the bracket dual to delta.
MatchedPair standard_matched_pair(const LieAlgebra& g, const Cobracket& delta);

// 2n x 2n, identity blocks off the diagonal.
Matrix hyperbolic_gram(std::size_t n);

// big on 2n basis vectors: e_0..e_{n-1} spanning g, then the dual basis of g*.
class ManinTriple {
 public:
  // Throws InvalidInput if either block is not a subalgebra.
  ManinTriple(LieAlgebra big, std::size_t n);
  const LieAlgebra& big() const { return big_; }
  std::size_t n() const { return n_; }
  const LieAlgebra& g() const { return g_; }
  const LieAlgebra& g_star() const { return g_star_; }

 private:
  LieAlgebra big_;
  std::size_t n_;
  LieAlgebra g_, g_star_;
};

// Big algebra is Lie and B_d is invariant.
Report check_manin_triple(const ManinTriple& MT);
// Builds the standard double with no validity checks.
ManinTriple manin_candidate(const LieAlgebra& g, const Cobracket& delta);
ManinTriple manin_from_bialgebra(const LieBialgebra& B);
LieBialgebra bialgebra_from_manin(const ManinTriple& MT);

Report check_endo_manin_triple(const ManinTriple& MT, const LinearMap& phi, const LinearMap& psi);

// (phi, psi) -> blockdiag(phi, psi^T).
LinearMap transport_to_manin(const MapPair& p);
// f -> (top-left block, transpose of bottom-right block); throws InvalidInput
// if f does not preserve the two blocks.
MapPair transport_to_bialgebra(const LinearMap& f, std::size_t n_g, std::size_t n_h);

Report check_coherent_hom_manin(const ManinTriple& MTg, const ManinTriple& MTh, const LinearMap& f);
Report check_strong_hom_manin(const ManinTriple& MTg, const ManinTriple& MTh, const LinearMap& f);

}  // namespace lbw
