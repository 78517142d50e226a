#pragma once

// Brute-force fixture generator. Every kind enumerates candidates with entries
// in a finite coefficient set, keeps the ones passing the exact checks, and
// returns them in lexicographic order of their flattened entries.

#include <string>
#include <utility>
#include <vector>

#include "lbw/workspace.hpp"

namespace lbw::gen {

// LBW_MAX_DIM, default 3.
std::size_t max_dim();
// Refuse enumerations with more candidates than this.
inline constexpr std::size_t kMaxCandidates = 5'000'000;

// "-1,0,1" or "0,1/4,1"; sorted and deduplicated.
std::vector<Scalar> parse_coeffs(const std::string& list);

// Skew r (upper entries from coeffs) solving the CYBE.
std::vector<Tensor2> cybe_skew(const LieAlgebra& L, const std::vector<Scalar>& coeffs);
// Any r with entries from coeffs solving the CYBE with r + tau(r) ad-invariant.
std::vector<Tensor2> cybe_qt(const LieAlgebra& L, const std::vector<Scalar>& coeffs);
// Left-symmetric products on a dim-n space.
std::vector<PreLieAlgebra> prelie(std::size_t dim, const std::vector<Scalar>& coeffs);
// Lie algebra endomorphisms phi.
std::vector<LinearMap> endo(const LieAlgebra& L, const std::vector<Scalar>& coeffs);
// (phi, psi) with phi a Lie endomorphism and psi dually representing (g, phi)
// on the adjoint representation, so (g*, ad*, psi^T) is an endo representation.
std::vector<std::pair<LinearMap, LinearMap>> endo_pairs(const LieAlgebra& L,
                                                        const std::vector<Scalar>& coeffs);

struct Request {
  std::string kind;     // cybe-skew, cybe-qt, prelie, endo, endo-pair
  std::size_t dim = 2;
  std::vector<Scalar> coeffs;
  std::string algebra = "abelian";  // ignored for prelie
};

inline const std::vector<std::string>& kinds() {
  static const std::vector<std::string> k{"cybe-skew", "cybe-qt", "prelie", "endo", "endo-pair"};
  return k;
}

// Throws InvalidInput on an unknown kind or when a bound is exceeded.
Workspace generate(const Request& req);
// <kind>-<algebra>-d<dim>.json (no algebra part for prelie).
std::string file_name(const Request& req);

}  // namespace lbw::gen
