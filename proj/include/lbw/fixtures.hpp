#pragma once

#include <string>

#include "lbw/oop_prelie.hpp"

// Small named structures used by tests, the CLI and the fixture generator.
namespace lbw::fixtures {

LieAlgebra abelian(std::size_t n);
// [e0, e1] = e1.
LieAlgebra nonabelian2();
// Basis (e, h, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieAlgebra sl2();
// [e0, e1] = e2.
LieAlgebra heisenberg3();
// [e0, e1] = e1, [e0, e2] = e2.
LieAlgebra book3();
// [e0, e1] = e1, e2 central.
LieAlgebra nonabelian2_plus_line();

// "abelian" (any dim), "r2" (dim 2), "sl2" (dim 3), "heisenberg" (dim 3),
// "book" (dim 3). Throws InvalidInput for unknown names or a dim mismatch.
LieAlgebra by_name(const std::string& name, std::size_t dim);

// e0.e0 = e0, e0.e1 = e1, other products zero.
PreLieAlgebra prelie2();

// e_i (x) e_j - e_j (x) e_i.
Tensor2 wedge(std::size_t n, std::size_t i, std::size_t j);
// e (x) f + 1/4 h (x) h in the basis (e, h, f).
Tensor2 sl2_standard_r();
// diag(1, lambda).
LinearMap lambda_scaling(const Scalar& lambda);

}  // namespace lbw::fixtures
