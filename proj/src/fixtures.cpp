#include "lbw/fixtures.hpp"

namespace lbw::fixtures {

LieAlgebra abelian(std::size_t n) { return LieAlgebra::abelian(n); }

LieAlgebra nonabelian2() { return LieAlgebra::from_brackets(2, {{0, 1, {0, 1}}}); }

LieAlgebra sl2() {
  // e = 0, h = 1, f = 2
  return LieAlgebra::from_brackets(3, {{0, 1, {-2, 0, 0}}, {0, 2, {0, 1, 0}}, {1, 2, {0, 0, -2}}});
}

LieAlgebra heisenberg3() { return LieAlgebra::from_brackets(3, {{0, 1, {0, 0, 1}}}); }

LieAlgebra book3() {
  return LieAlgebra::from_brackets(3, {{0, 1, {0, 1, 0}}, {0, 2, {0, 0, 1}}});
}

LieAlgebra nonabelian2_plus_line() { return LieAlgebra::from_brackets(3, {{0, 1, {0, 1, 0}}}); }

LieAlgebra by_name(const std::string& name, std::size_t dim) {
  auto need = [&](std::size_t d) {
    if (dim != d)
      throw InvalidInput("algebra '" + name + "' has dimension " + std::to_string(d) +
                         ", requested " + std::to_string(dim));
  };
  if (name == "abelian") return abelian(dim);
  if (name == "r2") return need(2), nonabelian2();
  if (name == "sl2") return need(3), sl2();
  if (name == "heisenberg") return need(3), heisenberg3();
  if (name == "book") return need(3), book3();
  throw InvalidInput("unknown algebra '" + name + "' (expected abelian, r2, sl2, heisenberg, book)");
}

PreLieAlgebra prelie2() {
  Tensor3 p(2, 2, 2);
  p(0, 0, 0) = 1;
  p(0, 1, 1) = 1;
  return PreLieAlgebra(std::move(p));
}

Tensor2 wedge(std::size_t n, std::size_t i, std::size_t j) {
  Tensor2 t(n, n);
  t(i, j) += 1;
  t(j, i) -= 1;
  return t;
}

Tensor2 sl2_standard_r() {
  Tensor2 t(3, 3);
  t(0, 2) = 1;
  t(1, 1) = Scalar(1, 4);
  return t;
}

LinearMap lambda_scaling(const Scalar& lambda) { return Matrix::diagonal({1, lambda}); }

}  // namespace lbw::fixtures
