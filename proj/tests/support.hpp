#pragma once

// Shared test helpers: a seeded generator and slow reference computations that
// go through vectors and basis brackets instead of the library's matrix paths.

#include <cstdint>
#include <string>
#include <vector>

#include "lbw/fixtures.hpp"

namespace lbw::test {

// splitmix64; fixed seeds keep property tests reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
  Scalar small() {
    long den = range(1, 3);
    Scalar q(range(-3, 3), den);
    q.canonicalize();  // gmpxx comparisons assume canonical form
    return q;
  }
  Matrix matrix(std::size_t r, std::size_t c) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = small();
    return m;
  }
  Vector vector(std::size_t n) {
    Vector v(n);
    for (auto& x : v) x = small();
    return v;
  }

 private:
  std::uint64_t s_;
};

// Sparse simple-tensor expansion of an order-3 tensor.
using T3 = std::vector<std::vector<std::vector<Scalar>>>;

inline T3 zero3(std::size_t n) {
  return T3(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n)));
}

inline bool equal(const T3& a, const Tensor3& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      for (std::size_t k = 0; k < a.size(); ++k)
        if (a[i][j][k] != b(i, j, k)) return false;
  return true;
}

// [r12,r13] + [r13,r23] + [r12,r23], with r = sum r_ab e_a (x) e_b, expanded
// term by term from L.bracket on basis vectors.
inline T3 naive_cybe(const LieAlgebra& L, const Matrix& r) {
  std::size_t n = L.dim();
  T3 out = zero3(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          Scalar w = r(a, b) * r(c, d);
          if (w == 0) continue;
          // [r12, r13] = [e_a, e_c] (x) e_b (x) e_d
          Vector x = L.bracket(a, c);
          for (std::size_t k = 0; k < n; ++k) out[k][b][d] += w * x[k];
          // [r13, r23] = e_a (x) e_c (x) [e_b, e_d]
          Vector y = L.bracket(b, d);
          for (std::size_t k = 0; k < n; ++k) out[a][c][k] += w * y[k];
          // [r12, r23] = e_a (x) [e_b, e_c] (x) e_d
          Vector z = L.bracket(b, c);
          for (std::size_t k = 0; k < n; ++k) out[a][k][d] += w * z[k];
        }
  return out;
}

// delta_r(e_k) = sum r_ab ([e_k, e_a] (x) e_b + e_a (x) [e_k, e_b]).
inline std::vector<Matrix> naive_delta_r(const LieAlgebra& L, const Matrix& r) {
  std::size_t n = L.dim();
  std::vector<Matrix> out(n, Matrix(n, n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (r(a, b) == 0) continue;
        Vector x = L.bracket(k, a), y = L.bracket(k, b);
        for (std::size_t i = 0; i < n; ++i) {
          out[k](i, b) += r(a, b) * x[i];
          out[k](a, i) += r(a, b) * y[i];
        }
      }
  return out;
}

// Jacobi evaluated on vectors.
inline bool naive_jacobi(const LieAlgebra& L) {
  std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector x = basis_vector(n, i), y = basis_vector(n, j), z = basis_vector(n, k);
        Vector s = L.bracket(x, L.bracket(y, z)) + L.bracket(y, L.bracket(z, x)) +
                   L.bracket(z, L.bracket(x, y));
        if (!is_zero(s)) return false;
      }
  return true;
}

inline Matrix wedge_matrix(std::size_t n, std::size_t i, std::size_t j) {
  return fixtures::wedge(n, i, j).entries();
}

}  // namespace lbw::test
