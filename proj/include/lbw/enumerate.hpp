#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "lbw/kernel.hpp"

namespace lbw {

// Sorted, duplicate-free copy of a coefficient list.
inline std::vector<Scalar> canonical_coeffs(std::vector<Scalar> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Number of assignments, saturating at `cap + 1`.
inline std::size_t assignment_count(std::size_t slots, std::size_t values, std::size_t cap) {
  std::size_t total = 1;
  for (std::size_t s = 0; s < slots; ++s) {
    if (values != 0 && total > cap / values) return cap + 1;
    total *= values;
  }
  return total;
}

// Visits every assignment of `values` to `slots` positions in lexicographic
// order (last slot fastest). f returns false to stop early.
template <class F>
void for_each_assignment(std::size_t slots, const std::vector<Scalar>& values, F&& f) {
  if (values.empty() && slots > 0) return;
  std::vector<std::size_t> idx(slots, 0);
  std::vector<Scalar> cur(slots, values.empty() ? Scalar(0) : values[0]);
  while (true) {
    if (!f(static_cast<const std::vector<Scalar>&>(cur))) return;
    std::size_t s = slots;
    while (s > 0) {
      --s;
      if (++idx[s] < values.size()) {
        cur[s] = values[idx[s]];
        break;
      }
      idx[s] = 0;
      cur[s] = values[0];
      if (s == 0) return;
    }
    if (slots == 0) return;
  }
}

// Row-major fill of a rows x cols matrix from a flat assignment.
inline Matrix matrix_from_flat(const std::vector<Scalar>& v, std::size_t rows, std::size_t cols,
                               std::size_t offset = 0) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[offset + r * cols + c];
  return m;
}

// Every rows x cols matrix with entries in `values`, lexicographic.
template <class F>
void for_each_matrix(std::size_t rows, std::size_t cols, const std::vector<Scalar>& values, F&& f) {
  for_each_assignment(rows * cols, values, [&](const std::vector<Scalar>& v) {
    return f(matrix_from_flat(v, rows, cols));
  });
}

}  // namespace lbw
