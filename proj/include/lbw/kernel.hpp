#pragma once

/*
 * Exact rational scalars and dense tensors of order <= 3.
 *
 * Conventions used by every other header:
 *   - every space has a fixed ordered basis e_0..e_{n-1};
 *   - dual spaces use the dual basis, so the transpose of a map is its
 *     matrix transpose;
 *   - a LinearMap stores entry (row, col) = coefficient of output basis
 *     vector `row` in the image of input basis vector `col`;
 *   - a Tensor2 stores entry (i, j) = coefficient of e_i (x) f_j;
 *   - direct sums are ordered blocks, first summand first.
 */

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lbw {

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

// Shape errors: a dimension or array extent does not match.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A precondition on the mathematical content failed (e.g. a construction
// was handed a non-representation).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A bilinear form that was required to be nondegenerate is not.
class SingularForm : public SingularError {
 public:
  using SingularError::SingularError;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "p/q" or "p"; sign on the numerator, denominator strictly positive.
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& q);

Vector zero_vector(std::size_t n);
Vector basis_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
std::string to_string(const Vector& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static Matrix diagonal(const Vector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vector column(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;

  // Sub-block copy and write-back.
  Matrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

using LinearMap = Matrix;

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(Matrix a);
Matrix operator*(const Scalar& s, Matrix m);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& x);

Matrix block_diag(const Matrix& a, const Matrix& b);
Scalar determinant(const Matrix& m);
bool is_invertible(const Matrix& m);
// Throws SingularError when the matrix has no inverse.
Matrix inverse(const Matrix& m);

std::string to_string(const Matrix& m);

// Matrix transpose; on dual bases this is f*.
inline LinearMap transpose_map(const LinearMap& f) { return f.transpose(); }

// An element of U (x) W, stored densely.
class Tensor2 {
 public:
  Tensor2() = default;
  Tensor2(std::size_t dim_left, std::size_t dim_right) : m_(dim_left, dim_right) {}
  explicit Tensor2(Matrix entries) : m_(std::move(entries)) {}

  std::size_t dim_left() const { return m_.rows(); }
  std::size_t dim_right() const { return m_.cols(); }
  Scalar& operator()(std::size_t i, std::size_t j) { return m_(i, j); }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Matrix& entries() const { return m_; }
  bool is_zero() const { return m_.is_zero(); }

  friend bool operator==(const Tensor2&, const Tensor2&) = default;

 private:
  Matrix m_;
};

Tensor2 operator+(const Tensor2& a, const Tensor2& b);
Tensor2 operator-(const Tensor2& a, const Tensor2& b);
Tensor2 operator*(const Scalar& s, const Tensor2& t);

// tau: e_i (x) e_j -> e_j (x) e_i. Requires a square tensor.
Tensor2 flip(const Tensor2& t);
// (f (x) g)(t).
Tensor2 tensor_apply(const LinearMap& f, const LinearMap& g, const Tensor2& t);

class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t d0, std::size_t d1, std::size_t d2)
      : d0_(d0), d1_(d1), d2_(d2), data_(d0 * d1 * d2) {}

  std::size_t dim0() const { return d0_; }
  std::size_t dim1() const { return d1_; }
  std::size_t dim2() const { return d2_; }
  bool is_cubic() const { return d0_ == d1_ && d1_ == d2_; }

  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * d1_ + j) * d2_ + k];
  }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * d1_ + j) * d2_ + k];
  }

  bool is_zero() const;
  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
  std::vector<Scalar> data_;
};

Tensor3 operator+(Tensor3 a, const Tensor3& b);
Tensor3 operator-(Tensor3 a, const Tensor3& b);

// sigma(x (x) y (x) z) = z (x) x (x) y, i.e. result(i,j,k) = t(j,k,i).
Tensor3 cyclic_rotate(const Tensor3& t);
// (A (x) id (x) id + id (x) A (x) id + id (x) id (x) A)(t).
Tensor3 derivation_action(const LinearMap& a, const Tensor3& t);

}  // namespace lbw
