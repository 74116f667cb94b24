#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cotstruct/field.hpp"

namespace cotstruct {

/// Dense matrix over an exact field. Row-major, immutable in spirit:
/// operations return fresh values.
class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

  static Matrix identity(Field f, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Scalar v) { a_[r * cols_ + c] = std::move(v); }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix negate() const;
  Matrix transpose() const;
  Matrix hstack(const Matrix& o) const;
  Matrix vstack(const Matrix& o) const;
  Matrix column(std::size_t c) const;
  Matrix columns(const std::vector<std::size_t>& idx) const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

struct Rref {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form by Gaussian elimination with first-nonzero
/// pivoting. Row space is preserved; the result is canonical.
Rref rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Columns span the null space; count = cols - rank.
Matrix kernel_basis(const Matrix& m);

/// Solves m x = b (b may have several columns). Empty optional if inconsistent.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

/// rank(ambient) - rank(sub), after checking colspace(sub) <= colspace(ambient).
std::size_t quotient_dimension(const Matrix& sub, const Matrix& ambient);

}  // namespace cotstruct
