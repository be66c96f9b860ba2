#pragma once

#include <cstddef>
#include <vector>

#include "xop/real.hpp"

namespace xop {

/// Dense row-major matrix of Reals.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const Real& fill);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Real& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Real& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Real max_abs() const;
  /// Copy with column `col` replaced by `values`.
  Matrix with_column(std::size_t col, const std::vector<Real>& values) const;
  /// Copy without row `row` and column `col`.
  Matrix minor(std::size_t row, std::size_t col) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Real> data_;
};

/// Determinant by Gaussian elimination with partial pivoting.
Real determinant(const Matrix& a);

/// Scale-free distance from singularity: rows and then columns are scaled to
/// unit max-norm, and the result is |det| / prod_i ||row_i||_2, which lies in
/// [0, 1] by Hadamard's inequality. Zero for a zero row or column.
Real equilibrated_ratio(const Matrix& a);

/// Solves a x = b by Gaussian elimination with partial pivoting after row
/// equilibration. Throws SingularError when a pivot of the equilibrated
/// matrix falls below 2^(-7/8 precision).
std::vector<Real> solve(const Matrix& a, const std::vector<Real>& b);

}  // namespace xop
