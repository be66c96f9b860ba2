#include "xop/linalg.hpp"

#include <utility>

#include "xop/errors.hpp"

namespace xop {

Matrix::Matrix(std::size_t rows, std::size_t cols, const Real& fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Real Matrix::max_abs() const {
  Real best = data_.empty() ? Real(0) : Real(0, data_.front().precision());
  for (const auto& v : data_) {
    Real a = abs(v);
    if (a > best) best = std::move(a);
  }
  return best;
}

Matrix Matrix::with_column(std::size_t col, const std::vector<Real>& values) const {
  if (values.size() != rows_ || col >= cols_) throw DomainError("with_column: shape mismatch");
  Matrix out = *this;
  for (std::size_t r = 0; r < rows_; ++r) out(r, col) = values[r];
  return out;
}

Matrix Matrix::minor(std::size_t row, std::size_t col) const {
  if (rows_ == 0 || cols_ == 0) throw DomainError("minor of an empty matrix");
  Matrix out(rows_ - 1, cols_ - 1, data_.front());
  for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
    if (r == row) continue;
    for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
      if (c == col) continue;
      out(rr, cc++) = (*this)(r, c);
    }
    ++rr;
  }
  return out;
}

namespace {

std::size_t pivot_row(const Matrix& a, std::size_t col) {
  std::size_t best = col;
  Real best_abs = abs(a(col, col));
  for (std::size_t r = col + 1; r < a.rows(); ++r) {
    Real v = abs(a(r, col));
    if (v > best_abs) {
      best_abs = std::move(v);
      best = r;
    }
  }
  return best;
}

void swap_rows(Matrix& a, std::size_t r1, std::size_t r2) {
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(r1, c), a(r2, c));
}

}  // namespace

Real determinant(const Matrix& input) {
  if (input.rows() != input.cols()) throw DomainError("determinant of a non-square matrix");
  if (input.rows() == 0) return Real(1);
  Matrix a = input;
  const std::size_t n = a.rows();
  Real det(1, a(0, 0).precision());
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t p = pivot_row(a, col);
    if (a(p, col).is_zero()) return Real(0, det.precision());
    if (p != col) {
      swap_rows(a, p, col);
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const Real factor = a(r, col) / a(col, col);
      for (std::size_t c = col + 1; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

Real equilibrated_ratio(const Matrix& input) {
  if (input.rows() != input.cols()) throw DomainError("equilibrated_ratio of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return Real(1);
  Matrix a = input;
  const long bits = a(0, 0).precision();
  for (std::size_t r = 0; r < n; ++r) {
    Real scale(0, bits);
    for (std::size_t c = 0; c < n; ++c) scale = max(scale, abs(a(r, c)));
    if (scale.is_zero()) return Real(0, bits);
    for (std::size_t c = 0; c < n; ++c) a(r, c) /= scale;
  }
  for (std::size_t c = 0; c < n; ++c) {
    Real scale(0, bits);
    for (std::size_t r = 0; r < n; ++r) scale = max(scale, abs(a(r, c)));
    if (scale.is_zero()) return Real(0, bits);
    for (std::size_t r = 0; r < n; ++r) a(r, c) /= scale;
  }
  Real bound(1, bits);
  for (std::size_t r = 0; r < n; ++r) {
    Real sq(0, bits);
    for (std::size_t c = 0; c < n; ++c) sq += a(r, c) * a(r, c);
    bound *= sqrt(sq);
  }
  return abs(determinant(a)) / bound;
}

std::vector<Real> solve(const Matrix& input, const std::vector<Real>& rhs) {
  const std::size_t n = input.rows();
  if (input.cols() != n || rhs.size() != n) throw DomainError("solve: shape mismatch");
  Matrix a = input;
  std::vector<Real> b = rhs;
  const long bits = n == 0 ? default_precision() : a(0, 0).precision();
  // Equilibrate rows so each has max-norm 1; the pivot test is then scale-free.
  for (std::size_t r = 0; r < n; ++r) {
    Real scale(0, bits);
    for (std::size_t c = 0; c < n; ++c) scale = max(scale, abs(a(r, c)));
    if (scale.is_zero()) throw SingularError("matrix has a zero row");
    for (std::size_t c = 0; c < n; ++c) a(r, c) /= scale;
    b[r] /= scale;
  }
  const Real threshold = Real::power_of_two(-(bits - bits / 8), bits);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t p = pivot_row(a, col);
    if (abs(a(p, col)) <= threshold) {
      throw SingularError("matrix is singular at " + std::to_string(bits) + " bits (pivot " +
                          std::to_string(col) + ")");
    }
    if (p != col) {
      swap_rows(a, p, col);
      std::swap(b[p], b[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const Real factor = a(r, col) / a(col, col);
      for (std::size_t c = col + 1; c < n; ++c) a(r, c) -= factor * a(col, c);
      b[r] -= factor * b[col];
    }
  }
  std::vector<Real> x(n, Real(0, bits));
  for (std::size_t k = n; k-- > 0;) {
    Real acc = b[k];
    for (std::size_t c = k + 1; c < n; ++c) acc -= a(k, c) * x[c];
    x[k] = acc / a(k, k);
  }
  return x;
}

}  // namespace xop
