#pragma once

#include <stdexcept>
#include <string>

namespace xop {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative method failed to converge, or a result is not finite.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix is singular at working precision, or a recursion was asked to
/// divide by a coefficient that vanishes.
class SingularError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// A moment table does not cover an index pair an operation needs.
class CoverageError : public std::out_of_range {
 public:
  CoverageError(int i, int j)
      : std::out_of_range("moment table does not cover (" + std::to_string(i) +
                          "," + std::to_string(j) + ")"),
        i_(i),
        j_(j) {}

  int i() const noexcept { return i_; }
  int j() const noexcept { return j_; }

 private:
  int i_;
  int j_;
};

}  // namespace xop
