#pragma once

#include <initializer_list>
#include <vector>

#include "xop/real.hpp"

namespace xop {

/// Dense polynomial in the monomial basis; coefficient k multiplies x^k.
/// Exact-zero leading coefficients are trimmed, so the zero polynomial has
/// no coefficients and degree -1.
class MonomialPoly {
 public:
  MonomialPoly() = default;
  explicit MonomialPoly(std::vector<Real> coefficients);
  MonomialPoly(std::initializer_list<Real> coefficients);

  static MonomialPoly constant(const Real& c);
  /// c0 + c1 x
  static MonomialPoly linear(const Real& c0, const Real& c1);

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  const std::vector<Real>& coefficients() const { return coefficients_; }
  /// Coefficient of x^k; zero outside [0, degree].
  Real coefficient(int k) const;
  /// Coefficient of x^degree; zero for the zero polynomial.
  Real leading() const;
  Real max_abs_coefficient() const;
  /// Largest precision among the coefficients (default precision if empty).
  long precision() const;

  Real operator()(const Real& x) const;

  MonomialPoly& operator+=(const MonomialPoly& rhs);
  MonomialPoly& operator-=(const MonomialPoly& rhs);

  friend MonomialPoly operator+(MonomialPoly a, const MonomialPoly& b) { return a += b; }
  friend MonomialPoly operator-(MonomialPoly a, const MonomialPoly& b) { return a -= b; }
  friend MonomialPoly operator-(const MonomialPoly& p);
  friend MonomialPoly operator*(const MonomialPoly& a, const MonomialPoly& b);
  friend MonomialPoly operator*(const Real& c, const MonomialPoly& p);
  friend MonomialPoly operator*(const MonomialPoly& p, const Real& c) { return c * p; }

 private:
  void trim();

  std::vector<Real> coefficients_;
};

Real evaluate(const MonomialPoly& p, const Real& x);
MonomialPoly differentiate(const MonomialPoly& p);
MonomialPoly scale(const MonomialPoly& p, const Real& c);
/// p(x) -> p(-x): coefficient k picks up (-1)^k.
MonomialPoly negate_argument(const MonomialPoly& p);

/// max_k |a_k - b_k| / max_k |b_k|; the reference `b` must be nonzero.
Real max_relative_deviation(const MonomialPoly& a, const MonomialPoly& b);

}  // namespace xop
