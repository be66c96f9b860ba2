#pragma once

#include <cstddef>
#include <vector>

#include "xop/context.hpp"
#include "xop/real.hpp"

namespace xop {

/// Gamma function for x > 0, correctly rounded at the precision of x.
Real gamma(const Real& x);

/// Upper incomplete Gamma function
///
///   Gamma(x, a) = integral_a^inf t^(x-1) e^(-t) dt,   a > 0, any real x.
///
/// Uses the power series of the lower function for x > 0, a < x + 1 and the
/// Legendre continued fraction (modified Lentz) otherwise. Throws
/// DomainError for a <= 0 and NumericError if the fraction fails to
/// converge.
Real upper_incomplete_gamma(const Real& x, const Real& a);

/// Generalized exponential integral E_a(x) = integral_1^inf e^(-x t) t^(-a) dt
/// = x^(a-1) Gamma(1 - a, x), for x > 0.
Real exp_integral_e(const Real& a, const Real& x);

/// Generalized Gauss-Laguerre rule for the weight x^alpha e^(-x) on (0, inf).
struct QuadratureRule {
  std::vector<Real> nodes;    ///< strictly increasing, positive
  std::vector<Real> weights;  ///< positive
  Real alpha;

  std::size_t node_count() const { return nodes.size(); }
};

/// Builds an n-point rule at `bits` precision. Nodes are seeded from the
/// eigenvalues of the Jacobi matrix in double precision and polished by
/// Newton iteration on L_n^alpha. Requires alpha > -1 and node_count >= 1.
QuadratureRule gauss_laguerre_rule(const Real& alpha, std::size_t node_count, long bits);

/// Node count for which the rule integrates the adjusted-moment integrands
/// to roughly `target_digits` decimal digits.
///
/// The integrand has a pole at s < 0; Gauss-Laguerre error for such a
/// function decays like exp(-4 sqrt(n |s|)), so the count grows like 1/|s|.
/// Never below 200; capped at 6000.
std::size_t adjusted_node_count(const ParameterContext& ctx, double target_digits = 30.0);

/// Throws DomainError unless `rule` was built for ctx.alpha().
void require_rule_matches(const QuadratureRule& rule, const ParameterContext& ctx);

/// Quadrature estimate of the adjusted moment
///   mu_{i,j} = integral_0^inf (x-r)^i (x-s)^j x^alpha e^(-x) / L_2^{alpha-1}(-x)^2 dx.
/// The rule must have been built for ctx.alpha().
Real integrate_adjusted(const QuadratureRule& rule, int i, int j, const ParameterContext& ctx);

}  // namespace xop
