#pragma once

#include "xop/context.hpp"
#include "xop/polynomial.hpp"

namespace xop {

/// Generalized Laguerre polynomial L_n^a(x) in monomial form, by the
/// three-term recurrence
///   (k+1) L_{k+1} = (2k + 1 + a - x) L_k - (k + a) L_{k-1},
/// with L_0 = 1, L_1 = 1 + a - x. n = -1 yields the zero polynomial.
/// Coefficients are computed at the precision of `a`.
MonomialPoly laguerre(int n, const Real& a);

/// L_2^{alpha-1}(-x) = x^2/2 + (alpha+1) x + alpha (alpha+1)/2, whose
/// zeros are the exceptional roots r and s.
MonomialPoly exceptional_denominator(const ParameterContext& ctx);

/// Closed form of the X_2 Type I Laguerre polynomial of degree n >= 2:
///   L_2^alpha(-x) L_{n-2}^{alpha-1}(x) + L_2^{alpha-1}(-x) L_{n-3}^alpha(x).
/// Its normalization is the reference normalization used everywhere else.
MonomialPoly closed_form_xop(int n, const ParameterContext& ctx);

}  // namespace xop
