#pragma once

#include <vector>

#include "xop/context.hpp"
#include "xop/polynomial.hpp"

namespace xop {

/// ceil(k/2) and floor(k/2): the exponents of (x - r) and (x - s) in B_k.
constexpr int ceil_half(int k) { return (k + 1) / 2; }
constexpr int floor_half(int k) { return k / 2; }

/// Polynomial in the shifted basis B_k(x) = (x - r)^ceil(k/2) (x - s)^floor(k/2).
/// B_k is monic of degree k, so a_n is also the monomial leading coefficient.
struct ShiftedPoly {
  std::vector<Real> coefficients;  ///< a_k multiplies B_k
  ParameterContext ctx;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

/// Expanded monomial form of B_k.
MonomialPoly basis_element(int k, const ParameterContext& ctx);

/// Sum of a_k B_k in monomial form.
MonomialPoly to_monomial(const ShiftedPoly& p);

/// Inverse of to_monomial; peels off the top-degree coefficient and recurses
/// downwards, which is exact because the basis is triangular and monic.
ShiftedPoly from_monomial(const MonomialPoly& p, const ParameterContext& ctx);

/// The flag elements:
///   v_2 = L_2^alpha(-x) = (x-r)(x-s)/2 + x - r - beta
///   v_3 = (x-r)^2 (x-s+1)
///   v_l = B_l for l >= 4.
/// Each satisfies both exceptional conditions.
MonomialPoly flag_element(int l, const ParameterContext& ctx);

/// Scales every coefficient by c.
ShiftedPoly scale(const ShiftedPoly& p, const Real& c);

}  // namespace xop
