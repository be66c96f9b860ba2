#include "xop/basis.hpp"

#include <utility>

#include "xop/errors.hpp"

namespace xop {

namespace {

// Basis changes cancel heavily once |r|^k is large, so both directions run
// with guard bits and round back.
constexpr long kConversionGuardBits = 64;

MonomialPoly shifted_element(int k, const Real& r, const Real& s, const Real& one) {
  const MonomialPoly x_minus_r = MonomialPoly::linear(-r, one);
  const MonomialPoly x_minus_s = MonomialPoly::linear(-s, one);
  MonomialPoly out = MonomialPoly::constant(one);
  for (int i = 0; i < ceil_half(k); ++i) out = out * x_minus_r;
  for (int j = 0; j < floor_half(k); ++j) out = out * x_minus_s;
  return out;
}

}  // namespace

MonomialPoly basis_element(int k, const ParameterContext& ctx) {
  if (k < 0) throw DomainError("basis_element requires k >= 0");
  PrecisionScope scope(ctx.precision());
  return shifted_element(k, ctx.r(), ctx.s(), ctx.constant(1));
}

MonomialPoly to_monomial(const ShiftedPoly& p) {
  const long wp = p.ctx.precision() + kConversionGuardBits;
  PrecisionScope scope(wp);
  // B_{k+1} = B_k * (x - r) for even k, B_k * (x - s) for odd k.
  const Real one(1, wp);
  const MonomialPoly x_minus_r = MonomialPoly::linear(-p.ctx.r().with_precision(wp), one);
  const MonomialPoly x_minus_s = MonomialPoly::linear(-p.ctx.s().with_precision(wp), one);
  MonomialPoly out;
  MonomialPoly element = MonomialPoly::constant(one);
  for (std::size_t k = 0; k < p.coefficients.size(); ++k) {
    if (k > 0) element = element * ((k % 2 == 1) ? x_minus_r : x_minus_s);
    out += p.coefficients[k].with_precision(wp) * element;
  }
  std::vector<Real> rounded;
  rounded.reserve(out.coefficients().size());
  for (const auto& c : out.coefficients()) rounded.push_back(c.with_precision(p.ctx.precision()));
  return MonomialPoly(std::move(rounded));
}

ShiftedPoly from_monomial(const MonomialPoly& p, const ParameterContext& ctx) {
  const int n = p.degree();
  ShiftedPoly out{std::vector<Real>(static_cast<std::size_t>(n < 0 ? 1 : n + 1), ctx.constant(0)), ctx};
  if (n < 0) return out;

  const long wp = ctx.precision() + kConversionGuardBits;
  PrecisionScope scope(wp);
  const Real one(1, wp);
  const Real r = ctx.r().with_precision(wp);
  const Real s = ctx.s().with_precision(wp);
  std::vector<Real> rest;
  rest.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) rest.push_back(c.with_precision(wp));
  for (int k = n; k >= 0; --k) {
    const Real a = rest[static_cast<std::size_t>(k)];
    out.coefficients[static_cast<std::size_t>(k)] = a.with_precision(ctx.precision());
    const MonomialPoly e = shifted_element(k, r, s, one);
    for (int d = 0; d <= k; ++d) rest[static_cast<std::size_t>(d)] -= a * e.coefficient(d);
  }
  return out;
}

MonomialPoly flag_element(int l, const ParameterContext& ctx) {
  if (l < 2) throw DomainError("flag elements start at l = 2");
  PrecisionScope scope(ctx.precision());
  const Real one = ctx.constant(1);
  const MonomialPoly x_minus_r = MonomialPoly::linear(-ctx.r(), one);
  const MonomialPoly x_minus_s = MonomialPoly::linear(-ctx.s(), one);
  if (l == 2) {
    const Real half = one / 2;
    return half * (x_minus_r * x_minus_s) + x_minus_r - MonomialPoly::constant(ctx.beta());
  }
  if (l == 3) {
    return x_minus_r * x_minus_r * MonomialPoly::linear(one - ctx.s(), one);
  }
  return basis_element(l, ctx);
}

ShiftedPoly scale(const ShiftedPoly& p, const Real& c) {
  ShiftedPoly out = p;
  for (auto& a : out.coefficients) a *= c;
  return out;
}

}  // namespace xop
