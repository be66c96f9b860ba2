#include "xop/classical.hpp"

#include <string>

#include "xop/context.hpp"
#include "xop/errors.hpp"

namespace xop {

ParameterContext::ParameterContext(const Real& alpha, long bits)
    : bits_(bits),
      alpha_(alpha.with_precision(bits < kMinPrecisionBits ? kMinPrecisionBits : bits)),
      beta_(0, alpha_.precision()),
      r_(0, alpha_.precision()),
      s_(0, alpha_.precision()) {
  if (bits < kMinPrecisionBits) {
    throw DomainError("precision must be at least " + std::to_string(kMinPrecisionBits) +
                      " bits, got " + std::to_string(bits));
  }
  if (!(alpha_ > 0)) throw DomainError("alpha must be positive");
  beta_ = sqrt(alpha_ + 1);
  r_ = -(alpha_ + 1) - beta_;
  s_ = -(alpha_ + 1) + beta_;
}

ParameterContext ParameterContext::parse(std::string_view alpha, long bits) {
  if (bits < kMinPrecisionBits) {
    throw DomainError("precision must be at least " + std::to_string(kMinPrecisionBits) +
                      " bits, got " + std::to_string(bits));
  }
  return ParameterContext(Real::parse(alpha, bits), bits);
}

MonomialPoly laguerre(int n, const Real& a) {
  if (n < -1) throw DomainError("laguerre requires n >= -1");
  if (n == -1) return {};
  const long bits = a.precision();
  MonomialPoly prev;
  MonomialPoly cur = MonomialPoly::constant(Real(1, bits));
  const MonomialPoly x = MonomialPoly::linear(Real(0, bits), Real(1, bits));
  for (int k = 0; k < n; ++k) {
    // (2k + 1 + a - x) L_k - (k + a) L_{k-1}, divided by k + 1
    MonomialPoly factor = MonomialPoly::constant(a + (2 * k + 1)) - x;
    MonomialPoly next = factor * cur - (a + k) * prev;
    next = (Real(1, bits) / (k + 1)) * next;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

MonomialPoly exceptional_denominator(const ParameterContext& ctx) {
  PrecisionScope scope(ctx.precision());
  return negate_argument(laguerre(2, ctx.alpha() - 1));
}

MonomialPoly closed_form_xop(int n, const ParameterContext& ctx) {
  if (n < 2) throw DomainError("closed_form_xop requires n >= 2 (degrees 0 and 1 are exceptional)");
  PrecisionScope scope(ctx.precision());
  const Real& alpha = ctx.alpha();
  const Real alpha_m1 = alpha - 1;
  return negate_argument(laguerre(2, alpha)) * laguerre(n - 2, alpha_m1) +
         negate_argument(laguerre(2, alpha_m1)) * laguerre(n - 3, alpha);
}

}  // namespace xop
