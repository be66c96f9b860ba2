#pragma once

#include <string_view>

#include "xop/real.hpp"

namespace xop {

/// The weight parameter alpha together with every constant derived from it.
///
///   beta = sqrt(alpha + 1)
///   r    = -(alpha + 1) - beta      (exceptional roots: the zeros of
///   s    = -(alpha + 1) + beta       L_2^{alpha-1}(-x))
///
/// so r < s < 0, s - r = 2 beta, r s = alpha (alpha + 1). All values are
/// held at `precision()` bits.
class ParameterContext {
 public:
  /// Throws DomainError unless alpha > 0 and bits >= kMinPrecisionBits.
  explicit ParameterContext(const Real& alpha, long bits = kDefaultPrecisionBits);

  /// Parses alpha from decimal text at the requested precision, so that
  /// non-dyadic values such as "3.7" are represented to full precision.
  static ParameterContext parse(std::string_view alpha, long bits = kDefaultPrecisionBits);

  const Real& alpha() const { return alpha_; }
  const Real& beta() const { return beta_; }
  const Real& r() const { return r_; }
  const Real& s() const { return s_; }
  long precision() const { return bits_; }

  /// Integer constant at this context's precision.
  Real constant(long value) const { return Real(value, bits_); }

  /// 2^(k - precision): the unit for precision-relative tolerances.
  Real ulp_scaled(long k) const { return Real::power_of_two(k - bits_, bits_); }

 private:
  long bits_;
  Real alpha_;
  Real beta_;
  Real r_;
  Real s_;
};

}  // namespace xop
