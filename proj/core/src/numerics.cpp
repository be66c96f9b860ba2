#include "xop/numerics.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "xop/errors.hpp"

namespace xop {
namespace {

constexpr long kGuardBits = 32;

Real require_finite(Real value, const char* what) {
  if (!value.is_finite()) throw NumericError(std::string(what) + ": result is not finite");
  return value;
}

// Lower incomplete gamma by its power series; valid for x > 0.
Real lower_incomplete_gamma_series(const Real& x, const Real& a, long bits) {
  const Real eps = Real::power_of_two(-bits, bits);
  Real term = Real(1, bits) / x;
  Real sum = term;
  for (long k = 1; k < 1'000'000; ++k) {
    term *= a;
    term /= x + k;
    sum += term;
    if (abs(term) <= abs(sum) * eps) {
      return sum * exp(x * log(a) - a);
    }
  }
  throw NumericError("incomplete gamma series did not converge");
}

// Gamma(x, a) by the Legendre continued fraction, evaluated with the
// modified Lentz algorithm. Converges for every a > 0; the iteration count
// grows roughly like (bits / 4)^2 / a.
Real upper_incomplete_gamma_fraction(const Real& x, const Real& a, long bits) {
  const Real eps = Real::power_of_two(-bits, bits);
  const Real tiny = Real::power_of_two(-8 * bits, bits);
  auto floor_tiny = [&](Real& v) {
    if (abs(v) < tiny) v = tiny;
  };

  Real b = a + 1 - x;
  floor_tiny(b);
  Real c = Real(1, bits) / tiny;
  Real d = Real(1, bits) / b;
  Real h = d;

  const double budget = 2000.0 + 8.0 * std::pow(bits * 0.1733, 2) / std::max(a.to_double(), 1e-300);
  const long max_iter = static_cast<long>(std::min(budget, 2.0e7));
  for (long i = 1; i <= max_iter; ++i) {
    const Real an = -Real(i, bits) * (Real(i, bits) - x);
    b += 2;
    d = an * d + b;
    floor_tiny(d);
    c = b + an / c;
    floor_tiny(c);
    d = Real(1, bits) / d;
    const Real delta = d * c;
    h *= delta;
    if (abs(delta - 1) <= eps) {
      return exp(x * log(a) - a) * h;
    }
  }
  std::ostringstream msg;
  msg << "incomplete gamma continued fraction did not converge after " << max_iter
      << " iterations (x=" << x.to_double() << ", a=" << a.to_double() << ")";
  throw NumericError(msg.str());
}

}  // namespace

Real gamma(const Real& x) {
  if (x.sign() <= 0) throw DomainError("gamma requires x > 0");
  Real out(0, x.precision());
  mpfr_gamma(out.get(), x.get(), MPFR_RNDN);
  return require_finite(std::move(out), "gamma");
}

Real upper_incomplete_gamma(const Real& x, const Real& a) {
  if (a.sign() <= 0) throw DomainError("upper incomplete gamma requires a > 0");
  const long bits = std::max(x.precision(), a.precision());
  const long wp = bits + kGuardBits;
  PrecisionScope scope(wp);
  const Real xw = x.with_precision(wp);
  const Real aw = a.with_precision(wp);

  Real value = (xw.sign() > 0 && aw < xw + 1)
                   ? gamma(xw) - lower_incomplete_gamma_series(xw, aw, wp)
                   : upper_incomplete_gamma_fraction(xw, aw, wp);
  return require_finite(value.with_precision(bits), "upper_incomplete_gamma");
}

Real exp_integral_e(const Real& a, const Real& x) {
  if (x.sign() <= 0) throw DomainError("exp_integral_e requires x > 0");
  const long bits = std::max(x.precision(), a.precision());
  const long wp = bits + kGuardBits;
  PrecisionScope scope(wp);
  const Real aw = a.with_precision(wp);
  const Real xw = x.with_precision(wp);
  Real value = pow(xw, aw - 1) * upper_incomplete_gamma(1 - aw, xw);
  return require_finite(value.with_precision(bits), "exp_integral_e");
}

QuadratureRule gauss_laguerre_rule(const Real& alpha, std::size_t node_count, long bits) {
  if (node_count == 0) throw DomainError("gauss_laguerre_rule requires node_count >= 1");
  if (!(alpha > -1)) throw DomainError("gauss_laguerre_rule requires alpha > -1");

  const auto n = static_cast<Eigen::Index>(node_count);
  const double a = alpha.to_double();
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max<Eigen::Index>(n - 1, 0));
  for (Eigen::Index k = 0; k < n; ++k) {
    diag[k] = 2.0 * static_cast<double>(k) + 1.0 + a;
    if (k + 1 < n) {
      const double m = static_cast<double>(k + 1);
      sub[k] = std::sqrt(m * (m + a));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericError("Jacobi eigenvalue solve failed");
  Eigen::VectorXd seeds = solver.eigenvalues();
  std::sort(seeds.data(), seeds.data() + n);

  const long wp = bits + kGuardBits;
  PrecisionScope scope(wp);
  const Real al = alpha.with_precision(wp);
  const long nl = static_cast<long>(node_count);

  // Scaled polynomials q_m = m! L_m^alpha:
  //   q_{m+1} = (2m + 1 + alpha - x) q_m - m (m + alpha) q_{m-1}.
  std::vector<Real> damping(node_count);
  for (long m = 1; m < nl; ++m) damping[static_cast<std::size_t>(m)] = Real(m, wp) * (al + m);

  Real q_prev(0, wp), q_cur(0, wp), t(0, wp), u(0, wp), amx(0, wp);
  // Leaves q_n in q_cur and q_{n-1} in q_prev.
  auto evaluate = [&](const Real& x) {
    mpfr_set_ui(q_prev.get(), 1, MPFR_RNDN);
    mpfr_sub(amx.get(), al.get(), x.get(), MPFR_RNDN);
    mpfr_add_ui(q_cur.get(), amx.get(), 1, MPFR_RNDN);
    for (long m = 1; m < nl; ++m) {
      mpfr_add_ui(t.get(), amx.get(), static_cast<unsigned long>(2 * m + 1), MPFR_RNDN);
      mpfr_mul(t.get(), t.get(), q_cur.get(), MPFR_RNDN);
      mpfr_mul(u.get(), damping[static_cast<std::size_t>(m)].get(), q_prev.get(), MPFR_RNDN);
      mpfr_sub(q_prev.get(), t.get(), u.get(), MPFR_RNDN);
      mpfr_swap(q_prev.get(), q_cur.get());
    }
  };

  const Real n_plus_alpha = al + nl;
  const Real weight_scale = gamma(n_plus_alpha + 1) * gamma(Real(nl, wp)) /
                            (Real(nl, wp) * n_plus_alpha * n_plus_alpha);
  // Converged once the step is below the emitted precision; the guard bits
  // absorb rounding in the recurrence near the smallest nodes.
  const Real tol = Real::power_of_two(-bits - 4, wp);

  QuadratureRule rule{{}, {}, alpha.with_precision(bits)};
  rule.nodes.reserve(node_count);
  rule.weights.reserve(node_count);
  for (Eigen::Index k = 0; k < n; ++k) {
    Real x(seeds[k], wp);
    bool converged = false;
    Real step(0, wp);
    for (int iter = 0; iter < 60 && !converged; ++iter) {
      evaluate(x);
      const Real denom = (q_cur - n_plus_alpha * q_prev) * nl;
      step = q_cur * x / denom;
      x -= step;
      converged = abs(step) <= abs(x) * tol;
    }
    if (!converged || !(x > 0)) {
      std::ostringstream msg;
      msg << "Gauss-Laguerre node " << k << " of " << node_count << " did not converge at "
          << bits << " bits (seed " << seeds[k] << ", last relative step "
          << (abs(step) / abs(x)).to_double() << ")";
      throw NumericError(msg.str());
    }
    evaluate(x);
    Real w = weight_scale * x / (q_prev * q_prev);
    rule.nodes.push_back(x.with_precision(bits));
    rule.weights.push_back(w.with_precision(bits));
  }

  for (std::size_t k = 0; k < node_count; ++k) {
    if (!(rule.weights[k] > 0) || (k > 0 && !(rule.nodes[k] > rule.nodes[k - 1]))) {
      throw NumericError("Gauss-Laguerre rule lost node ordering or weight positivity at node " +
                         std::to_string(k) + "; node seeds too inaccurate");
    }
  }
  return rule;
}

std::size_t adjusted_node_count(const ParameterContext& ctx, double target_digits) {
  const double s = std::abs(ctx.s().to_double());
  const double root = (target_digits * std::log(10.0) + 12.0) / 4.0;
  const double n = std::ceil(root * root / s);
  return static_cast<std::size_t>(std::clamp(n, 200.0, 6000.0));
}

void require_rule_matches(const QuadratureRule& rule, const ParameterContext& ctx) {
  const long bits = ctx.precision();
  const long check_bits = std::min(bits, rule.alpha.precision());
  if (abs(rule.alpha - ctx.alpha()) > Real::power_of_two(8 - check_bits, bits) * max(Real(1, bits), ctx.alpha())) {
    throw DomainError("quadrature rule was built for a different alpha");
  }
}

Real integrate_adjusted(const QuadratureRule& rule, int i, int j, const ParameterContext& ctx) {
  if (i < 0 || j < 0) throw DomainError("integrate_adjusted requires i, j >= 0");
  require_rule_matches(rule, ctx);
  const long bits = ctx.precision();
  PrecisionScope scope(bits);
  const Real& alpha = ctx.alpha();
  // L_2^{alpha-1}(-x) = x^2/2 + (alpha+1) x + alpha (alpha+1)/2
  const Real c1 = alpha + 1;
  const Real c0 = alpha * (alpha + 1) / 2;
  Real sum(0, bits);
  for (std::size_t k = 0; k < rule.node_count(); ++k) {
    const Real& x = rule.nodes[k];
    const Real weight_poly = (x / 2 + c1) * x + c0;
    sum += rule.weights[k] * pow(x - ctx.r(), i) * pow(x - ctx.s(), j) / (weight_poly * weight_poly);
  }
  return require_finite(std::move(sum), "integrate_adjusted");
}

}  // namespace xop
