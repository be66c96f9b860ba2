#include "xop/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <random>
#include <sstream>
#include <utility>

#include "xop/basis.hpp"
#include "xop/classical.hpp"
#include "xop/determinantal.hpp"
#include "xop/errors.hpp"
#include "xop/linalg.hpp"
#include "xop/numerics.hpp"

namespace xop {

namespace {

struct RawResiduals {
  Real at_r;
  Real at_s;
};

RawResiduals raw_exceptional(const MonomialPoly& p, const ParameterContext& ctx) {
  const MonomialPoly dp = differentiate(p);
  auto at = [&](const Real& xi) { return xi * evaluate(dp, xi) + ctx.alpha() * evaluate(p, xi); };
  return {at(ctx.r()), at(ctx.s())};
}

}  // namespace

ExceptionalResiduals exceptional_residuals(const MonomialPoly& p, const ParameterContext& ctx) {
  PrecisionScope scope(ctx.precision());
  const Real denom = max(ctx.constant(1), p.max_abs_coefficient());
  auto raw = raw_exceptional(p, ctx);
  return {raw.at_r / denom, raw.at_s / denom};
}

Real operator_identity_residual(const MonomialPoly& p, int n, const ParameterContext& ctx) {
  if (p.degree() != n) {
    throw DomainError("operator_identity_residual: degree " + std::to_string(p.degree()) +
                      " does not match n = " + std::to_string(n));
  }
  PrecisionScope scope(ctx.precision());
  const Real& a = ctx.alpha();
  const MonomialPoly x = MonomialPoly::linear(ctx.constant(0), ctx.constant(1));
  const MonomialPoly nn = exceptional_denominator(ctx);
  const MonomialPoly dn = differentiate(nn);
  const MonomialPoly dp = differentiate(p);
  const MonomialPoly ddp = differentiate(dp);
  const MonomialPoly shift = MonomialPoly::linear(-(a + 1), ctx.constant(1));  // x - alpha - 1

  const MonomialPoly eigen_side = ctx.constant(n - 2) * (nn * p);
  MonomialPoly r = -(x * nn * ddp);
  r += (shift * nn + ctx.constant(2) * (x * dn)) * dp;
  r += ((ctx.constant(2) * a) * dn - ctx.constant(2) * nn) * p;
  r -= eigen_side;

  Real denom = eigen_side.max_abs_coefficient();
  if (denom.is_zero()) denom = ctx.constant(1);
  return r.max_abs_coefficient() / denom;
}

Real orthogonality_residual(const MonomialPoly& p, const MonomialPoly& q, const MomentTable& table) {
  const ParameterContext& ctx = table.context();
  PrecisionScope scope(ctx.precision());
  const ShiftedPoly sp = from_monomial(p, ctx);
  const ShiftedPoly sq = from_monomial(q, ctx);
  const Real pq = moment_inner_product(sp, sq, table);
  const Real pp = moment_inner_product(sp, sp, table);
  const Real qq = moment_inner_product(sq, sq, table);
  if (!(pp > 0) || !(qq > 0)) throw NumericError("non-positive norm in orthogonality_residual");
  return abs(pq) / sqrt(pp * qq);
}

void VerificationReport::add(std::string check, std::string parameters, Real residual, Real tolerance) {
  const bool pass = residual.is_finite() && residual <= tolerance;
  records_.push_back(
      CheckRecord{std::move(check), std::move(parameters), std::move(residual), std::move(tolerance), pass, {}});
}

void VerificationReport::add_failure(std::string check, std::string parameters, Real tolerance,
                                     std::string error) {
  records_.push_back(CheckRecord{std::move(check), std::move(parameters), std::nullopt, std::move(tolerance),
                                 false, std::move(error)});
}

void VerificationReport::append(const VerificationReport& other) {
  records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(std::count_if(records_.begin(), records_.end(),
                                                [](const CheckRecord& r) { return r.pass; }));
}

std::size_t VerificationReport::failed() const { return records_.size() - passed(); }

namespace {

// E_a(x) from its own continued fraction (modified Lentz), kept apart from
// the incomplete-Gamma code it is meant to check.
Real exp_integral_cf(const Real& a, const Real& x, long bits) {
  PrecisionScope scope(bits);
  const Real tiny = Real::power_of_two(-4 * bits, bits);
  const Real eps = Real::power_of_two(-bits + 2, bits);
  Real b = x + a;
  Real c = Real(1, bits) / tiny;
  Real d = Real(1, bits) / b;
  Real h = d;
  for (long i = 1; i < 10'000'000; ++i) {
    const Real an = -(a - 1 + i) * i;
    b += 2;
    d = an * d + b;
    if (abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (abs(c) < tiny) c = tiny;
    d = Real(1, bits) / d;
    const Real delta = c * d;
    h *= delta;
    if (abs(delta - 1) <= eps) return h * exp(-x);
  }
  throw NumericError("exp_integral_cf did not converge");
}

std::string fmt(std::initializer_list<std::pair<const char*, std::string>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) os << ' ';
    os << k << '=' << v;
    first = false;
  }
  return os.str();
}

std::string str(int v) { return std::to_string(v); }

Real relative(const Real& value, const Real& reference) {
  if (reference.is_zero()) return abs(value);
  return abs(value - reference) / abs(reference);
}

// Maximum relative deviation over the overlapping cells of two tables.
Real table_deviation(const MomentTable& a, const MomentTable& b, int max_i, int max_j) {
  Real worst(0, a.context().precision());
  for (int i = 0; i <= max_i; ++i) {
    for (int j = 0; j <= max_j; ++j) worst = max(worst, relative(a(i, j), b(i, j)));
  }
  return worst;
}

MonomialPoly normalized_monomial(const ShiftedPoly& p) { return to_monomial(normalize_to_closed_form(p)); }

Real quadrature_inner_product(const QuadratureRule& rule, const MonomialPoly& p, const MonomialPoly& q,
                              const ParameterContext& ctx) {
  const MonomialPoly nn = exceptional_denominator(ctx);
  Real sum(0, ctx.precision());
  for (std::size_t k = 0; k < rule.node_count(); ++k) {
    const Real& x = rule.nodes[k];
    const Real d = evaluate(nn, x);
    sum += rule.weights[k] * evaluate(p, x) * evaluate(q, x) / (d * d);
  }
  return sum;
}

class Runner {
 public:
  Runner(std::string alpha, int n_max, SuiteOptions options)
      : alpha_text_(std::move(alpha)), n_max_(n_max), options_(options) {}

  VerificationReport run();

 private:
  // Runs `body`; an exception becomes a failing record for `check`.
  void guard(const std::string& check, const std::string& params, const Real& tol,
             const std::function<Real()>& body) {
    try {
      report_.add(check, with_alpha(params), body(), tol);
    } catch (const std::exception& e) {
      report_.add_failure(check, with_alpha(params), tol, e.what());
    }
  }

  std::string with_alpha(const std::string& params) const {
    return params.empty() ? "alpha=" + alpha_text_ : "alpha=" + alpha_text_ + " " + params;
  }

  Real tol_bits(long k) const { return ctx().ulp_scaled(k); }
  Real tol_decimal(int digits) const {
    return pow(ctx().constant(10), static_cast<long>(-digits));
  }
  const ParameterContext& ctx() const { return *ctx_; }

  void numerics_checks();
  void classical_checks();
  void basis_checks();
  void moments_checks();
  void determinantal_checks();
  void verify_checks();

  std::string alpha_text_;
  int n_max_;
  SuiteOptions options_;
  std::optional<ParameterContext> ctx_;
  std::optional<MomentTable> table_;
  std::optional<QuadratureRule> rule_;
  int table_i_ = 0;
  int table_j_ = 0;
  VerificationReport report_;
};

VerificationReport Runner::run() {
  PrecisionScope scope(options_.precision_bits);
  const Real unit(1, options_.precision_bits);
  try {
    ctx_.emplace(ParameterContext::parse(alpha_text_, options_.precision_bits));
  } catch (const std::exception& e) {
    report_.add_failure("context", with_alpha(""), unit, e.what());
    return std::move(report_);
  }
  // Table large enough for n_max, the 9x9 quadrature block and the degree-8 Gram matrix.
  const auto [ei, ej] = required_extent(std::max(n_max_, 8));
  table_i_ = std::max(ei, 8);
  table_j_ = std::max(ej, 8);
  try {
    table_.emplace(fill_table(ctx(), table_i_, table_j_));
  } catch (const std::exception& e) {
    report_.add_failure("moments.fill_table", with_alpha(""), unit, e.what());
  }
  try {
    const std::size_t nodes = options_.quad_nodes ? options_.quad_nodes : adjusted_node_count(ctx());
    rule_.emplace(gauss_laguerre_rule(ctx().alpha(), nodes, ctx().precision()));
  } catch (const std::exception& e) {
    report_.add_failure("numerics.gauss_laguerre_rule", with_alpha(""), unit, e.what());
  }

  numerics_checks();
  classical_checks();
  basis_checks();
  moments_checks();
  determinantal_checks();
  verify_checks();
  return std::move(report_);
}

void Runner::numerics_checks() {
  for (const char* xs : {"0.5", "1", "2.5", "4"}) {
    guard("numerics.gamma_recurrence", fmt({{"x", xs}}), tol_bits(8), [&] {
      const Real x = Real::parse(xs, ctx().precision());
      return relative(gamma(x + 1), x * gamma(x));
    });
  }

  const long bits = ctx().precision();
  const std::vector<std::pair<Real, Real>> pairs = {
      {ctx().alpha() + 1, -ctx().r()},
      {ctx().alpha() + 1, -ctx().s()},
      {Real::parse("0.5", bits), Real::parse("1", bits)},
      {Real::parse("2.5", bits), Real::parse("0.75", bits)},
  };
  for (const auto& [a, x] : pairs) {
    guard("numerics.exp_integral_identity", fmt({{"a", a.to_string()}, {"x", x.to_string()}}), tol_bits(16),
          [&] {
            const Real reference = exp_integral_cf(a, x, bits + 32).with_precision(bits);
            return relative(pow(x, a - 1) * upper_incomplete_gamma(1 - a, x), reference);
          });
    guard("numerics.exp_integral_e", fmt({{"a", a.to_string()}, {"x", x.to_string()}}), tol_bits(16), [&] {
      const Real reference = exp_integral_cf(a, x, bits + 32).with_precision(bits);
      return relative(exp_integral_e(a, x), reference);
    });
  }

  if (rule_ && options_.node_doubling) {
    guard("numerics.node_doubling",
          fmt({{"nodes", std::to_string(rule_->node_count())}, {"i,j", "<=8"}}), tol_decimal(15), [&] {
            const QuadratureRule doubled =
                gauss_laguerre_rule(ctx().alpha(), 2 * rule_->node_count(), ctx().precision());
            Real worst(0, bits);
            for (int i = 0; i <= 8; ++i) {
              for (int j = 0; j <= 8; ++j) {
                worst = max(worst, relative(integrate_adjusted(*rule_, i, j, ctx()),
                                            integrate_adjusted(doubled, i, j, ctx())));
              }
            }
            return worst;
          });
  }

  guard("numerics.precision_doubling", fmt({{"n", str(n_max_)}}), tol_bits(48), [&] {
    const ParameterContext wide = ParameterContext::parse(alpha_text_, 2 * bits);
    const MomentTable narrow_table = fill_table(ctx(), table_i_, table_j_);
    const MomentTable wide_table = fill_table(wide, table_i_, table_j_);
    Real worst = table_deviation(narrow_table, wide_table, table_i_, table_j_).with_precision(bits);
    const MonomialPoly narrow_poly = normalized_monomial(construct(Method::det_a, n_max_, narrow_table));
    MonomialPoly wide_poly;
    {
      PrecisionScope wide_scope(2 * bits);
      wide_poly = normalized_monomial(construct(Method::det_a, n_max_, wide_table));
    }
    worst = max(worst, max_relative_deviation(narrow_poly, wide_poly).with_precision(bits));
    return worst;
  });
}

void Runner::classical_checks() {
  const Real& a = ctx().alpha();
  for (int n = 1; n <= 12; ++n) {
    guard("classical.laguerre_recurrence", fmt({{"n", str(n)}}), tol_bits(16), [&] {
      const MonomialPoly x = MonomialPoly::linear(ctx().constant(0), ctx().constant(1));
      const MonomialPoly lhs = ctx().constant(n + 1) * laguerre(n + 1, a);
      const MonomialPoly rhs = (MonomialPoly::constant(a + (2 * n + 1)) - x) * laguerre(n, a) -
                               (a + n) * laguerre(n - 1, a);
      return max_relative_deviation(lhs, rhs);
    });
  }
  for (int n = 2; n <= std::max(n_max_, 12); ++n) {
    // 0 when the degree is n and the leading coefficient is nonzero, 1 otherwise.
    guard("classical.closed_form_degree", fmt({{"n", str(n)}}), ctx().constant(0), [&] {
      const MonomialPoly p = closed_form_xop(n, ctx());
      return ctx().constant(p.degree() == n && !p.leading().is_zero() ? 0 : 1);
    });
    guard("classical.closed_form_exceptional", fmt({{"n", str(n)}}), tol_bits(32), [&] {
      const MonomialPoly p = closed_form_xop(n, ctx());
      const auto raw = raw_exceptional(p, ctx());
      return max(abs(raw.at_r), abs(raw.at_s)) / p.max_abs_coefficient();
    });
  }
}

void Runner::basis_checks() {
  for (int l = 2; l <= std::max(n_max_, 8); ++l) {
    guard("basis.flag_exceptional", fmt({{"l", str(l)}}), tol_bits(32), [&] {
      const MonomialPoly v = flag_element(l, ctx());
      const auto raw = raw_exceptional(v, ctx());
      return max(abs(raw.at_r), abs(raw.at_s)) / v.max_abs_coefficient();
    });
  }

  guard("basis.v3_form", "", tol_bits(16), [&] {
    const MonomialPoly xr = MonomialPoly::linear(-ctx().r(), ctx().constant(1));
    const MonomialPoly xs = MonomialPoly::linear(-ctx().s(), ctx().constant(1));
    return max_relative_deviation(flag_element(3, ctx()), xr * xr * xs + xr * xr);
  });

  // Constraint rows of the exceptional conditions on monomials: (m + alpha) xi^m.
  for (int k = 0; k <= 6; ++k) {
    const int cols = k + 3;
    const std::string params = fmt({{"k", str(k)}, {"dim", str(k + 1)}});
    std::vector<Real> row_r;
    std::vector<Real> row_s;
    for (int m = 0; m < cols; ++m) {
      row_r.push_back((ctx().alpha() + m) * pow(ctx().r(), static_cast<long>(m)));
      row_s.push_back((ctx().alpha() + m) * pow(ctx().s(), static_cast<long>(m)));
    }
    // Rank 2 test: the largest 2x2 minor, relative to the row scales, must
    // clear 2^(-precision/2). Residual is the inverse of that ratio in units
    // of the threshold.
    guard("basis.constraint_rank", params, ctx().constant(1), [&] {
      Real best(0, ctx().precision());
      for (int p = 0; p < cols; ++p) {
        for (int q = p + 1; q < cols; ++q) {
          best = max(best, abs(row_r[p] * row_s[q] - row_r[q] * row_s[p]));
        }
      }
      Real scale_r(0, ctx().precision());
      Real scale_s(0, ctx().precision());
      for (int m = 0; m < cols; ++m) {
        scale_r = max(scale_r, abs(row_r[m]));
        scale_s = max(scale_s, abs(row_s[m]));
      }
      const Real ratio = best / (scale_r * scale_s);
      if (ratio.is_zero()) return Real::power_of_two(ctx().precision(), ctx().precision());
      return ctx().ulp_scaled(ctx().precision() / 2) / ratio;
    });
    guard("basis.closed_form_in_null_space", fmt({{"n", str(2 + k)}}), tol_bits(32), [&] {
      const MonomialPoly p = closed_form_xop(2 + k, ctx());
      Real dot_r(0, ctx().precision());
      Real dot_s(0, ctx().precision());
      for (int m = 0; m <= p.degree(); ++m) {
        dot_r += row_r[m] * p.coefficient(m);
        dot_s += row_s[m] * p.coefficient(m);
      }
      return max(abs(dot_r), abs(dot_s)) / p.max_abs_coefficient();
    });
  }
}

void Runner::moments_checks() {
  if (!table_) return;
  const MomentTable& t = *table_;
  if (rule_) {
    guard("moments.quadrature_agreement",
          fmt({{"nodes", std::to_string(rule_->node_count())}, {"i,j", "<=8"}}), tol_decimal(25), [&] {
            const MomentTable q = quadrature_table(*rule_, ctx(), 8, 8);
            return table_deviation(t, q, 8, 8);
          });
  }

  guard("moments.three_term_residual", fmt({{"extent", str(table_i_) + "x" + str(table_j_)}}), tol_bits(48),
        [&] {
          Real worst(0, ctx().precision());
          for (int i = 0; i < table_i_; ++i) {
            for (int j = 0; j < table_j_; ++j) {
              worst = max(worst, relative(three_term(t(i, j), t(i, j + 1), ctx()), t(i + 1, j)));
            }
          }
          return worst;
        });

  guard("moments.four_term_consistency", fmt({{"extent", str(table_i_) + "x" + str(table_j_)}}),
        tol_bits(48), [&] {
          Real worst(0, ctx().precision());
          for (int i = 1; i < table_i_; ++i) {
            for (int j = 1; j < table_j_; ++j) {
              const Real via_a = four_term_a(t(i + 1, j), t(i, j), t(i - 1, j), i, j, ctx());
              const Real via_b = four_term_b(t(i, j + 1), t(i, j), t(i, j - 1), i, j, ctx());
              worst = max(worst, relative(via_a, via_b));
              worst = max(worst, relative(via_a, t(i + 1, j + 1)));
            }
          }
          return worst;
        });

  for (int k = 0; 2 * k <= std::min(table_i_, table_j_); ++k) {
    guard("moments.diagonal_positive", fmt({{"k", str(k)}}), ctx().constant(0),
          [&] { return ctx().constant(t(2 * k, 2 * k) > 0 ? 0 : 1); });
  }
}

void Runner::determinantal_checks() {
  if (!table_) return;
  const MomentTable& t = *table_;
  const MonomialPoly v2 = flag_element(2, ctx());
  for (int n = 2; n <= n_max_; ++n) {
    const MonomialPoly reference = closed_form_xop(n, ctx());
    const std::string nstr = str(n);
    guard("determinantal.det_bound", fmt({{"n", nstr}}), ctx().constant(1), [&] {
      const MomentMatrix mm = build_matrix(n, t);
      const Real det = abs(determinant(mm.m));
      const Real floor = pow(mm.m.max_abs(), static_cast<long>(n + 1)) * ctx().ulp_scaled(ctx().precision() / 2);
      if (det.is_zero()) return Real::power_of_two(ctx().precision(), ctx().precision());
      return floor / det;
    });
    // Resolvability at working precision: the solver's own singularity floor,
    // applied after row and column equilibration.
    guard("determinantal.det_resolved", fmt({{"n", nstr}}), ctx().constant(1), [&] {
      const long bits = ctx().precision();
      const Real ratio = equilibrated_ratio(build_matrix(n, t).m);
      if (ratio.is_zero()) return Real::power_of_two(bits, bits);
      return Real::power_of_two(-(bits - bits / 8), bits) / ratio;
    });
    for (Method method : kAllMethods) {
      const std::string params = fmt({{"n", nstr}, {"method", std::string(to_string(method))}});
      std::optional<MonomialPoly> raw;
      std::optional<MonomialPoly> normalized;
      try {
        const ShiftedPoly s = construct(method, n, t);
        raw.emplace(to_monomial(s));
        normalized.emplace(normalized_monomial(s));
      } catch (const std::exception& e) {
        report_.add_failure("determinantal.construct", with_alpha(params), tol_decimal(20), e.what());
        continue;
      }
      if (method != Method::closed_form) {
        guard("determinantal.cross_method", params, tol_decimal(20),
              [&] { return max_relative_deviation(*normalized, reference); });
      }
      guard("determinantal.exceptional_rows", params, tol_bits(32), [&] {
        const auto r = raw_exceptional(*raw, ctx());
        return max(abs(r.at_r), abs(r.at_s)) / raw->max_abs_coefficient();
      });
      guard("verify.operator_identity", params, tol_bits(40),
            [&] { return operator_identity_residual(*normalized, n, ctx()); });
      if (n == 2) {
        guard("determinantal.n2_proportional_v2", params, tol_bits(32),
              [&] { return max_relative_deviation(scale(*normalized, v2.leading() / normalized->leading()), v2); });
      }
    }
  }

  guard("determinantal.kn_scaling", fmt({{"n", str(n_max_)}, {"c", "3"}}), tol_bits(32), [&] {
    const Real c = ctx().constant(3);
    const ShiftedPoly base = solve_representation_a(build_matrix(n_max_, t));
    const ShiftedPoly scaled = solve_representation_a(build_matrix(n_max_, t, c));
    Real worst = max_relative_deviation(to_monomial(scaled), to_monomial(scale(base, c)));
    worst = max(worst, max_relative_deviation(normalized_monomial(scaled), normalized_monomial(base)));
    return worst;
  });
}

void Runner::verify_checks() {
  if (!table_) return;
  const MomentTable& t = *table_;

  // Gram matrix of the closed forms of degree 2..8.
  std::vector<ShiftedPoly> xops;
  for (int n = 2; n <= 8; ++n) xops.push_back(from_monomial(closed_form_xop(n, ctx()), ctx()));
  std::vector<Real> diag;
  for (const auto& p : xops) diag.push_back(moment_inner_product(p, p, t));
  guard("verify.gram_diagonal_positive", fmt({{"n", "2..8"}}), ctx().constant(0), [&] {
    const bool ok = std::all_of(diag.begin(), diag.end(), [](const Real& d) { return d > 0; });
    return ctx().constant(ok ? 0 : 1);
  });
  guard("verify.gram_off_diagonal", fmt({{"n", "2..8"}}), tol_decimal(25), [&] {
    Real worst(0, ctx().precision());
    for (std::size_t a = 0; a < xops.size(); ++a) {
      for (std::size_t b = a + 1; b < xops.size(); ++b) {
        const Real g = moment_inner_product(xops[a], xops[b], t);
        worst = max(worst, abs(g) / sqrt(diag[a] * diag[b]));
      }
    }
    return worst;
  });

  if (!rule_) return;
  // Fixed seed keeps the suite deterministic.
  std::mt19937 rng(20240607u);
  std::uniform_int_distribution<int> degree(0, 6);
  std::uniform_int_distribution<int> coefficient(-9, 9);
  auto random_poly = [&] {
    const int d = degree(rng);
    std::vector<Real> c;
    for (int k = 0; k <= d; ++k) c.push_back(ctx().constant(coefficient(rng)));
    if (c.back().is_zero()) c.back() = ctx().constant(1);
    return MonomialPoly(std::move(c));
  };
  for (int pair = 0; pair < 10; ++pair) {
    const MonomialPoly p = random_poly();
    const MonomialPoly q = random_poly();
    guard("verify.inner_product_vs_quadrature",
          fmt({{"pair", str(pair)}, {"deg", str(p.degree()) + "," + str(q.degree())}}), tol_decimal(20), [&] {
            const ShiftedPoly sp = from_monomial(p, ctx());
            const ShiftedPoly sq = from_monomial(q, ctx());
            const Real moment = moment_inner_product(sp, sq, t);
            const Real quad = quadrature_inner_product(*rule_, p, q, ctx());
            const Real norm = sqrt(moment_inner_product(sp, sp, t) * moment_inner_product(sq, sq, t));
            return abs(moment - quad) / norm;
          });
  }
}

}  // namespace

VerificationReport run_suite(const std::vector<std::string>& alphas, int n_max, const SuiteOptions& options) {
  if (n_max < 2) throw DomainError("run_suite requires n_max >= 2");
  std::vector<std::future<VerificationReport>> jobs;
  jobs.reserve(alphas.size());
  for (const auto& alpha : alphas) {
    jobs.push_back(std::async(std::launch::async, [alpha, n_max, options] {
      return Runner(alpha, n_max, options).run();
    }));
  }
  VerificationReport report;
  for (auto& job : jobs) report.append(job.get());
  return report;
}

}  // namespace xop
