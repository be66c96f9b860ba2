#include "xop/moments.hpp"

#include <string>
#include <utility>

#include "xop/errors.hpp"

namespace xop {
namespace {

constexpr long kFillGuardBits = 32;

void require_nonzero(const Real& coefficient, const ParameterContext& ctx, const char* what) {
  const Real scale = (abs(ctx.alpha()) + 2) * (abs(ctx.alpha()) + 2);
  if (abs(coefficient) <= ctx.ulp_scaled(32) * scale) {
    throw SingularError(std::string(what) + ": coefficient vanishes");
  }
}

}  // namespace

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::initial:
      return "initial";
    case Provenance::three_term:
      return "three_term";
    case Provenance::four_term_a:
      return "four_term_a";
    case Provenance::four_term_b:
      return "four_term_b";
    case Provenance::quadrature:
      return "quadrature";
  }
  return "unknown";
}

MomentTable::MomentTable(ParameterContext ctx, int max_i, int max_j)
    : ctx_(std::move(ctx)), max_i_(max_i), max_j_(max_j) {
  if (max_i < 0 || max_j < 0) throw DomainError("moment table extents must be non-negative");
  entries_.resize(static_cast<std::size_t>(max_i + 1) * static_cast<std::size_t>(max_j + 1));
}

std::size_t MomentTable::index(int i, int j) const {
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(max_j_ + 1) + static_cast<std::size_t>(j);
}

bool MomentTable::contains(int i, int j) const {
  return i >= 0 && j >= 0 && i <= max_i_ && j <= max_j_ && entries_[index(i, j)].has_value();
}

const MomentTable::Entry& MomentTable::entry(int i, int j) const {
  if (!contains(i, j)) throw CoverageError(i, j);
  return *entries_[index(i, j)];
}

const Real& MomentTable::operator()(int i, int j) const { return entry(i, j).value; }

Provenance MomentTable::provenance(int i, int j) const { return entry(i, j).provenance; }

void MomentTable::set(int i, int j, Real value, Provenance provenance) {
  if (i < 0 || j < 0 || i > max_i_ || j > max_j_) throw CoverageError(i, j);
  if (!value.is_finite()) throw NumericError("moment (" + std::to_string(i) + "," + std::to_string(j) + ") is not finite");
  entries_[index(i, j)] = Entry{std::move(value), provenance};
}

InitialMoments initial_moments(const ParameterContext& ctx) {
  PrecisionScope scope(ctx.precision());
  const Real& alpha = ctx.alpha();
  const Real four_gamma = 4 * gamma(alpha + 1);
  const Real minus_r = -ctx.r();
  const Real minus_s = -ctx.s();
  return InitialMoments{
      four_gamma,
      four_gamma * exp(minus_r) * pow(minus_r, alpha) * upper_incomplete_gamma(-alpha, minus_r),
      four_gamma * exp(minus_s) * pow(minus_s, alpha) * upper_incomplete_gamma(-alpha, minus_s),
  };
}

Real three_term(const Real& mu_ij, const Real& mu_i_jp1, const ParameterContext& ctx) {
  return mu_i_jp1 + 2 * ctx.beta() * mu_ij;
}

Real three_term_solve_right(const Real& mu_ip1_j, const Real& mu_ij, const ParameterContext& ctx) {
  return mu_ip1_j - 2 * ctx.beta() * mu_ij;
}

Real three_term_solve_center(const Real& mu_ip1_j, const Real& mu_i_jp1, const ParameterContext& ctx) {
  return (mu_ip1_j - mu_i_jp1) / (2 * ctx.beta());
}

FourTermCoefficients four_term_a_coefficients(int i, int j, const ParameterContext& ctx) {
  if (i < 1 || j < 0) throw DomainError("four_term_a requires i >= 1, j >= 0");
  PrecisionScope scope(ctx.precision());
  const Real& a = ctx.alpha();
  const Real& b = ctx.beta();
  return FourTermCoefficients{
      (i + j - 1) + 2 * a + b,
      (1 - i - j) * (a + 1) + ((3 - 3 * i - j) - 4 * a) * b,
      (2 * i - 4) * (a + 1) * (b + 1),
  };
}

FourTermCoefficients four_term_b_coefficients(int i, int j, const ParameterContext& ctx) {
  if (i < 0 || j < 1) throw DomainError("four_term_b requires i >= 0, j >= 1");
  PrecisionScope scope(ctx.precision());
  const Real& a = ctx.alpha();
  const Real& b = ctx.beta();
  return FourTermCoefficients{
      (i + j - 1) + 2 * a - b,
      (1 - i - j) * (a + 1) + ((-3 + i + 3 * j) + 4 * a) * b,
      (4 - 2 * j) * (a + 1) * (b - 1),
  };
}

Real four_term_a(const Real& mu_ip1_j, const Real& mu_ij, const Real& mu_im1_j, int i, int j,
                 const ParameterContext& ctx) {
  const auto c = four_term_a_coefficients(i, j, ctx);
  return c.front * mu_ip1_j + c.center * mu_ij + c.back * mu_im1_j;
}

Real four_term_a_solve_back(const Real& mu_ip1_jp1, const Real& mu_ip1_j, const Real& mu_ij, int i,
                            int j, const ParameterContext& ctx) {
  if (i == 2) throw SingularError("four_term_a: coefficient of mu_{i-1,j} vanishes at i = 2");
  const auto c = four_term_a_coefficients(i, j, ctx);
  return (mu_ip1_jp1 - c.front * mu_ip1_j - c.center * mu_ij) / c.back;
}

Real four_term_a_solve_front(const Real& mu_ip1_jp1, const Real& mu_ij, const Real& mu_im1_j, int i,
                             int j, const ParameterContext& ctx) {
  const auto c = four_term_a_coefficients(i, j, ctx);
  require_nonzero(c.front, ctx, "four_term_a (front)");
  return (mu_ip1_jp1 - c.center * mu_ij - c.back * mu_im1_j) / c.front;
}

Real four_term_b(const Real& mu_i_jp1, const Real& mu_ij, const Real& mu_i_jm1, int i, int j,
                 const ParameterContext& ctx) {
  const auto c = four_term_b_coefficients(i, j, ctx);
  return c.front * mu_i_jp1 + c.center * mu_ij + c.back * mu_i_jm1;
}

Real four_term_b_solve_back(const Real& mu_ip1_jp1, const Real& mu_i_jp1, const Real& mu_ij, int i,
                            int j, const ParameterContext& ctx) {
  if (j == 2) throw SingularError("four_term_b: coefficient of mu_{i,j-1} vanishes at j = 2");
  const auto c = four_term_b_coefficients(i, j, ctx);
  require_nonzero(c.back, ctx, "four_term_b (back)");
  return (mu_ip1_jp1 - c.front * mu_i_jp1 - c.center * mu_ij) / c.back;
}

Real four_term_b_solve_front(const Real& mu_ip1_jp1, const Real& mu_ij, const Real& mu_i_jm1, int i,
                             int j, const ParameterContext& ctx) {
  const auto c = four_term_b_coefficients(i, j, ctx);
  require_nonzero(c.front, ctx, "four_term_b (front)");
  return (mu_ip1_jp1 - c.center * mu_ij - c.back * mu_i_jm1) / c.front;
}

MomentTable fill_table(const ParameterContext& ctx, int max_i, int max_j, FillOptions options) {
  if (max_i < 2 || max_j < 2) throw DomainError("fill_table requires max_i, max_j >= 2");
  const ParameterContext wctx(ctx.alpha(), ctx.precision() + kFillGuardBits);
  PrecisionScope scope(wctx.precision());
  MomentTable w(wctx, max_i, max_j);

  const auto seed = initial_moments(wctx);
  w.set(2, 2, seed.mu22, Provenance::initial);
  w.set(1, 2, seed.mu12, Provenance::initial);
  w.set(2, 1, seed.mu21, Provenance::initial);

  w.set(1, 1, three_term_solve_center(w(2, 1), w(1, 2), wctx), Provenance::three_term);
  w.set(0, 1, four_term_a_solve_back(w(2, 2), w(2, 1), w(1, 1), 1, 1, wctx), Provenance::four_term_a);
  w.set(1, 0, four_term_b_solve_back(w(2, 2), w(1, 2), w(1, 1), 1, 1, wctx), Provenance::four_term_b);
  w.set(0, 0, three_term_solve_center(w(1, 0), w(0, 1), wctx), Provenance::three_term);

  if (options.corners_by_four_term) {
    w.set(2, 0, four_term_a_solve_front(w(2, 1), w(1, 0), w(0, 0), 1, 0, wctx), Provenance::four_term_a);
    w.set(0, 2, four_term_b_solve_front(w(1, 2), w(0, 1), w(0, 0), 0, 1, wctx), Provenance::four_term_b);
  } else {
    w.set(0, 2, three_term_solve_right(w(1, 1), w(0, 1), wctx), Provenance::three_term);
    w.set(2, 0, three_term(w(1, 0), w(1, 1), wctx), Provenance::three_term);
  }

  for (int d = 3; d <= max_i + max_j; ++d) {
    const int lo = std::max(0, d - max_j);
    const int hi = std::min(max_i, d);
    bool any_known = false;
    for (int i = lo; i <= hi && !any_known; ++i) any_known = w.contains(i, d - i);

    if (!any_known) {
      const bool use_a = options.seed == SeedFormula::four_term_a;
      if (use_a) {
        // four_term_a at (p-1, q-1) lands on (p, q)
        const int p = std::min(max_i, d - 1);
        const int q = d - p;
        w.set(p, q, four_term_a(w(p, q - 1), w(p - 1, q - 1), w(p - 2, q - 1), p - 1, q - 1, wctx),
              Provenance::four_term_a);
      } else {
        const int q = std::min(max_j, d - 1);
        const int p = d - q;
        w.set(p, q, four_term_b(w(p - 1, q), w(p - 1, q - 1), w(p - 1, q - 2), p - 1, q - 1, wctx),
              Provenance::four_term_b);
      }
    }

    // Walk the diagonal in both directions from whatever is known.
    for (int i = lo + 1; i <= hi; ++i) {
      const int j = d - i;
      if (!w.contains(i, j) && w.contains(i - 1, j + 1)) {
        w.set(i, j, three_term(w(i - 1, j), w(i - 1, j + 1), wctx), Provenance::three_term);
      }
    }
    for (int i = hi - 1; i >= lo; --i) {
      const int j = d - i;
      if (!w.contains(i, j) && w.contains(i + 1, j - 1)) {
        w.set(i, j, three_term_solve_right(w(i + 1, j - 1), w(i, j - 1), wctx), Provenance::three_term);
      }
    }
  }

  MomentTable out(ctx, max_i, max_j);
  for (int i = 0; i <= max_i; ++i) {
    for (int j = 0; j <= max_j; ++j) {
      out.set(i, j, w(i, j).with_precision(ctx.precision()), w.provenance(i, j));
    }
  }
  return out;
}

MomentTable quadrature_table(const QuadratureRule& rule, const ParameterContext& ctx, int max_i, int max_j) {
  require_rule_matches(rule, ctx);
  if (max_i < 0 || max_j < 0) throw DomainError("moment table extents must be non-negative");
  PrecisionScope scope(ctx.precision());
  const Real& alpha = ctx.alpha();
  const Real c1 = alpha + 1;
  const Real c0 = alpha * (alpha + 1) / 2;

  std::vector<Real> sums(static_cast<std::size_t>((max_i + 1) * (max_j + 1)), ctx.constant(0));
  std::vector<Real> pow_r(static_cast<std::size_t>(max_i + 1));
  std::vector<Real> pow_s(static_cast<std::size_t>(max_j + 1));
  for (std::size_t k = 0; k < rule.node_count(); ++k) {
    const Real& x = rule.nodes[k];
    const Real weight_poly = (x / 2 + c1) * x + c0;
    const Real base = rule.weights[k] / (weight_poly * weight_poly);
    const Real xr = x - ctx.r();
    const Real xs = x - ctx.s();
    pow_r[0] = base;
    for (int i = 1; i <= max_i; ++i) pow_r[static_cast<std::size_t>(i)] = pow_r[static_cast<std::size_t>(i - 1)] * xr;
    pow_s[0] = ctx.constant(1);
    for (int j = 1; j <= max_j; ++j) pow_s[static_cast<std::size_t>(j)] = pow_s[static_cast<std::size_t>(j - 1)] * xs;
    for (int i = 0; i <= max_i; ++i) {
      for (int j = 0; j <= max_j; ++j) {
        sums[static_cast<std::size_t>(i * (max_j + 1) + j)] +=
            pow_r[static_cast<std::size_t>(i)] * pow_s[static_cast<std::size_t>(j)];
      }
    }
  }
  MomentTable out(ctx, max_i, max_j);
  for (int i = 0; i <= max_i; ++i) {
    for (int j = 0; j <= max_j; ++j) {
      out.set(i, j, std::move(sums[static_cast<std::size_t>(i * (max_j + 1) + j)]), Provenance::quadrature);
    }
  }
  return out;
}

Real moment_inner_product(const ShiftedPoly& p, const ShiftedPoly& q, const MomentTable& table) {
  const ParameterContext& ctx = table.context();
  PrecisionScope scope(ctx.precision());
  Real sum = ctx.constant(0);
  for (std::size_t j = 0; j < p.coefficients.size(); ++j) {
    if (p.coefficients[j].is_zero()) continue;
    Real row = ctx.constant(0);
    const int jj = static_cast<int>(j);
    for (std::size_t k = 0; k < q.coefficients.size(); ++k) {
      if (q.coefficients[k].is_zero()) continue;
      const int kk = static_cast<int>(k);
      row += q.coefficients[k] * table(ceil_half(jj) + ceil_half(kk), floor_half(jj) + floor_half(kk));
    }
    sum += p.coefficients[j] * row;
  }
  return sum;
}

}  // namespace xop
