#include "xop/determinantal.hpp"

#include <algorithm>
#include <string>

#include "xop/classical.hpp"
#include "xop/errors.hpp"

namespace xop {

std::pair<int, int> required_extent(int n) {
  if (n < 2) throw DomainError("required_extent requires n >= 2");
  const int hi = ceil_half(n);
  const int lo = floor_half(n);
  int max_i = std::max({2, hi + 1, 2 * hi});
  if (n >= 3) max_i = std::max(max_i, hi + 2);
  const int max_j = std::max({2, lo + 1, 2 * lo});
  return {max_i, max_j};
}

MomentMatrix build_matrix(int n, const MomentTable& table) {
  return build_matrix(n, table, table.context().constant(1));
}

MomentMatrix build_matrix(int n, const MomentTable& table, const Real& k_n) {
  if (n < 2) throw DomainError("exceptional polynomials start at degree 2");
  if (k_n.is_zero()) throw DomainError("K_n must be non-zero");
  const ParameterContext& ctx = table.context();
  PrecisionScope scope(ctx.precision());
  const Real& alpha = ctx.alpha();
  const Real& r = ctx.r();
  const Real& s = ctx.s();
  const Real s_minus_r = s - r;
  const auto size = static_cast<std::size_t>(n + 1);

  MomentMatrix mm{n, Matrix(size, size, ctx.constant(0)), std::vector<Real>(size, ctx.constant(0)), k_n, ctx};
  Matrix& m = mm.m;

  // r p'(r) + alpha p(r) = 0
  m(0, 0) = alpha;
  m(0, 1) = r;
  m(0, 2) = r * (r - s);
  // s p'(s) + alpha p(s) = 0
  m(1, 0) = alpha;
  m(1, 1) = s + alpha * s_minus_r;
  m(1, 2) = s * s_minus_r;
  if (n >= 3) m(1, 3) = s * s_minus_r * s_minus_r;

  const Real half = ctx.constant(1) / 2;
  for (int k = 0; k <= n; ++k) {
    const int kh = ceil_half(k);
    const int kl = floor_half(k);
    const auto col = static_cast<std::size_t>(k);
    // <B_k, v_2>
    m(2, col) = half * table(kh + 1, kl + 1) + table(kh + 1, kl) - ctx.beta() * table(kh, kl);
    // <B_k, v_3>
    if (n >= 3) m(3, col) = table(kh + 2, kl + 1) + table(kh + 2, kl);
    // <B_k, B_l>
    for (int l = 4; l <= n; ++l) {
      m(static_cast<std::size_t>(l), col) = table(kh + ceil_half(l), kl + floor_half(l));
    }
  }
  mm.b.back() = k_n;
  return mm;
}

namespace {

// Extra bits carried through the determinant and elimination arithmetic.
constexpr long kSolveGuardBits = 64;

Matrix widen(const Matrix& m, long bits) {
  Matrix out(m.rows(), m.cols(), Real(0, bits));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).with_precision(bits);
  }
  return out;
}

std::vector<Real> widen(const std::vector<Real>& v, long bits) {
  std::vector<Real> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.with_precision(bits));
  return out;
}

ShiftedPoly narrow(std::vector<Real> coefficients, const ParameterContext& ctx) {
  for (auto& c : coefficients) c = c.with_precision(ctx.precision());
  return ShiftedPoly{std::move(coefficients), ctx};
}

void require_nonsingular(const Matrix& m, const MomentMatrix& mm) {
  const long bits = mm.ctx.precision();
  if (equilibrated_ratio(m) <= Real::power_of_two(-(bits - bits / 8), bits)) {
    throw SingularError("moment matrix is singular at " + std::to_string(bits) + " bits (n = " +
                        std::to_string(mm.n) + ")");
  }
}

}  // namespace

ShiftedPoly solve_representation_a(const MomentMatrix& mm, LinearRoute route) {
  const long wp = mm.ctx.precision() + kSolveGuardBits;
  PrecisionScope scope(wp);
  const Matrix m = widen(mm.m, wp);
  const std::vector<Real> b = widen(mm.b, wp);
  if (route == LinearRoute::elimination) return narrow(solve(m, b), mm.ctx);
  require_nonsingular(m, mm);
  const Real det = determinant(m);
  std::vector<Real> coefficients;
  coefficients.reserve(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) coefficients.push_back(determinant(m.with_column(k, b)) / det);
  return narrow(std::move(coefficients), mm.ctx);
}

ShiftedPoly solve_representation_b(const MomentMatrix& mm) {
  const long wp = mm.ctx.precision() + kSolveGuardBits;
  PrecisionScope scope(wp);
  const Matrix m = widen(mm.m, wp);
  require_nonsingular(m, mm);
  const auto last = static_cast<std::size_t>(mm.n);
  std::vector<Real> coefficients;
  coefficients.reserve(last + 1);
  for (std::size_t k = 0; k <= last; ++k) {
    Real cofactor = determinant(m.minor(last, k));
    if ((last + k) % 2 == 1) cofactor = -cofactor;
    coefficients.push_back(std::move(cofactor));
  }
  return narrow(std::move(coefficients), mm.ctx);
}

namespace {

// y -= c * x, padding y with zeros as needed.
void subtract_scaled(ShiftedPoly& y, const Real& c, const ShiftedPoly& x) {
  if (x.coefficients.size() > y.coefficients.size()) {
    y.coefficients.resize(x.coefficients.size(), y.ctx.constant(0));
  }
  for (std::size_t k = 0; k < x.coefficients.size(); ++k) y.coefficients[k] -= c * x.coefficients[k];
}

}  // namespace

std::vector<ShiftedPoly> gram_schmidt_sequence(int n_max, const MomentTable& table) {
  if (n_max < 2) throw DomainError("gram_schmidt_sequence requires n_max >= 2");
  const ParameterContext& ctx = table.context();
  PrecisionScope scope(ctx.precision());
  std::vector<ShiftedPoly> basis;
  std::vector<Real> norms;
  for (int l = 2; l <= n_max; ++l) {
    ShiftedPoly u = from_monomial(flag_element(l, ctx), ctx);
    for (int pass = 0; pass < 2; ++pass) {
      std::vector<Real> projections;
      projections.reserve(basis.size());
      for (std::size_t m = 0; m < basis.size(); ++m) {
        projections.push_back(moment_inner_product(u, basis[m], table) / norms[m]);
      }
      for (std::size_t m = 0; m < basis.size(); ++m) subtract_scaled(u, projections[m], basis[m]);
    }
    Real norm = moment_inner_product(u, u, table);
    if (!(norm > 0)) {
      throw NumericError("Gram-Schmidt produced a non-positive norm at degree " + std::to_string(l));
    }
    norms.push_back(std::move(norm));
    basis.push_back(std::move(u));
  }
  return basis;
}

ShiftedPoly gram_schmidt_flag(int n, const MomentTable& table) {
  auto sequence = gram_schmidt_sequence(n, table);
  return normalize_to_closed_form(sequence.back());
}

ShiftedPoly normalize_to_closed_form(const ShiftedPoly& p) {
  const int n = p.degree();
  if (n < 2) throw DomainError("normalize_to_closed_form requires degree >= 2");
  PrecisionScope scope(p.ctx.precision());
  const Real& lead = p.coefficients.back();
  if (lead.is_zero()) throw NumericError("polynomial has a vanishing leading coefficient");
  const Real target = closed_form_xop(n, p.ctx).leading();
  return scale(p, target / lead);
}

}  // namespace xop

namespace xop {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::det_a:
      return "det-a";
    case Method::det_b:
      return "det-b";
    case Method::gram_schmidt:
      return "gram-schmidt";
    case Method::closed_form:
      return "closed-form";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (Method m : kAllMethods) {
    if (to_string(m) == name) return m;
  }
  throw DomainError("unknown method '" + std::string(name) + "'");
}

ShiftedPoly construct(Method method, int n, const MomentTable& table) {
  switch (method) {
    case Method::det_a:
      return solve_representation_a(build_matrix(n, table));
    case Method::det_b:
      return solve_representation_b(build_matrix(n, table));
    case Method::gram_schmidt:
      return gram_schmidt_flag(n, table);
    case Method::closed_form:
      return from_monomial(closed_form_xop(n, table.context()), table.context());
  }
  throw DomainError("unknown method");
}

}  // namespace xop
