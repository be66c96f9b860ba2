#include "xop/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "xop/errors.hpp"

namespace xop {

MonomialPoly::MonomialPoly(std::vector<Real> coefficients) : coefficients_(std::move(coefficients)) {
  trim();
}

MonomialPoly::MonomialPoly(std::initializer_list<Real> coefficients)
    : coefficients_(coefficients) {
  trim();
}

MonomialPoly MonomialPoly::constant(const Real& c) { return MonomialPoly({c}); }

MonomialPoly MonomialPoly::linear(const Real& c0, const Real& c1) { return MonomialPoly({c0, c1}); }

void MonomialPoly::trim() {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

Real MonomialPoly::coefficient(int k) const {
  if (k < 0 || k > degree()) return Real(0, precision());
  return coefficients_[static_cast<std::size_t>(k)];
}

Real MonomialPoly::leading() const {
  return is_zero() ? Real(0, precision()) : coefficients_.back();
}

Real MonomialPoly::max_abs_coefficient() const {
  Real best(0, precision());
  for (const auto& c : coefficients_) {
    Real a = abs(c);
    if (a > best) best = std::move(a);
  }
  return best;
}

long MonomialPoly::precision() const {
  long bits = coefficients_.empty() ? default_precision() : 0;
  for (const auto& c : coefficients_) bits = std::max(bits, c.precision());
  return bits;
}

Real MonomialPoly::operator()(const Real& x) const { return evaluate(*this, x); }

MonomialPoly& MonomialPoly::operator+=(const MonomialPoly& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(rhs.coefficients_.size(), Real(0, rhs.precision()));
  }
  for (std::size_t k = 0; k < rhs.coefficients_.size(); ++k) coefficients_[k] += rhs.coefficients_[k];
  trim();
  return *this;
}

MonomialPoly& MonomialPoly::operator-=(const MonomialPoly& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(rhs.coefficients_.size(), Real(0, rhs.precision()));
  }
  for (std::size_t k = 0; k < rhs.coefficients_.size(); ++k) coefficients_[k] -= rhs.coefficients_[k];
  trim();
  return *this;
}

MonomialPoly operator-(const MonomialPoly& p) {
  std::vector<Real> out;
  out.reserve(p.coefficients_.size());
  for (const auto& c : p.coefficients_) out.push_back(-c);
  return MonomialPoly(std::move(out));
}

MonomialPoly operator*(const MonomialPoly& a, const MonomialPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const long bits = std::max(a.precision(), b.precision());
  std::vector<Real> out(a.coefficients_.size() + b.coefficients_.size() - 1, Real(0, bits));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      out[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return MonomialPoly(std::move(out));
}

MonomialPoly operator*(const Real& c, const MonomialPoly& p) {
  std::vector<Real> out;
  out.reserve(p.coefficients_.size());
  for (const auto& a : p.coefficients_) out.push_back(c * a);
  return MonomialPoly(std::move(out));
}

Real evaluate(const MonomialPoly& p, const Real& x) {
  const auto& c = p.coefficients();
  Real acc(0, std::max(p.precision(), x.precision()));
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

MonomialPoly differentiate(const MonomialPoly& p) {
  const auto& c = p.coefficients();
  if (c.size() <= 1) return {};
  std::vector<Real> out;
  out.reserve(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) out.push_back(c[k] * static_cast<long>(k));
  return MonomialPoly(std::move(out));
}

MonomialPoly scale(const MonomialPoly& p, const Real& c) { return c * p; }

MonomialPoly negate_argument(const MonomialPoly& p) {
  std::vector<Real> out(p.coefficients());
  for (std::size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
  return MonomialPoly(std::move(out));
}

Real max_relative_deviation(const MonomialPoly& a, const MonomialPoly& b) {
  const Real scale_ref = b.max_abs_coefficient();
  if (scale_ref.is_zero()) throw DomainError("reference polynomial is zero");
  const int top = std::max(a.degree(), b.degree());
  Real worst(0, scale_ref.precision());
  for (int k = 0; k <= top; ++k) {
    Real d = abs(a.coefficient(k) - b.coefficient(k));
    if (d > worst) worst = std::move(d);
  }
  return worst / scale_ref;
}

}  // namespace xop
