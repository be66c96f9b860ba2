#include "xop/real.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "xop/errors.hpp"

namespace xop {
namespace {

thread_local long g_default_precision = kDefaultPrecisionBits;

mpfr_prec_t clamp_precision(long bits) {
  if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) {
    throw DomainError("precision out of range: " + std::to_string(bits));
  }
  return static_cast<mpfr_prec_t>(bits);
}

}  // namespace

long default_precision() { return g_default_precision; }

PrecisionScope::PrecisionScope(long bits) : saved_(g_default_precision) {
  clamp_precision(bits);
  g_default_precision = bits;
}

PrecisionScope::~PrecisionScope() { g_default_precision = saved_; }

Real::Real() : Real(0L, default_precision()) {}

Real::Real(double value, long bits) {
  mpfr_init2(value_, clamp_precision(bits));
  mpfr_set_d(value_, value, MPFR_RNDN);
  if (!mpfr_number_p(value_)) {
    mpfr_clear(value_);
    throw DomainError("non-finite double");
  }
}

Real::Real(Uninitialized, long bits) { mpfr_init2(value_, clamp_precision(bits)); }

Real Real::parse(std::string_view text, long bits) {
  Real out(Uninitialized{}, bits);
  const std::string owned(text);
  char* end = nullptr;
  const int status = mpfr_strtofr(out.value_, owned.c_str(), &end, 10, MPFR_RNDN);
  (void)status;
  if (owned.empty() || end != owned.c_str() + owned.size() || !mpfr_number_p(out.value_)) {
    throw DomainError("not a finite decimal number: '" + owned + "'");
  }
  return out;
}

Real Real::power_of_two(long exponent, long bits) {
  Real out(1L, bits);
  mpfr_mul_2si(out.value_, out.value_, exponent, MPFR_RNDN);
  return out;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

long Real::precision() const { return static_cast<long>(mpfr_get_prec(value_)); }

Real Real::with_precision(long bits) const {
  Real out(Uninitialized{}, bits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

bool Real::is_zero() const { return mpfr_zero_p(value_) != 0; }
bool Real::is_finite() const { return mpfr_number_p(value_) != 0; }
int Real::sign() const { return mpfr_sgn(value_); }
double Real::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

std::string Real::to_string() const {
  if (mpfr_zero_p(value_)) return "0";
  if (!mpfr_number_p(value_)) throw NumericError("non-finite value");
  const std::size_t digits = mpfr_get_str_ndigits(10, mpfr_get_prec(value_));
  mpfr_exp_t exponent = 0;
  char* raw = mpfr_get_str(nullptr, &exponent, 10, digits, value_, MPFR_RNDN);
  std::string mantissa(raw);
  mpfr_free_str(raw);

  std::string out;
  if (mantissa.front() == '-') {
    out.push_back('-');
    mantissa.erase(0, 1);
  }
  const auto last = mantissa.find_last_not_of('0');
  mantissa.erase(last + 1);
  out.push_back(mantissa.front());
  if (mantissa.size() > 1) {
    out.push_back('.');
    out.append(mantissa, 1, std::string::npos);
  }
  out.push_back('e');
  out += std::to_string(static_cast<long>(exponent) - 1);
  return out;
}

namespace {

long wider(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

void widen_to(mpfr_ptr value, long bits) {
  if (mpfr_get_prec(value) < bits) mpfr_prec_round(value, bits, MPFR_RNDN);
}

}  // namespace

Real& Real::operator+=(const Real& rhs) {
  widen_to(value_, rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  widen_to(value_, rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  widen_to(value_, rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  if (rhs.is_zero()) throw NumericError("division by zero");
  widen_to(value_, rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real operator-(const Real& x) {
  Real out(Real::Uninitialized{}, x.precision());
  mpfr_neg(out.value_, x.value_, MPFR_RNDN);
  return out;
}

Real operator+(const Real& a, const Real& b) {
  Real out(Real::Uninitialized{}, wider(a, b));
  mpfr_add(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Real operator-(const Real& a, const Real& b) {
  Real out(Real::Uninitialized{}, wider(a, b));
  mpfr_sub(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Real operator*(const Real& a, const Real& b) {
  Real out(Real::Uninitialized{}, wider(a, b));
  mpfr_mul(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Real operator/(const Real& a, const Real& b) {
  if (b.is_zero()) throw NumericError("division by zero");
  Real out(Real::Uninitialized{}, wider(a, b));
  mpfr_div(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Real Real::add_si(const Real& a, long b) {
  Real out(Uninitialized{}, a.precision());
  mpfr_add_si(out.value_, a.value_, b, MPFR_RNDN);
  return out;
}

Real Real::mul_si(const Real& a, long b) {
  Real out(Uninitialized{}, a.precision());
  mpfr_mul_si(out.value_, a.value_, b, MPFR_RNDN);
  return out;
}

Real Real::div_si(const Real& a, long b) {
  if (b == 0) throw NumericError("division by zero");
  Real out(Uninitialized{}, a.precision());
  mpfr_div_si(out.value_, a.value_, b, MPFR_RNDN);
  return out;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real abs(const Real& x) {
  Real out(Real::Uninitialized{}, x.precision());
  mpfr_abs(out.value_, x.value_, MPFR_RNDN);
  return out;
}

Real sqrt(const Real& x) {
  if (x.sign() < 0) throw DomainError("sqrt of negative number");
  Real out(Real::Uninitialized{}, x.precision());
  mpfr_sqrt(out.value_, x.value_, MPFR_RNDN);
  return out;
}

Real exp(const Real& x) {
  Real out(Real::Uninitialized{}, x.precision());
  mpfr_exp(out.value_, x.value_, MPFR_RNDN);
  if (!out.is_finite()) throw NumericError("exp overflow");
  return out;
}

Real log(const Real& x) {
  if (x.sign() <= 0) throw DomainError("log of non-positive number");
  Real out(Real::Uninitialized{}, x.precision());
  mpfr_log(out.value_, x.value_, MPFR_RNDN);
  return out;
}

Real pow(const Real& base, const Real& exponent) {
  if (base.sign() < 0 || (base.is_zero() && exponent.sign() <= 0)) {
    throw DomainError("pow: base must be positive");
  }
  Real out(Real::Uninitialized{}, wider(base, exponent));
  mpfr_pow(out.value_, base.value_, exponent.value_, MPFR_RNDN);
  if (!out.is_finite()) throw NumericError("pow overflow");
  return out;
}

Real pow(const Real& base, long exponent) {
  if (base.is_zero() && exponent < 0) throw NumericError("division by zero");
  Real out(Real::Uninitialized{}, base.precision());
  mpfr_pow_si(out.value_, base.value_, exponent, MPFR_RNDN);
  return out;
}

Real pi(long bits) {
  Real out(Real::Uninitialized{}, bits);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

const Real& max(const Real& a, const Real& b) { return (a < b) ? b : a; }
const Real& min(const Real& a, const Real& b) { return (b < a) ? b : a; }

std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.to_string(); }

}  // namespace xop
