#pragma once

#include <mpfr.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace xop {

inline constexpr long kDefaultPrecisionBits = 256;
inline constexpr long kMinPrecisionBits = 128;

/// Precision (bits) given to Reals constructed without an explicit one.
/// Thread-local; starts at kDefaultPrecisionBits.
long default_precision();

/// Sets the thread's default precision for its lifetime and restores the
/// previous value on destruction.
class PrecisionScope {
 public:
  explicit PrecisionScope(long bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  long saved_;
};

/// Arbitrary-precision binary floating-point number backed by MPFR.
///
/// Every value carries its own precision. Binary operations round to the
/// larger precision of their operands; an integral operand adopts the
/// precision of the Real it is combined with. Division by zero, square root
/// of a negative number and logarithm of a non-positive number throw rather
/// than producing NaN or infinity.
class Real {
 public:
  Real();
  template <std::integral T>
  Real(T value) : Real(value, default_precision()) {}
  template <std::integral T>
  Real(T value, long bits) : Real(Uninitialized{}, bits) {
    mpfr_set_si(value_, static_cast<long>(value), MPFR_RNDN);
  }
  explicit Real(double value, long bits = default_precision());

  /// Parses a decimal literal ("3.7", "-2.5e-3"). Throws DomainError on
  /// malformed input.
  static Real parse(std::string_view text, long bits = default_precision());

  /// 2^exponent at the given precision.
  static Real power_of_two(long exponent, long bits = default_precision());

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  long precision() const;
  /// Returns a copy rounded (or exactly widened) to `bits`.
  Real with_precision(long bits) const;

  bool is_zero() const;
  bool is_finite() const;
  int sign() const;
  double to_double() const;

  /// Shortest decimal string in scientific notation that round-trips at this
  /// precision, trailing zeros removed: 24 -> "2.4e1", 0 -> "0".
  std::string to_string() const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator-(const Real& x);
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  template <std::integral T>
  friend Real operator+(const Real& a, T b) {
    return add_si(a, static_cast<long>(b));
  }
  template <std::integral T>
  friend Real operator+(T a, const Real& b) {
    return add_si(b, static_cast<long>(a));
  }
  template <std::integral T>
  friend Real operator-(const Real& a, T b) {
    return add_si(a, -static_cast<long>(b));
  }
  template <std::integral T>
  friend Real operator-(T a, const Real& b) {
    return add_si(-b, static_cast<long>(a));
  }
  template <std::integral T>
  friend Real operator*(const Real& a, T b) {
    return mul_si(a, static_cast<long>(b));
  }
  template <std::integral T>
  friend Real operator*(T a, const Real& b) {
    return mul_si(b, static_cast<long>(a));
  }
  template <std::integral T>
  friend Real operator/(const Real& a, T b) {
    return div_si(a, static_cast<long>(b));
  }

  friend bool operator==(const Real& a, const Real& b);
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  template <std::integral T>
  friend bool operator==(const Real& a, T b) {
    return mpfr_cmp_si(a.value_, static_cast<long>(b)) == 0;
  }
  template <std::integral T>
  friend std::partial_ordering operator<=>(const Real& a, T b) {
    const int c = mpfr_cmp_si(a.value_, static_cast<long>(b));
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater
                          : std::partial_ordering::equivalent);
  }

 private:
  struct Uninitialized {};
  Real(Uninitialized, long bits);

  static Real add_si(const Real& a, long b);
  static Real mul_si(const Real& a, long b);
  static Real div_si(const Real& a, long b);

  friend Real abs(const Real& x);
  friend Real sqrt(const Real& x);
  friend Real exp(const Real& x);
  friend Real log(const Real& x);
  friend Real pow(const Real& base, const Real& exponent);
  friend Real pow(const Real& base, long exponent);
  friend Real pi(long bits);

  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
/// base^exponent for base > 0 (or base = 0 with exponent > 0).
Real pow(const Real& base, const Real& exponent);
Real pow(const Real& base, long exponent);
Real pi(long bits = default_precision());

const Real& max(const Real& a, const Real& b);
const Real& min(const Real& a, const Real& b);

std::ostream& operator<<(std::ostream& os, const Real& x);

}  // namespace xop
