#pragma once

#include "decatic/extended_scalar.hpp"
#include "decatic/rational.hpp"

#include <mpfr.h>

#include <string>
#include <utility>

namespace decatic {

/// Arbitrary-precision floating-point value with precision configured in
/// decimal digits (MPFR underneath, 250-digit default). Binary operations
/// carry at least the larger of the two operand precisions, so results
/// never silently lose the configured precision.
class BigDecimal {
  public:
    static constexpr long kDefaultDigits = 250;

    static long default_digits();
    static void set_default_digits(long digits);

    BigDecimal();
    explicit BigDecimal(long digits);
    BigDecimal(const BigDecimal &other);
    BigDecimal(BigDecimal &&other) noexcept;
    BigDecimal &operator=(const BigDecimal &other);
    BigDecimal &operator=(BigDecimal &&other) noexcept;
    ~BigDecimal();

    /// Exact conversions, rounded to the requested precision.
    static BigDecimal from_long(long v, long digits = 0);
    static BigDecimal from_rational(const Rational &q, long digits = 0);
    static BigDecimal from_string(const std::string &text, long digits = 0);
    static BigDecimal from_extended(const ExtendedScalar &v, long digits = 0);

    long digits() const { return digits_; }
    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }

    BigDecimal operator-() const;
    friend BigDecimal operator+(const BigDecimal &a, const BigDecimal &b);
    friend BigDecimal operator-(const BigDecimal &a, const BigDecimal &b);
    friend BigDecimal operator*(const BigDecimal &a, const BigDecimal &b);
    friend BigDecimal operator/(const BigDecimal &a, const BigDecimal &b);
    BigDecimal &operator+=(const BigDecimal &b) { return *this = *this + b; }
    BigDecimal &operator-=(const BigDecimal &b) { return *this = *this - b; }
    BigDecimal &operator*=(const BigDecimal &b) { return *this = *this * b; }
    BigDecimal &operator/=(const BigDecimal &b) { return *this = *this / b; }

    friend bool operator==(const BigDecimal &a, const BigDecimal &b) {
        return mpfr_cmp(a.value_, b.value_) == 0;
    }
    friend bool operator!=(const BigDecimal &a, const BigDecimal &b) { return !(a == b); }
    friend bool operator<(const BigDecimal &a, const BigDecimal &b) {
        return mpfr_cmp(a.value_, b.value_) < 0;
    }
    friend bool operator>(const BigDecimal &a, const BigDecimal &b) { return b < a; }
    friend bool operator<=(const BigDecimal &a, const BigDecimal &b) { return !(b < a); }
    friend bool operator>=(const BigDecimal &a, const BigDecimal &b) { return !(a < b); }

    BigDecimal abs() const;
    BigDecimal sqrt() const;
    BigDecimal cbrt() const;
    BigDecimal exp() const;
    BigDecimal pow_int(long e) const;

    /// Nearest double (diagnostics and plotting only).
    double to_double() const;

    /// 10^-e as a convenient tolerance constructor.
    static BigDecimal pow10(long e, long digits = 0);

    /// Round-trippable decimal string with the value's full precision, or a
    /// fixed number of significant digits when `sig_digits` > 0.
    std::string str(long sig_digits = 0) const;

    /// Raw mpfr handle for read-only interop.
    mpfr_srcptr raw() const { return value_; }
    mpfr_ptr raw() { return value_; }

  private:
    static mpfr_prec_t bits_for(long digits);

    mpfr_t value_;
    long digits_;
};

inline bool is_zero(const BigDecimal &v) { return v.is_zero(); }
inline int sign(const BigDecimal &v) { return v.sign(); }
inline BigDecimal abs(const BigDecimal &v) { return v.abs(); }

} // namespace decatic
