#include "decatic/bigdecimal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace decatic {

namespace {
long g_default_digits = BigDecimal::kDefaultDigits;
}

long BigDecimal::default_digits() { return g_default_digits; }

void BigDecimal::set_default_digits(long digits) {
    if (digits < 1)
        throw std::invalid_argument("BigDecimal: precision must be positive");
    g_default_digits = digits;
}

mpfr_prec_t BigDecimal::bits_for(long digits) {
    if (digits <= 0)
        digits = g_default_digits;
    // log2(10) ~ 3.3220, plus a couple of guard bits
    return static_cast<mpfr_prec_t>(digits * 3.3220) + 8;
}

BigDecimal::BigDecimal() : digits_(g_default_digits) {
    mpfr_init2(value_, bits_for(digits_));
    mpfr_set_zero(value_, 1);
}

BigDecimal::BigDecimal(long digits) : digits_(digits <= 0 ? g_default_digits : digits) {
    mpfr_init2(value_, bits_for(digits_));
    mpfr_set_zero(value_, 1);
}

BigDecimal::BigDecimal(const BigDecimal &other) : digits_(other.digits_) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigDecimal::BigDecimal(BigDecimal &&other) noexcept : digits_(other.digits_) {
    value_[0] = other.value_[0];
    mpfr_init2(other.value_, MPFR_PREC_MIN);
}

BigDecimal &BigDecimal::operator=(const BigDecimal &other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
        digits_ = other.digits_;
    }
    return *this;
}

BigDecimal &BigDecimal::operator=(BigDecimal &&other) noexcept {
    if (this != &other) {
        mpfr_swap(value_, other.value_);
        std::swap(digits_, other.digits_);
    }
    return *this;
}

BigDecimal::~BigDecimal() { mpfr_clear(value_); }

BigDecimal BigDecimal::from_long(long v, long digits) {
    BigDecimal r(digits);
    mpfr_set_si(r.value_, v, MPFR_RNDN);
    return r;
}

BigDecimal BigDecimal::from_rational(const Rational &q, long digits) {
    BigDecimal r(digits);
    mpfr_set_q(r.value_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigDecimal BigDecimal::from_string(const std::string &text, long digits) {
    BigDecimal r(digits);
    if (mpfr_set_str(r.value_, text.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("BigDecimal: cannot parse '" + text + "'");
    return r;
}

BigDecimal BigDecimal::from_extended(const ExtendedScalar &v, long digits) {
    BigDecimal p = from_rational(v.p(), digits);
    if (v.is_rational())
        return p;
    BigDecimal rad = from_rational(v.radicand(), digits);
    return p + from_rational(v.q(), digits) * rad.sqrt();
}

namespace {
inline long result_digits(const BigDecimal &a, const BigDecimal &b) {
    return std::max(a.digits(), b.digits());
}
} // namespace

BigDecimal BigDecimal::operator-() const {
    BigDecimal r(digits_);
    mpfr_neg(r.value_, value_, MPFR_RNDN);
    return r;
}

BigDecimal operator+(const BigDecimal &a, const BigDecimal &b) {
    BigDecimal r(result_digits(a, b));
    mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigDecimal operator-(const BigDecimal &a, const BigDecimal &b) {
    BigDecimal r(result_digits(a, b));
    mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigDecimal operator*(const BigDecimal &a, const BigDecimal &b) {
    BigDecimal r(result_digits(a, b));
    mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigDecimal operator/(const BigDecimal &a, const BigDecimal &b) {
    if (b.is_zero())
        throw std::domain_error("BigDecimal: division by zero");
    BigDecimal r(result_digits(a, b));
    mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigDecimal BigDecimal::abs() const {
    BigDecimal r(digits_);
    mpfr_abs(r.value_, value_, MPFR_RNDN);
    return r;
}

BigDecimal BigDecimal::sqrt() const {
    if (sign() < 0)
        throw std::domain_error("BigDecimal: sqrt of negative value");
    BigDecimal r(digits_);
    mpfr_sqrt(r.value_, value_, MPFR_RNDN);
    return r;
}

BigDecimal BigDecimal::cbrt() const {
    BigDecimal r(digits_);
    mpfr_cbrt(r.value_, value_, MPFR_RNDN);
    return r;
}

BigDecimal BigDecimal::exp() const {
    BigDecimal r(digits_);
    mpfr_exp(r.value_, value_, MPFR_RNDN);
    return r;
}

BigDecimal BigDecimal::pow_int(long e) const {
    BigDecimal r(digits_);
    mpfr_pow_si(r.value_, value_, e, MPFR_RNDN);
    return r;
}

double BigDecimal::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

BigDecimal BigDecimal::pow10(long e, long digits) {
    BigDecimal r(digits);
    mpfr_set_ui(r.value_, 10, MPFR_RNDN);
    mpfr_pow_si(r.value_, r.value_, e, MPFR_RNDN);
    return r;
}

std::string BigDecimal::str(long sig_digits) const {
    if (is_zero())
        return "0";
    long want = sig_digits > 0 ? sig_digits : digits_;
    mpfr_exp_t exp = 0;
    char *s = mpfr_get_str(nullptr, &exp, 10, static_cast<size_t>(want), value_, MPFR_RNDN);
    if (!s)
        throw std::runtime_error("BigDecimal: mpfr_get_str failed");
    std::string digits(s);
    mpfr_free_str(s);

    bool negative = false;
    if (!digits.empty() && digits[0] == '-') {
        negative = true;
        digits.erase(0, 1);
    }
    // strip trailing zeros but keep at least one digit
    size_t last = digits.find_last_not_of('0');
    digits.erase(std::min(digits.size(), last + 1));
    if (digits.empty())
        digits = "0";

    std::string out;
    // exp is the position of the decimal point relative to the digit string
    if (exp > 0 && exp <= static_cast<mpfr_exp_t>(digits.size())) {
        out = digits.substr(0, static_cast<size_t>(exp));
        if (static_cast<size_t>(exp) < digits.size())
            out += "." + digits.substr(static_cast<size_t>(exp));
    } else if (exp <= 0 && exp > -6) {
        out = "0." + std::string(static_cast<size_t>(-exp), '0') + digits;
    } else if (exp > 0 && exp <= static_cast<mpfr_exp_t>(digits.size()) + 6) {
        out = digits + std::string(static_cast<size_t>(exp) - digits.size(), '0');
    } else {
        out = digits.substr(0, 1);
        if (digits.size() > 1)
            out += "." + digits.substr(1);
        out += "e" + std::to_string(exp - 1);
    }
    return negative ? "-" + out : out;
}

} // namespace decatic
