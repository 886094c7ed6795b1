#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace decatic {

/// Exact rational arithmetic, backed by GMP. All values are kept in
/// canonical form (lowest terms, positive denominator, zero as 0/1).
using Integer = mpz_class;
using Rational = mpq_class;

/// Builds a canonical rational from a numerator/denominator pair.
inline Rational rational(const Integer &num, const Integer &den) {
    if (den == 0)
        throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rational(long num, long den = 1) {
    return rational(Integer(num), Integer(den));
}

inline int sign(const Rational &q) { return sgn(q); }
inline bool is_zero(const Rational &q) { return sgn(q) == 0; }

inline bool is_integer(const Rational &q) {
    return mpz_cmp_ui(q.get_den_mpz_t(), 1) == 0;
}

/// True iff q is the square of a rational; on success *root is the
/// nonnegative square root.
bool rational_sqrt(const Rational &q, Rational *root);

/// Parses "3", "-7/8", "0.877" or "1.25e-3" into an exact rational.
/// Decimal strings convert exactly (0.877 -> 877/1000), never via
/// binary floating point.
Rational parse_rational(const std::string &text);

/// Canonical "p" or "p/q" form.
std::string to_string(const Rational &q);

Rational pow_int(const Rational &base, long exp);

} // namespace decatic
