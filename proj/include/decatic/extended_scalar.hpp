#pragma once

#include "decatic/rational.hpp"

#include <stdexcept>
#include <string>

namespace decatic {

/// Raised when two values over different square-root extensions are combined.
struct RadicandMismatch : std::domain_error {
    using std::domain_error::domain_error;
};

/// An element p + q*sqrt(rad) of the quadratic extension Q(sqrt(rad)),
/// rad > 0 rational. This is the field in which every exact spectrum of a
/// decatic potential with leading coefficient `rad` lives.
///
/// Canonical form: if rad is a perfect square of a rational r the value
/// collapses to the plain rational p + q*r; plain rationals carry no
/// radicand and combine with values over any extension. Equality is exact.
class ExtendedScalar {
  public:
    ExtendedScalar() : p_(0), q_(0), rad_(0) {}
    ExtendedScalar(const Rational &p) : p_(p), q_(0), rad_(0) {} // NOLINT(google-explicit-constructor)
    ExtendedScalar(long v) : p_(rational(v)), q_(0), rad_(0) {}  // NOLINT(google-explicit-constructor)
    ExtendedScalar(const Rational &p, const Rational &q, const Rational &rad);

    /// sqrt(rad) as a field element (collapses when rad is a square).
    static ExtendedScalar sqrt_of(const Rational &rad);

    const Rational &p() const { return p_; }
    const Rational &q() const { return q_; }
    const Rational &radicand() const { return rad_; }
    bool is_rational() const { return sgn(q_) == 0; }
    bool is_zero() const { return sgn(p_) == 0 && sgn(q_) == 0; }

    /// Exact rational value; throws if the radical part is present.
    Rational to_rational() const;

    ExtendedScalar operator-() const;
    ExtendedScalar &operator+=(const ExtendedScalar &rhs);
    ExtendedScalar &operator-=(const ExtendedScalar &rhs);
    ExtendedScalar &operator*=(const ExtendedScalar &rhs);
    ExtendedScalar &operator/=(const ExtendedScalar &rhs);

    friend ExtendedScalar operator+(ExtendedScalar a, const ExtendedScalar &b) { return a += b; }
    friend ExtendedScalar operator-(ExtendedScalar a, const ExtendedScalar &b) { return a -= b; }
    friend ExtendedScalar operator*(ExtendedScalar a, const ExtendedScalar &b) { return a *= b; }
    friend ExtendedScalar operator/(ExtendedScalar a, const ExtendedScalar &b) { return a /= b; }

    friend bool operator==(const ExtendedScalar &a, const ExtendedScalar &b) {
        return a.p_ == b.p_ && a.q_ == b.q_ && (sgn(a.q_) == 0 || a.rad_ == b.rad_);
    }
    friend bool operator!=(const ExtendedScalar &a, const ExtendedScalar &b) { return !(a == b); }

    /// Exact sign of the real value p + q*sqrt(rad).
    int sign() const;

    /// Conjugate p - q*sqrt(rad).
    ExtendedScalar conjugate() const;

    /// Multiplicative inverse; throws on zero.
    ExtendedScalar inverse() const;

    /// Square root when representable in the same field: the value must be
    /// either a rational square or rad times a rational square. Throws
    /// std::domain_error otherwise.
    ExtendedScalar sqrt() const;

    std::string str() const;

  private:
    // returns the common radicand, throwing on a genuine mismatch
    static const Rational &merge(const ExtendedScalar &a, const ExtendedScalar &b);
    void normalize();

    Rational p_, q_, rad_;
};

inline bool is_zero(const ExtendedScalar &v) { return v.is_zero(); }
inline int sign(const ExtendedScalar &v) { return v.sign(); }

inline bool operator<(const ExtendedScalar &a, const ExtendedScalar &b) {
    return (a - b).sign() < 0;
}

ExtendedScalar pow_int(const ExtendedScalar &base, long exp);

} // namespace decatic
