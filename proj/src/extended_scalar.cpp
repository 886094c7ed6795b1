#include "decatic/extended_scalar.hpp"

namespace decatic {

ExtendedScalar::ExtendedScalar(const Rational &p, const Rational &q, const Rational &rad)
    : p_(p), q_(q), rad_(rad) {
    if (sgn(q_) != 0 && sgn(rad_) <= 0)
        throw std::invalid_argument("ExtendedScalar: radicand must be positive");
    normalize();
}

void ExtendedScalar::normalize() {
    if (sgn(q_) == 0) {
        rad_ = 0;
        return;
    }
    Rational root;
    if (rational_sqrt(rad_, &root)) {
        p_ += q_ * root;
        q_ = 0;
        rad_ = 0;
    }
}

ExtendedScalar ExtendedScalar::sqrt_of(const Rational &rad) {
    if (sgn(rad) < 0)
        throw std::domain_error("ExtendedScalar::sqrt_of: negative radicand");
    if (sgn(rad) == 0)
        return ExtendedScalar();
    return ExtendedScalar(Rational(0), Rational(1), rad);
}

Rational ExtendedScalar::to_rational() const {
    if (!is_rational())
        throw std::domain_error("ExtendedScalar: value is irrational: " + str());
    return p_;
}

const Rational &ExtendedScalar::merge(const ExtendedScalar &a, const ExtendedScalar &b) {
    if (sgn(a.q_) == 0)
        return b.rad_;
    if (sgn(b.q_) == 0)
        return a.rad_;
    if (a.rad_ != b.rad_)
        throw RadicandMismatch("ExtendedScalar: radicand mismatch: sqrt(" +
                               to_string(a.rad_) + ") vs sqrt(" + to_string(b.rad_) + ")");
    return a.rad_;
}

ExtendedScalar ExtendedScalar::operator-() const {
    ExtendedScalar r(*this);
    r.p_ = -r.p_;
    r.q_ = -r.q_;
    return r;
}

ExtendedScalar &ExtendedScalar::operator+=(const ExtendedScalar &rhs) {
    rad_ = merge(*this, rhs);
    p_ += rhs.p_;
    q_ += rhs.q_;
    if (sgn(q_) == 0)
        rad_ = 0;
    return *this;
}

ExtendedScalar &ExtendedScalar::operator-=(const ExtendedScalar &rhs) {
    rad_ = merge(*this, rhs);
    p_ -= rhs.p_;
    q_ -= rhs.q_;
    if (sgn(q_) == 0)
        rad_ = 0;
    return *this;
}

ExtendedScalar &ExtendedScalar::operator*=(const ExtendedScalar &rhs) {
    const Rational rad = merge(*this, rhs);
    const Rational p = p_ * rhs.p_ + q_ * rhs.q_ * rad;
    const Rational q = p_ * rhs.q_ + q_ * rhs.p_;
    p_ = p;
    q_ = q;
    rad_ = sgn(q_) == 0 ? Rational(0) : rad;
    return *this;
}

ExtendedScalar ExtendedScalar::conjugate() const {
    ExtendedScalar r(*this);
    r.q_ = -r.q_;
    return r;
}

ExtendedScalar ExtendedScalar::inverse() const {
    if (is_zero())
        throw std::domain_error("ExtendedScalar: division by zero");
    if (is_rational())
        return ExtendedScalar(Rational(1 / p_));
    // (p + q sqrt(r))^-1 = (p - q sqrt(r)) / (p^2 - q^2 r); the norm cannot
    // vanish because r is not a rational square in canonical form.
    const Rational norm = p_ * p_ - q_ * q_ * rad_;
    return ExtendedScalar(p_ / norm, -q_ / norm, rad_);
}

ExtendedScalar &ExtendedScalar::operator/=(const ExtendedScalar &rhs) {
    return *this *= rhs.inverse();
}

int ExtendedScalar::sign() const {
    const int sp = sgn(p_), sq = sgn(q_);
    if (sq == 0)
        return sp;
    if (sp == 0)
        return sq;
    if (sp == sq)
        return sp;
    // opposite signs: compare |p| against |q|*sqrt(rad) via squares
    const int cmp = sgn(Rational(p_ * p_ - q_ * q_ * rad_));
    return cmp == 0 ? 0 : cmp * sp;
}

ExtendedScalar ExtendedScalar::sqrt() const {
    if (sign() < 0)
        throw std::domain_error("ExtendedScalar::sqrt: negative value");
    if (is_rational()) {
        Rational root;
        if (rational_sqrt(p_, &root))
            return ExtendedScalar(root);
        return sqrt_of(p_);
    }
    throw std::domain_error("ExtendedScalar::sqrt: not representable in Q(sqrt(" +
                            to_string(rad_) + ")): " + str());
}

std::string ExtendedScalar::str() const {
    if (is_rational())
        return to_string(p_);
    std::string out;
    if (sgn(p_) != 0)
        out += to_string(p_) + (sgn(q_) > 0 ? "+" : "");
    if (q_ == 1)
        out += "sqrt(" + to_string(rad_) + ")";
    else if (q_ == -1)
        out += "-sqrt(" + to_string(rad_) + ")";
    else
        out += to_string(q_) + "*sqrt(" + to_string(rad_) + ")";
    return out;
}

ExtendedScalar pow_int(const ExtendedScalar &base, long exp) {
    if (exp < 0)
        return pow_int(base.inverse(), -exp);
    ExtendedScalar result(Rational(1));
    ExtendedScalar b = base;
    unsigned long n = static_cast<unsigned long>(exp);
    while (n) {
        if (n & 1)
            result *= b;
        b *= b;
        n >>= 1;
    }
    return result;
}

} // namespace decatic
