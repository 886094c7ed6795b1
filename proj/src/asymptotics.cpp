#include "decatic/asymptotics.hpp"

namespace decatic {

Potential::Potential(Rational a_, Rational b_, Rational c_, Rational d_, Rational e_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)), e(std::move(e_)) {
    if (sgn(a) <= 0)
        throw std::invalid_argument("Potential: leading coefficient a must be positive");
}

UniPoly<Rational> Potential::poly() const {
    UniPoly<Rational> p(Var::X);
    p.set_coeff(10, a);
    p.set_coeff(8, b);
    p.set_coeff(6, c);
    p.set_coeff(4, d);
    p.set_coeff(2, e);
    return p;
}

UniPoly<ExtendedScalar> AsymptoticExponent::poly() const {
    UniPoly<ExtendedScalar> p(Var::X);
    p.set_coeff(6, c6);
    p.set_coeff(4, c4);
    p.set_coeff(2, c2);
    return p;
}

namespace {

// Square root of a polynomial's leading coefficient within Q(sqrt(ambient)).
// `ambient` = 0 means no extension has been fixed yet; a non-square rational
// leading coefficient then defines one.
ExtendedScalar leading_sqrt(const ExtendedScalar &lead, const Rational &ambient) {
    if (lead.sign() <= 0)
        throw std::domain_error("sqrt_polynomial_part: leading coefficient must be positive");
    if (lead.is_rational()) {
        const Rational value = lead.to_rational();
        Rational root;
        if (rational_sqrt(value, &root))
            return ExtendedScalar(root);
        if (sgn(ambient) > 0) {
            Rational ratio = value / ambient;
            if (rational_sqrt(ratio, &root))
                return ExtendedScalar(Rational(0), root, ambient);
            throw std::domain_error("sqrt_polynomial_part: sqrt(" + to_string(value) +
                                    ") does not lie in Q(sqrt(" + to_string(ambient) + "))");
        }
        return ExtendedScalar::sqrt_of(value);
    }
    throw std::domain_error("sqrt_polynomial_part: leading coefficient " + lead.str() +
                            " has no representable square root");
}

} // namespace

UniPoly<ExtendedScalar> sqrt_polynomial_part(const UniPoly<ExtendedScalar> &P) {
    if (P.is_zero())
        throw std::invalid_argument("sqrt_polynomial_part: zero polynomial");
    if (P.degree() % 2 != 0)
        throw std::domain_error("sqrt_polynomial_part: degree must be even");

    Rational ambient = 0;
    for (const ExtendedScalar &c : P.coeffs())
        if (!c.is_rational()) {
            ambient = c.radicand();
            break;
        }

    const std::size_t m = static_cast<std::size_t>(P.degree()) / 2;
    std::vector<ExtendedScalar> q(m + 1);
    q[m] = leading_sqrt(P.leading(), ambient);
    const ExtendedScalar twice_lead = q[m] + q[m];

    // match coefficients of x^(j+m) in Q^2 descending
    for (std::size_t j = m; j-- > 0;) {
        const std::size_t t = j + m;
        ExtendedScalar acc = P.coeff(t);
        for (std::size_t u = j + 1; u + 1 <= m; ++u)
            acc -= q[u] * q[t - u];
        q[j] = acc / twice_lead;
    }
    return UniPoly<ExtendedScalar>(Var::X, std::move(q));
}

UniPoly<ExtendedScalar> sqrt_polynomial_part(const UniPoly<Rational> &P) {
    return sqrt_polynomial_part(to_extended(P));
}

AsymptoticExponent build_exponent_extended(const Rational &a_r, const ExtendedScalar &b,
                                           const ExtendedScalar &c) {
    if (sgn(a_r) <= 0)
        throw std::invalid_argument("build_exponent: a must be positive");
    const ExtendedScalar sqrt_a = ExtendedScalar::sqrt_of(a_r);
    const ExtendedScalar a(a_r);
    AsymptoticExponent phi;
    phi.c6 = sqrt_a / ExtendedScalar(6);
    phi.c4 = b / (ExtendedScalar(8) * sqrt_a);
    phi.c2 = -(b * b - ExtendedScalar(4) * a * c) /
             (ExtendedScalar(16) * a * sqrt_a);
    return phi;
}

AsymptoticExponent build_exponent(const Potential &V) {
    return build_exponent_extended(V.a, ExtendedScalar(V.b), ExtendedScalar(V.c));
}

ReducedOde reduce_extended(const Rational &a_r, const ExtendedScalar &b, const ExtendedScalar &c,
                           const ExtendedScalar &d, const ExtendedScalar &e) {
    if (sgn(a_r) <= 0)
        throw std::invalid_argument("reduce: a must be positive");
    const ExtendedScalar a(a_r);
    const ExtendedScalar sqrt_a = ExtendedScalar::sqrt_of(a_r);
    const ExtendedScalar a32 = a * sqrt_a;  // a^(3/2)
    const ExtendedScalar a52 = a * a32;     // a^(5/2)
    const ExtendedScalar b2_4ac = b * b - ExtendedScalar(4) * a * c;

    ReducedOde ode;
    ode.lambda0 = UniPoly<ExtendedScalar>(Var::X);
    ode.lambda0.set_coeff(5, ExtendedScalar(2) * sqrt_a);
    ode.lambda0.set_coeff(3, b / sqrt_a);
    ode.lambda0.set_coeff(1, -b2_4ac / (ExtendedScalar(4) * a32));

    // s0 = (4ac - b^2)/(8 a^{3/2}) - E
    //      + (64 a^3 e + 96 a^{5/2} b - b^4 + 8 a b^2 c - 16 a^2 c^2)/(64 a^3) x^2
    //      + (8 a^2 d + 40 a^{5/2} + b^3 - 4 a b c)/(8 a^2) x^4
    ode.s0 = BiPoly<ExtendedScalar>(Var::X, Var::E);
    ode.s0.set_coeff(0, 0, -b2_4ac / (ExtendedScalar(8) * a32));
    ode.s0.set_coeff(0, 1, ExtendedScalar(-1));
    ode.s0.set_coeff(2, 0,
                     (ExtendedScalar(64) * a * a * a * e + ExtendedScalar(96) * a52 * b -
                      b * b * b * b + ExtendedScalar(8) * a * b * b * c -
                      ExtendedScalar(16) * a * a * c * c) /
                         (ExtendedScalar(64) * a * a * a));
    ode.s0.set_coeff(4, 0,
                     (ExtendedScalar(8) * a * a * d + ExtendedScalar(40) * a52 +
                      b * b * b - ExtendedScalar(4) * a * b * c) /
                         (ExtendedScalar(8) * a * a));
    return ode;
}

ReducedOde reduce(const Potential &V) {
    return reduce_extended(V.a, ExtendedScalar(V.b), ExtendedScalar(V.c), ExtendedScalar(V.d),
                           ExtendedScalar(V.e));
}

} // namespace decatic
