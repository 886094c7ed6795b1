#pragma once

#include "decatic/polynomial.hpp"

namespace decatic {

/// Decatic potential V(x) = a x^10 + b x^8 + c x^6 + d x^4 + e x^2 with
/// exact rational coefficients and a > 0 (units with hbar = 2m = 1).
struct Potential {
    Rational a, b, c, d, e;

    Potential(Rational a_, Rational b_, Rational c_, Rational d_, Rational e_);

    /// V as a polynomial in x.
    UniPoly<Rational> poly() const;
};

/// Coefficients of phi(x) = c6 x^6 + c4 x^4 + c2 x^2; the wavefunction
/// ansatz is psi = chi * exp(-phi), and c6 = sqrt(a)/6 > 0 guarantees decay.
struct AsymptoticExponent {
    ExtendedScalar c6, c4, c2;

    /// phi as a polynomial in x.
    UniPoly<ExtendedScalar> poly() const;
};

/// The reduced equation chi'' = lambda0 chi' + s0 chi obtained by splitting
/// off exp(-phi). lambda0 is odd of degree 5; s0 is even of x-degree 4 and
/// linear in E with coefficient -1.
struct ReducedOde {
    UniPoly<ExtendedScalar> lambda0; // in x
    BiPoly<ExtendedScalar> s0;       // in (x, E)
};

/// The polynomial part of sqrt(P) for an even-degree P with square-rootable
/// positive leading coefficient: the unique Q, positive leading coefficient,
/// with deg(P - Q^2) < deg(P)/2. Throws on odd degree or a leading
/// coefficient whose root does not live in Q(sqrt(rad)).
UniPoly<ExtendedScalar> sqrt_polynomial_part(const UniPoly<ExtendedScalar> &P);
UniPoly<ExtendedScalar> sqrt_polynomial_part(const UniPoly<Rational> &P);

AsymptoticExponent build_exponent(const Potential &V);

/// Exponent for coefficients already living in Q(sqrt(a)).
AsymptoticExponent build_exponent_extended(const Rational &a, const ExtendedScalar &b,
                                           const ExtendedScalar &c);

ReducedOde reduce(const Potential &V);

/// Same reduction but with b, c, d, e living in Q(sqrt(a)); exact spectra
/// fix d and e there even when they are irrational as real numbers, and some
/// table families place c there too.
ReducedOde reduce_extended(const Rational &a, const ExtendedScalar &b, const ExtendedScalar &c,
                           const ExtendedScalar &d, const ExtendedScalar &e);

} // namespace decatic
