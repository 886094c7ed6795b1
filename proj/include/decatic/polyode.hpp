#pragma once

#include "decatic/linalg.hpp"
#include "decatic/polynomial.hpp"

#include <array>
#include <optional>
#include <vector>

namespace decatic {

/// Coefficients of the general polynomial-coefficient ODE
///   (sum a6[k] x^(6-k)) y'' + (sum a5[k] x^(5-k)) y' - (sum tau4[k] x^(4-k)) y = 0,
/// with a6[0]^2 + a5[0]^2 != 0 and at least one a6[k] nonzero.
struct OdeCoefficients {
    std::array<ExtendedScalar, 7> a6;
    std::array<ExtendedScalar, 6> a5;
    std::array<ExtendedScalar, 5> tau4;

    void validate() const;

    UniPoly<ExtendedScalar> a6_poly() const;
    UniPoly<ExtendedScalar> a5_poly() const;
    UniPoly<ExtendedScalar> tau4_poly() const;
};

/// The seven diagonal families of the banded linear system at index n.
/// delta exists from n >= 1, eta from n >= 2, mu from n >= 3, zeta from
/// n >= 4; out-of-domain access is empty.
struct BandCoefficients {
    long n = 0;
    ExtendedScalar alpha, beta, gamma;
    std::optional<ExtendedScalar> delta, eta, mu, zeta;
};

BandCoefficients band_coefficients(const OdeCoefficients &ode, long n);

/// A verified polynomial solution y of the ODE; c[degree] != 0.
struct PolynomialSolution {
    long degree = 0;
    UniPoly<ExtendedScalar> y{Var::X};
};

/// Residual (a6 poly) y'' + (a5 poly) y' - (tau4 poly) y; identically zero
/// exactly when y solves the ODE.
UniPoly<ExtendedScalar> ode_residual(const OdeCoefficients &ode, const UniPoly<ExtendedScalar> &y);

/// Degrees 0 <= n <= nmax satisfying the necessary condition
/// tau4[0] = n(n-1) a6[0] + n a5[0].
std::vector<long> necessary_degrees(const OdeCoefficients &ode, long nmax);

/// The rectangular (n+5) x (n+1) system: the square band matrix on top,
/// followed by the four overflow equations from powers x^(n+1)..x^(n+4)
/// whose vanishing produces the determinant conditions.
Matrix<ExtendedScalar> build_system(const OdeCoefficients &ode, long n);

/// Exact nullspace of the rectangular system filtered to candidates with
/// c[n] != 0, each verified by residual substitution. An empty list means no
/// polynomial solution of this degree; a degree failing the necessary
/// condition is an error.
std::vector<PolynomialSolution> polynomial_solutions(const OdeCoefficients &ode, long n);

/// The four 2x2 determinants whose vanishing (with tau4[0] = a5[0]) is
/// sufficient for a first-degree solution.
std::array<ExtendedScalar, 4> degree1_determinants(const OdeCoefficients &ode);

/// The four 3x3 determinants for a second-degree solution.
std::array<ExtendedScalar, 4> degree2_determinants(const OdeCoefficients &ode);

/// Explicit closed forms y0, y1, y2 for n in {0,1,2}; preconditions are the
/// respective degree conditions, and the shared y2 denominator must not
/// vanish (reported as a degenerate instance).
PolynomialSolution low_degree_closed_form(const OdeCoefficients &ode, long n);

} // namespace decatic
