#pragma once

#include "decatic/asymptotics.hpp"
#include "decatic/roots.hpp"

#include <optional>
#include <vector>

namespace decatic {

enum class Parity { Even, Odd };

inline const char *parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

/// Energy polynomials generated by the four-term recurrences. For even
/// parity polys[j] is P_{2j} (P_0 = 1); for odd parity polys[j] is P_{2j+1}
/// (P_1 = 1). The sequence runs through the terminal polynomial of the
/// requested target family index.
struct EnergyPolySequence {
    Parity parity = Parity::Even;
    long target = 0; // family index n of Eqs. for the even/odd degree conditions
    Rational a, b, c;
    ExtendedScalar e;
    std::vector<UniPoly<ExtendedScalar>> polys; // in E

    const UniPoly<ExtendedScalar> &terminal() const { return polys.back(); }
};

/// One exact (or cubic-irrational, then decimal) bound state of a decatic
/// potential: the state's chi polynomial degree equals its quantum number.
struct QesSolution {
    long degree = 0; // chi polynomial degree
    Parity parity = Parity::Even;
    long family_index = 0; // n in the per-parity degree conditions
    Rational a;
    ExtendedScalar b, c; // the table families place c in Q(sqrt(a))

    ExtendedScalar d; // always exact given (a,b,c,parity,n)
    bool exact = false;
    std::optional<ExtendedScalar> energy_exact, e_exact;
    BigDecimal energy, e_value; // refined to the requested digits

    std::optional<UniPoly<ExtendedScalar>> chi_exact;
    UniPoly<BigDecimal> chi{Var::X};
    AsymptoticExponent exponent;
    long digits = 0;
};

/// Parity/index labels produced by the admissibility criterion.
struct AdmissibleState {
    Parity parity = Parity::Even;
    long degree = 0;       // chi degree solving the criterion
    long family_index = 0; // degree/2 (even) or (degree-1)/2 (odd)
};

/// Left-hand side of the per-parity degree condition at family index n:
/// 8(4n+5) a^(5/2) + 8 a^2 d - 4abc + b^3 (even) or 8(4n+7)... (odd).
/// Zero iff the condition holds.
ExtendedScalar degree_condition_residual(const Potential &V, Parity parity, long n);
ExtendedScalar degree_condition_residual(const Rational &a, const ExtendedScalar &b,
                                         const ExtendedScalar &c, const ExtendedScalar &d,
                                         Parity parity, long n);

/// d fixed by the degree condition for the given family index.
ExtendedScalar degree_condition_d(const Rational &a, const ExtendedScalar &b,
                                  const ExtendedScalar &c, Parity parity, long n);

/// Solves the criterion 8(5+2n) a^(5/2) + 8 a^2 d - 4abc + b^3 = 0 for a
/// nonnegative integer n; empty when no such n exists (the no-go families).
std::optional<AdmissibleState> admissible_state(const Potential &V);

/// The four-term recurrence sequences with e symbolic: bivariate in
/// (E, Param=e). polys[j] is P_{2j} / P_{2j+1} for the target family index.
std::vector<BiPoly<ExtendedScalar>> energy_polynomials_symbolic(const Rational &a,
                                                                const ExtendedScalar &b,
                                                                const ExtendedScalar &c,
                                                                Parity parity, long target);

/// The additional constraint paired with the terminal polynomial, with e
/// symbolic, at family index n (requires the symbolic sequence through
/// P_{2n} / P_{2n+1}).
BiPoly<ExtendedScalar> constraint_symbolic(const Rational &a, const ExtendedScalar &b,
                                           const ExtendedScalar &c, Parity parity, long n);

/// Concrete-e sequence up to index 2N+2 (even) or 2N+3 (odd); the potential
/// coefficient d never enters (it is eliminated by the degree condition).
EnergyPolySequence energy_polynomials(const Rational &a, const Rational &b, const Rational &c,
                                      const ExtendedScalar &e, Parity parity, long N);

/// Evaluates the additional condition at a concrete energy.
ExtendedScalar constraint_residual(const Rational &a, const Rational &b, const Rational &c,
                                   const ExtendedScalar &e, Parity parity, long n,
                                   const ExtendedScalar &E);

/// Closed forms for the lowest state of each parity (Eq. 22 / Eq. 27 shape).
struct ClosedFormState {
    ExtendedScalar energy, d, e;
};
ClosedFormState closed_form_ground(const Rational &a, const ExtendedScalar &b,
                                   const ExtendedScalar &c);
ClosedFormState closed_form_first(const Rational &a, const ExtendedScalar &b,
                                  const ExtendedScalar &c);

/// All states of the family selected by (parity, n): d is fixed by the
/// degree condition and the pair (e, E) ranges over the common zeros of the
/// terminal polynomial and the additional constraint. n is the chi degree
/// when its parity matches `parity`, otherwise it is taken as the per-parity
/// family index. Solutions are exact in Q(sqrt(a)) when the elimination
/// yields linear factors, decimal at `digits` otherwise, ascending in E.
std::vector<QesSolution> solve_state(const Rational &a, const Rational &b, const Rational &c,
                                     Parity parity, long n, long digits);

/// chi assembled from the energy polynomials at the solution's (E, e).
UniPoly<BigDecimal> wavefunction_chi(const QesSolution &sol);

/// Evaluable un-normalized wavefunction psi(x) = chi(x) exp(-phi(x)).
struct Wavefunction {
    UniPoly<BigDecimal> chi{Var::X};
    UniPoly<BigDecimal> phi{Var::X};
    BigDecimal operator()(const BigDecimal &x) const { return chi.eval(x) * (-phi.eval(x)).exp(); }
};
Wavefunction wavefunction(const QesSolution &sol, long digits = 0);

/// Residual report for -psi'' + (V - E) psi with psi = chi exp(-phi): the
/// polynomial left after factoring out exp(-phi). Exact when all scalars are.
struct ResidualReport {
    bool exact = false;
    UniPoly<ExtendedScalar> exact_residual{Var::X};
    UniPoly<BigDecimal> decimal_residual{Var::X};

    bool exact_zero() const { return exact && exact_residual.is_zero(); }
    BigDecimal max_abs_coeff() const;
};

ResidualReport verify(const QesSolution &sol);
ResidualReport verify_exact(const Rational &a, const ExtendedScalar &b, const ExtendedScalar &c,
                            const ExtendedScalar &d, const ExtendedScalar &e,
                            const ExtendedScalar &E, const UniPoly<ExtendedScalar> &chi);
ResidualReport verify_decimal(const Potential &V, const BigDecimal &E,
                              const UniPoly<BigDecimal> &chi, long digits);

} // namespace decatic
