#pragma once

#include "decatic/spectra.hpp"

#include <optional>
#include <vector>

namespace decatic {

enum class AimRepresentation { FullBivariate, TaylorTruncated };

/// Configuration of an asymptotic-iteration run. The evaluation point x0
/// defaults to 0; precision <= 0 selects the schedule
/// digits + 30 + ceil(max_iters/4).
struct AimConfig {
    Rational x0 = 0;
    long max_iters = 120;
    long precision = 0;  // decimal digits of the working coefficients
    long digits = 10;    // requested eigenvalue digits
    BigDecimal window_low = BigDecimal::from_long(-100, 30);
    BigDecimal window_high = BigDecimal::from_long(200, 30);
    BigDecimal convergence_tol; // empty -> 10^-(digits+2)
    AimRepresentation representation = AimRepresentation::FullBivariate;

    long effective_precision() const;
    BigDecimal effective_tol() const;
    void validate() const;
};

/// Snapshot of the iteration: lambda and s as bivariate polynomials in
/// (t, E) with t = x - x0, plus the previous pair for the termination
/// quantity. States are immutable values; aim_step returns a new one.
struct AimState {
    long n = 0;
    Rational x0 = 0;
    long trunc_budget = -1; // remaining taylor orders; -1 = full bivariate
    BiPoly<BigDecimal> lambda0{Var::X, Var::E}, s0{Var::X, Var::E};
    BiPoly<BigDecimal> lambda{Var::X, Var::E}, s{Var::X, Var::E};
    BiPoly<BigDecimal> lambda_prev{Var::X, Var::E}, s_prev{Var::X, Var::E};
};

/// lambda0 and s0 from the reduction, recentred on x0 and converted to the
/// working precision.
AimState aim_init(const Potential &V, const AimConfig &cfg = {});

/// One application of the iteration rules
///   lambda_n = lambda_{n-1}' + s_{n-1} + lambda0 lambda_{n-1},
///   s_n      = s_{n-1}' + s0 lambda_{n-1}.
AimState aim_step(const AimState &state);

/// The termination quantity delta_n = s_n lambda_{n-1} - s_{n-1} lambda_n
/// evaluated at x = x0, as a polynomial in E. An identically zero result is
/// an exact-termination certificate, not an error. Requires n >= 1.
UniPoly<BigDecimal> aim_delta(const AimState &state, const BigDecimal &x0);
UniPoly<BigDecimal> aim_delta(const AimState &state); // at the state's own x0

/// Per-root iteration history.
struct ConvergenceTrace {
    std::vector<std::pair<long, BigDecimal>> estimates; // (iteration, value)
    bool converged = false;
    long digits_agreed = 0;
    long iterations = 0; // iteration at which convergence was declared
};

struct AimEigenvalue {
    BigDecimal value;
    ConvergenceTrace trace;
};

struct AimResult {
    std::vector<AimEigenvalue> eigenvalues; // ascending
    long iterations_used = 0;
    bool all_converged = false;
    bool window_empty = false;
};

/// Runs the iteration, extracting real roots of delta_n(x0; E) inside the
/// energy window each step, matching them across iterations by nearest
/// value, dropping roots that do not persist three consecutive iterations,
/// and declaring a root converged when successive estimates differ by less
/// than the tolerance. Returns the lowest `count` converged roots ascending;
/// partial results are flagged when max_iters runs out first.
AimResult aim_eigenvalues(const Potential &V, const AimConfig &cfg, long count);

/// Exact QES certificate: substitutes the exact energy, iterates in
/// Q(sqrt(a)) arithmetic, and reports whether delta_m vanishes identically;
/// witness is the first vanishing index.
struct Certificate {
    bool certified = false;
    std::optional<long> witness;
};
Certificate qes_certificate(const Potential &V, const ExtendedScalar &E, long depth);

/// Decimal certificate for energies outside Q(sqrt(a)) (cube-root states):
/// true when the coefficients of delta_m, relative to the scale of its two
/// products, all fall below the threshold.
Certificate qes_certificate_decimal(const Rational &a, const Rational &b, const Rational &c,
                                    const BigDecimal &d, const BigDecimal &e, const BigDecimal &E,
                                    long depth, long digits, const BigDecimal &threshold);

} // namespace decatic
