// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned in code next to each check.

#include "decatic/aim.hpp"
#include "decatic/tables.hpp"

#include "planted_oracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace decatic;
using decatic::testing::plant_solvable;
using decatic::testing::Planted;
using decatic::testing::rand_nonzero;
using decatic::testing::recovers;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string &what, double seconds) {
    std::printf("criterion %2d: %s  %s  (%.2f s)\n", id, pass ? "PASS" : "FAIL", what.c_str(),
                seconds);
    std::fflush(stdout);
    if (!pass)
        ++failures;
}

void run(int id, const std::string &what, const std::function<bool()> &body) {
    const auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string note = what;
    try {
        pass = body();
    } catch (const std::exception &ex) {
        note += std::string(" [exception: ") + ex.what() + "]";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(id, pass, note, secs);
}

ExtendedScalar q(long num, long den = 1) { return ExtendedScalar(rational(num, den)); }

// --------------------------------------------------------------------------

bool criterion1() {
    // exact ground state: closed form, solve_state agreement, zero residual
    const ClosedFormState g = closed_form_ground(1, q(-1), q(1));
    if (!(g.energy == q(3, 8) && g.d == q(-43, 8) && g.e == q(105, 64)))
        return false;
    auto sols = solve_state(1, -1, 1, Parity::Even, 0, 30);
    if (sols.size() != 1 || !sols[0].exact)
        return false;
    if (!(*sols[0].energy_exact == g.energy && sols[0].d == g.d && *sols[0].e_exact == g.e))
        return false;
    return verify(sols[0]).exact_zero();
}

bool criterion2() {
    const ClosedFormState f = closed_form_first(1, q(-1), q(1));
    return f.energy == q(9, 8) && f.d == q(-59, 8) && f.e == q(169, 64);
}

bool criterion3() {
    const Rational a = rational(1, 100), b = rational(1, 10), c = 1;
    const ClosedFormState g = closed_form_ground(a, ExtendedScalar(b), ExtendedScalar(c));
    const ClosedFormState f = closed_form_first(a, ExtendedScalar(b), ExtendedScalar(c));
    return g.energy == q(15, 4) && g.d == q(13, 4) && g.e == q(201, 16) &&
           f.energy == q(45, 4) && f.d == q(61, 20) && f.e == q(185, 16);
}

bool criterion4() {
    const long wd = 90;
    const BigDecimal tol = BigDecimal::pow10(-40, wd);

    // family one: (1,1,1), d = -69/8, cube roots over sqrt(6423)
    auto sols1 = solve_state(1, 1, 1, Parity::Even, 2, 50);
    if (sols1.size() != 1 || !(sols1[0].d == q(-69, 8)))
        return false;
    const BigDecimal s6423 = BigDecimal::from_long(6423, wd).sqrt();
    const BigDecimal A = BigDecimal::from_long(1971, wd) - BigDecimal::from_long(24, wd) * s6423;
    const BigDecimal B = BigDecimal::from_long(1971, wd) + BigDecimal::from_long(24, wd) * s6423;
    const BigDecimal E1 = (BigDecimal::from_long(21, wd) +
                           BigDecimal::from_long(4, wd) * (A.cbrt() + B.cbrt())) /
                          BigDecimal::from_long(24, wd);
    const BigDecimal e1 =
        (BigDecimal::from_long(24, wd) * (A.cbrt() + B.cbrt()) -
         BigDecimal::from_long(8, wd) * (A.cbrt().pow_int(2) + B.cbrt().pow_int(2)) -
         BigDecimal::from_long(1551, wd)) /
        BigDecimal::from_long(576, wd);
    if ((sols1[0].energy - E1).abs() > tol || (sols1[0].e_value - e1).abs() > tol)
        return false;

    // family two: (1,-1,1), d = -75/8, cube roots over sqrt(4215)
    auto sols2 = solve_state(1, -1, 1, Parity::Even, 2, 50);
    if (sols2.size() != 1 || !(sols2[0].d == q(-75, 8)))
        return false;
    const BigDecimal s4215 = BigDecimal::from_long(4215, wd).sqrt();
    const BigDecimal C =
        (BigDecimal::from_long(513, wd) + BigDecimal::from_long(8, wd) * s4215).cbrt();
    const BigDecimal third = BigDecimal::from_long(3, wd);
    const BigDecimal E2 = (BigDecimal::from_long(7, wd) +
                           BigDecimal::from_long(4, wd) * C / third.pow_int(2).cbrt() -
                           BigDecimal::from_long(52, wd) / (third.cbrt() * C)) /
                          BigDecimal::from_long(8, wd);
    const BigDecimal num =
        BigDecimal::from_long(64, wd) * third.cbrt() * (BigDecimal::from_long(43, wd) + s4215) -
        BigDecimal::from_long(64, wd) * third.cbrt().sqrt() *
            (BigDecimal::from_long(23, wd) * third.sqrt() +
             BigDecimal::from_long(1405, wd).sqrt()) *
            C +
        BigDecimal::from_long(571, wd) * C.pow_int(2);
    const BigDecimal e2 = num / (BigDecimal::from_long(192, wd) * C.pow_int(2));
    return (sols2[0].energy - E2).abs() <= tol && (sols2[0].e_value - e2).abs() <= tol;
}

bool criterion5() {
    // desk-scale Table 5: >= 10 significant digits within <= 120 iterations
    // at 120-digit working precision
    for (int bi = 0; bi < 2; ++bi) {
        const Table5Block &blk = table5_blocks()[static_cast<std::size_t>(bi)];
        AimConfig cfg;
        cfg.max_iters = 120;
        cfg.precision = 120;
        cfg.digits = 9; // stopping tolerance; the gate below measures 10 digits vs the references
        cfg.representation = AimRepresentation::TaylorTruncated;
        cfg.window_low = BigDecimal::from_long(-1, 30);
        cfg.window_high = BigDecimal::from_long(14, 30);
        const AimResult r = aim_eigenvalues(blk.potential, cfg, 3);
        if (r.eigenvalues.size() != 3 || r.iterations_used > 120)
            return false;
        for (std::size_t k = 0; k < 3; ++k) {
            if (!r.eigenvalues[k].trace.converged)
                return false;
            const BigDecimal ref = BigDecimal::from_string(blk.reference[k], 40);
            const BigDecimal rel = ((r.eigenvalues[k].value - ref) / ref).abs();
            if (rel > BigDecimal::pow10(-10, 40) * BigDecimal::from_long(5, 40))
                return false;
        }
    }
    return true;
}

bool criterion6() {
    const Potential V(1, -1, 1, rational(-43, 8), rational(105, 64));
    AimConfig cfg;
    cfg.max_iters = 60;
    cfg.digits = 13;
    cfg.representation = AimRepresentation::TaylorTruncated;
    cfg.window_low = BigDecimal::from_long(0, 30);
    cfg.window_high = BigDecimal::from_long(1, 30);
    const AimResult r = aim_eigenvalues(V, cfg, 1);
    if (r.eigenvalues.empty() || !r.eigenvalues[0].trace.converged)
        return false;
    const BigDecimal target = BigDecimal::from_rational(rational(3, 8), 40);
    if ((r.eigenvalues[0].value - target).abs() > BigDecimal::pow10(-12, 40))
        return false;
    const Certificate cert = qes_certificate(V, q(3, 8), 2);
    return cert.certified && cert.witness.has_value() && *cert.witness <= 2;
}

bool criterion7() {
    std::mt19937 rng(20260808);
    // 100 planted solvable instances recovered exactly
    for (int trial = 0; trial < 100; ++trial) {
        const long n = trial % 7;
        Planted inst = plant_solvable(rng, n);
        if (!recovers(polynomial_solutions(inst.ode, n), inst.y))
            return false;
    }
    // 100 perturbed instances rejected
    int rejected = 0, attempts = 0;
    while (rejected < 100 && attempts < 400) {
        ++attempts;
        const long n = attempts % 7;
        Planted inst = plant_solvable(rng, n);
        std::uniform_int_distribution<std::size_t> which(1, 4);
        inst.ode.tau4[which(rng)] += ExtendedScalar(rand_nonzero(rng));
        auto degs = necessary_degrees(inst.ode, n);
        if (std::find(degs.begin(), degs.end(), n) == degs.end())
            continue; // the perturbation already failed the necessary condition
        if (recovers(polynomial_solutions(inst.ode, n), inst.y))
            return false;
        ++rejected;
    }
    if (rejected < 100)
        return false;
    // determinant equivalence for n in {1,2}, under the generic pivot
    // structure the closed forms divide by
    int checked = 0;
    while (checked < 60) {
        const long n = 1 + checked % 2;
        Planted inst = plant_solvable(rng, n);
        auto dets_zero = [&](const OdeCoefficients &o) {
            const auto ds = n == 1 ? degree1_determinants(o) : degree2_determinants(o);
            for (const auto &d : ds)
                if (!d.is_zero())
                    return false;
            return true;
        };
        if (!dets_zero(inst.ode) || !recovers(polynomial_solutions(inst.ode, n), inst.y))
            return false;
        OdeCoefficients bad = inst.ode;
        std::uniform_int_distribution<std::size_t> which(1, 4);
        bad.tau4[which(rng)] += ExtendedScalar(rand_nonzero(rng));
        auto degs = necessary_degrees(bad, n);
        if (std::find(degs.begin(), degs.end(), n) == degs.end())
            continue;
        if (n == 1 && (bad.a5[5].is_zero() || bad.tau4[4].is_zero()))
            continue;
        if (n == 2) {
            const ExtendedScalar denom = bad.a5[5] * (bad.a5[5] + bad.a6[5]) +
                                         bad.a6[6] * (-bad.a5[4] + bad.tau4[4]);
            const ExtendedScalar lead =
                bad.a5[5] * bad.tau4[3] - bad.a5[4] * bad.tau4[4] + bad.tau4[4] * bad.tau4[4];
            if (denom.is_zero() || lead.is_zero())
                continue;
        }
        if (dets_zero(bad) != !polynomial_solutions(bad, n).empty())
            return false;
        ++checked;
    }
    return true;
}

bool criterion8() {
    struct Case {
        Rational a, b, c;
        Parity parity;
        long n;
    };
    const std::vector<Case> cases = {
        {1, -1, 1, Parity::Even, 0}, {1, -1, 1, Parity::Odd, 1}, {1, 1, 1, Parity::Even, 2},
        {1, -1, 1, Parity::Odd, 3},  {1, 1, 1, Parity::Even, 4},
    };
    for (const Case &cs : cases) {
        auto sols = solve_state(cs.a, cs.b, cs.c, cs.parity, cs.n, 40);
        if (sols.empty())
            return false;
        for (const QesSolution &s : sols) {
            // the degree condition, always exact
            if (!degree_condition_residual(cs.a, ExtendedScalar(cs.b), ExtendedScalar(cs.c), s.d,
                                           cs.parity, s.family_index)
                     .is_zero())
                return false;
            // items 1 and 2: terminal polynomial and additional constraint
            auto seq = energy_polynomials_symbolic(cs.a, ExtendedScalar(cs.b),
                                                   ExtendedScalar(cs.c), cs.parity,
                                                   s.family_index);
            auto con = constraint_symbolic(cs.a, ExtendedScalar(cs.b), ExtendedScalar(cs.c),
                                           cs.parity, s.family_index);
            if (s.exact) {
                if (!seq.back().eval_v(*s.e_exact).eval(*s.energy_exact).is_zero())
                    return false;
                if (!con.eval_v(*s.e_exact).eval(*s.energy_exact).is_zero())
                    return false;
            } else {
                const long wd = 90;
                const BigDecimal tol = BigDecimal::pow10(-30, wd);
                if (to_decimal(seq.back(), wd).eval_u(s.energy).eval(s.e_value).abs() > tol)
                    return false;
                if (to_decimal(con, wd).eval_u(s.energy).eval(s.e_value).abs() > tol)
                    return false;
            }
            // parity structure of chi
            const long start = cs.parity == Parity::Even ? 1 : 0;
            for (long i = start; i <= s.chi.degree(); i += 2)
                if (!s.chi.coeff(static_cast<std::size_t>(i)).is_zero())
                    return false;
            // full Schroedinger residual
            ResidualReport rep = verify(s);
            if (s.exact) {
                if (!rep.exact_zero())
                    return false;
            } else if (rep.max_abs_coeff() > BigDecimal::pow10(-25, 90)) {
                return false;
            }
        }
    }
    return true;
}

bool criterion9() {
    std::mt19937 rng(424243);
    std::uniform_int_distribution<long> pos(1, 60);
    for (int i = 0; i < 50; ++i) {
        const Rational a = rational(pos(rng), pos(rng));
        const Rational c = rational(pos(rng), pos(rng));
        const Rational e = rational(pos(rng), pos(rng));
        if (admissible_state(Potential(a, 0, 0, 0, 0)))
            return false;
        if (admissible_state(Potential(a, 0, 0, 0, e)))
            return false;
        if (admissible_state(Potential(a, 0, c, 0, 0)))
            return false;
        if (admissible_state(Potential(a, 0, c, 0, e)))
            return false;
    }
    return true;
}

bool criterion10() {
    for (int table : {1, 2})
        for (int row = 1; row <= 8; ++row)
            for (long mu : {1L, 4L})
                for (long k : {1L, 2L}) {
                    const std::vector<int> signs =
                        row <= 2 ? std::vector<int>{+1, -1} : std::vector<int>{+1};
                    for (int sign : signs) {
                        TableRow r = table_row({table, row, Rational(mu), Rational(k), sign});
                        if (!verify(r.solution).exact_zero())
                            return false;
                    }
                }
    return true;
}

} // namespace

int main() {
    std::printf("decatic acceptance suite\n");
    run(1, "exact ground state (3/8, -43/8, 105/64), zero residual", criterion1);
    run(2, "exact first excited state (9/8, -59/8, 169/64)", criterion2);
    run(3, "QES cross-check rows (3.75, 3.25, 12.5625) and (11.25, 3.05, 11.5625)", criterion3);
    run(4, "cubic-irrational n=2 states match 50-digit closed forms to 1e-40", criterion4);
    run(5, "AIM desk scale: 3 eigenvalues per block, 10+ digits, <=120 iterations", criterion5);
    run(6, "AIM/QES consistency at 3/8 and exact certificate at depth 2", criterion6);
    run(7, "polynomial-solution conditions: 100 planted + 100 perturbed + determinants",
        criterion7);
    run(8, "terminal/constraint conditions and parity structure at solve_state outputs",
        criterion8);
    run(9, "no-go families have no admissible state (50 draws each)", criterion9);
    run(10, "tables 1-2 rows verify exactly for mu in {1,4}, k in {1,2}", criterion10);
    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
