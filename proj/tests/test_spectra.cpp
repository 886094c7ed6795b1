#include <doctest.h>

#include "decatic/spectra.hpp"

#include <random>

using namespace decatic;

namespace {

ExtendedScalar q(long num, long den = 1) { return ExtendedScalar(rational(num, den)); }

// -----------------------------------------------------------------------
// Independent oracle: chi coefficients straight from the coefficient
// equations of the reduced ODE, with E and e symbolic. This route never
// touches the multiplied-out recurrences.
// -----------------------------------------------------------------------
struct BandOracle {
    std::vector<BiPoly<ExtendedScalar>> P; // recovered energy polynomials
    BiPoly<ExtendedScalar> constraint{Var::E, Var::Param};
};

BandOracle band_oracle(const Rational &a, const Rational &b, const Rational &c, Parity parity,
                       long N) {
    const ExtendedScalar d = degree_condition_d(a, ExtendedScalar(b), ExtendedScalar(c), parity, N);
    const ReducedOde base = reduce_extended(a, ExtendedScalar(b), ExtendedScalar(c), d,
                                            ExtendedScalar(0));
    // a5 coefficients of the general ODE form are minus the lambda0 ones
    const ExtendedScalar a50 = -base.lambda0.coeff(5);
    const ExtendedScalar a52 = -base.lambda0.coeff(3);
    const ExtendedScalar a54 = -base.lambda0.coeff(1);
    const ExtendedScalar s00 = base.s0.coeff(0, 0); // constant term at E=0
    const ExtendedScalar s20 = base.s0.coeff(2, 0); // x^2 term at e=0
    const ExtendedScalar s40 = base.s0.coeff(4, 0);

    auto alpha = [&](long m) {
        BiPoly<ExtendedScalar> v(Var::E, Var::Param);
        v.set_coeff(0, 0, q(m) * a54 - s00);
        v.set_coeff(1, 0, q(1)); // tau44 = s00 - E enters with a minus sign
        return v;
    };
    auto eta = [&](long m) {
        BiPoly<ExtendedScalar> v(Var::E, Var::Param);
        v.set_coeff(0, 0, q(m - 2) * a52 - s20);
        v.set_coeff(0, 1, q(-1)); // tau42 = s20 + e
        return v;
    };
    auto zeta = [&](long m) {
        return BiPoly<ExtendedScalar>::constant(Var::E, Var::Param, q(m - 4) * a50 - s40);
    };

    const bool even = parity == Parity::Even;
    // chi coefficients c[k] multiply x^(2k) (even) or x^(2k+1) (odd)
    std::vector<BiPoly<ExtendedScalar>> cs;
    cs.push_back(BiPoly<ExtendedScalar>::constant(Var::E, Var::Param, q(1)));
    for (long j = 0; j <= N; ++j) {
        const long m = even ? 2 * j : 2 * j + 1;
        BiPoly<ExtendedScalar> acc = alpha(m) * cs[static_cast<std::size_t>(j)];
        if (j >= 1)
            acc = acc + eta(m) * cs[static_cast<std::size_t>(j - 1)];
        if (j >= 2)
            acc = acc + zeta(m) * cs[static_cast<std::size_t>(j - 2)];
        const ExtendedScalar gamma = q((m + 2) * (m + 1));
        cs.push_back(acc * (-(gamma.inverse())));
    }

    BandOracle out;
    const ExtendedScalar base8 = pow_int(q(2) * ExtendedScalar::sqrt_of(a), 3);
    for (long k = 0; k <= N + 1; ++k) {
        long fact = 1;
        for (long i = 2; i <= (even ? 2 * k : 2 * k + 1); ++i)
            fact *= i;
        ExtendedScalar scale = q(fact) * pow_int(base8, k);
        if (k % 2 == 1)
            scale = -scale;
        out.P.push_back(cs[static_cast<std::size_t>(k)] * scale);
    }

    // overflow equation for x^(2N+2) (even) or x^(2N+3) (odd)
    const long m_over = even ? 2 * N + 2 : 2 * N + 3;
    BiPoly<ExtendedScalar> L = eta(m_over) * cs[static_cast<std::size_t>(N)];
    if (N >= 1)
        L = L + zeta(m_over) * cs[static_cast<std::size_t>(N - 1)];
    long factN = 1;
    for (long i = 2; i <= (even ? 2 * N : 2 * N + 1); ++i)
        factN *= i;
    ExtendedScalar scaleC = q(-64) * pow_int(ExtendedScalar(a), 3) * q(factN) * pow_int(base8, N);
    if (N % 2 == 1)
        scaleC = -scaleC;
    out.constraint = L * scaleC;
    return out;
}

BigDecimal dec(const char *s, long digits = 60) { return BigDecimal::from_string(s, digits); }

} // namespace

TEST_CASE("degree_condition_residual") {
    SUBCASE("the (1,-1,1,-43/8) potential satisfies the even ground condition") {
        Potential V(1, -1, 1, rational(-43, 8), rational(105, 64));
        CHECK(degree_condition_residual(V, Parity::Even, 0).is_zero());
        CHECK_FALSE(degree_condition_residual(V, Parity::Even, 1).is_zero());
    }
    SUBCASE("the (1,-1,1,-59/8) potential satisfies the odd condition at n=0") {
        Potential V(1, -1, 1, rational(-59, 8), rational(169, 64));
        CHECK(degree_condition_residual(V, Parity::Odd, 0).is_zero());
    }
    SUBCASE("pure x^10 never satisfies it: residual 8(4n+5)") {
        Potential V(1, 0, 0, 0, 0);
        for (long n = 0; n < 6; ++n)
            CHECK(degree_condition_residual(V, Parity::Even, n) == q(8 * (4 * n + 5)));
    }
}

TEST_CASE("admissible_state") {
    SUBCASE("no-go families return nothing") {
        std::mt19937 rng(113);
        std::uniform_int_distribution<long> pos(1, 50);
        for (int i = 0; i < 50; ++i) {
            const Rational a = rational(pos(rng), pos(rng));
            const Rational cc = rational(pos(rng), pos(rng));
            const Rational e = rational(pos(rng), pos(rng));
            CHECK_FALSE(admissible_state(Potential(a, 0, 0, 0, 0)).has_value());
            CHECK_FALSE(admissible_state(Potential(a, 0, 0, 0, e)).has_value());
            CHECK_FALSE(admissible_state(Potential(a, 0, cc, 0, 0)).has_value());
            CHECK_FALSE(admissible_state(Potential(a, 0, cc, 0, e)).has_value());
        }
    }
    SUBCASE("the d=-69/8 cubic-state potential is admissible at degree 2") {
        Potential V(1, 1, 1, rational(-69, 8), 0);
        auto s = admissible_state(V);
        REQUIRE(s.has_value());
        CHECK(s->parity == Parity::Even);
        CHECK(s->degree == 2);
        CHECK(s->family_index == 1);
    }
    SUBCASE("the two lowest QES potentials are admissible at degrees 0 and 1") {
        auto s0 = admissible_state(Potential(1, -1, 1, rational(-43, 8), rational(105, 64)));
        REQUIRE(s0.has_value());
        CHECK(s0->degree == 0);
        CHECK(s0->parity == Parity::Even);
        auto s1 = admissible_state(Potential(1, -1, 1, rational(-59, 8), rational(169, 64)));
        REQUIRE(s1.has_value());
        CHECK(s1->degree == 1);
        CHECK(s1->parity == Parity::Odd);
    }
    SUBCASE("irrational criterion value returns nothing") {
        // a = 2 makes a^{5/2} irrational; d = 1 leaves no integer solution
        CHECK_FALSE(admissible_state(Potential(2, 0, 0, 1, 0)).has_value());
    }
}

TEST_CASE("energy_polynomials: explicit low members") {
    const Rational a = 2, b = 3, c = -1;
    const ExtendedScalar e = q(5, 7);
    const ExtendedScalar a32 = ExtendedScalar(a) * ExtendedScalar::sqrt_of(a);
    const ExtendedScalar a52 = ExtendedScalar(a * a) * ExtendedScalar::sqrt_of(a);
    const ExtendedScalar b2_4ac = q(3 * 3) - q(4) * ExtendedScalar(a) * ExtendedScalar(c);

    SUBCASE("P2 = 8 a^{3/2} E + b^2 - 4ac") {
        auto seq = energy_polynomials(a, b, c, e, Parity::Even, 0);
        REQUIRE(seq.polys.size() == 2);
        CHECK(seq.polys[0] == UniPoly<ExtendedScalar>::constant(Var::E, q(1)));
        CHECK(seq.polys[1].coeff(1) == q(8) * a32);
        CHECK(seq.polys[1].coeff(0) == b2_4ac);
    }
    SUBCASE("P3 = 8 a^{3/2} E + 3(b^2 - 4ac)") {
        auto seq = energy_polynomials(a, b, c, e, Parity::Odd, 0);
        CHECK(seq.polys[1].coeff(1) == q(8) * a32);
        CHECK(seq.polys[1].coeff(0) == q(3) * b2_4ac);
    }
    SUBCASE("P4 = (8 a^{3/2} E + 5(b^2-4ac)) P2 + 2(96 a^{5/2} b - b^4 + 8ab^2c - 16a^2c^2 + 64a^3 e) P0") {
        auto seq = energy_polynomials(a, b, c, e, Parity::Even, 1);
        REQUIRE(seq.polys.size() == 3);
        UniPoly<ExtendedScalar> lin(Var::E, {q(5) * b2_4ac, q(8) * a32});
        const ExtendedScalar bracket =
            q(96) * a52 * q(3) - q(81) + q(8) * q(2) * q(9) * q(-1) -
            q(16) * q(4) * q(1) + q(64) * q(8) * e;
        UniPoly<ExtendedScalar> expect =
            lin * seq.polys[1] +
            UniPoly<ExtendedScalar>::constant(Var::E, q(2) * bracket);
        CHECK(seq.polys[2] == expect);
    }
}

TEST_CASE("recurrences against the band-equation oracle") {
    // the oracle only uses reduce(); any index or sign slip in the
    // multiplied-out recurrences or constraints would show here
    std::vector<std::tuple<Rational, Rational, Rational>> abcs = {
        {Rational(1), Rational(-1), Rational(1)},
        {Rational(2), Rational(1), Rational(-1)},
        {rational(1, 4), rational(3, 2), rational(-2, 3)},
    };
    for (const auto &[a, b, c] : abcs) {
        for (Parity parity : {Parity::Even, Parity::Odd}) {
            for (long N = 0; N <= 4; ++N) {
                CAPTURE(to_string(a));
                CAPTURE(parity == Parity::Even);
                CAPTURE(N);
                BandOracle oracle = band_oracle(a, b, c, parity, N);
                auto seq = energy_polynomials_symbolic(a, ExtendedScalar(b), ExtendedScalar(c),
                                                       parity, N);
                REQUIRE(seq.size() == oracle.P.size());
                for (std::size_t k = 0; k < seq.size(); ++k)
                    CHECK(seq[k] == oracle.P[k]);
                CHECK(constraint_symbolic(a, ExtendedScalar(b), ExtendedScalar(c), parity, N) ==
                      oracle.constraint);
            }
        }
    }
}

TEST_CASE("constraint_residual explicit forms") {
    const Rational a = 2, b = 3, c = -1;
    const ExtendedScalar ae(a), be(b), ce(c);
    const ExtendedScalar a52 = ExtendedScalar(a * a) * ExtendedScalar::sqrt_of(a);
    const ExtendedScalar common =
        -pow_int(be, 4) + q(8) * ae * be * be * ce - q(16) * ae * ae * ce * ce;

    SUBCASE("even n=0 reduces to 96 a^{5/2} b + ... + 64 a^3 e, independent of E") {
        std::mt19937 rng(127);
        std::uniform_int_distribution<long> v(-9, 9);
        for (int i = 0; i < 20; ++i) {
            const ExtendedScalar e = q(v(rng), 5);
            const ExtendedScalar expect =
                q(96) * a52 * be + common + q(64) * pow_int(ae, 3) * e;
            CHECK(constraint_residual(a, b, c, e, Parity::Even, 0, q(v(rng), 3)) == expect);
        }
    }
    SUBCASE("odd n=0: 160 a^{5/2} b + ...") {
        const ExtendedScalar e = q(5, 7);
        const ExtendedScalar expect = q(160) * a52 * be + common + q(64) * pow_int(ae, 3) * e;
        CHECK(constraint_residual(a, b, c, e, Parity::Odd, 0, q(0)) == expect);
    }
    SUBCASE("odd n=1 equals the (288...) P3 + 12288 a^5 form") {
        std::mt19937 rng(131);
        std::uniform_int_distribution<long> v(-9, 9);
        for (int i = 0; i < 20; ++i) {
            const ExtendedScalar e = q(v(rng), 4);
            const ExtendedScalar E = q(v(rng), 3);
            const ExtendedScalar P3 = energy_polynomials(a, b, c, e, Parity::Odd, 0)
                                          .polys[1]
                                          .eval(E);
            const ExtendedScalar expect =
                (q(288) * a52 * be + common + q(64) * pow_int(ae, 3) * e) * P3 +
                q(12288) * pow_int(ae, 5);
            CHECK(constraint_residual(a, b, c, e, Parity::Odd, 1, E) == expect);
        }
    }
}

TEST_CASE("closed_form_ground / closed_form_first") {
    SUBCASE("(1,-1,1) -> (3/8, -43/8, 105/64) and (9/8, -59/8, 169/64)") {
        ClosedFormState g = closed_form_ground(1, q(-1), q(1));
        CHECK(g.energy == q(3, 8));
        CHECK(g.d == q(-43, 8));
        CHECK(g.e == q(105, 64));
        ClosedFormState f = closed_form_first(1, q(-1), q(1));
        CHECK(f.energy == q(9, 8));
        CHECK(f.d == q(-59, 8));
        CHECK(f.e == q(169, 64));
    }
    SUBCASE("(0.01, 0.1, 1.0) -> the Table-5 exact rows") {
        const Rational a = rational(1, 100);
        ClosedFormState g = closed_form_ground(a, q(1, 10), q(1));
        CHECK(g.energy == q(15, 4));   // 3.75
        CHECK(g.d == q(13, 4));        // 3.250
        CHECK(g.e == q(201, 16));      // 12.5625
        ClosedFormState f = closed_form_first(a, q(1, 10), q(1));
        CHECK(f.energy == q(45, 4));   // 11.25
        CHECK(f.d == q(61, 20));       // 3.050
        CHECK(f.e == q(185, 16));      // 11.5625
    }
    SUBCASE("(mu,mu,mu) at mu=1 gives 3/8 and 9/8") {
        CHECK(closed_form_ground(1, q(1), q(1)).energy == q(3, 8));
        CHECK(closed_form_first(1, q(1), q(1)).energy == q(9, 8));
    }
}

TEST_CASE("solve_state: exact lowest states") {
    SUBCASE("(1,-1,1) even n=0: E=3/8, d=-43/8, e=105/64, chi=1") {
        auto sols = solve_state(1, -1, 1, Parity::Even, 0, 30);
        REQUIRE(sols.size() == 1);
        const QesSolution &s = sols[0];
        CHECK(s.exact);
        CHECK(*s.energy_exact == q(3, 8));
        CHECK(s.d == q(-43, 8));
        CHECK(*s.e_exact == q(105, 64));
        CHECK(*s.chi_exact == UniPoly<ExtendedScalar>::constant(Var::X, q(1)));
        CHECK(s.degree == 0);
        CHECK(verify(s).exact_zero());
    }
    SUBCASE("(1,-1,1) odd n=0: E=9/8, d=-59/8, e=169/64, chi=x") {
        auto sols = solve_state(1, -1, 1, Parity::Odd, 0, 30);
        REQUIRE(sols.size() == 1);
        const QesSolution &s = sols[0];
        CHECK(s.exact);
        CHECK(*s.energy_exact == q(9, 8));
        CHECK(s.d == q(-59, 8));
        CHECK(*s.e_exact == q(169, 64));
        CHECK(*s.chi_exact == UniPoly<ExtendedScalar>::monomial(Var::X, q(1), 1));
        CHECK(s.degree == 1);
        CHECK(verify(s).exact_zero());
    }
    SUBCASE("solve_state agrees with the closed forms for random (a,b,c)") {
        std::mt19937 rng(137);
        std::uniform_int_distribution<long> v(-6, 6);
        std::uniform_int_distribution<long> pos(1, 6);
        for (int i = 0; i < 10; ++i) {
            const Rational a = rational(pos(rng), pos(rng));
            const Rational b = rational(v(rng), 2), c = rational(v(rng), 2);
            ClosedFormState g = closed_form_ground(a, ExtendedScalar(b), ExtendedScalar(c));
            auto sols = solve_state(a, b, c, Parity::Even, 0, 20);
            REQUIRE(sols.size() == 1);
            CHECK(*sols[0].energy_exact == g.energy);
            CHECK(sols[0].d == g.d);
            CHECK(*sols[0].e_exact == g.e);
            ClosedFormState f = closed_form_first(a, ExtendedScalar(b), ExtendedScalar(c));
            auto odd = solve_state(a, b, c, Parity::Odd, 1, 20);
            REQUIRE(odd.size() == 1);
            CHECK(*odd[0].energy_exact == f.energy);
        }
    }
}

TEST_CASE("solve_state: the cubic-irrational second excited states") {
    const long digits = 50;
    const BigDecimal tol = BigDecimal::pow10(-40, 80);

    SUBCASE("(1,1,1) even degree 2 matches the closed-form cube roots") {
        auto sols = solve_state(1, 1, 1, Parity::Even, 2, digits);
        REQUIRE(sols.size() == 1);
        const QesSolution &s = sols[0];
        CHECK(s.d == q(-69, 8));
        CHECK(s.degree == 2);
        CHECK_FALSE(s.exact);

        // closed forms: E2 = (21 + 4 A^(1/3) + 4 B^(1/3))/24 with
        // A,B = 1971 -/+ 24 sqrt(6423); e from the matching x^2 coefficient
        const long wd = 80;
        const BigDecimal s6423 = BigDecimal::from_long(6423, wd).sqrt();
        const BigDecimal A = BigDecimal::from_long(1971, wd) - BigDecimal::from_long(24, wd) * s6423;
        const BigDecimal B = BigDecimal::from_long(1971, wd) + BigDecimal::from_long(24, wd) * s6423;
        const BigDecimal four = BigDecimal::from_long(4, wd);
        const BigDecimal E_ref = (BigDecimal::from_long(21, wd) + four * A.cbrt() + four * B.cbrt()) /
                                 BigDecimal::from_long(24, wd);
        const BigDecimal e_ref =
            (BigDecimal::from_long(24, wd) * A.cbrt() - BigDecimal::from_long(8, wd) * A.cbrt().pow_int(2) +
             BigDecimal::from_long(24, wd) * B.cbrt() - BigDecimal::from_long(8, wd) * B.cbrt().pow_int(2) -
             BigDecimal::from_long(1551, wd)) /
            BigDecimal::from_long(576, wd);
        CHECK((s.energy - E_ref).abs() < tol);
        CHECK((s.e_value - e_ref).abs() < tol);

        // chi = 1 - (8E-3)/16 x^2, the ODE-consistent x^2 coefficient
        const BigDecimal c2 = -(BigDecimal::from_long(8, wd) * E_ref - BigDecimal::from_long(3, wd)) /
                              BigDecimal::from_long(16, wd);
        REQUIRE(s.chi.degree() == 2);
        CHECK((s.chi.coeff(2) / s.chi.coeff(0) - c2).abs() < tol);

        // residual of the full Schroedinger substitution stays below 1e-40
        ResidualReport rep = verify(s);
        CHECK(rep.max_abs_coeff() < tol * BigDecimal::from_long(100, wd));
    }

    SUBCASE("(1,-1,1) even degree 2 matches the second cube-root family") {
        auto sols = solve_state(1, -1, 1, Parity::Even, 2, digits);
        REQUIRE(sols.size() == 1);
        const QesSolution &s = sols[0];
        CHECK(s.d == q(-75, 8));

        const long wd = 80;
        const BigDecimal s4215 = BigDecimal::from_long(4215, wd).sqrt();
        const BigDecimal C =
            (BigDecimal::from_long(513, wd) + BigDecimal::from_long(8, wd) * s4215).cbrt();
        const BigDecimal third = BigDecimal::from_long(3, wd);
        const BigDecimal E_ref =
            (BigDecimal::from_long(7, wd) +
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
        const BigDecimal e_ref = num / (BigDecimal::from_long(192, wd) * C.pow_int(2));
        CHECK((s.energy - E_ref).abs() < tol);
        CHECK((s.e_value - e_ref).abs() < tol);

        ResidualReport rep = verify(s);
        CHECK(rep.max_abs_coeff() < tol * BigDecimal::from_long(100, wd));
    }
}

TEST_CASE("parity structure of chi") {
    // even states only even powers, odd states only odd powers
    for (long n = 0; n <= 2; ++n) {
        auto sols = solve_state(1, -1, 1, Parity::Even, n % 2 == 0 ? 2 * n : n, 25);
        for (const auto &s : sols)
            for (long i = 1; i <= s.chi.degree(); i += 2)
                CHECK(s.chi.coeff(static_cast<std::size_t>(i)).is_zero());
    }
    auto odd = solve_state(1, -1, 1, Parity::Odd, 1, 25);
    for (const auto &s : odd)
        for (long i = 0; i <= s.chi.degree(); i += 2)
            CHECK(s.chi.coeff(static_cast<std::size_t>(i)).is_zero());
}

TEST_CASE("closure conditions hold at solve_state outputs") {
    // degrees 0..4 across both parities where solutions exist; conditions:
    // terminal polynomial zero, constraint zero, degree condition zero
    struct Case {
        Rational a, b, c;
        Parity parity;
        long n; // chi degree
    };
    std::vector<Case> cases = {
        {1, -1, 1, Parity::Even, 0}, {1, -1, 1, Parity::Odd, 1}, {1, 1, 1, Parity::Even, 2},
        {1, -1, 1, Parity::Odd, 3},  {1, 1, 1, Parity::Even, 4},
    };
    for (const auto &cs : cases) {
        CAPTURE(cs.n);
        auto sols = solve_state(cs.a, cs.b, cs.c, cs.parity, cs.n, 40);
        REQUIRE(!sols.empty());
        for (const QesSolution &s : sols) {
            CHECK(degree_condition_residual(cs.a, ExtendedScalar(cs.b), ExtendedScalar(cs.c), s.d,
                                            cs.parity, s.family_index)
                      .is_zero());
            const long wd = 90;
            auto seq = energy_polynomials_symbolic(cs.a, ExtendedScalar(cs.b),
                                                   ExtendedScalar(cs.c), cs.parity,
                                                   s.family_index);
            auto con = constraint_symbolic(cs.a, ExtendedScalar(cs.b), ExtendedScalar(cs.c),
                                           cs.parity, s.family_index);
            if (s.exact) {
                CHECK(seq.back().eval_v(*s.e_exact).eval(*s.energy_exact).is_zero());
                CHECK(con.eval_v(*s.e_exact).eval(*s.energy_exact).is_zero());
            } else {
                const BigDecimal tol = BigDecimal::pow10(-30, wd);
                CHECK(to_decimal(seq.back(), wd).eval_u(s.energy).eval(s.e_value).abs() < tol);
                CHECK(to_decimal(con, wd).eval_u(s.energy).eval(s.e_value).abs() < tol);
            }
        }
    }
}

TEST_CASE("wavefunction") {
    SUBCASE("exact ground state: psi = exp(-3x^2/16 + x^4/8 - x^6/6)") {
        auto sols = solve_state(1, -1, 1, Parity::Even, 0, 30);
        REQUIRE(sols.size() == 1);
        CHECK(sols[0].exponent.c6 == q(1, 6));
        CHECK(sols[0].exponent.c4 == q(-1, 8));
        CHECK(sols[0].exponent.c2 == q(3, 16));
        Wavefunction psi = wavefunction(sols[0], 40);
        const BigDecimal x = dec("0.7", 40);
        // exp(-(x^6/6 - x^4/8 + 3x^2/16)) at x = 0.7
        const BigDecimal phi_x = x.pow_int(6) / BigDecimal::from_long(6, 40) -
                                 x.pow_int(4) / BigDecimal::from_long(8, 40) +
                                 BigDecimal::from_long(3, 40) * x.pow_int(2) /
                                     BigDecimal::from_long(16, 40);
        CHECK((psi(x) - (-phi_x).exp()).abs() < BigDecimal::pow10(-35));
    }
    SUBCASE("first excited state: psi = x exp(...)") {
        auto sols = solve_state(1, -1, 1, Parity::Odd, 1, 30);
        REQUIRE(sols.size() == 1);
        Wavefunction psi = wavefunction(sols[0], 40);
        const BigDecimal x = dec("0.3", 40);
        Wavefunction ground = wavefunction(solve_state(1, -1, 1, Parity::Even, 0, 30)[0], 40);
        CHECK((psi(x) - x * ground(x)).abs() < BigDecimal::pow10(-35));
    }
}

TEST_CASE("verify") {
    SUBCASE("exact pair gives the zero polynomial") {
        auto sols = solve_state(1, -1, 1, Parity::Even, 0, 20);
        CHECK(verify(sols[0]).exact_zero());
    }
    SUBCASE("wrong energy leaves the constant residual 3/8 - E") {
        // E = 1/2 on the exact ground potential: residual (3/8 - 1/2) chi = -1/8
        ResidualReport rep =
            verify_exact(1, q(-1), q(1), q(-43, 8), q(105, 64), q(1, 2),
                         UniPoly<ExtendedScalar>::constant(Var::X, q(1)));
        REQUIRE(rep.exact);
        CHECK(rep.exact_residual.degree() == 0);
        CHECK(rep.exact_residual.coeff(0) == q(-1, 8));
        CHECK(rep.max_abs_coeff() > BigDecimal::pow10(-2));
    }
    SUBCASE("decimal verify on an exact pair is numerically zero") {
        Potential V(1, -1, 1, rational(-43, 8), rational(105, 64));
        UniPoly<BigDecimal> chi =
            UniPoly<BigDecimal>::constant(Var::X, BigDecimal::from_long(1, 50));
        ResidualReport rep =
            verify_decimal(V, BigDecimal::from_rational(rational(3, 8), 50), chi, 50);
        CHECK(rep.max_abs_coeff() < BigDecimal::pow10(-45));
    }
}
