#include "decatic/spectra.hpp"

#include "decatic/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace decatic {

namespace {

ExtendedScalar n_(long v) { return ExtendedScalar(v); }

// a^(5/2) = a^2 sqrt(a) as a field element
ExtendedScalar a52(const Rational &a) { return ExtendedScalar(a * a) * ExtendedScalar::sqrt_of(a); }
ExtendedScalar a32(const Rational &a) { return ExtendedScalar(a) * ExtendedScalar::sqrt_of(a); }

long factorial(long n) {
    long f = 1;
    for (long i = 2; i <= n; ++i)
        f *= i;
    return f;
}

// The common bracket of the recurrences and constraints:
// 32 w a^{5/2} b - b^4 + 8 a b^2 c - 16 a^2 c^2 + 64 a^3 e  (with e symbolic)
BiPoly<ExtendedScalar> bracket_symbolic(const Rational &a, const ExtendedScalar &b,
                                        const ExtendedScalar &c, long w) {
    const ExtendedScalar ae(a);
    const ExtendedScalar konst = n_(32 * w) * a52(a) * b - b * b * b * b +
                                 n_(8) * ae * b * b * c - n_(16) * ae * ae * c * c;
    BiPoly<ExtendedScalar> out(Var::E, Var::Param);
    out.set_coeff(0, 0, konst);
    out.set_coeff(0, 1, n_(64) * ae * ae * ae);
    return out;
}

BiPoly<ExtendedScalar> linear_E_factor(const Rational &a, const ExtendedScalar &b,
                                       const ExtendedScalar &c, long w) {
    // 8 a^{3/2} E + w (b^2 - 4ac)
    BiPoly<ExtendedScalar> out(Var::E, Var::Param);
    out.set_coeff(1, 0, n_(8) * a32(a));
    out.set_coeff(0, 0, n_(w) * (b * b - n_(4) * ExtendedScalar(a) * c));
    return out;
}

} // namespace

ExtendedScalar degree_condition_residual(const Rational &a, const ExtendedScalar &b,
                                         const ExtendedScalar &c, const ExtendedScalar &d,
                                         Parity parity, long n) {
    if (n < 0)
        throw std::invalid_argument("degree_condition_residual: n must be nonnegative");
    const long w = parity == Parity::Even ? 4 * n + 5 : 4 * n + 7;
    const ExtendedScalar ae(a);
    return n_(8 * w) * a52(a) + n_(8) * ae * ae * d - n_(4) * ae * b * c + b * b * b;
}

ExtendedScalar degree_condition_residual(const Potential &V, Parity parity, long n) {
    return degree_condition_residual(V.a, ExtendedScalar(V.b), ExtendedScalar(V.c),
                                     ExtendedScalar(V.d), parity, n);
}

ExtendedScalar degree_condition_d(const Rational &a, const ExtendedScalar &b,
                                  const ExtendedScalar &c, Parity parity, long n) {
    if (n < 0)
        throw std::invalid_argument("degree_condition_d: n must be nonnegative");
    const long w = parity == Parity::Even ? 4 * n + 5 : 4 * n + 7;
    const ExtendedScalar ae(a);
    return -(n_(8 * w) * a52(a) + b * b * b - n_(4) * ae * b * c) / (n_(8) * ae * ae);
}

std::optional<AdmissibleState> admissible_state(const Potential &V) {
    // criterion: 8(5+2n) a^{5/2} = 4abc - b^3 - 8 a^2 d
    const ExtendedScalar ae(V.a), b(V.b), c(V.c), d(V.d);
    const ExtendedScalar target =
        (n_(4) * ae * b * c - b * b * b - n_(8) * ae * ae * d) / (n_(8) * a52(V.a));
    if (!target.is_rational())
        return std::nullopt;
    const Rational q = target.to_rational();
    // q must equal 5 + 2n for integer n >= 0
    if (!is_integer(q))
        return std::nullopt;
    const Integer qi = q.get_num();
    if (qi < 5 || mpz_even_p(qi.get_mpz_t()))
        return std::nullopt;
    AdmissibleState s;
    s.degree = (qi.get_si() - 5) / 2;
    s.parity = (s.degree % 2 == 0) ? Parity::Even : Parity::Odd;
    s.family_index = s.degree / 2; // == (degree-1)/2 for odd degrees
    return s;
}

std::vector<BiPoly<ExtendedScalar>> energy_polynomials_symbolic(const Rational &a,
                                                                const ExtendedScalar &b,
                                                                const ExtendedScalar &c,
                                                                Parity parity, long target) {
    if (sgn(a) <= 0)
        throw std::invalid_argument("energy_polynomials: a must be positive");
    if (target < 0)
        throw std::invalid_argument("energy_polynomials: target must be nonnegative");

    const bool even = parity == Parity::Even;
    std::vector<BiPoly<ExtendedScalar>> polys;
    polys.reserve(static_cast<std::size_t>(target) + 2);
    polys.push_back(BiPoly<ExtendedScalar>::constant(Var::E, Var::Param, ExtendedScalar(1)));

    const ExtendedScalar a5 = a52(a);
    for (long j = 0; j <= target; ++j) {
        // P_{2j+2} = (8 a^{3/2} E + (4j+1)(b^2-4ac)) P_{2j}
        //          + 2j(2j-1) (32(4j-1) a^{5/2} b - b^4 + 8ab^2c - 16a^2c^2 + 64a^3 e) P_{2j-2}
        //          + 8192 a^5 j(j-1)(2j-1)(2j-3)(target-j+2) P_{2j-4}
        // (odd parity shifts the three index weights to 4j+3, 4j+1, (2j+1)(2j-1))
        const long w_lin = even ? 4 * j + 1 : 4 * j + 3;
        const long w_brk = even ? 4 * j - 1 : 4 * j + 1;
        const long c_brk = even ? 2 * j * (2 * j - 1) : 2 * j * (2 * j + 1);
        const long c_far = even ? j * (j - 1) * (2 * j - 1) * (2 * j - 3)
                                : j * (j - 1) * (2 * j + 1) * (2 * j - 1);

        BiPoly<ExtendedScalar> next =
            linear_E_factor(a, b, c, w_lin) * polys[static_cast<std::size_t>(j)];
        if (j >= 1 && c_brk != 0)
            next = next + bracket_symbolic(a, b, c, w_brk) *
                              polys[static_cast<std::size_t>(j - 1)] * n_(c_brk);
        if (j >= 2 && c_far != 0) {
            const ExtendedScalar coef =
                n_(8192) * pow_int(ExtendedScalar(a), 5) * n_(c_far) * n_(target - j + 2);
            next = next + polys[static_cast<std::size_t>(j - 2)] * coef;
        }
        polys.push_back(std::move(next));
    }
    return polys;
}

BiPoly<ExtendedScalar> constraint_symbolic(const Rational &a, const ExtendedScalar &b,
                                           const ExtendedScalar &c, Parity parity, long n) {
    const bool even = parity == Parity::Even;
    auto polys = energy_polynomials_symbolic(a, b, c, parity, n);
    const long w = even ? 4 * n + 3 : 4 * n + 5;
    const long cc = even ? n * (2 * n - 1) : n * (2 * n + 1);
    BiPoly<ExtendedScalar> out =
        bracket_symbolic(a, b, c, w) * polys[static_cast<std::size_t>(n)];
    if (n >= 1 && cc != 0)
        out = out + polys[static_cast<std::size_t>(n - 1)] *
                        (n_(4096) * pow_int(ExtendedScalar(a), 5) * n_(cc));
    return out;
}

EnergyPolySequence energy_polynomials(const Rational &a, const Rational &b, const Rational &c,
                                      const ExtendedScalar &e, Parity parity, long N) {
    EnergyPolySequence seq;
    seq.parity = parity;
    seq.target = N;
    seq.a = a;
    seq.b = b;
    seq.c = c;
    seq.e = e;
    for (const auto &bp :
         energy_polynomials_symbolic(a, ExtendedScalar(b), ExtendedScalar(c), parity, N))
        seq.polys.push_back(bp.eval_v(e));
    return seq;
}

ExtendedScalar constraint_residual(const Rational &a, const Rational &b, const Rational &c,
                                   const ExtendedScalar &e, Parity parity, long n,
                                   const ExtendedScalar &E) {
    BiPoly<ExtendedScalar> sym = constraint_symbolic(a, ExtendedScalar(b), ExtendedScalar(c),
                                                     parity, n);
    return sym.eval_v(e).eval(E);
}

ClosedFormState closed_form_ground(const Rational &a, const ExtendedScalar &b,
                                   const ExtendedScalar &c) {
    if (sgn(a) <= 0)
        throw std::invalid_argument("closed_form_ground: a must be positive");
    const ExtendedScalar ae(a);
    ClosedFormState s;
    s.energy = (n_(4) * ae * c - b * b) / (n_(8) * a32(a));
    s.d = degree_condition_d(a, b, c, Parity::Even, 0);
    s.e = -(n_(96) * a52(a) * b - b * b * b * b + n_(8) * ae * b * b * c -
            n_(16) * ae * ae * c * c) /
          (n_(64) * ae * ae * ae);
    return s;
}

ClosedFormState closed_form_first(const Rational &a, const ExtendedScalar &b,
                                  const ExtendedScalar &c) {
    if (sgn(a) <= 0)
        throw std::invalid_argument("closed_form_first: a must be positive");
    const ExtendedScalar ae(a);
    ClosedFormState s;
    s.energy = n_(3) * (n_(4) * ae * c - b * b) / (n_(8) * a32(a));
    s.d = degree_condition_d(a, b, c, Parity::Odd, 0);
    s.e = -(n_(160) * a52(a) * b - b * b * b * b + n_(8) * ae * b * b * c -
            n_(16) * ae * ae * c * c) /
          (n_(64) * ae * ae * ae);
    return s;
}

// ---------------------------------------------------------------------------
// solve_state
// ---------------------------------------------------------------------------

namespace {

// coefficient of Param^j of a (E, Param) polynomial, as a polynomial in E
UniPoly<ExtendedScalar> param_slice(const BiPoly<ExtendedScalar> &p, long j) {
    UniPoly<ExtendedScalar> out(Var::E);
    for (long i = 0; i <= p.deg_u(); ++i)
        out.set_coeff(static_cast<std::size_t>(i),
                      p.coeff(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
    return out;
}

// resultant of p and q with respect to Param, by fraction-free determinant of
// the Sylvester matrix over Q(sqrt(a))[E]
UniPoly<ExtendedScalar> resultant_in_param(const BiPoly<ExtendedScalar> &p,
                                           const BiPoly<ExtendedScalar> &q) {
    const long dp = p.deg_v(), dq = q.deg_v();
    if (dp < 0 || dq < 0)
        throw std::invalid_argument("resultant: zero polynomial");
    const std::size_t size = static_cast<std::size_t>(dp + dq);
    Matrix<UniPoly<ExtendedScalar>> m(size, size, UniPoly<ExtendedScalar>(Var::E));
    for (long row = 0; row < dq; ++row)
        for (long i = 0; i <= dp; ++i)
            m.at(static_cast<std::size_t>(row), static_cast<std::size_t>(row + (dp - i))) =
                param_slice(p, i);
    for (long row = 0; row < dp; ++row)
        for (long i = 0; i <= dq; ++i)
            m.at(static_cast<std::size_t>(dq + row), static_cast<std::size_t>(row + (dq - i))) =
                param_slice(q, i);
    const UniPoly<ExtendedScalar> one = UniPoly<ExtendedScalar>::constant(Var::E, n_(1));
    return determinant_bareiss(m, one);
}

// crude but safe upper bound on |roots| of an exact polynomial
Rational cauchy_bound(const UniPoly<ExtendedScalar> &p) {
    const BigDecimal lead = BigDecimal::from_extended(p.leading(), 40).abs();
    BigDecimal best = BigDecimal::from_long(0, 40);
    for (const auto &c : p.coeffs()) {
        BigDecimal m = BigDecimal::from_extended(c, 40).abs() / lead;
        if (m > best)
            best = m;
    }
    const double d = best.to_double();
    if (!std::isfinite(d))
        throw std::runtime_error("cauchy_bound: overflow");
    return Rational(2) + rational(static_cast<long>(std::ceil(d * 1.01)), 1);
}

struct CandidatePair {
    bool exact;
    std::optional<ExtendedScalar> E_exact, e_exact;
    BigDecimal E, e;
};

BigDecimal eval_bipoly(const BiPoly<ExtendedScalar> &p, const BigDecimal &E, const BigDecimal &e,
                       long digits) {
    return to_decimal(p, digits).eval_u(E).eval(e);
}

// scale of p at the point, for residual tolerance: sum |p_ij| |E|^i |e|^j
BigDecimal monomial_scale(const BiPoly<ExtendedScalar> &p, const BigDecimal &E,
                          const BigDecimal &e, long digits) {
    BigDecimal acc = BigDecimal::from_long(1, digits);
    const BigDecimal aE = E.abs(), ae = e.abs();
    for (long i = 0; i <= p.deg_u(); ++i)
        for (long j = 0; j <= p.deg_v(); ++j) {
            const ExtendedScalar &cij =
                p.coeff(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            if (cij.is_zero())
                continue;
            acc += BigDecimal::from_extended(cij, digits).abs() * aE.pow_int(i) * ae.pow_int(j);
        }
    return acc;
}

} // namespace

std::vector<QesSolution> solve_state(const Rational &a, const Rational &b, const Rational &c,
                                     Parity parity, long n, long digits) {
    if (sgn(a) <= 0)
        throw std::invalid_argument("solve_state: a must be positive");
    if (n < 0)
        throw std::invalid_argument("solve_state: n must be nonnegative");
    if (digits < 10)
        digits = 10;

    // n names the chi degree when its parity matches; otherwise it is the
    // per-parity family index
    long family;
    if (parity == Parity::Even)
        family = (n % 2 == 0) ? n / 2 : n;
    else
        family = (n % 2 == 1) ? (n - 1) / 2 : n;
    const long degree = parity == Parity::Even ? 2 * family : 2 * family + 1;

    const ExtendedScalar be(b), ce(c);
    const ExtendedScalar d = degree_condition_d(a, be, ce, parity, family);
    const auto seq = energy_polynomials_symbolic(a, be, ce, parity, family);
    const BiPoly<ExtendedScalar> &terminal = seq.back();
    const BiPoly<ExtendedScalar> constraint = constraint_symbolic(a, be, ce, parity, family);

    const long work = digits + 30;

    std::vector<CandidatePair> pairs;
    if (terminal.deg_v() == 0 && constraint.deg_u() == 0) {
        // lowest state of each parity: terminal is linear in E alone and the
        // constraint linear in e alone
        const UniPoly<ExtendedScalar> tE = param_slice(terminal, 0);
        if (tE.degree() != 1)
            throw std::logic_error("solve_state: unexpected terminal degree");
        CandidatePair p;
        p.exact = true;
        p.E_exact = -tE.coeff(0) / tE.coeff(1);
        const UniPoly<ExtendedScalar> ce_poly(
            Var::Param, {constraint.coeff(0, 0), constraint.coeff(0, 1)});
        p.e_exact = -ce_poly.coeff(0) / ce_poly.coeff(1);
        p.E = BigDecimal::from_extended(*p.E_exact, work);
        p.e = BigDecimal::from_extended(*p.e_exact, work);
        pairs.push_back(std::move(p));
    } else {
        UniPoly<ExtendedScalar> R = resultant_in_param(terminal, constraint);
        if (R.is_zero())
            throw std::runtime_error("solve_state: degenerate system (vanishing resultant)");
        if (R.degree() == 0)
            return {};
        const Rational bound = cauchy_bound(R);

        std::vector<std::pair<std::optional<ExtendedScalar>, BigDecimal>> energies;
        if (R.degree() == 1) {
            const ExtendedScalar Eex = -R.coeff(0) / R.coeff(1);
            energies.emplace_back(Eex, BigDecimal::from_extended(Eex, work));
        } else {
            for (const auto &root : real_roots(R, -bound, bound, work))
                energies.emplace_back(std::nullopt, root.value);
        }

        for (auto &[Eex, Eval] : energies) {
            // candidate e values: roots of the constraint at this energy
            UniPoly<BigDecimal> ce_at = to_decimal(constraint, work).eval_u(Eval);
            if (ce_at.is_zero())
                throw std::runtime_error("solve_state: constraint vanishes identically at root");
            if (ce_at.degree() < 1)
                continue;
            std::vector<std::pair<std::optional<ExtendedScalar>, BigDecimal>> es;
            if (Eex && constraint.deg_v() == 1) {
                const UniPoly<ExtendedScalar> lin(
                    Var::Param,
                    {param_slice(constraint, 0).eval(*Eex), param_slice(constraint, 1).eval(*Eex)});
                if (lin.degree() == 1) {
                    const ExtendedScalar eex = -lin.coeff(0) / lin.coeff(1);
                    es.emplace_back(eex, BigDecimal::from_extended(eex, work));
                }
            }
            if (es.empty()) {
                BigDecimal emax = BigDecimal::from_long(1, work);
                for (const auto &cc : ce_at.coeffs()) {
                    BigDecimal m = cc.abs() / ce_at.leading().abs();
                    if (m > emax)
                        emax = m;
                }
                emax = emax + BigDecimal::from_long(2, work);
                for (const auto &root : real_roots(ce_at, -emax, emax, digits + 20))
                    es.emplace_back(std::nullopt, root.value);
            }
            for (auto &[eex, eval] : es) {
                // accept only pairs that also kill the terminal polynomial
                const BigDecimal resid = eval_bipoly(terminal, Eval, eval, work).abs();
                const BigDecimal tol = monomial_scale(terminal, Eval, eval, work) *
                                       BigDecimal::pow10(-digits - 6, work);
                if (resid > tol)
                    continue;
                CandidatePair p;
                p.exact = Eex.has_value() && eex.has_value();
                p.E_exact = Eex;
                p.e_exact = eex;
                p.E = Eval;
                p.e = eval;
                pairs.push_back(std::move(p));
            }
        }
    }

    std::vector<QesSolution> out;
    for (CandidatePair &p : pairs) {
        QesSolution sol;
        sol.degree = degree;
        sol.parity = parity;
        sol.family_index = family;
        sol.a = a;
        sol.b = be;
        sol.c = ce;
        sol.d = d;
        sol.exact = p.exact;
        sol.energy_exact = p.E_exact;
        sol.e_exact = p.e_exact;
        sol.energy = p.E;
        sol.e_value = p.e;
        sol.digits = digits;
        sol.exponent = build_exponent_extended(a, be, ce);

        // chi per the explicit coefficient formulas
        const bool even = parity == Parity::Even;
        if (sol.exact) {
            UniPoly<ExtendedScalar> chi(Var::X);
            const ExtendedScalar denom_base = pow_int(n_(2) * ExtendedScalar::sqrt_of(a), 3);
            for (long k = 0; k <= family; ++k) {
                const ExtendedScalar Pk =
                    seq[static_cast<std::size_t>(k)].eval_v(*sol.e_exact).eval(*sol.energy_exact);
                const long fact = even ? factorial(2 * k) : factorial(2 * k + 1);
                ExtendedScalar coeff = Pk / (n_(fact) * pow_int(denom_base, k));
                if (k % 2 == 1)
                    coeff = -coeff;
                chi.set_coeff(static_cast<std::size_t>(even ? 2 * k : 2 * k + 1), coeff);
            }
            sol.chi_exact = chi;
            sol.chi = to_decimal(chi, work);
        } else {
            UniPoly<BigDecimal> chi(Var::X);
            const BigDecimal denom_base =
                (BigDecimal::from_long(2, work) * BigDecimal::from_rational(a, work).sqrt())
                    .pow_int(3);
            for (long k = 0; k <= family; ++k) {
                const BigDecimal Pk =
                    to_decimal(seq[static_cast<std::size_t>(k)], work).eval_u(sol.energy).eval(
                        sol.e_value);
                const long fact = even ? factorial(2 * k) : factorial(2 * k + 1);
                BigDecimal coeff =
                    Pk / (BigDecimal::from_long(fact, work) * denom_base.pow_int(k));
                if (k % 2 == 1)
                    coeff = -coeff;
                chi.set_coeff(static_cast<std::size_t>(even ? 2 * k : 2 * k + 1), coeff);
            }
            sol.chi = std::move(chi);
        }

        // every solution leaves with a verified residual
        ResidualReport rep = verify(sol);
        if (sol.exact) {
            if (!rep.exact_zero())
                throw std::logic_error("solve_state: exact candidate failed verification");
        } else {
            const BigDecimal lim = BigDecimal::pow10(-(digits / 2), work) *
                                   monomial_scale(terminal, sol.energy, sol.e_value, work);
            if (rep.max_abs_coeff() > lim)
                continue; // spurious pairing
        }
        out.push_back(std::move(sol));
    }

    std::sort(out.begin(), out.end(),
              [](const QesSolution &x, const QesSolution &y) { return x.energy < y.energy; });
    return out;
}

UniPoly<BigDecimal> wavefunction_chi(const QesSolution &sol) { return sol.chi; }

Wavefunction wavefunction(const QesSolution &sol, long digits) {
    if (digits <= 0)
        digits = sol.digits > 0 ? sol.digits : BigDecimal::default_digits();
    Wavefunction psi;
    psi.chi = sol.chi;
    UniPoly<ExtendedScalar> phi(Var::X);
    phi.set_coeff(6, sol.exponent.c6);
    phi.set_coeff(4, sol.exponent.c4);
    phi.set_coeff(2, sol.exponent.c2);
    psi.phi = to_decimal(phi, digits);
    return psi;
}

BigDecimal ResidualReport::max_abs_coeff() const {
    BigDecimal best = BigDecimal::from_long(0);
    if (exact) {
        for (const auto &c : exact_residual.coeffs()) {
            BigDecimal m = BigDecimal::from_extended(c, 50).abs();
            if (m > best)
                best = m;
        }
        return best;
    }
    for (const auto &c : decimal_residual.coeffs()) {
        BigDecimal m = c.abs();
        if (m > best)
            best = m;
    }
    return best;
}

ResidualReport verify_exact(const Rational &a, const ExtendedScalar &b, const ExtendedScalar &c,
                            const ExtendedScalar &d, const ExtendedScalar &e,
                            const ExtendedScalar &E, const UniPoly<ExtendedScalar> &chi) {
    const ReducedOde ode = reduce_extended(a, b, c, d, e);
    const UniPoly<ExtendedScalar> s0_at_E = ode.s0.eval_v(E);
    ResidualReport rep;
    rep.exact = true;
    rep.exact_residual =
        -chi.derivative().derivative() + ode.lambda0 * chi.derivative() + s0_at_E * chi;
    return rep;
}

namespace {

ResidualReport verify_decimal_parts(const Rational &a, const ExtendedScalar &b,
                                    const ExtendedScalar &c, const ExtendedScalar &d,
                                    const BigDecimal &e, const BigDecimal &E,
                                    const UniPoly<BigDecimal> &chi, long digits) {
    const ReducedOde base = reduce_extended(a, b, c, d, ExtendedScalar(0));
    UniPoly<BigDecimal> lambda0 = to_decimal(base.lambda0, digits);
    UniPoly<BigDecimal> s0 = to_decimal(base.s0.eval_v(ExtendedScalar(0)), digits);
    // the e and E dependences of s0 are exactly +e x^2 and -E
    s0.set_coeff(2, s0.coeff(2) + e);
    s0.set_coeff(0, s0.coeff(0) - E);
    ResidualReport rep;
    rep.exact = false;
    rep.decimal_residual = -chi.derivative().derivative() + lambda0 * chi.derivative() + s0 * chi;
    return rep;
}

} // namespace

ResidualReport verify_decimal(const Potential &V, const BigDecimal &E,
                              const UniPoly<BigDecimal> &chi, long digits) {
    if (digits <= 0)
        digits = BigDecimal::default_digits();
    return verify_decimal_parts(V.a, ExtendedScalar(V.b), ExtendedScalar(V.c),
                                ExtendedScalar(V.d), BigDecimal::from_rational(V.e, digits), E,
                                chi, digits);
}

ResidualReport verify(const QesSolution &sol) {
    if (sol.exact)
        return verify_exact(sol.a, sol.b, sol.c, sol.d, *sol.e_exact, *sol.energy_exact,
                            sol.chi_exact ? *sol.chi_exact : UniPoly<ExtendedScalar>(Var::X));
    const long digits = sol.digits + 30;
    return verify_decimal_parts(sol.a, sol.b, sol.c, sol.d, sol.e_value, sol.energy, sol.chi,
                                digits);
}

} // namespace decatic
