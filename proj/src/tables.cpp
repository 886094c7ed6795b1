#include "decatic/tables.hpp"

namespace decatic {

namespace {

ExtendedScalar n_(long v) { return ExtendedScalar(v); }

struct RowCoeffs {
    Rational a;
    ExtendedScalar b, c;
};

RowCoeffs row_coefficients(const TableRowSpec &spec) {
    const Rational mu = spec.mu, k = spec.k;
    const ExtendedScalar mue(mu), ke(k);
    const ExtendedScalar sgn = n_(spec.sign);
    RowCoeffs rc;
    switch (spec.row) {
    case 1: // a=mu, b=+/-mu, c=mu
        rc.a = mu;
        rc.b = sgn * mue;
        rc.c = mue;
        return rc;
    case 2: // a=mu, b=+/-mu, c=-mu
        rc.a = mu;
        rc.b = sgn * mue;
        rc.c = -mue;
        return rc;
    case 3: // a=k mu, b=mu, c=mu
        rc.a = k * mu;
        rc.b = mue;
        rc.c = mue;
        return rc;
    case 4: // a=mu, b=k mu, c=mu
        rc.a = mu;
        rc.b = ke * mue;
        rc.c = mue;
        return rc;
    case 5: // a=mu, b=mu, c=k mu
        rc.a = mu;
        rc.b = mue;
        rc.c = ke * mue;
        return rc;
    case 6: { // a=k mu, b=mu, d=mu; c follows from the d=mu degree condition:
              // table 1: mu/(4k) + 2k(mu + 5 sqrt(k mu))
              // table 2: (56 (k mu)^{5/2} + mu^3 (1+8k^2)) / (4 k mu^2)
        rc.a = k * mu;
        rc.b = mue;
        const ExtendedScalar skmu = ExtendedScalar::sqrt_of(k * mu);
        if (spec.table == 1) {
            rc.c = ExtendedScalar(mu / (4 * k)) + n_(2) * ke * (mue + n_(5) * skmu);
        } else {
            const ExtendedScalar akmu(k * mu);
            rc.c = (n_(56) * akmu * akmu * skmu +
                    pow_int(mue, 3) * (n_(1) + n_(8) * ke * ke)) /
                   (n_(4) * ke * mue * mue);
        }
        return rc;
    }
    case 7: { // a=mu, b=k mu, c=(sqrt(mu)/(4k)) (40 + sqrt(mu)(8+k^3)) [table 1]
              //                c=(sqrt(mu)/(4k)) (56 + sqrt(mu)(k^3+8)) [table 2]
        rc.a = mu;
        rc.b = ke * mue;
        const ExtendedScalar smu = ExtendedScalar::sqrt_of(mu);
        const long lead = spec.table == 1 ? 40 : 56;
        rc.c = smu / (n_(4) * ke) * (n_(lead) + smu * (n_(8) + pow_int(ke, 3)));
        return rc;
    }
    case 8: { // a=mu, b=mu, c=(sqrt(mu)/4)(40 + sqrt(mu)(1+8k)) [table 1]
              //              c=(1/4)(56 sqrt(mu) + mu(1+8k))    [table 2]
        rc.a = mu;
        rc.b = mue;
        const ExtendedScalar smu = ExtendedScalar::sqrt_of(mu);
        const long lead = spec.table == 1 ? 40 : 56;
        rc.c = smu / n_(4) * (n_(lead) + smu * (n_(1) + n_(8) * ke));
        return rc;
    }
    default:
        throw std::invalid_argument("table_row: unknown row " + std::to_string(spec.row));
    }
}

} // namespace

TableRow table_row(const TableRowSpec &spec) {
    if (spec.table != 1 && spec.table != 2)
        throw std::invalid_argument("table_row: table must be 1 or 2");
    if (sgn(spec.mu) <= 0 || sgn(spec.k) <= 0)
        throw std::invalid_argument("table_row: mu and k must be positive");
    if (spec.sign != 1 && spec.sign != -1)
        throw std::invalid_argument("table_row: sign must be +1 or -1");

    const RowCoeffs rc = row_coefficients(spec);
    const ClosedFormState state = spec.table == 1 ? closed_form_ground(rc.a, rc.b, rc.c)
                                                  : closed_form_first(rc.a, rc.b, rc.c);
    TableRow out;
    out.spec = spec;
    out.a = rc.a;
    out.b = rc.b;
    out.c = rc.c;
    out.d = state.d;
    out.e = state.e;
    out.energy = state.energy;

    QesSolution &sol = out.solution;
    sol.parity = spec.table == 1 ? Parity::Even : Parity::Odd;
    sol.degree = spec.table == 1 ? 0 : 1;
    sol.family_index = 0;
    sol.a = rc.a;
    sol.b = rc.b;
    sol.c = rc.c;
    sol.d = state.d;
    sol.exact = true;
    sol.energy_exact = state.energy;
    sol.e_exact = state.e;
    sol.digits = 50;
    sol.energy = BigDecimal::from_extended(state.energy, 50);
    sol.e_value = BigDecimal::from_extended(state.e, 50);
    UniPoly<ExtendedScalar> chi =
        spec.table == 1 ? UniPoly<ExtendedScalar>::constant(Var::X, n_(1))
                        : UniPoly<ExtendedScalar>::monomial(Var::X, n_(1), 1);
    sol.chi_exact = chi;
    sol.chi = to_decimal(chi, 50);
    sol.exponent = build_exponent_extended(rc.a, rc.b, rc.c);

    ResidualReport rep = verify_exact(rc.a, rc.b, rc.c, state.d, state.e, state.energy, chi);
    if (!rep.exact_zero())
        throw std::logic_error("table_row: generated row failed exact verification");
    return out;
}

const std::array<Table5Block, 4> &table5_blocks() {
    static const std::array<Table5Block, 4> blocks = {
        Table5Block{"a=0.04 b=0.877 c=5.5 d=-7.5 e=2",
                    Potential(rational(1, 25), rational(877, 1000), rational(11, 2),
                              rational(-15, 2), 2),
                    {"1.342322779564646216", "5.136482243202476766", "11.304205821188349432",
                     "19.577677092617956963", "29.438055052333889749", "40.723083272298272621"}},
        Table5Block{"a=0.04 b=0.877 c=5.5 d=-7.5 e=-2",
                    Potential(rational(1, 25), rational(877, 1000), rational(11, 2),
                              rational(-15, 2), -2),
                    {"0.135429448914739200", "2.708255201038304023", "8.719471783294745896",
                     "16.684057789758348655", "26.234813143437435201", "37.249467272037347758"}},
        Table5Block{"a=0.01 b=0.1 c=1.0 d=3.250 e=12.5625",
                    Potential(rational(1, 100), rational(1, 10), 1, rational(13, 4),
                              rational(201, 16)),
                    {"3.750000000000000000", "11.653048680350115469", "20.358948672177131878",
                     "29.850701419298223478", "40.098623827649000672", "51.071414767832192856"}},
        Table5Block{"a=0.01 b=0.1 c=1.0 d=3.050 e=11.5625",
                    Potential(rational(1, 100), rational(1, 10), 1, rational(61, 20),
                              rational(185, 16)),
                    {"3.611850704712528538", "11.250000000000000000", "19.713587721031462373",
                     "28.983552585573622185", "39.026595688356661175", "49.808260402594522700"}},
    };
    return blocks;
}

} // namespace decatic
