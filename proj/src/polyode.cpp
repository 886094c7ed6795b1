#include "decatic/polyode.hpp"

namespace decatic {

namespace {

ExtendedScalar n_(long v) { return ExtendedScalar(v); }

} // namespace

void OdeCoefficients::validate() const {
    if (a6[0].is_zero() && a5[0].is_zero())
        throw std::invalid_argument("OdeCoefficients: a6[0] and a5[0] cannot both vanish");
    bool any = false;
    for (const auto &c : a6)
        any = any || !c.is_zero();
    if (!any)
        throw std::invalid_argument("OdeCoefficients: all a6[k] vanish");
}

UniPoly<ExtendedScalar> OdeCoefficients::a6_poly() const {
    UniPoly<ExtendedScalar> p(Var::X);
    for (std::size_t k = 0; k < a6.size(); ++k)
        p.set_coeff(6 - k, a6[k]);
    return p;
}

UniPoly<ExtendedScalar> OdeCoefficients::a5_poly() const {
    UniPoly<ExtendedScalar> p(Var::X);
    for (std::size_t k = 0; k < a5.size(); ++k)
        p.set_coeff(5 - k, a5[k]);
    return p;
}

UniPoly<ExtendedScalar> OdeCoefficients::tau4_poly() const {
    UniPoly<ExtendedScalar> p(Var::X);
    for (std::size_t k = 0; k < tau4.size(); ++k)
        p.set_coeff(4 - k, tau4[k]);
    return p;
}

BandCoefficients band_coefficients(const OdeCoefficients &ode, long n) {
    if (n < 0)
        throw std::invalid_argument("band_coefficients: negative index");
    BandCoefficients b;
    b.n = n;
    b.alpha = n_(n) * n_(n - 1) * ode.a6[4] + n_(n) * ode.a5[4] - ode.tau4[4];
    b.beta = n_(n) * n_(n + 1) * ode.a6[5] + n_(n + 1) * ode.a5[5];
    b.gamma = n_(n + 2) * n_(n + 1) * ode.a6[6];
    if (n >= 1)
        b.delta = n_(n - 1) * n_(n - 2) * ode.a6[3] + n_(n - 1) * ode.a5[3] - ode.tau4[3];
    if (n >= 2)
        b.eta = n_(n - 2) * n_(n - 3) * ode.a6[2] + n_(n - 2) * ode.a5[2] - ode.tau4[2];
    if (n >= 3)
        b.mu = n_(n - 3) * n_(n - 4) * ode.a6[1] + n_(n - 3) * ode.a5[1] - ode.tau4[1];
    if (n >= 4)
        b.zeta = n_(n - 4) * n_(n - 5) * ode.a6[0] + n_(n - 4) * ode.a5[0] - ode.tau4[0];
    return b;
}

UniPoly<ExtendedScalar> ode_residual(const OdeCoefficients &ode,
                                     const UniPoly<ExtendedScalar> &y) {
    return ode.a6_poly() * y.derivative().derivative() + ode.a5_poly() * y.derivative() -
           ode.tau4_poly() * y;
}

std::vector<long> necessary_degrees(const OdeCoefficients &ode, long nmax) {
    if (nmax < 0)
        throw std::invalid_argument("necessary_degrees: nmax must be nonnegative");
    ode.validate();
    std::vector<long> out;
    for (long n = 0; n <= nmax; ++n) {
        if (ode.tau4[0] == n_(n) * n_(n - 1) * ode.a6[0] + n_(n) * ode.a5[0])
            out.push_back(n);
        if (out.size() == 2)
            break; // a quadratic in n admits at most two roots
    }
    return out;
}

Matrix<ExtendedScalar> build_system(const OdeCoefficients &ode, long n) {
    if (n < 0)
        throw std::invalid_argument("build_system: negative degree");
    const std::size_t rows = static_cast<std::size_t>(n) + 5;
    const std::size_t cols = static_cast<std::size_t>(n) + 1;
    Matrix<ExtendedScalar> m(rows, cols);
    for (std::size_t row = 0; row < rows; ++row) {
        const long mm = static_cast<long>(row);
        const BandCoefficients b = band_coefficients(ode, mm);
        auto put = [&](long col, const ExtendedScalar &v) {
            if (col >= 0 && col <= n)
                m.at(row, static_cast<std::size_t>(col)) = v;
        };
        put(mm + 2, b.gamma);
        put(mm + 1, b.beta);
        put(mm, b.alpha);
        if (b.delta)
            put(mm - 1, *b.delta);
        if (b.eta)
            put(mm - 2, *b.eta);
        if (b.mu)
            put(mm - 3, *b.mu);
        if (b.zeta)
            put(mm - 4, *b.zeta);
    }
    return m;
}

std::vector<PolynomialSolution> polynomial_solutions(const OdeCoefficients &ode, long n) {
    ode.validate();
    auto admissible = necessary_degrees(ode, n);
    if (std::find(admissible.begin(), admissible.end(), n) == admissible.end())
        throw std::invalid_argument("polynomial_solutions: degree " + std::to_string(n) +
                                    " fails the necessary condition");
    std::vector<PolynomialSolution> out;
    for (auto &v : exact_nullspace(build_system(ode, n))) {
        if (v[static_cast<std::size_t>(n)].is_zero())
            continue;
        // normalize c0 = 1 when possible, else first nonzero coefficient = 1
        std::size_t first = 0;
        while (first < v.size() && v[first].is_zero())
            ++first;
        const ExtendedScalar scale = v[first].inverse();
        for (auto &c : v)
            c *= scale;
        PolynomialSolution sol;
        sol.degree = n;
        sol.y = UniPoly<ExtendedScalar>(Var::X, std::move(v));
        if (!ode_residual(ode, sol.y).is_zero())
            throw std::logic_error("polynomial_solutions: candidate failed residual check");
        out.push_back(std::move(sol));
    }
    return out;
}

std::array<ExtendedScalar, 4> degree1_determinants(const OdeCoefficients &ode) {
    const auto &a5 = ode.a5;
    const auto &t = ode.tau4;
    auto det2 = [](const ExtendedScalar &a, const ExtendedScalar &b, const ExtendedScalar &c,
                   const ExtendedScalar &d) { return a * d - b * c; };
    return {det2(-t[4], a5[5], -t[3], a5[4] - t[4]),
            det2(-t[4], a5[5], -t[2], a5[3] - t[3]),
            det2(-t[4], a5[5], -t[1], a5[2] - t[2]),
            det2(-t[4], a5[5], -t[0], a5[1] - t[1])};
}

std::array<ExtendedScalar, 4> degree2_determinants(const OdeCoefficients &ode) {
    const auto &a6 = ode.a6;
    const auto &a5 = ode.a5;
    const auto &t = ode.tau4;
    const ExtendedScalar two = n_(2);
    const std::array<ExtendedScalar, 3> row0{-t[4], a5[5], two * a6[6]};
    const std::array<ExtendedScalar, 3> row1{-t[3], a5[4] - t[4], two * a6[5] + two * a5[5]};
    auto det3 = [&](const std::array<ExtendedScalar, 3> &row2) {
        Matrix<ExtendedScalar> m(3, 3);
        for (std::size_t j = 0; j < 3; ++j) {
            m.at(0, j) = row0[j];
            m.at(1, j) = row1[j];
            m.at(2, j) = row2[j];
        }
        return determinant(m);
    };
    return {det3({-t[2], a5[3] - t[3], two * a6[4] + two * a5[4] - t[4]}),
            det3({-t[1], a5[2] - t[2], two * a6[3] + two * a5[3] - t[3]}),
            det3({-t[0], a5[1] - t[1], two * a6[2] + two * a5[2] - t[2]}),
            det3({ExtendedScalar(0), a5[0] - t[0], two * a6[1] + two * a5[1] - t[1]})};
}

PolynomialSolution low_degree_closed_form(const OdeCoefficients &ode, long n) {
    ode.validate();
    PolynomialSolution sol;
    sol.degree = n;
    const auto &a6 = ode.a6;
    const auto &a5 = ode.a5;
    const auto &t = ode.tau4;
    switch (n) {
    case 0: {
        for (const auto &tk : t)
            if (!tk.is_zero())
                throw std::invalid_argument("low_degree_closed_form: tau conditions fail for y0");
        sol.y = UniPoly<ExtendedScalar>::constant(Var::X, ExtendedScalar(1));
        return sol;
    }
    case 1: {
        if (t[0] != a5[0])
            throw std::invalid_argument("low_degree_closed_form: tau4[0] != a5[0] for y1");
        for (const auto &d : degree1_determinants(ode))
            if (!d.is_zero())
                throw std::invalid_argument("low_degree_closed_form: 2x2 determinants fail for y1");
        if (a5[5].is_zero())
            throw std::domain_error("low_degree_closed_form: a5[5] vanishes, y1 degenerate");
        sol.y = UniPoly<ExtendedScalar>(Var::X, {ExtendedScalar(1), t[4] / a5[5]});
        return sol;
    }
    case 2: {
        if (t[0] != n_(2) * a6[0] + n_(2) * a5[0])
            throw std::invalid_argument(
                "low_degree_closed_form: tau4[0] != 2 a6[0] + 2 a5[0] for y2");
        for (const auto &d : degree2_determinants(ode))
            if (!d.is_zero())
                throw std::invalid_argument("low_degree_closed_form: 3x3 determinants fail for y2");
        const ExtendedScalar denom = a5[5] * (a5[5] + a6[5]) + a6[6] * (-a5[4] + t[4]);
        if (denom.is_zero())
            throw std::domain_error("low_degree_closed_form: y2 denominator vanishes (degenerate)");
        const ExtendedScalar c1 = (-a6[6] * t[3] + (a5[5] + a6[5]) * t[4]) / denom;
        const ExtendedScalar c2 =
            (a5[5] * t[3] - a5[4] * t[4] + t[4] * t[4]) / (n_(2) * denom);
        sol.y = UniPoly<ExtendedScalar>(Var::X, {ExtendedScalar(1), c1, c2});
        return sol;
    }
    default:
        throw std::invalid_argument("low_degree_closed_form: only n in {0,1,2} have closed forms");
    }
}

} // namespace decatic
