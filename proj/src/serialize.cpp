#include "decatic/serialize.hpp"

namespace decatic {

Json to_json(const Rational &q) { return to_string(q); }

Json to_json(const ExtendedScalar &v) {
    Json j;
    j["p"] = to_string(v.p());
    j["q"] = to_string(v.q());
    j["a"] = to_string(v.radicand());
    return j;
}

Json to_json(const BigDecimal &v, long sig_digits) { return v.str(sig_digits); }

Rational rational_from_json(const Json &j) {
    if (!j.is_string())
        throw std::invalid_argument("expected a rational string");
    return parse_rational(j.get<std::string>());
}

ExtendedScalar extended_from_json(const Json &j) {
    if (j.is_string())
        return ExtendedScalar(parse_rational(j.get<std::string>()));
    if (j.is_object()) {
        const Rational p = parse_rational(j.value("p", "0"));
        const Rational q = parse_rational(j.value("q", "0"));
        const Rational a = parse_rational(j.value("a", "0"));
        if (sgn(q) == 0)
            return ExtendedScalar(p);
        return ExtendedScalar(p, q, a);
    }
    throw std::invalid_argument("expected a scalar string or {p,q,a} object");
}

Json to_json(const Potential &V) {
    Json j;
    j["a"] = to_string(V.a);
    j["b"] = to_string(V.b);
    j["c"] = to_string(V.c);
    j["d"] = to_string(V.d);
    j["e"] = to_string(V.e);
    return j;
}

Potential potential_from_json(const Json &j) {
    return Potential(rational_from_json(j.at("a")), rational_from_json(j.at("b")),
                     rational_from_json(j.at("c")), rational_from_json(j.at("d")),
                     rational_from_json(j.at("e")));
}

Json to_json(const QesSolution &sol) {
    Json j;
    j["state"] = sol.degree;
    j["parity"] = parity_name(sol.parity);
    j["E"] = sol.energy.str(sol.digits);
    j["d"] = to_json(sol.d);
    j["e"] = sol.e_exact ? to_json(*sol.e_exact) : Json(sol.e_value.str(sol.digits));
    j["exact"] = sol.exact;
    if (sol.energy_exact)
        j["E_exact"] = to_json(*sol.energy_exact);
    Json chi = Json::array();
    for (long i = 0; i <= sol.chi.degree(); ++i)
        chi.push_back(sol.chi.coeff(static_cast<std::size_t>(i)).str(sol.digits));
    j["chi_coefficients"] = chi;
    j["exponent"] = {{"c6", to_json(sol.exponent.c6)},
                     {"c4", to_json(sol.exponent.c4)},
                     {"c2", to_json(sol.exponent.c2)}};
    return j;
}

namespace {

Json scalar_array(const ExtendedScalar *data, std::size_t count) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < count; ++i) {
        if (data[i].is_rational())
            arr.push_back(to_string(data[i].to_rational()));
        else
            arr.push_back(to_json(data[i]));
    }
    return arr;
}

} // namespace

Json to_json(const OdeCoefficients &ode) {
    Json j;
    j["a6"] = scalar_array(ode.a6.data(), ode.a6.size());
    j["a5"] = scalar_array(ode.a5.data(), ode.a5.size());
    j["tau4"] = scalar_array(ode.tau4.data(), ode.tau4.size());
    return j;
}

OdeCoefficients ode_from_json(const Json &j) {
    OdeCoefficients ode;
    const Json &a6 = j.at("a6"), &a5 = j.at("a5"), &tau4 = j.at("tau4");
    if (!a6.is_array() || a6.size() != 7 || !a5.is_array() || a5.size() != 6 ||
        !tau4.is_array() || tau4.size() != 5)
        throw std::invalid_argument(
            "OdeCoefficients JSON needs a6[7], a5[6], tau4[5] arrays");
    for (std::size_t i = 0; i < 7; ++i)
        ode.a6[i] = extended_from_json(a6[i]);
    for (std::size_t i = 0; i < 6; ++i)
        ode.a5[i] = extended_from_json(a5[i]);
    for (std::size_t i = 0; i < 5; ++i)
        ode.tau4[i] = extended_from_json(tau4[i]);
    return ode;
}

Json to_json(const Potential &V, const AimConfig &cfg, const AimResult &result,
             const std::vector<Json> &certificates) {
    Json j;
    j["potential"] = to_json(V);
    j["x0"] = to_string(cfg.x0);
    j["iterations_used"] = result.iterations_used;
    Json evs = Json::array();
    for (const AimEigenvalue &ev : result.eigenvalues) {
        Json e;
        e["value"] = ev.value.str(cfg.digits + 4);
        e["digits_converged"] = ev.trace.digits_agreed;
        e["iterations"] = ev.trace.iterations;
        e["converged"] = ev.trace.converged;
        evs.push_back(std::move(e));
    }
    j["eigenvalues"] = evs;
    j["all_converged"] = result.all_converged;
    j["certificates"] = certificates;
    return j;
}

} // namespace decatic
