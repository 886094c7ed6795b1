#pragma once

#include "decatic/aim.hpp"
#include "decatic/polyode.hpp"
#include "decatic/spectra.hpp"

#include <json.hpp>

#include <string>

namespace decatic {

using Json = nlohmann::ordered_json;

// scalars: rationals as "p/q" strings, extended scalars as {"p","q","a"}
// objects, decimals as decimal strings
Json to_json(const Rational &q);
Json to_json(const ExtendedScalar &v);
Json to_json(const BigDecimal &v, long sig_digits = 0);

Rational rational_from_json(const Json &j);
ExtendedScalar extended_from_json(const Json &j);

Json to_json(const Potential &V);
Potential potential_from_json(const Json &j);

/// {state, parity, E, d, e, chi_coefficients, exponent{c6,c4,c2}}
Json to_json(const QesSolution &sol);

/// {a6: [...], a5: [...], tau4: [...]} with scalar-string or object entries
Json to_json(const OdeCoefficients &ode);
OdeCoefficients ode_from_json(const Json &j);

/// {potential, x0, iterations_used, eigenvalues: [{value, digits_converged,
///  iterations, converged}], certificates}
Json to_json(const Potential &V, const AimConfig &cfg, const AimResult &result,
             const std::vector<Json> &certificates = {});

} // namespace decatic
