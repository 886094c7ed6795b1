#pragma once

#include "decatic/spectra.hpp"

#include <array>
#include <string>

namespace decatic {

/// Row selector for the two exact-family tables: table 1 lists ground-state
/// families, table 2 first-excited families; rows 1..8. mu and k are
/// arbitrary positive rationals; rows 1 and 2 take a sign for b = +/- mu.
struct TableRowSpec {
    int table = 1;
    int row = 1;
    Rational mu = 1;
    Rational k = 1;
    int sign = +1;
};

/// An instantiated row: the potential coefficients (c, d, e may live in
/// Q(sqrt(a))) and the exact eigenvalue, packaged with the verified state.
struct TableRow {
    TableRowSpec spec;
    Rational a;
    ExtendedScalar b, c, d, e;
    ExtendedScalar energy;
    QesSolution solution; // chi = 1 (table 1) or x (table 2), verified
};

/// Substitutes (mu, k, sign) into the row's coefficient templates and
/// derives (E, d, e) from the exact lowest-state closed forms; the result is
/// verified to satisfy the Schroedinger equation exactly before returning.
TableRow table_row(const TableRowSpec &spec);

/// Reference data for the AIM benchmark table: four decatic potentials with
/// 18-21 digit reference eigenvalues.
struct Table5Block {
    const char *label;
    Potential potential;
    std::array<const char *, 6> reference;
};

const std::array<Table5Block, 4> &table5_blocks();

} // namespace decatic
