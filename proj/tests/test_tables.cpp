#include <doctest.h>

#include "decatic/tables.hpp"

using namespace decatic;

namespace {

ExtendedScalar q(long num, long den = 1) { return ExtendedScalar(rational(num, den)); }

ExtendedScalar smu(const Rational &mu) { return ExtendedScalar::sqrt_of(mu); }

} // namespace

TEST_CASE("table 1 row 1 at mu=1, sign +") {
    TableRow r = table_row({1, 1, 1, 1, +1});
    CHECK(r.a == Rational(1));
    CHECK(r.b == q(1));
    CHECK(r.c == q(1));
    CHECK(r.d == q(-37, 8));  // (3 - 40)/8
    CHECK(r.e == q(-87, 64)); // 3(3 - 32)/64
    CHECK(r.energy == q(3, 8));
}

TEST_CASE("table 2 row 1 at mu=4: E1 = 9 sqrt(mu)/8 = 9/4") {
    TableRow r = table_row({2, 1, 4, 1, +1});
    CHECK(r.energy == q(9, 4));
    CHECK(r.d == q(3 * 4 - 56 * 2, 8));       // (3 mu - 56 sqrt(mu))/8
    CHECK(r.e == q(9 * 4 - 160 * 2, 64));     // (9 mu - 160 sqrt(mu))/64
}

TEST_CASE("table 1 row 5 at k=1 degenerates to row 1") {
    TableRow r5 = table_row({1, 5, 1, 1, +1});
    TableRow r1 = table_row({1, 1, 1, 1, +1});
    CHECK(r5.energy == r1.energy);
    CHECK(r5.energy == q(3, 8));
}

TEST_CASE("displayed eigenvalue formulas hold at irrational sqrt points") {
    const Rational mu = 2, k = 3;
    SUBCASE("table 1 row 3: E0 = (4k-1) sqrt(k mu) / (8 k^2)") {
        TableRow r = table_row({1, 3, mu, k, +1});
        CHECK(r.energy == q(4 * 3 - 1) * ExtendedScalar::sqrt_of(k * mu) / q(8 * 9));
    }
    SUBCASE("table 1 row 4: E0 = -(k^2-4) sqrt(mu) / 8") {
        TableRow r = table_row({1, 4, mu, k, +1});
        CHECK(r.energy == q(-(9 - 4)) * smu(mu) / q(8));
    }
    SUBCASE("table 1 row 6: E0 = sqrt(k mu) + 5k") {
        TableRow r = table_row({1, 6, mu, k, +1});
        CHECK(r.energy == ExtendedScalar::sqrt_of(k * mu) + q(15));
        CHECK(r.d == q(1) * ExtendedScalar(mu)); // d = mu by construction
    }
    SUBCASE("table 1 row 7: E0 = (sqrt(mu)+5)/k and d = mu") {
        TableRow r = table_row({1, 7, mu, k, +1});
        CHECK(r.energy == (smu(mu) + q(5)) / q(3));
        CHECK(r.d == ExtendedScalar(mu));
    }
    SUBCASE("table 1 row 8: E0 = 5 + k sqrt(mu), d = k mu") {
        TableRow r = table_row({1, 8, mu, k, +1});
        CHECK(r.energy == q(5) + q(3) * smu(mu));
        CHECK(r.d == ExtendedScalar(k * mu));
    }
    SUBCASE("table 2 row 3: E1 = 3(4k-1) sqrt(k mu) / (8k^2)") {
        TableRow r = table_row({2, 3, mu, k, +1});
        CHECK(r.energy == q(3 * 11) * ExtendedScalar::sqrt_of(k * mu) / q(72));
    }
    SUBCASE("table 2 row 6: E1 = 3 sqrt(k mu) + 21 k, d = mu") {
        TableRow r = table_row({2, 6, mu, k, +1});
        CHECK(r.energy == q(3) * ExtendedScalar::sqrt_of(k * mu) + q(63));
        CHECK(r.d == ExtendedScalar(mu));
    }
    SUBCASE("table 2 row 7: E1 = 3(sqrt(mu)+7)/k, d = mu") {
        TableRow r = table_row({2, 7, mu, k, +1});
        CHECK(r.energy == q(3) * (smu(mu) + q(7)) / q(3));
        CHECK(r.d == ExtendedScalar(mu));
    }
    SUBCASE("table 2 row 8: E1 = 3(7 + k sqrt(mu)), d = k mu") {
        TableRow r = table_row({2, 8, mu, k, +1});
        CHECK(r.energy == q(3) * (q(7) + q(3) * smu(mu)));
        CHECK(r.d == ExtendedScalar(k * mu));
    }
}

TEST_CASE("minus-sign rows") {
    const Rational mu = 2;
    TableRow r = table_row({1, 2, mu, 1, -1});
    CHECK(r.b == -ExtendedScalar(mu));
    CHECK(r.energy == q(-5) * smu(mu) / q(8));
    // d = +(5/8)(mu - 8 sqrt(mu)) for the minus branch
    CHECK(r.d == q(5, 8) * (ExtendedScalar(mu) - q(8) * smu(mu)));
}

TEST_CASE("every row verifies exactly for mu in {1,4}, k in {1,2}") {
    for (int table : {1, 2}) {
        for (int row = 1; row <= 8; ++row) {
            for (long mu : {1L, 4L}) {
                for (long k : {1L, 2L}) {
                    std::vector<int> signs = (row <= 2) ? std::vector<int>{+1, -1}
                                                        : std::vector<int>{+1};
                    for (int sign : signs) {
                        CAPTURE(table);
                        CAPTURE(row);
                        CAPTURE(mu);
                        CAPTURE(k);
                        TableRowSpec spec{table, row, Rational(mu), Rational(k), sign};
                        TableRow r = table_row(spec); // throws if verification fails
                        CHECK(verify(r.solution).exact_zero());
                    }
                }
            }
        }
    }
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(table_row({3, 1, 1, 1, +1}), std::invalid_argument);
    CHECK_THROWS_AS(table_row({1, 9, 1, 1, +1}), std::invalid_argument);
    CHECK_THROWS_AS(table_row({1, 1, -1, 1, +1}), std::invalid_argument);
    CHECK_THROWS_AS(table_row({1, 1, 1, 0, +1}), std::invalid_argument);
}

TEST_CASE("table 5 reference blocks") {
    const auto &blocks = table5_blocks();
    REQUIRE(blocks.size() == 4);
    CHECK(blocks[0].potential.a == rational(1, 25));
    CHECK(blocks[2].potential.e == rational(201, 16));
    // the two QES blocks match the exact closed forms
    ClosedFormState g = closed_form_ground(rational(1, 100), ExtendedScalar(rational(1, 10)),
                                           ExtendedScalar(1));
    CHECK(ExtendedScalar(blocks[2].potential.d) == g.d);
    CHECK(ExtendedScalar(blocks[2].potential.e) == g.e);
    CHECK(BigDecimal::from_string(blocks[2].reference[0]).str(10) ==
          BigDecimal::from_extended(g.energy, 30).str(10));
    ClosedFormState f = closed_form_first(rational(1, 100), ExtendedScalar(rational(1, 10)),
                                          ExtendedScalar(1));
    CHECK(ExtendedScalar(blocks[3].potential.d) == f.d);
    CHECK(ExtendedScalar(blocks[3].potential.e) == f.e);
}
