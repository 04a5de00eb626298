#include <doctest.h>

#include "cy8/qseries.hpp"

using namespace cy8;

TEST_CASE("eta expansion: pentagonal numbers and small scales") {
    QSeries e1 = eta_expansion(1, 5);
    // 1 - q - q^2 + q^5
    CHECK(e1[0] == 1);
    CHECK(e1[1] == -1);
    CHECK(e1[2] == -1);
    CHECK(e1[3] == 0);
    CHECK(e1[4] == 0);
    CHECK(e1[5] == 1);

    QSeries e2 = eta_expansion(2, 3);
    CHECK(e2[0] == 1);
    CHECK(e2[1] == 0);
    CHECK(e2[2] == -1);
    CHECK(e2[3] == 0);

    QSeries e4 = eta_expansion(4, 3);
    for (unsigned i = 1; i <= 3; ++i) CHECK(e4[i] == 0);
    CHECK(e4[0] == 1);
}

TEST_CASE("pentagonal signs in {0,+-1} through order 200") {
    QSeries e = eta_expansion(1, 200);
    for (unsigned n = 0; n <= 200; ++n) CHECK((e[n] == 0 || e[n] == 1 || e[n] == -1));
}

TEST_CASE("level-8 newform coefficients") {
    QSeries f = newform_level8(100);
    CHECK(f[0] == 0);
    CHECK(f[1] == 1);
    CHECK(f[2] == 0);
    CHECK(f[3] == -4);
    CHECK(f[5] == -2);
    CHECK(f[7] == 24);
    CHECK(f[11] == -44);
    CHECK(f[13] == 22);
    CHECK(f[17] == 50);
    CHECK(f[19] == 44);
    CHECK(f[23] == -56);
    CHECK(f[29] == 198);
    CHECK(f[73] == 154);
}

TEST_CASE("discriminant-form opening coefficients") {
    QSeries d = eta_product({{1, 24}}, 10);
    CHECK(d[1] == 1);
    CHECK(d[2] == -24);
    CHECK(d[3] == 252);
    CHECK(d[4] == -1472);
}

TEST_CASE("negative exponents invert the series") {
    // eta(t)^24 * eta(t)^-24 = q * q^-1 ... the product part is exactly 1
    auto e = eta_product_expansion({{1, 24}, {1, -24}}, 30);
    CHECK(e.leading_exponent == 0);
    for (unsigned i = 1; i <= 30; ++i) CHECK(e.series[i] == 0);
    CHECK(e.series[0] == 1);
}

TEST_CASE("non-integral or negative leading exponents are rejected") {
    CHECK_THROWS(eta_product({{1, 1}}, 10));            // 1/24
    CHECK_THROWS(eta_product({{1, -24}}, 10));          // q^{-1} pole
    CHECK_NOTHROW(eta_product({{2, 4}, {4, 4}}, 10));   // 24/24 = 1
}

TEST_CASE("hecke structure of the level-8 form") {
    QSeries f = newform_level8(200);
    auto viol = hecke_check(f, 4, {2});
    CHECK(viol.empty());
    // a_15 = a_3 a_5, a_9 = a_3^2 - 27
    CHECK(f[15] == f[3] * f[5]);
    CHECK(f[15] == 8);
    CHECK(f[9] == -11);
}

TEST_CASE("hecke check flags a corrupted series") {
    QSeries f = newform_level8(50);
    f.at(15) += 1;
    auto viol = hecke_check(f, 4, {2});
    CHECK(!viol.empty());
}

TEST_CASE("twists") {
    QSeries f = newform_level8(30);
    QSeries t1 = twist(f, Int(1));
    for (unsigned n = 0; n <= 30; ++n) CHECK(t1[n] == f[n]);

    QSeries tm4 = twist(f, Int(-4));
    CHECK(tm4[3] == 4);  // kronecker(-4|3) = -1
    QSeries t8 = twist(f, Int(8));
    CHECK(t8[2] == 0);

    CHECK_THROWS(twist(f, Int(20)));  // 20 = 4*5 with 5 = 1 mod 4 is not fundamental
    CHECK_NOTHROW(twist(f, Int(-8)));
    CHECK_NOTHROW(twist(f, Int(5)));
}

TEST_CASE("deligne bound and parity of a_p through order 1000") {
    QSeries f = newform_level8(1000);
    CHECK(deligne_violations(f, 4).empty());
    // every odd prime coefficient is even; report-style observation
    int odd_found = 0;
    for (std::uint64_t p = 3; p <= 1000; p += 2) {
        if (!is_prime(p)) continue;
        if (f[static_cast<unsigned>(p)] % 2 != 0) ++odd_found;
    }
    CHECK(odd_found == 0);
}
