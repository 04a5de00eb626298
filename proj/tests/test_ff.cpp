#include <doctest.h>

#include <random>

#include "cy8/ff.hpp"
#include "cy8/poly.hpp"

using namespace cy8;

TEST_CASE("legendre basics") {
    PrimeField F7(7);
    CHECK(F7.legendre(0) == 0);
    CHECK(F7.legendre(1) == 1);
    CHECK(F7.legendre(2) == 1);  // 3^2 = 2 mod 7
    PrimeField F5(5);
    CHECK(F5.sqrt_count(0) == 1);
    CHECK(F5.sqrt_count(4) == 2);
    CHECK(F5.sqrt_count(3) == 0);
}

TEST_CASE("prime field rejects bad moduli") {
    CHECK_THROWS(PrimeField(2));
    CHECK_THROWS(PrimeField(9));
    CHECK_THROWS(PrimeField(1));
}

TEST_CASE("chi is multiplicative and balanced, exhaustively for p <= 101") {
    for (auto p : odd_primes_in(3, 101)) {
        PrimeField F(p);
        long plus = 0, minus = 0;
        for (std::uint64_t a = 1; a < p; ++a) {
            (F.legendre(a) == 1 ? plus : minus)++;
            for (std::uint64_t b = 1; b < p; ++b)
                REQUIRE(F.legendre(F.mul(a, b)) == F.legendre(a) * F.legendre(b));
        }
        CHECK(plus == minus);
        // sum over F_p of sqrt_count = p
        std::uint64_t total = 0;
        for (std::uint64_t a = 0; a < p; ++a) total += static_cast<std::uint64_t>(F.sqrt_count(a));
        CHECK(total == p);
    }
}

TEST_CASE("large-p character falls back to exponentiation") {
    PrimeField F(65537);  // above the table threshold
    CHECK(F.p() == 65537);
    std::uint64_t squares = 0;
    for (std::uint64_t a = 1; a < 200; ++a) squares += F.legendre(F.mul(a, a)) == 1 ? 1 : 0;
    CHECK(squares == 199);
}

TEST_CASE("form evaluation") {
    const std::vector<std::string> xyzt = {"x", "y", "z", "t"};
    PrimeField F5(5);
    Poly f = Poly::parse("x+y", xyzt);
    ReducedForm rf(f.to_form(), F5);
    std::uint64_t pt[4] = {1, 2, 0, 0};
    CHECK(rf.eval(pt, F5) == 3);

    Poly g = Poly::parse("x*y*z*t", xyzt);
    PrimeField F7(7);
    ReducedForm rg(g.to_form(), F7);
    std::uint64_t q[4] = {1, 1, 1, 0};
    CHECK(rg.eval(q, F7) == 0);

    // (x-y)(y-z)(z-t)(t-x) at (1,2,3,4) mod 7: (-1)(-1)(-1)(3) = -3 = 4
    Poly h = Poly::parse("(x-y)(y-z)(z-t)(t-x)", xyzt);
    ReducedForm rh(h.to_form(), F7);
    std::uint64_t r[4] = {1, 2, 3, 4};
    CHECK(rh.eval(r, F7) == 4);
}

TEST_CASE("expanded evaluation matches a naive term-by-term oracle on random forms") {
    const std::vector<std::string> xyzt = {"x", "y", "z", "t"};
    std::mt19937 rng(12345);
    PrimeField F(13);
    for (int trial = 0; trial < 50; ++trial) {
        Poly f(xyzt);
        int nterms = 1 + static_cast<int>(rng() % 6);
        for (int k = 0; k < nterms; ++k) {
            std::vector<unsigned> e(4);
            for (auto& x : e) x = rng() % 4;
            f.add_term(e, Rat(static_cast<long>(rng() % 19) - 9));
        }
        if (f.is_zero()) continue;
        ReducedForm rf(f.to_form(), F);
        for (int s = 0; s < 10; ++s) {
            std::uint64_t pt[4] = {rng() % 13, rng() % 13, rng() % 13, rng() % 13};
            // naive: reduce each term separately with plain powmod
            std::uint64_t want = 0;
            for (const auto& [e, c] : f.terms()) {
                std::uint64_t m = F.reduce(Int(c.get_num()));
                for (int v = 0; v < 4; ++v) m = F.mul(m, F.pow(pt[v], e[static_cast<std::size_t>(v)]));
                want = F.add(want, m);
            }
            CHECK(rf.eval(pt, F) == want);
        }
    }
}
