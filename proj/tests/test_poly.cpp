#include <doctest.h>

#include <random>

#include "cy8/poly.hpp"

using namespace cy8;

static const std::vector<std::string> XYZ = {"x", "y", "z"};

static Poly random_poly(std::mt19937& rng) {
    Poly p(XYZ);
    int n = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) {
        std::vector<unsigned> e = {rng() % 3, rng() % 3, rng() % 3};
        long num = static_cast<long>(rng() % 21) - 10;
        long den = 1 + static_cast<long>(rng() % 4);
        Rat c(num, den);
        c.canonicalize();
        p.add_term(e, c);
    }
    return p;
}

TEST_CASE("parser") {
    Poly p = Poly::parse("(x-y)*(x+y)", XYZ);
    CHECK(p == Poly::parse("x^2 - y^2", XYZ));
    CHECK(Poly::parse("2x", XYZ) == Poly::parse("x+x", XYZ));
    CHECK(Poly::parse("-(x - y)", XYZ) == Poly::parse("y - x", XYZ));
    CHECK(Poly::parse("1/2 x + 1/2 x", XYZ) == Poly::parse("x", XYZ));
    CHECK(Poly::parse("-x^2+y^2", XYZ) == Poly::parse("y^2 - x^2", XYZ));
    CHECK(Poly::parse("(-x)^2", XYZ) == Poly::parse("x^2", XYZ));
    CHECK_THROWS(Poly::parse("x +", XYZ));
    CHECK_THROWS(Poly::parse("w", XYZ));
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == Poly(XYZ));
    }
}

TEST_CASE("substitution and homogeneity") {
    Poly f = Poly::parse("x^2 + y*z", XYZ);
    CHECK(f.homogeneous(2));
    std::vector<Poly> images = {Poly::parse("y", XYZ), Poly::parse("x+z", XYZ), Poly::parse("z", XYZ)};
    Poly g = f.substitute(images);
    CHECK(g == Poly::parse("y^2 + x*z + z^2", XYZ));
    CHECK(!Poly::parse("x^2 + y", XYZ).homogeneous(2));
}

TEST_CASE("derivative, content, division by a term") {
    Poly f = Poly::parse("3x^2*y - 6y^2", XYZ);
    CHECK(f.derivative(0) == Poly::parse("6x*y", XYZ));
    CHECK(f.content() == Rat(3));
    Poly g = Poly::parse("4x^2*y^2", XYZ);
    CHECK(g.div_term({1, 1, 0}, Rat(2)) == Poly::parse("2x*y", XYZ));
    CHECK_THROWS(g.div_term({0, 0, 1}, Rat(1)));
}

TEST_CASE("leading term follows graded lex") {
    Poly f = Poly::parse("x*y^2 + x^2*y + x^3 + y", XYZ);
    auto [e, c] = f.leading_term();
    CHECK(c == 1);
    CHECK(e == std::vector<unsigned>{3, 0, 0});
}

TEST_CASE("degree cap rejects runaway expansion") {
    Poly x = Poly::variable("x", XYZ);
    Poly big = x.pow(33);
    CHECK_THROWS(big* big);
}
