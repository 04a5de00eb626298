#include <doctest.h>

#include "cy8/unipoly.hpp"

using namespace cy8;

TEST_CASE("arithmetic and division") {
    UniPoly a = UniPoly::from_ints({-1, 0, 1});  // t^2 - 1
    UniPoly b = UniPoly::from_ints({1, 1});      // t + 1
    auto [q, r] = a.divmod(b);
    CHECK(r.is_zero());
    CHECK(q == UniPoly::from_ints({-1, 1}));
    CHECK(a.eval(Rat(3)) == 8);
    CHECK((a * b).degree() == 3);
}

TEST_CASE("gcd and squarefree decomposition") {
    UniPoly t = UniPoly::t();
    UniPoly f = t * t * (t - UniPoly::constant(Rat(1))).pow(3) * (t + UniPoly::constant(Rat(2)));
    auto dec = squarefree_decomposition(f);
    // multiplicities 1, 2, 3
    REQUIRE(dec.size() == 3);
    CHECK(dec[0].second == 1);
    CHECK(dec[1].second == 2);
    CHECK(dec[2].second == 3);
    CHECK(gcd(f, f.derivative()).degree() == 3);
}

TEST_CASE("rational roots with multiplicity") {
    // 2 t^4 + t^3 - 8t^2 - t + 6 = (t-1)(t+1)(t+2)(2t-3)
    UniPoly f = UniPoly::from_ints({6, -1, -8, 1, 2});
    auto roots = rational_roots(f);
    REQUIRE(roots.size() == 4);
    CHECK(roots[0].first == Rat(-2));
    CHECK(roots[1].first == Rat(-1));
    CHECK(roots[2].first == Rat(1));
    CHECK(roots[3].first == Rat(3, 2));
    for (auto& [root, m] : roots) CHECK(m == 1);

    UniPoly g = (UniPoly::t() - UniPoly::constant(Rat(1, 2))).pow(3);
    auto r2 = rational_roots(g);
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].first == Rat(1, 2));
    CHECK(r2[0].second == 3);
}

TEST_CASE("valuation and composition") {
    UniPoly t = UniPoly::t();
    UniPoly f = t.pow(3) * (t - UniPoly::constant(Rat(2)));
    CHECK(f.valuation(t) == 3);
    UniPoly g = UniPoly::from_ints({1, 0, 1});  // 1 + t^2
    CHECK(g.compose(t + UniPoly::constant(Rat(1))) == UniPoly::from_ints({2, 2, 1}));
}
