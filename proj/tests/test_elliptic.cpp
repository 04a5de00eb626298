#include <doctest.h>

#include <map>

#include "cy8/catalog.hpp"
#include "cy8/elliptic.hpp"

using namespace cy8;

namespace {

WeierstrassModel el2() {
    UniPoly t2 = UniPoly::from_ints({0, 0, 1});
    UniPoly c = UniPoly::from_ints({-1, 0, 1});
    return WeierstrassModel(RatFunc(-(t2 + c)), RatFunc(t2 * c), RatFunc(UniPoly()));
}

std::map<std::string, std::string> config_map(const WeierstrassModel& E) {
    std::map<std::string, std::string> got;
    for (const auto& f : E.fiber_configuration()) got[f.place.str()] = f.type.str();
    return got;
}

}  // namespace

TEST_CASE("fiber tables of the cataloged fibrations at lambda = 3") {
    const auto& reg = Registry::builtin();
    std::map<std::string, std::map<std::string, std::string>> expect = {
        {"S1", {{"1", "I2"}, {"-1", "I2"}, {"0", "I4"}, {"inf", "I4"}}},
        {"S2", {{"0", "I2"}, {"inf", "I2"}, {"-1", "I4"}, {"1", "I4"}}},
        {"S3", {{"0", "I2"}, {"1", "I2"}, {"3", "I2"}, {"inf", "I0*"}}},
        {"S4", {{"0", "I2"}, {"1", "I2"}, {"3", "I2"}, {"inf", "I0*"}}},
        {"S5", {{"0", "I2"}, {"1", "I2"}, {"inf", "I2*"}}},
        {"S6", {{"1", "I2"}, {"inf", "I2"}, {"0", "I2*"}}},
        {"S7", {{"0", "I2"}, {"1", "I2"}, {"3", "I2"}, {"4", "I2"}, {"inf", "I4"}}},
        {"X1128", {{"0", "I2"}, {"1", "I1"}, {"-1", "I1"}, {"inf", "I8"}}},
    };
    for (const auto& [id, want] : expect) {
        auto E = reg.fibration(id).model(Rat(3));
        CHECK_MESSAGE(config_map(E) == want, id);
        CHECK(E.total_euler() == 12);
    }
}

TEST_CASE("declared fiber lists match the computed configurations") {
    const auto& reg = Registry::builtin();
    for (const auto& id : reg.fibration_ids()) {
        const auto& spec = reg.fibration(id);
        auto E = spec.model(Rat(3));
        auto got = config_map(E);
        for (auto [loc, ty] : spec.declared_fibers) {
            if (loc == "L") loc = "3";
            if (loc == "L+1") loc = "4";
            std::string where = id + " at " + loc;
            REQUIRE_MESSAGE(got.count(loc) == 1, where);
            CHECK_MESSAGE(got[loc] == ty, where);
        }
    }
}

TEST_CASE("degenerate families are rejected") {
    const auto& reg = Registry::builtin();
    CHECK_THROWS(reg.fibration("S3").model(Rat(1)));
    CHECK_THROWS(reg.fibration("S3").model(Rat(0)));
    // a quartic with a repeated section
    const std::vector<std::string> xzt = {"x", "z", "t"};
    QuarticBranch b{{Poly::parse("x", xzt), Poly::parse("x", xzt), Poly::parse("x+z", xzt),
                     Poly::parse("x+t", xzt)}};
    CHECK_THROWS(from_quartic(b));
}

TEST_CASE("minimal model scaling") {
    WeierstrassModel E = el2();
    auto [m0, k0] = minimal_model_at(E, Place::rational(Rat(0)));
    CHECK(k0 == 0);
    CHECK(m0 == E);
    // deliberately unminimal: x -> t^2 x, y -> t^3 y
    WeierstrassModel blown = E.rescale(RatFunc(UniPoly::constant(Rat(1))) / RatFunc(UniPoly::t()));
    auto [m1, k1] = minimal_model_at(blown, Place::rational(Rat(0)));
    CHECK(k1 == 1);
    CHECK(m1 == E);
}

TEST_CASE("kodaira classification is invariant under unit rescalings") {
    WeierstrassModel E = el2();
    // u = t - 5 is a unit at t = 0, +-1
    WeierstrassModel F = E.rescale(RatFunc(UniPoly::from_ints({-5, 1})));
    for (const Rat& a : {Rat(0), Rat(1), Rat(-1)}) {
        auto ta = E.kodaira_type(Place::rational(a));
        auto tb = F.kodaira_type(Place::rational(a));
        CHECK(ta.type == tb.type);
    }
}

TEST_CASE("S1 at infinity is minimal with v(disc) = 4") {
    const auto& reg = Registry::builtin();
    auto E = reg.fibration("S1").model(Rat(3));
    auto d = E.local_data(Place::infinity());
    CHECK(d.v_disc == 4);
    CHECK(d.v_c4 == 0);
}

TEST_CASE("fiber counts: Hasse bound on smooth fibers, brute-force agreement") {
    const auto& reg = Registry::builtin();
    auto E = reg.fibration("S1").model(Rat(3));
    for (std::uint64_t p : {5ull, 7ull}) {
        PrimeField F(p);
        for (std::uint64_t t0 = 0; t0 <= p; ++t0) {
            bool inf = t0 == p;
            std::uint64_t n = E.fiber_count(inf ? 0 : t0, inf, F);
            // brute force over the affine chart
            const WeierstrassModel& m = inf ? E.infinity_model() : E;
            std::uint64_t tv = inf ? 0 : t0;
            auto evalc = [&](const RatFunc& g) {
                std::uint64_t nv = 0, tp = 1;
                for (std::size_t i = 0; i < g.num().coeffs().size(); ++i) {
                    nv = F.add(nv, F.mul(F.reduce(g.num()[i]), tp));
                    tp = F.mul(tp, tv);
                }
                std::uint64_t dv = 0;
                tp = 1;
                for (std::size_t i = 0; i < g.den().coeffs().size(); ++i) {
                    dv = F.add(dv, F.mul(F.reduce(g.den()[i]), tp));
                    tp = F.mul(tp, tv);
                }
                return F.mul(nv, F.inv(dv));
            };
            std::uint64_t a = evalc(m.A()), b = evalc(m.B()), c = evalc(m.C());
            std::uint64_t brute = 1;
            for (std::uint64_t x = 0; x < p; ++x)
                for (std::uint64_t y = 0; y < p; ++y)
                    if (F.mul(y, y) == F.add(F.mul(F.add(F.mul(F.add(x, a), x), b), x), c)) ++brute;
            CHECK(n == brute);
            // smooth fibers obey |p + 1 - n| <= 2 sqrt(p)
            bool bad = false;
            for (const auto& f : E.fiber_configuration()) {
                if (f.place.at_infinity)
                    bad |= inf;
                else if (!inf && f.place.minpoly.degree() == 1)
                    bad |= F.reduce(f.place.value()) == t0;
            }
            if (!bad) {
                long long a_t = static_cast<long long>(p + 1) - static_cast<long long>(n);
                CHECK(a_t * a_t <= static_cast<long long>(4 * p));
            }
        }
    }
}

TEST_CASE("split multiplicative fiber counts p points") {
    // el2 at t = 0 over F_3: y^2 = x^2 (x + 1), split node at the origin
    PrimeField F(3);
    std::uint64_t n = el2().fiber_count(0, false, F);
    CHECK(n == 3);
}

TEST_CASE("two-torsion quotient and the duplication j-invariant") {
    // A = 1 - 2t^2, B = t^2(t^2-1): quotient target is the I1 I1 I2 I8 model
    UniPoly t2 = UniPoly::from_ints({0, 0, 1});
    UniPoly c = UniPoly::from_ints({-1, 0, 1});
    RatFunc A(-(t2 + c)), B(t2 * c);
    auto q = quotient_by_two_torsion(A, B);
    auto got = config_map(q.target);
    std::map<std::string, std::string> want = {{"0", "I2"}, {"1", "I1"}, {"-1", "I1"}, {"inf", "I8"}};
    CHECK(got == want);

    // quotient of the quotient is isogenous back: same j after the second step
    // requires shifting the 2-torsion point of the target to the origin first
    RatFunc A2 = q.target.A(), B2 = q.target.B();
    // target: y^2 = (x+A)(x^2-4B); shift x -> x - A moves (-A, 0) to (0,0)
    WeierstrassModel shifted = q.target.shift_x(-A2);
    auto q2 = quotient_by_two_torsion(shifted.A(), shifted.B());
    CHECK(q2.target.j_invariant() == WeierstrassModel(A, B, RatFunc(UniPoly())).j_invariant());

    CHECK_THROWS(quotient_by_two_torsion(A, RatFunc(UniPoly())));
}

TEST_CASE("catalog fibration models agree with the named Weierstrass equations fiberwise") {
    const auto& reg = Registry::builtin();
    auto S1 = reg.fibration("S1").model(Rat(3));
    WeierstrassModel E = el2();
    PrimeField F(5);
    for (std::uint64_t t0 = 0; t0 <= 5; ++t0)
        CHECK(S1.fiber_count(t0 == 5 ? 0 : t0, t0 == 5, F) == E.fiber_count(t0 == 5 ? 0 : t0, t0 == 5, F));
}
