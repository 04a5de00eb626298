#include <doctest.h>

#include "cy8/catalog.hpp"
#include "cy8/symbolic.hpp"

using namespace cy8;

static const std::vector<std::string> XYT = {"x", "y", "t"};

TEST_CASE("generic two-torsion quotient identity") {
    // y^2 = x^3 + A x^2 + B x with A, B indeterminate; map
    // (x, y) -> ((x^2+B)/x, y (x^2-B)/x^2) lands on y^2 = (x+A)(x^2-4B)
    const std::vector<std::string> vars = {"x", "y", "A", "B"};
    PolyFrac X{Poly::parse("x^2 + B", vars), Poly::parse("x", vars)};
    PolyFrac Y{Poly::parse("y*(x^2 - B)", vars), Poly::parse("x^2", vars)};
    Poly source = Poly::parse("x^3 + A*x^2 + B*x", vars);
    Poly target = Poly::parse("(x+A)*(x^2-4B)", vars);
    auto cert = verify_isogeny(X, Y, source, target);
    CHECK(cert.ok);
    CHECK(recheck(cert, {{1, source}}));
}

TEST_CASE("the additive-y variant of the quotient map fails") {
    const std::vector<std::string> vars = {"x", "y", "A", "B"};
    PolyFrac X{Poly::parse("x^2 + B", vars), Poly::parse("x", vars)};
    PolyFrac Ybad{Poly::parse("y*x^2 - B", vars), Poly::parse("x^2", vars)};
    Poly source = Poly::parse("x^3 + A*x^2 + B*x", vars);
    Poly target = Poly::parse("(x+A)*(x^2-4B)", vars);
    auto cert = verify_isogeny(X, Ybad, source, target);
    CHECK(!cert.ok);
}

TEST_CASE("cataloged isogenies certify") {
    const auto& reg = Registry::builtin();
    for (const char* id : {"isogeny_phi", "isogeny_el2_x1128"}) {
        auto cert = verify_map(reg, id);
        CHECK_MESSAGE(certificate_ok(cert), id);
        const auto& rc = std::get<RewriteCertificate>(cert);
        CHECK(recheck(rc, {{1, reg.map(id).iso_source_rhs}}));
    }
}

TEST_CASE("a flipped sign in the 2:1 map is caught") {
    const auto& reg = Registry::builtin();
    MapSpec m = reg.map("isogeny_phi");
    PolyFrac bad{m.iso_x.num * Rat(-1), m.iso_x.den};
    auto cert = verify_isogeny(bad, m.iso_y, m.iso_source_rhs, m.iso_target_rhs);
    CHECK(!cert.ok);
}

TEST_CASE("cremona certificate, involution and negative control") {
    const auto& reg = Registry::builtin();
    auto cert = verify_map(reg, "cremona_v1_v2");
    REQUIRE(certificate_ok(cert));
    const auto& cc = std::get<CofactorCertificate>(cert);
    CHECK(recheck(cc, reg.map("cremona_v1_v2").source_eq));
    // cofactor is -(x^2 y z)^2
    CHECK(cc.unit == Rat(-1));
    CHECK(cc.cofactor_exps == std::vector<unsigned>{4, 2, 2, 0});

    // sigma o sigma = (xyz) * identity
    const std::vector<std::string>& XYZT = cc.pullback.vars();
    auto sigma = reg.map("cremona_v1_v2").components;
    std::vector<Poly> twice;
    for (const auto& s : sigma) twice.push_back(s.substitute(sigma));
    Poly m = Poly::parse("x*y*z", XYZT);
    CHECK(twice[0] == m * Poly::variable("x", XYZT));
    CHECK(twice[1] == m * Poly::variable("y", XYZT));
    CHECK(twice[2] == m * Poly::variable("z", XYZT));
    CHECK(twice[3] == m * Poly::variable("t", XYZT));

    // shuffled octic: nonzero remainder
    Poly wrong = Poly::parse("x*y*z*t*(x+y)(y+z)(z+t)(t+x)", XYZT);
    auto bad = verify_cremona(sigma, wrong, reg.map("cremona_v1_v2").target_eq);
    CHECK(!bad.ok);
}

TEST_CASE("double-cover pullback certificates") {
    const auto& reg = Registry::builtin();
    for (const char* id : {"cover_t44_t70_1", "cover_t28_t44"}) {
        auto cert = verify_map(reg, id);
        REQUIRE_MESSAGE(certificate_ok(cert), id);
        const auto& cc = std::get<CofactorCertificate>(cert);
        CHECK(recheck(cc, reg.map(id).source_eq));
    }
    // identity map on equal equations: unit certificate
    const std::vector<std::string> XYZTW = {"x", "y", "z", "t", "w"};
    std::vector<Poly> ident;
    for (const auto& v : XYZTW) ident.push_back(Poly::variable(v, XYZTW));
    Poly eq = Poly::parse("w^2 - x^8 + y^8", XYZTW);
    auto cert = verify_cover(ident, eq, eq);
    CHECK(cert.ok);
    CHECK(cert.unit == 1);
    CHECK(cert.cofactor_exps == std::vector<unsigned>(5, 0));
}

TEST_CASE("covers with quadric-intersection sources rewrite to zero") {
    const auto& reg = Registry::builtin();
    for (const char* id : {"cover_t32_t28", "cover_t40_3_t44", "cover_t40_3_t70_1"}) {
        auto cert = verify_map(reg, id);
        REQUIRE_MESSAGE(certificate_ok(cert), id);
        const auto& rc = std::get<RewriteCertificate>(cert);
        CHECK(recheck(rc, reg.map(id).relations));
    }
}

TEST_CASE("base changes psi and psi'") {
    const auto& reg = Registry::builtin();
    for (const char* id : {"base_change_psi", "base_change_psi_prime", "s1_model_el2"}) {
        auto cert = verify_map(reg, id);
        REQUIRE_MESSAGE(certificate_ok(cert), id);
        const auto& mc = std::get<ModelMatchCertificate>(cert);
        const auto& m = reg.map(id);
        CHECK(recheck(mc, *m.bc_base, m.bc_substitution, *m.bc_pulled));
    }
    // psi uses u = 1, r0 = t^2; psi' needs the non-unit scale u = 1/t
    const auto& psi = std::get<ModelMatchCertificate>(verify_map(reg, "base_change_psi"));
    CHECK(psi.r0 == RatFunc(UniPoly::from_ints({0, 0, 1})));
    const auto& psi2 = std::get<ModelMatchCertificate>(verify_map(reg, "base_change_psi_prime"));
    CHECK(psi2.u == RatFunc(UniPoly::constant(Rat(1)), UniPoly::t()));
}

TEST_CASE("identity substitution matches a model with itself") {
    const auto& reg = Registry::builtin();
    auto E = reg.fibration("S5").model(Rat(3));
    auto cert = verify_base_change(E, UniPoly::t(), E);
    CHECK(cert.ok);
    CHECK(cert.u == RatFunc(UniPoly::constant(Rat(1))));
    CHECK(cert.r0.is_zero());
}

TEST_CASE("coordinate changes linking the three branch presentations") {
    const auto& reg = Registry::builtin();
    auto c1 = verify_map(reg, "coordchange_t44_sym");
    REQUIRE(certificate_ok(c1));
    CHECK(std::get<CofactorCertificate>(c1).unit == Rat(1));
    auto c2 = verify_map(reg, "coordchange_t44_planes");
    REQUIRE(certificate_ok(c2));
    CHECK(std::get<CofactorCertificate>(c2).unit == Rat(16));
}

TEST_CASE("the 8:1 map onto the affine model certifies with zero residual") {
    const auto& reg = Registry::builtin();
    auto cert = verify_map(reg, "stienstra");
    REQUIRE(certificate_ok(cert));
    const auto& rc = std::get<RewriteCertificate>(cert);
    CHECK(rc.residual.is_zero());
    CHECK(recheck(rc, reg.map("stienstra").relations));
}

TEST_CASE("rewriting rejects cyclic relations") {
    const std::vector<std::string> uv = {"u", "v"};
    std::vector<SquareRewrite> rel = {{0, Poly::parse("v^2", uv)}, {1, Poly::parse("u", uv)}};
    CHECK_THROWS(reduce_square_relations(Poly::parse("u^2", uv), rel));
}

TEST_CASE("isogeny map commutes with reduction at random fibers") {
    // push a random point of the 2:1 quotient source through the map mod p
    const auto& reg = Registry::builtin();
    const auto& m = reg.map("isogeny_phi");
    PrimeField F(101);
    auto reduce_at = [&](const Poly& f, std::uint64_t xv, std::uint64_t yv, std::uint64_t tv) {
        std::uint64_t acc = 0;
        for (const auto& [e, c] : f.terms()) {
            std::uint64_t term = F.reduce(c);
            term = F.mul(term, F.pow(xv, e[0]));
            term = F.mul(term, F.pow(yv, e[1]));
            term = F.mul(term, F.pow(tv, e[2]));
            acc = F.add(acc, term);
        }
        return acc;
    };
    int tested = 0;
    for (std::uint64_t tv = 2; tv < 40 && tested < 5; ++tv) {
        for (std::uint64_t xv = 1; xv < F.p(); ++xv) {
            std::uint64_t rhs = reduce_at(m.iso_source_rhs, xv, 0, tv);
            if (F.legendre(rhs) != 1) continue;
            std::uint64_t yv = 0;
            for (std::uint64_t y = 1; y < F.p(); ++y)
                if (F.mul(y, y) == rhs) {
                    yv = y;
                    break;
                }
            std::uint64_t Xv = F.mul(reduce_at(m.iso_x.num, xv, yv, tv), F.inv(reduce_at(m.iso_x.den, xv, yv, tv)));
            std::uint64_t Yv = F.mul(reduce_at(m.iso_y.num, xv, yv, tv), F.inv(reduce_at(m.iso_y.den, xv, yv, tv)));
            std::uint64_t target_rhs = reduce_at(m.iso_target_rhs, Xv, 0, tv);
            CHECK(F.mul(Yv, Yv) == target_rhs);
            ++tested;
            break;
        }
    }
    CHECK(tested == 5);
}
