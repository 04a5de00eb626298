#include "cy8/catalog.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cy8 {

using nlohmann::json;

Registry build_builtin();

std::string shape_name(VarietyShape s) {
    switch (s) {
        case VarietyShape::DoubleOctic: return "double_octic";
        case VarietyShape::QuadricIntersection: return "quadric_intersection";
        case VarietyShape::FermiAffine: return "fermi_affine";
        case VarietyShape::FiberProduct: return "fiber_product";
        case VarietyShape::QuinticP4: return "quintic_p4";
        case VarietyShape::CompleteIntersectionP5: return "complete_intersection_p5";
    }
    return "?";
}

static VarietyShape shape_from_name(const std::string& s) {
    if (s == "double_octic") return VarietyShape::DoubleOctic;
    if (s == "quadric_intersection") return VarietyShape::QuadricIntersection;
    if (s == "fermi_affine") return VarietyShape::FermiAffine;
    if (s == "fiber_product") return VarietyShape::FiberProduct;
    if (s == "quintic_p4") return VarietyShape::QuinticP4;
    if (s == "complete_intersection_p5") return VarietyShape::CompleteIntersectionP5;
    throw std::invalid_argument("catalog: unknown shape '" + s + "'");
}

std::pair<std::uint64_t, bool> Moebius::apply(std::uint64_t t0, bool finite, const PrimeField& F) const {
    std::uint64_t ra = F.reduce(Rat(a)), rb = F.reduce(Rat(b)), rc = F.reduce(Rat(c)), rd = F.reduce(Rat(d));
    if ((F.mul(ra, rd) + F.p() - F.mul(rb, rc)) % F.p() == 0)
        throw std::domain_error("Moebius: transform degenerates mod p");
    if (!finite) {
        if (rc == 0) return {0, false};
        return {F.mul(ra, F.inv(rc)), true};
    }
    std::uint64_t den = F.add(F.mul(rc, t0), rd);
    if (den == 0) return {0, false};
    return {F.mul(F.add(F.mul(ra, t0), rb), F.inv(den)), true};
}

std::string Moebius::str() const {
    if (is_identity()) return "t";
    std::ostringstream os;
    os << "(" << a.get_str() << "*t + " << b.get_str() << ")/(" << c.get_str() << "*t + " << d.get_str() << ")";
    return os.str();
}

std::vector<Poly> FibrationSpec::quartic_factors(const Rat& lambda) const {
    std::vector<Poly> out;
    const std::vector<std::string> xzt = {"x", "z", "t"};
    for (const auto& f : factor_templates) {
        Poly g = f;
        if (has_lambda) {
            auto it = std::find(f.vars().begin(), f.vars().end(), std::string("L"));
            if (it != f.vars().end())
                g = f.eval_var(static_cast<unsigned>(it - f.vars().begin()), lambda);
        }
        out.push_back(g.with_vars(xzt));
    }
    return out;
}

WeierstrassModel FibrationSpec::model(const Rat& lambda) const {
    if (direct_model) return *direct_model;
    if (has_lambda && (lambda == 0 || lambda == 1))
        throw std::invalid_argument("fibration " + id + ": lambda in {0,1} collides sections");
    return from_quartic({quartic_factors(lambda)});
}

namespace {

const std::vector<std::string> XYZT = {"x", "y", "z", "t"};
const std::vector<std::string> XYZTW = {"x", "y", "z", "t", "w"};
const std::vector<std::string> XZTL = {"x", "z", "t", "L"};
const std::vector<std::string> NVG8 = {"x0", "x1", "x2", "x3", "y0", "y1", "y2", "y3"};
const std::vector<std::string> QI8 = {"x", "y", "z", "t", "u1", "u2", "u3", "u4"};

Poly P(const std::string& s, const std::vector<std::string>& vars) { return Poly::parse(s, vars); }

std::vector<Poly> factors(const std::vector<std::string>& fs, const std::vector<std::string>& vars) {
    std::vector<Poly> out;
    out.reserve(fs.size());
    for (const auto& f : fs) out.push_back(P(f, vars));
    return out;
}

Poly product_of(const std::vector<Poly>& fs) {
    Poly out = Poly::constant(Rat(1), fs.at(0).vars());
    for (const auto& f : fs) out = out * f;
    return out;
}

VarietySpec double_octic(const std::string& id, const std::vector<std::string>& branch, VarietyMeta meta,
                         Int model_twist = Int(1)) {
    VarietySpec v;
    v.id = id;
    v.shape = VarietyShape::DoubleOctic;
    v.meta = meta;
    v.branch_factors = factors(branch, XYZT);
    v.branch = product_of(v.branch_factors);
    if (!v.branch.homogeneous(8)) throw std::logic_error("catalog: " + id + " branch is not an octic");
    v.model_twist = model_twist;
    v.congruence_checked = true;
    return v;
}

WeierstrassModel el2_model() {
    // y^2 = x (x - (t^2-1)) (x - t^2)
    UniPoly t2 = UniPoly::from_ints({0, 0, 1});
    UniPoly c = UniPoly::from_ints({-1, 0, 1});
    UniPoly A = -(t2 + c);
    UniPoly B = t2 * c;
    return WeierstrassModel(RatFunc(A), RatFunc(B), RatFunc(UniPoly()));
}

WeierstrassModel x1128_model() {
    // y^2 = (x + 1 - 2t^2)(x^2 - 4t^2(t^2-1))
    UniPoly A = UniPoly::from_ints({1, 0, -2});
    UniPoly q = UniPoly::from_ints({0, 0, 4, 0, -4});  // 4t^2 - 4t^4 = -4t^2(t^2-1)
    UniPoly B = q;
    UniPoly C = A * q;
    return WeierstrassModel(RatFunc(A), RatFunc(B), RatFunc(C));
}

Poly weierstrass_rhs(const WeierstrassModel& E, const std::vector<std::string>& xyt) {
    // x^3 + A x^2 + B x + C as a polynomial in {x, y, t}
    auto embed = [&](const RatFunc& f) {
        if (!f.is_polynomial()) throw std::logic_error("weierstrass_rhs: non-polynomial coefficient");
        Rat d = f.den()[0];
        Poly out(xyt);
        for (std::size_t i = 0; i < f.num().coeffs().size(); ++i)
            out.add_term({0, 0, static_cast<unsigned>(i)}, f.num()[i] / d);
        return out;
    };
    Poly x = Poly::variable("x", xyt);
    return x * x * x + embed(E.A()) * x * x + embed(E.B()) * x + embed(E.C());
}

}  // namespace

const Registry& Registry::builtin() {
    static const Registry reg = build_builtin();
    return reg;
}

const VarietySpec& Registry::variety(const std::string& id) const {
    auto it = varieties_.find(id);
    if (it == varieties_.end()) throw std::invalid_argument("catalog: unknown variety '" + id + "'");
    return it->second;
}

const FibrationSpec& Registry::fibration(const std::string& id) const {
    auto it = fibrations_.find(id);
    if (it == fibrations_.end()) throw std::invalid_argument("catalog: unknown fibration '" + id + "'");
    return it->second;
}

const MapSpec& Registry::map(const std::string& id) const {
    auto it = maps_.find(id);
    if (it == maps_.end()) throw std::invalid_argument("catalog: unknown map '" + id + "'");
    return it->second;
}

std::vector<std::string> Registry::variety_ids() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : varieties_) out.push_back(k);
    return out;
}
std::vector<std::string> Registry::fibration_ids() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : fibrations_) out.push_back(k);
    return out;
}
std::vector<std::string> Registry::map_ids() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : maps_) out.push_back(k);
    return out;
}

void Registry::add_variety(VarietySpec v, bool allow_override) {
    if (!allow_override && varieties_.count(v.id))
        throw std::invalid_argument("catalog: duplicate variety id '" + v.id + "' (built-ins cannot be overridden)");
    varieties_[v.id] = std::move(v);
}

Registry build_builtin() {
    Registry reg;

    // ---- double octics ---------------------------------------------------
    reg.add_variety(double_octic("T70_1", {"x", "y", "z", "t", "x-y", "y-z", "z-t", "t-x"},
                                 {140, 70, 0, 8, 2, 1}));
    {
        auto v = double_octic("T50_V1", {"x", "y", "z", "t", "x+y", "y+z", "x-y-z-t", "x+y-z+t"},
                              {100, 50, 0, 8, 29, 32}, Int(-4));
        v.alt_branches.emplace_back(
            "cremona_chart", factors({"z", "t", "x+y", "x-y", "x+z", "t+y", "t+z", "t+y+z"}, XYZT));
        reg.add_variety(std::move(v));
    }
    {
        auto v = double_octic("T50_V2", {"x", "y", "z", "t", "x+y", "x-y+z", "x-y-t", "x+y-z-t"},
                              {100, 50, 0, 8, 44, 69}, Int(-4));
        v.alt_branches.emplace_back(
            "cremona_chart", factors({"x", "t", "x+z", "x-z", "x+y", "t+y", "t+z", "t+y+z"}, XYZT));
        reg.add_variety(std::move(v));
    }
    reg.add_variety(double_octic("T46", {"x", "y", "z", "t", "x+y", "x-y+z", "y-z-t", "x+z-t"},
                                 {92, 46, 0, 8, 62, 93}, Int(8)));
    {
        auto v = double_octic("T44",
                              {"x-t", "x+t", "y-t", "y+t", "z-t", "z+t", "x+y+z+t", "x+y+z-t"},
                              {88, 44, 0, 8, 87, 238});
        v.alt_branches.emplace_back("symmetric",
                                    factors({"x-y", "x+y", "y-z", "y+z", "z-t", "z+t", "t-x", "t+x"}, XYZT));
        v.alt_branches.emplace_back(
            "four_planes",
            factors({"x", "y", "z", "t", "x+y+z-t", "x+y-z+t", "x-y+z+t", "-x+y+z+t"}, XYZT));
        reg.add_variety(std::move(v));
    }
    reg.add_variety(double_octic("T40", {"x", "y", "z", "t", "x+y+z+t", "x+y-z-t", "y-z+t", "x+z-t"},
                                 {80, 40, 0, 8, std::nullopt, 241}));
    reg.add_variety(double_octic(
        "T28", {"x^2+y^2+z^2-t^2", "x^2+y^2-z^2+t^2", "x^2-y^2+z^2+t^2", "-x^2+y^2+z^2+t^2"},
        {56, 28, 0, 8, std::nullopt, std::nullopt}));
    {
        auto v = double_octic("cayley_octic",
                              {"x", "y", "z", "t", "x+y+z+t", "x*y*z+x*y*t+x*z*t+y*z*t"},
                              {140, 70, 0, 8, std::nullopt, std::nullopt}, Int(-4));
        reg.add_variety(std::move(v));
    }

    // ---- quadric intersections in P^7 -------------------------------------
    {
        VarietySpec v;
        v.id = "T40_3";
        v.shape = VarietyShape::QuadricIntersection;
        v.meta = {80, 40, 0, 8, std::nullopt, std::nullopt};
        v.quadrics = factors({"x^2-y^2", "y^2-z^2", "z^2-t^2", "t^2-x^2"}, XYZT);
        v.congruence_checked = true;
        v.nodes_isolated = false;  // singular along curves over the closure
        // cover relations u_i^2 -> f_i in the 8-variable roster
        for (unsigned i = 0; i < 4; ++i) {
            static const char* fs[] = {"x^2-y^2", "y^2-z^2", "z^2-t^2", "t^2-x^2"};
            v.cover_relations.push_back({4 + i, P(fs[i], QI8)});
        }
        // iterated double cover of P^3: the eight planes in grouped pairs
        Arrangement arr;
        arr.ambient_dim = 3;
        arr.forms = factors({"x-y", "x+y", "y-z", "y+z", "z-t", "z+t", "t-x", "t+x"}, XYZT);
        arr.groups = {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
        v.arrangement = arr;
        ResolutionPlan plan;
        {
            BlowupCenter c;
            c.label = "fourfold points";
            c.count = 4;
            Arrangement e;
            e.ambient_dim = 2;
            e.forms = factors({"x-y", "x+y", "y-z", "y+z"}, {"x", "y", "z"});
            e.groups = {{0, 1}, {2, 3}, {}, {}};
            c.exceptional_arr.push_back(e);
            c.replaced_table = {{4, 1}};
            plan.centers.push_back(c);
        }
        {
            BlowupCenter c;
            c.label = "double lines";
            c.count = 4;
            c.exceptional_table = {{16, 0}, {8, 0}, {4, 4}};
            c.replaced_table = {{8, 0}, {4, 2}};
            plan.centers.push_back(c);
        }
        {
            BlowupCenter c;
            c.label = "nodes (small resolution)";
            c.count = 8;
            c.small_resolution_nodes = true;
            plan.centers.push_back(c);
        }
        v.resolution_plan = plan;
        reg.add_variety(std::move(v));
    }
    {
        VarietySpec v;
        v.id = "T32";
        v.shape = VarietyShape::QuadricIntersection;
        v.meta = {64, 32, 0, 8, std::nullopt, std::nullopt};
        // u_i^2 = 2*(s_i . x^2), square-equivalent to the halved relations below
        v.quadrics = factors({"2x^2-2y^2-2z^2-2t^2", "-2x^2+2y^2-2z^2-2t^2", "-2x^2-2y^2+2z^2-2t^2",
                              "-2x^2-2y^2-2z^2+2t^2"},
                             XYZT);
        v.congruence_checked = true;
        v.nodes_isolated = true;
        v.node_count = 96;
        static const char* halves[] = {"x0^2-x1^2-x2^2-x3^2", "-x0^2+x1^2-x2^2-x3^2",
                                       "-x0^2-x1^2+x2^2-x3^2", "-x0^2-x1^2-x2^2+x3^2"};
        for (unsigned i = 0; i < 4; ++i)
            v.cover_relations.push_back({4 + i, P(halves[i], NVG8) * Rat(1, 2)});
        reg.add_variety(std::move(v));
    }

    // ---- other ambient models ---------------------------------------------
    {
        VarietySpec v;
        v.id = "T70";
        v.shape = VarietyShape::FermiAffine;
        v.meta = {140, 70, 0, 8, std::nullopt, std::nullopt};
        v.ambient_forms = {P("(x^2+1)*y*z*t + (y^2+1)*x*z*t + (z^2+1)*x*y*t + (t^2+1)*x*y*z", XYZT)};
        reg.add_variety(std::move(v));
    }
    {
        VarietySpec v;
        v.id = "quintic_Z";
        v.shape = VarietyShape::QuinticP4;
        v.meta = {140, 70, 0, 8, std::nullopt, std::nullopt};
        v.ambient_forms = {P("w^2*(x*y*z+x*y*t+x*z*t+y*z*t) - x*y*z*t*(x+y+z+t)", XYZTW)};
        reg.add_variety(std::move(v));
    }
    {
        VarietySpec v;
        v.id = "T16";
        v.shape = VarietyShape::CompleteIntersectionP5;
        v.meta = {32, 16, 0, 8, std::nullopt, std::nullopt};
        const std::vector<std::string> p5 = {"x0", "x1", "x2", "x3", "x4", "x5"};
        v.ambient_forms = {P("x0^2+x1^2+x2^2+x3^2-4x4*x5", p5), P("x4^4+x5^4-2x0*x1*x2*x3", p5)};
        reg.add_variety(std::move(v));
    }

    // ---- fibrations --------------------------------------------------------
    auto add_fibration = [&](const std::string& id, bool has_lambda, const std::vector<std::string>& fs,
                             std::vector<std::pair<std::string, std::string>> fibers, int rho) {
        FibrationSpec f;
        f.id = id;
        f.has_lambda = has_lambda;
        f.factor_templates = factors(fs, XZTL);
        f.declared_fibers = std::move(fibers);
        f.rho = rho;
        reg.fibrations_[id] = std::move(f);
    };
    add_fibration("S1", false, {"x", "x+t", "x+z", "x+z+t"},
                  {{"1", "I2"}, {"-1", "I2"}, {"0", "I4"}, {"inf", "I4"}}, 1);
    add_fibration("S2", false, {"x", "x+z+t", "x+z-t", "x+2z"},
                  {{"0", "I2"}, {"inf", "I2"}, {"-1", "I4"}, {"1", "I4"}}, 1);
    add_fibration("S3", true, {"x", "x+t", "x+L*t", "x+z"},
                  {{"0", "I2"}, {"1", "I2"}, {"L", "I2"}, {"inf", "I0*"}}, 2);
    add_fibration("S4", true, {"t", "x+L*z", "x+z", "x+L*t"},
                  {{"0", "I2"}, {"1", "I2"}, {"L", "I2"}, {"inf", "I0*"}}, 2);
    add_fibration("S5", false, {"x", "t", "x+z", "x+t"}, {{"1", "I2"}, {"0", "I2"}, {"inf", "I2*"}}, 1);
    add_fibration("S6", false, {"x", "z", "x+z", "x+t"}, {{"1", "I2"}, {"inf", "I2"}, {"0", "I2*"}}, 1);
    add_fibration("S7", true, {"x", "x+t", "x+z-L*t", "x+z"},
                  {{"0", "I2"}, {"1", "I2"}, {"L", "I2"}, {"L+1", "I2"}, {"inf", "I4"}}, 2);
    {
        FibrationSpec f;
        f.id = "X1128";
        f.direct_model = x1128_model();
        f.declared_fibers = {{"0", "I2"}, {"1", "I1"}, {"-1", "I1"}, {"inf", "I8"}};
        reg.fibrations_["X1128"] = std::move(f);
    }

    // ---- fiber products -----------------------------------------------------
    auto add_product = [&](const std::string& id, VarietyMeta meta, const std::string& left,
                           const std::string& right, Rat lamL, Rat lamR, Moebius mu, Int twist) {
        VarietySpec v;
        v.id = id;
        v.shape = VarietyShape::FiberProduct;
        v.meta = meta;
        v.fiber_product = FiberProductData{left, right, lamL, lamR, mu, twist};
        reg.add_variety(std::move(v));
    };
    Moebius identity{};
    add_product("T40_1", {80, 40, 0, 8, std::nullopt, std::nullopt}, "S1", "S1", Rat(3), Rat(3), identity, Int(1));
    add_product("T40_2", {80, 40, 0, 8, std::nullopt, std::nullopt}, "S2", "S3", Rat(3), Rat(2),
                Moebius{Rat(2), Rat(0), Rat(1), Rat(1)}, Int(1));
    add_product("T36", {72, 36, 0, 8, std::nullopt, std::nullopt}, "S5", "S6", Rat(3), Rat(3), identity, Int(1));
    add_product("T32_1", {64, 32, 0, 8, std::nullopt, std::nullopt}, "S2", "S1", Rat(3), Rat(3), identity, Int(-4));
    add_product("T32_2", {64, 32, 0, 8, std::nullopt, std::nullopt}, "S1", "S3", Rat(3), Rat(2),
                Moebius{Rat(2), Rat(0), Rat(1), Rat(-1)}, Int(-4));
    add_product("arr3", {88, 45, 1, 32, std::nullopt, 3}, "S1", "S5", Rat(3), Rat(3),
                Moebius{Rat(0), Rat(1), Rat(1), Rat(0)}, Int(0));
    add_product("arr19", {64, 33, 1, 32, std::nullopt, 19}, "S2", "S5", Rat(3), Rat(3),
                Moebius{Rat(1), Rat(1), Rat(0), Rat(2)}, Int(0));
    add_product("arr239", {64, 34, 2, 12, std::nullopt, 239}, "S2", "S1", Rat(3), Rat(3),
                Moebius{Rat(0), Rat(2), Rat(-1), Rat(1)}, Int(0));
    add_product("arr240", {64, 33, 1, 6, std::nullopt, 240}, "S2", "S7", Rat(3), Rat(1, 2),
                Moebius{Rat(1), Rat(0), Rat(1), Rat(-1)}, Int(0));
    add_product("arr245", {64, 33, 1, 6, std::nullopt, 245}, "S1", "S7", Rat(3), Rat(1, 2),
                Moebius{Rat(1), Rat(0), Rat(1), Rat(-1)}, Int(0));

    // ---- fiber product table rows -------------------------------------------
    reg.rows_ = {
        {1, "T70_1", 140, 70, "T70^1", "T36", 72, 36, 0, "T36", 8},
        {3, "", 124, 62, "", "arr3", 88, 45, 1, "", 32},
        {19, "", 108, 54, "", "arr19", 64, 33, 1, "", 32},
        {32, "T50_V1", 100, 50, "T50", "T40_2", 80, 40, 0, "T40^2", 8},
        {69, "T50_V2", 100, 50, "T50", "T40_2", 80, 40, 0, "T40^2", 8},
        {93, "T46", 92, 46, "T46", "T32_2", 64, 32, 0, "T32^2", 8},
        {238, "T44", 88, 44, "T44", "T40_1", 80, 40, 0, "T40^1", 8},
        {239, "", 80, 40, "", "arr239", 64, 34, 2, "", 12},
        {240, "", 80, 40, "", "arr240", 64, 33, 1, "", 6},
        {241, "T40", 80, 40, "T40", "T32_1", 64, 32, 0, "T32^1", 8},
        {245, "", 76, 38, "", "arr245", 64, 33, 1, "", 6},
    };

    // ---- maps -----------------------------------------------------------------
    auto squaring_map = [] {
        return factors({"x^2", "y^2", "z^2", "t^2", "x*y*z*t*w"}, XYZTW);
    };
    auto cover_eq = [&](const std::string& variety, int which_alt, Registry& r) {
        const auto& v = r.varieties_.at(variety);
        const std::vector<Poly>& fs = which_alt < 0 ? v.branch_factors : v.alt_branches.at(which_alt).second;
        Poly w = Poly::variable("w", XYZTW);
        Poly b = Poly::constant(Rat(1), XYZTW);
        for (const auto& f : fs) b = b * f.with_vars(XYZTW);
        return w * w - b;
    };

    {
        MapSpec m;
        m.id = "cremona_v1_v2";
        m.source = "T50_V1";
        m.target = "T50_V2";
        m.degree = "1:1";
        m.kind = MapKind::Cremona;
        m.components = factors({"y*z", "x*y", "x*z", "x*t"}, XYZT);
        m.source_eq = product_of(reg.varieties_.at("T50_V1").alt_branches.at(0).second);
        m.target_eq = product_of(reg.varieties_.at("T50_V2").alt_branches.at(0).second);
        reg.maps_[m.id] = std::move(m);
    }
    {
        MapSpec m;
        m.id = "cover_t44_t70_1";
        m.source = "T44";
        m.target = "T70_1";
        m.degree = "8:1";
        m.kind = MapKind::CoverSquareMap;
        m.components = squaring_map();
        m.source_eq = cover_eq("T44", 0, reg);  // symmetric presentation
        m.target_eq = cover_eq("T70_1", -1, reg);
        reg.maps_[m.id] = std::move(m);
    }
    {
        MapSpec m;
        m.id = "cover_t28_t44";
        m.source = "T28";
        m.target = "T44";
        m.degree = "8:1";
        m.kind = MapKind::CoverSquareMap;
        m.components = squaring_map();
        m.source_eq = cover_eq("T28", -1, reg);
        m.target_eq = cover_eq("T44", 1, reg);  // four-planes presentation
        reg.maps_[m.id] = std::move(m);
    }
    {
        MapSpec m;
        m.id = "cover_t32_t28";
        m.source = "T32";
        m.target = "T28";
        m.degree = "8:1";
        m.kind = MapKind::CoverRelations;
        m.components = factors({"x0", "x1", "x2", "x3", "4y0*y1*y2*y3"}, NVG8);
        {
            Poly w = Poly::variable("w", XYZTW);
            Poly b = Poly::constant(Rat(1), XYZTW);
            for (const auto& f : reg.varieties_.at("T28").branch_factors) b = b * f.with_vars(XYZTW);
            m.target_eq = w * w - b;
        }
        m.relations = reg.varieties_.at("T32").cover_relations;
        reg.maps_[m.id] = std::move(m);
    }
    {
        MapSpec m;
        m.id = "cover_t40_3_t44";
        m.source = "T40_3";
        m.target = "T44";
        m.degree = "8:1";
        m.kind = MapKind::CoverRelations;
        m.components = factors({"x", "y", "z", "t", "u1*u2*u3*u4"}, QI8);
        m.target_eq = cover_eq("T44", 0, reg);
        m.relations = reg.varieties_.at("T40_3").cover_relations;
        reg.maps_[m.id] = std::move(m);
    }
    {
        MapSpec m;
        m.id = "cover_t40_3_t70_1";
        m.source = "T40_3";
        m.target = "T70_1";
        m.degree = "64:1";
        m.kind = MapKind::CoverRelations;
        m.components = factors({"x^2", "y^2", "z^2", "t^2", "x*y*z*t*u1*u2*u3*u4"}, QI8);
        m.target_eq = cover_eq("T70_1", -1, reg);
        m.relations = reg.varieties_.at("T40_3").cover_relations;
        reg.maps_[m.id] = std::move(m);
    }
    const std::vector<std::string> XYT = {"x", "y", "t"};
    {
        // 2-isogeny S2 -> S1 composed from the x/4, y/8 rescale, the shift by
        // 2(t^2-1) and the (0,0)-quotient; c = t^2 - 1
        MapSpec m;
        m.id = "isogeny_phi";
        m.source = "S2";
        m.target = "S1";
        m.degree = "2:1";
        m.kind = MapKind::Isogeny;
        m.iso_x = {P("(x + t^2 - 1)^2", XYT), P("4x", XYT)};
        m.iso_y = {P("y*(x^2 - (t^2-1)^2)", XYT), P("8x^2", XYT)};
        m.iso_source_rhs = P("x*(x-(t-1)^2)*(x-(t+1)^2)", XYT);
        m.iso_target_rhs = P("x*(x-(t^2-1))*(x-t^2)", XYT);
        reg.maps_[m.id] = std::move(m);
    }
    {
        MapSpec m;
        m.id = "isogeny_el2_x1128";
        m.source = "S1";
        m.target = "X1128";
        m.degree = "2:1";
        m.kind = MapKind::Isogeny;
        m.iso_x = {P("x^2 + t^2*(t^2-1)", XYT), P("x", XYT)};
        m.iso_y = {P("y*(x^2 - t^2*(t^2-1))", XYT), P("x^2", XYT)};
        m.iso_source_rhs = P("x*(x-(t^2-1))*(x-t^2)", XYT);
        m.iso_target_rhs = weierstrass_rhs(x1128_model(), XYT);
        reg.maps_[m.id] = std::move(m);
    }
    {
        MapSpec m;
        m.id = "base_change_psi";
        m.source = "S1";
        m.target = "S5";
        m.degree = "2:1";
        m.kind = MapKind::BaseChange;
        m.bc_base = reg.fibrations_.at("S5").model(Rat(3));
        m.bc_pulled = el2_model();
        m.bc_substitution = UniPoly::from_ints({0, 0, 1});
        reg.maps_[m.id] = std::move(m);
    }
    {
        MapSpec m;
        m.id = "base_change_psi_prime";
        m.source = "S1";
        m.target = "S6";
        m.degree = "2:1";
        m.kind = MapKind::BaseChange;
        m.bc_base = reg.fibrations_.at("S6").model(Rat(3));
        m.bc_pulled = el2_model();
        m.bc_substitution = UniPoly::from_ints({0, 0, 1});
        reg.maps_[m.id] = std::move(m);
    }
    {
        // consistency: the quartic model of S1 is isomorphic to el2 as-is
        MapSpec m;
        m.id = "s1_model_el2";
        m.source = "S1";
        m.target = "S1";
        m.degree = "1:1";
        m.kind = MapKind::BaseChange;
        m.bc_base = reg.fibrations_.at("S1").model(Rat(3));
        m.bc_pulled = el2_model();
        m.bc_substitution = UniPoly::t();
        reg.maps_[m.id] = std::move(m);
    }
    {
        MapSpec m;
        m.id = "coordchange_t44_sym";
        m.source = "T44";
        m.target = "T44";
        m.degree = "1:1";
        m.kind = MapKind::CoordinateChange;
        m.components = {P("t - (y+z)*(1/2)", XYZT), P("-x - (y+z)*(1/2)", XYZT), P("-(y+z)*(1/2) - t", XYZT),
                        P("(y-z)*(1/2)", XYZT)};
        m.source_eq = product_of(reg.varieties_.at("T44").branch_factors);
        m.target_eq = product_of(reg.varieties_.at("T44").alt_branches.at(0).second);
        reg.maps_[m.id] = std::move(m);
    }
    {
        MapSpec m;
        m.id = "coordchange_t44_planes";
        m.source = "T44";
        m.target = "T44";
        m.degree = "1:1";
        m.kind = MapKind::CoordinateChange;
        m.components = factors({"x-y", "z-t", "z+t", "x+y"}, XYZT);
        m.source_eq = product_of(reg.varieties_.at("T44").alt_branches.at(0).second);
        m.target_eq = product_of(reg.varieties_.at("T44").alt_branches.at(1).second);
        reg.maps_[m.id] = std::move(m);
    }
    {
        MapSpec m;
        m.id = "stienstra";
        m.source = "T32";
        m.target = "T70";
        m.degree = "8:1";
        m.kind = MapKind::OnVariety;
        for (int i = 0; i < 4; ++i) {
            std::string xi = "x" + std::to_string(i), yi = "y" + std::to_string(i);
            m.frac_components.push_back({P(yi + "+" + xi, NVG8), P(yi + "-" + xi, NVG8)});
        }
        m.target_eq = reg.varieties_.at("T70").ambient_forms.at(0);
        m.relations = reg.varieties_.at("T32").cover_relations;
        reg.maps_[m.id] = std::move(m);
    }

    // ---- correspondence picture ------------------------------------------------
    reg.corrs_ = {
        {"T44", "T70_1", "8:1", "cover_t44_t70_1"},
        {"T28", "T44", "8:1", "cover_t28_t44"},
        {"T32", "T28", "8:1", "cover_t32_t28"},
        {"T40_3", "T44", "8:1", "cover_t40_3_t44"},
        {"T40_3", "T70_1", "64:1", "cover_t40_3_t70_1"},
        {"T32_1", "T40_1", "2:1", "phi x id on S2 x S1"},
        {"T40", "T44", "4:2", "phi x id on the defining octics"},
        {"T40_1", "T36", "4:1", "psi x psi'"},
        {"T44", "T70_1", "8:2", "psi x psi' on the defining octics"},
        {"T40_2", "T32_2", "2:1", "phi x id on S2 x S3"},
        {"T50_V1", "T46", "4:2", "phi x id on the defining octics"},
        {"T70", "T40_1", "4:1", "gamma x gamma"},
        {"T32", "T70", "8:1", "stienstra"},
        {"T50_V1", "T50_V2", "1:1", "cremona_v1_v2"},
    };

    return reg;
}

Certificate verify_map(const Registry& reg, const std::string& map_id) {
    const MapSpec& m = reg.map(map_id);
    switch (m.kind) {
        case MapKind::Cremona:
            return verify_cremona(m.components, m.source_eq, m.target_eq);
        case MapKind::CoverSquareMap:
            return verify_cover(m.components, m.target_eq, m.source_eq);
        case MapKind::CoverRelations:
            return verify_cover_on_relations(m.components, m.target_eq, m.relations);
        case MapKind::CoordinateChange: {
            // linear change: pullback of the target form is a scalar multiple
            // of the source form
            auto cert = verify_cover(m.components, m.target_eq, m.source_eq);
            return cert;
        }
        case MapKind::Isogeny:
            return verify_isogeny(m.iso_x, m.iso_y, m.iso_source_rhs, m.iso_target_rhs);
        case MapKind::BaseChange:
            return verify_base_change(*m.bc_base, m.bc_substitution, *m.bc_pulled);
        case MapKind::OnVariety:
            return verify_on_variety(m.frac_components, m.relations, m.target_eq);
    }
    throw std::logic_error("verify_map: unhandled kind");
}

std::string correspondence_graph_dot(const Registry& reg) {
    std::ostringstream os;
    os << "digraph correspondences {\n";
    for (const auto& id : reg.variety_ids()) os << "  \"" << id << "\";\n";
    for (const auto& c : reg.correspondences())
        os << "  \"" << c.source << "\" -> \"" << c.target << "\" [label=\"" << c.degree << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string correspondence_graph_json(const Registry& reg) {
    json j;
    j["nodes"] = reg.variety_ids();
    j["edges"] = json::array();
    for (const auto& c : reg.correspondences())
        j["edges"].push_back({{"source", c.source}, {"target", c.target}, {"degree", c.degree}, {"via", c.via}});
    return j.dump(2);
}

namespace {

json poly_to_json(const Poly& p) {
    json j;
    j["vars"] = p.vars();
    j["terms"] = json::array();
    for (const auto& [e, c] : p.terms()) {
        json t;
        t["e"] = e;
        t["c"] = c.get_str();
        j["terms"].push_back(t);
    }
    return j;
}

Poly poly_from_json(const json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    Poly p(vars);
    for (const auto& t : j.at("terms")) {
        std::vector<unsigned> e = t.at("e").get<std::vector<unsigned>>();
        Rat c(t.at("c").get<std::string>());
        c.canonicalize();
        p.add_term(e, c);
    }
    return p;
}

json meta_to_json(const VarietyMeta& m) {
    json j;
    j["chi"] = m.chi;
    j["h11"] = m.h11;
    j["h12"] = m.h12;
    j["level"] = m.level;
    if (m.arrangement_cm) j["arrangement_cm"] = *m.arrangement_cm;
    if (m.arrangement_meyer) j["arrangement_meyer"] = *m.arrangement_meyer;
    return j;
}

VarietyMeta meta_from_json(const json& j) {
    VarietyMeta m;
    m.chi = j.at("chi").get<int>();
    m.h11 = j.at("h11").get<int>();
    m.h12 = j.value("h12", 0);
    m.level = j.value("level", 0);
    if (j.contains("arrangement_cm")) m.arrangement_cm = j["arrangement_cm"].get<int>();
    if (j.contains("arrangement_meyer")) m.arrangement_meyer = j["arrangement_meyer"].get<int>();
    return m;
}

}  // namespace

std::string variety_to_json(const VarietySpec& v) {
    json j;
    j["id"] = v.id;
    j["shape"] = shape_name(v.shape);
    j["metadata"] = meta_to_json(v.meta);
    j["model_twist"] = v.model_twist.get_str();
    if (!v.branch_factors.empty()) {
        j["branch_factors"] = json::array();
        for (const auto& f : v.branch_factors) j["branch_factors"].push_back(poly_to_json(f));
    }
    if (!v.quadrics.empty()) {
        j["quadrics"] = json::array();
        for (const auto& f : v.quadrics) j["quadrics"].push_back(poly_to_json(f));
    }
    if (!v.ambient_forms.empty()) {
        j["forms"] = json::array();
        for (const auto& f : v.ambient_forms) j["forms"].push_back(poly_to_json(f));
    }
    if (v.fiber_product) {
        json f;
        f["left"] = v.fiber_product->left;
        f["right"] = v.fiber_product->right;
        f["lambda_left"] = v.fiber_product->lambda_left.get_str();
        f["lambda_right"] = v.fiber_product->lambda_right.get_str();
        f["matching"] = {v.fiber_product->matching.a.get_str(), v.fiber_product->matching.b.get_str(),
                         v.fiber_product->matching.c.get_str(), v.fiber_product->matching.d.get_str()};
        f["trace_twist"] = v.fiber_product->trace_twist.get_str();
        j["fiber_product"] = f;
    }
    if (v.node_count) j["node_count"] = *v.node_count;
    j["nodes_isolated"] = v.nodes_isolated;
    j["congruence_checked"] = v.congruence_checked;
    return j.dump(2);
}

std::string registry_varieties_json(const Registry& reg) {
    json j;
    j["varieties"] = json::array();
    for (const auto& id : reg.variety_ids()) j["varieties"].push_back(json::parse(variety_to_json(reg.variety(id))));
    return j.dump(2);
}

namespace {

VarietySpec variety_from_json(const json& j) {
    VarietySpec v;
    v.id = j.at("id").get<std::string>();
    if (v.id.empty()) throw std::invalid_argument("catalog file: empty variety id");
    v.shape = shape_from_name(j.at("shape").get<std::string>());
    v.meta = meta_from_json(j.at("metadata"));
    if (j.contains("model_twist")) {
        v.model_twist = Int(j["model_twist"].get<std::string>());
    }
    if (j.contains("branch_factors")) {
        for (const auto& f : j["branch_factors"]) v.branch_factors.push_back(poly_from_json(f));
        v.branch = product_of(v.branch_factors);
        if (v.shape == VarietyShape::DoubleOctic && !v.branch.homogeneous(8))
            throw std::invalid_argument("catalog file: branch of " + v.id + " is not homogeneous of degree 8");
    }
    if (j.contains("quadrics")) {
        for (const auto& f : j["quadrics"]) {
            Poly q = poly_from_json(f);
            if (!q.homogeneous(2))
                throw std::invalid_argument("catalog file: quadric of " + v.id + " is not homogeneous of degree 2");
            v.quadrics.push_back(q);
        }
    }
    if (j.contains("forms"))
        for (const auto& f : j["forms"]) v.ambient_forms.push_back(poly_from_json(f));
    if (j.contains("fiber_product")) {
        const auto& f = j["fiber_product"];
        FiberProductData d;
        d.left = f.at("left").get<std::string>();
        d.right = f.at("right").get<std::string>();
        auto rat = [](const std::string& s) {
            Rat r(s);
            r.canonicalize();
            return r;
        };
        d.lambda_left = rat(f.at("lambda_left").get<std::string>());
        d.lambda_right = rat(f.at("lambda_right").get<std::string>());
        auto m = f.at("matching").get<std::vector<std::string>>();
        if (m.size() != 4) throw std::invalid_argument("catalog file: matching needs 4 entries");
        d.matching = Moebius{rat(m[0]), rat(m[1]), rat(m[2]), rat(m[3])};
        d.trace_twist = Int(f.at("trace_twist").get<std::string>());
        v.fiber_product = d;
    }
    if (j.contains("node_count")) v.node_count = j["node_count"].get<unsigned>();
    v.nodes_isolated = j.value("nodes_isolated", false);
    v.congruence_checked = j.value("congruence_checked", false);
    return v;
}

}  // namespace

Registry Registry::from_json_text(const std::string& text) {
    Registry reg;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("catalog file: ") + e.what());
    }
    if (j.contains("varieties"))
        for (const auto& e : j["varieties"]) reg.add_variety(variety_from_json(e));
    return reg;
}

Registry Registry::builtin_extended_with(const std::string& json_text) {
    Registry reg = builtin();
    Registry user = from_json_text(json_text);
    for (const auto& id : user.variety_ids()) reg.add_variety(user.variety(id));
    return reg;
}

}  // namespace cy8
