#include "cy8/elliptic.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace cy8 {

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = UniPoly::constant(Rat(1));
        return;
    }
    UniPoly g = gcd(num_, den_);
    if (g.degree() >= 1) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    UniPoly dp = den_.primitive();
    Rat scale = den_.leading() / dp.leading();
    den_ = dp;
    num_ = num_ * (Rat(1) / scale);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}
RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::pow(unsigned e) const {
    RatFunc out = RatFunc::constant(Rat(1));
    RatFunc base = *this;
    while (e) {
        if (e & 1) out = out * base;
        if (e > 1) base = base * base;
        e >>= 1;
    }
    return out;
}

RatFunc RatFunc::compose(const RatFunc& r) const {
    // p(n/d) with p of degree k: sum p_i n^i d^{k-i} / d^k
    auto comp = [&](const UniPoly& p) {
        int k = p.degree();
        if (k <= 0) return std::pair<UniPoly, int>(p, 0);
        UniPoly acc;
        for (int i = 0; i <= k; ++i) {
            if (p[static_cast<std::size_t>(i)] == 0) continue;
            acc = acc + r.num().pow(static_cast<unsigned>(i)) *
                            r.den().pow(static_cast<unsigned>(k - i)) * p[static_cast<std::size_t>(i)];
        }
        return std::pair<UniPoly, int>(acc, k);
    };
    auto [nn, kn] = comp(num_);
    auto [dd, kd] = comp(den_);
    // rebalance the d^k powers
    if (kn > kd)
        dd = dd * r.den().pow(static_cast<unsigned>(kn - kd));
    else if (kd > kn)
        nn = nn * r.den().pow(static_cast<unsigned>(kd - kn));
    return RatFunc(nn, dd);
}

int RatFunc::valuation_at(const Rat& a) const {
    UniPoly lin({-a, Rat(1)});
    return valuation_at(lin);
}

int RatFunc::valuation_at(const UniPoly& f) const {
    if (is_zero()) throw std::domain_error("RatFunc::valuation of zero");
    return static_cast<int>(num_.valuation(f)) - static_cast<int>(den_.valuation(f));
}

int RatFunc::valuation_at_infinity() const {
    if (is_zero()) throw std::domain_error("RatFunc::valuation of zero");
    return den_.degree() - num_.degree();
}

std::string RatFunc::str(const std::string& var) const {
    if (is_polynomial()) {
        Rat d = den_[0];
        if (d == 1) return num_.str(var);
        return "(" + num_.str(var) + ")/" + d.get_str();
    }
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

std::string Place::str() const {
    if (at_infinity) return "inf";
    if (minpoly.degree() == 1) return value().get_str();
    return minpoly.str("t") + " = 0";
}

unsigned KodairaType::local_euler() const {
    switch (kind) {
        case In: return n;
        case Instar: return n + 6;
        case II: return 2;
        case III: return 3;
        case IV: return 4;
        case IVstar: return 8;
        case IIIstar: return 9;
        case IIstar: return 10;
    }
    return 0;
}

std::string KodairaType::str() const {
    switch (kind) {
        case In: return "I" + std::to_string(n);
        case Instar: return "I" + std::to_string(n) + "*";
        case II: return "II";
        case III: return "III";
        case IV: return "IV";
        case IVstar: return "IV*";
        case IIIstar: return "III*";
        case IIstar: return "II*";
    }
    return "?";
}

std::string KodairaType::display() const {
    if (kind == Instar) return str() + " (D" + std::to_string(n + 4) + "*)";
    return str();
}

KodairaType classify_kodaira(unsigned v4, unsigned v6, unsigned vd) {
    if (vd == 0) return {KodairaType::In, 0};
    if (v4 == 0) return {KodairaType::In, vd};
    // additive types; v_c4 >= 1 from here on
    if (v6 == 1) return {KodairaType::II, 0};
    if (v4 == 1 && v6 >= 2) return {KodairaType::III, 0};
    if (v4 >= 2 && v6 == 2) return {KodairaType::IV, 0};
    if (vd == 6 && v4 >= 2 && v6 >= 3) return {KodairaType::Instar, 0};
    if (v4 == 2 && v6 == 3 && vd > 6) return {KodairaType::Instar, vd - 6};
    if (v4 >= 3 && v6 == 4) return {KodairaType::IVstar, 0};
    if (v4 == 3 && v6 >= 5) return {KodairaType::IIIstar, 0};
    if (v4 >= 4 && v6 == 5) return {KodairaType::IIstar, 0};
    throw std::domain_error("classify_kodaira: no type for (" + std::to_string(v4) + "," + std::to_string(v6) +
                            "," + std::to_string(vd) + ") -- model not minimal?");
}

WeierstrassModel::WeierstrassModel(RatFunc A, RatFunc B, RatFunc C)
    : A_(std::move(A)), B_(std::move(B)), C_(std::move(C)) {
    RatFunc b2 = A_ * RatFunc::constant(Rat(4));
    RatFunc b4 = B_ * RatFunc::constant(Rat(2));
    RatFunc b6 = C_ * RatFunc::constant(Rat(4));
    c4_ = b2 * b2 - b4 * RatFunc::constant(Rat(24));
    c6_ = -(b2 * b2 * b2) + b2 * b4 * RatFunc::constant(Rat(36)) - b6 * RatFunc::constant(Rat(216));
    // disc via the b-invariants; c4^3 - c6^2 = 1728 disc is asserted below
    RatFunc b8 = (b2 * b6 - b4 * b4) / RatFunc::constant(Rat(4));
    disc_ = -(b2 * b2 * b8) - b4 * b4 * b4 * RatFunc::constant(Rat(8)) - b6 * b6 * RatFunc::constant(Rat(27)) +
            b2 * b4 * b6 * RatFunc::constant(Rat(9));
    if (disc_.is_zero()) throw std::invalid_argument("WeierstrassModel: identically zero discriminant");
    RatFunc check = c4_ * c4_ * c4_ - c6_ * c6_ - disc_ * RatFunc::constant(Rat(1728));
    if (!check.is_zero()) throw std::logic_error("WeierstrassModel: c4^3 - c6^2 != 1728 disc");
}

RatFunc WeierstrassModel::j_invariant() const { return c4_ * c4_ * c4_ / disc_; }

WeierstrassModel WeierstrassModel::rescale(const RatFunc& u) const {
    RatFunc u2 = u * u;
    return WeierstrassModel(A_ / u2, B_ / (u2 * u2), C_ / (u2 * u2 * u2));
}

WeierstrassModel WeierstrassModel::shift_x(const RatFunc& r0) const {
    // x -> x + r0 : y^2 = (x+r0)^3 + A(x+r0)^2 + B(x+r0) + C
    RatFunc three(UniPoly::constant(Rat(3)));
    RatFunc A2 = A_ + r0 * three;
    RatFunc B2 = B_ + A_ * r0 * RatFunc::constant(Rat(2)) + r0 * r0 * three;
    RatFunc C2 = C_ + B_ * r0 + A_ * r0 * r0 + r0 * r0 * r0;
    return WeierstrassModel(A2, B2, C2);
}

WeierstrassModel WeierstrassModel::base_change(const UniPoly& r) const {
    RatFunc rr(r);
    return WeierstrassModel(A_.compose(rr), B_.compose(rr), C_.compose(rr));
}

const WeierstrassModel& WeierstrassModel::infinity_model() const {
    if (!inf_model_) {
        // t = 1/s, then rescale x,y by s^{2k}, s^{3k} until integral at s=0,
        // then strip surplus factors of s^12 from the discriminant
        RatFunc s_inv(UniPoly({Rat(0), Rat(1)}));  // placeholder var s
        auto flip = [](const RatFunc& f) {
            // f(1/s) = s^{deg den - deg num} * rev(num)/rev(den) up to powers
            UniPoly n = f.num().reversed();
            UniPoly d = f.den().reversed();
            int shift = f.den().degree() - f.num().degree();
            UniPoly sp = UniPoly::t().pow(static_cast<unsigned>(shift > 0 ? shift : 0));
            UniPoly sn = UniPoly::t().pow(static_cast<unsigned>(shift < 0 ? -shift : 0));
            return RatFunc(n * sp, d * sn);
        };
        RatFunc A = flip(A_), B = flip(B_), C = flip(C_);
        int k = 0;
        auto pole = [](const RatFunc& f) { return f.is_zero() ? 0 : std::max(0, -f.valuation_at(Rat(0))); };
        while (std::max({pole(A) - 2 * k, pole(B) - 4 * k, pole(C) - 6 * k}) > 0) ++k;
        RatFunc u(UniPoly::t().pow(static_cast<unsigned>(k)));
        WeierstrassModel m = WeierstrassModel(A, B, C).rescale(RatFunc(UniPoly::constant(Rat(1))) / u);
        auto [mm, kk] = minimal_model_at(m, Place::rational(Rat(0)));
        (void)kk;
        inf_model_ = std::make_shared<WeierstrassModel>(mm);
    }
    return **inf_model_;
}

std::pair<WeierstrassModel, int> minimal_model_at(const WeierstrassModel& E, const Place& place) {
    if (place.at_infinity) {
        auto m = E.infinity_model();
        return {m, 0};
    }
    const UniPoly& f = place.minpoly;
    auto val = [&](const RatFunc& g) { return g.is_zero() ? 1 << 20 : g.valuation_at(f); };
    int k = 0;
    int v4 = val(E.c4()), v6 = val(E.c6()), vd = E.disc().valuation_at(f);
    // also clear denominators (negative scaling) so the model is integral
    while (v4 - 4 * k >= 4 && v6 - 6 * k >= 6 && vd - 12 * k >= 12) ++k;
    while (v4 - 4 * k < 0 || v6 - 6 * k < 0 || vd - 12 * k < 0) --k;
    if (k == 0) return {E, 0};
    RatFunc u(f.pow(static_cast<unsigned>(k > 0 ? k : 0)));
    if (k < 0) u = RatFunc(UniPoly::constant(Rat(1))) / RatFunc(f.pow(static_cast<unsigned>(-k)));
    return {E.rescale(u), k};
}

WeierstrassModel::LocalData WeierstrassModel::local_data(const Place& place) const {
    const WeierstrassModel* m = this;
    WeierstrassModel local = *this;
    int k = 0;
    UniPoly f;
    if (place.at_infinity) {
        local = infinity_model();
        m = &local;
        f = UniPoly::t();
    } else {
        auto [mm, kk] = minimal_model_at(*this, place);
        local = mm;
        m = &local;
        k = kk;
        f = place.minpoly;
    }
    auto val = [&](const RatFunc& g) -> unsigned {
        if (g.is_zero()) return 1u << 16;
        int v = g.valuation_at(f);
        if (v < 0) throw std::logic_error("local_data: model not integral at place");
        return static_cast<unsigned>(v);
    };
    unsigned vd_i = val(m->disc());
    return {val(m->c4()), val(m->c6()), vd_i, k};
}

KodairaFiber WeierstrassModel::kodaira_type(const Place& place) const {
    auto d = local_data(place);
    return {place, classify_kodaira(d.v_c4, d.v_c6, d.v_disc)};
}

std::vector<KodairaFiber> WeierstrassModel::fiber_configuration() const {
    std::vector<KodairaFiber> out;
    UniPoly dn = disc().num().primitive();
    // denominator places can also carry bad fibers of the minimal model
    UniPoly dd = disc().den().primitive();
    UniPoly support = (dn * dd).primitive();
    auto roots = rational_roots(support);
    UniPoly rest = support;
    for (const auto& [r, m] : roots) {
        (void)m;
        UniPoly lin({-r, Rat(1)});
        while (true) {
            auto [q, rr] = rest.divmod(lin);
            if (!rr.is_zero()) break;
            rest = q;
        }
        auto fib = kodaira_type(Place::rational(r));
        if (!(fib.type == KodairaType{KodairaType::In, 0})) out.push_back(fib);
    }
    // residual non-rational places, by squarefree part
    if (rest.degree() >= 1) {
        for (const auto& [f, m] : squarefree_decomposition(rest)) {
            (void)m;
            Place pl{false, f.monic()};
            auto fib = kodaira_type(pl);
            if (!(fib.type == KodairaType{KodairaType::In, 0})) out.push_back(fib);
        }
    }
    auto inf = kodaira_type(Place::infinity());
    if (!(inf.type == KodairaType{KodairaType::In, 0})) out.push_back(inf);
    // stable order: rational places by value, then higher-degree, then infinity
    std::sort(out.begin(), out.end(), [](const KodairaFiber& a, const KodairaFiber& b) {
        if (a.place.at_infinity != b.place.at_infinity) return !a.place.at_infinity;
        if (a.place.at_infinity) return false;
        int da = a.place.minpoly.degree(), db = b.place.minpoly.degree();
        if (da != db) return da < db;
        if (da == 1) return a.place.value() < b.place.value();
        return a.place.minpoly.str() < b.place.minpoly.str();
    });
    return out;
}

unsigned WeierstrassModel::total_euler() const {
    unsigned e = 0;
    for (const auto& f : fiber_configuration())
        e += f.type.local_euler() * static_cast<unsigned>(f.place.at_infinity ? 1 : f.place.minpoly.degree());
    return e;
}

std::uint64_t WeierstrassModel::fiber_count(std::uint64_t t0, bool at_infinity, const PrimeField& F) const {
    const WeierstrassModel& m = at_infinity ? infinity_model() : *this;
    std::uint64_t tv = at_infinity ? 0 : t0;
    auto evalc = [&](const RatFunc& g) {
        const auto& nc = g.num().coeffs();
        const auto& dc = g.den().coeffs();
        auto horner = [&](const std::vector<Rat>& cs) {
            std::uint64_t acc = 0;
            for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = F.add(F.mul(acc, tv), F.reduce(*it));
            return acc;
        };
        std::uint64_t n = nc.empty() ? 0 : horner(nc);
        std::uint64_t d = dc.empty() ? 0 : horner(dc);
        if (d == 0) throw std::domain_error("fiber_count: coefficient has a pole at this fiber (bad prime)");
        return F.mul(n, F.inv(d));
    };
    std::uint64_t a = evalc(m.A_), b = evalc(m.B_), c = evalc(m.C_);
    std::uint64_t count = 1;  // point at infinity of the cubic
    for (std::uint64_t x = 0; x < F.p(); ++x) {
        std::uint64_t v = F.add(F.mul(F.add(F.mul(F.add(x, a), x), b), x), c);  // x^3+ax^2+bx+c
        count += static_cast<std::uint64_t>(1 + F.legendre(v));
    }
    return count;
}

WeierstrassModel from_quartic(const QuarticBranch& branch) {
    const std::vector<std::string> xzt = {"x", "z", "t"};
    // chart t=1, base parameter s=z: each factor becomes l(x) = a(s) x + b(s)
    std::vector<std::pair<UniPoly, UniPoly>> lin;  // (a, b), root -b/a
    UniPoly lead = UniPoly::constant(Rat(1));
    for (const Poly& f0 : branch.factors) {
        Poly f = f0.with_vars(xzt);
        UniPoly a, b;
        for (const auto& [e, c] : f.terms()) {
            if (e[0] > 1) throw std::invalid_argument("from_quartic: factor not linear in x");
            // z-degree becomes the s-degree; t evaluates to 1
            std::vector<Rat> mono(e[1] + 1, Rat(0));
            mono[e[1]] = c;
            if (e[0] == 1)
                a = a + UniPoly(mono);
            else
                b = b + UniPoly(mono);
        }
        if (a.is_zero()) {
            if (b.is_zero()) throw std::invalid_argument("from_quartic: zero factor");
            lead = lead * b;
        } else {
            if (a.degree() != 0) throw std::invalid_argument("from_quartic: x-coefficient must be constant");
            lin.emplace_back(a, b);
            lead = lead * a;
        }
    }
    if (lin.size() != 3 && lin.size() != 4)
        throw std::invalid_argument("from_quartic: need 3 or 4 sections, got " + std::to_string(lin.size()));
    std::vector<RatFunc> roots;
    for (auto& [a, b] : lin) roots.push_back(RatFunc(-b, a));
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if ((roots[i] - roots[j]).is_zero())
                throw std::invalid_argument("from_quartic: repeated section (degenerate family)");

    RatFunc a_lead(lead);
    std::vector<RatFunc> es;
    if (roots.size() == 4) {
        // send roots[0] to infinity: remaining 2-torsion abscissae are
        // e_i = -a * prod_{j != i} (r_0 - r_j)
        for (std::size_t i = 1; i <= 3; ++i) {
            RatFunc prod = a_lead;
            for (std::size_t j = 1; j <= 3; ++j)
                if (j != i) prod = prod * (roots[0] - roots[j]);
            es.push_back(-prod);
        }
    } else {
        for (auto& r : roots) es.push_back(a_lead * r);
    }
    // y^2 = (x - e1)(x - e2)(x - e3)
    RatFunc A = -(es[0] + es[1] + es[2]);
    RatFunc B = es[0] * es[1] + es[0] * es[2] + es[1] * es[2];
    RatFunc C = -(es[0] * es[1] * es[2]);
    return WeierstrassModel(A, B, C);
}

TwoTorsionQuotient quotient_by_two_torsion(const RatFunc& A, const RatFunc& B) {
    if (B.is_zero()) throw std::invalid_argument("quotient_by_two_torsion: B = 0, (0,0) is not a smooth 2-torsion point");
    RatFunc discr = A * A - B * RatFunc::constant(Rat(4));
    if (discr.is_zero()) throw std::invalid_argument("quotient_by_two_torsion: A^2 = 4B (degenerate torsion)");
    // y^2 = (x+A)(x^2-4B) = x^3 + A x^2 - 4B x - 4AB
    WeierstrassModel target(A, -(B * RatFunc::constant(Rat(4))),
                            -(A * B * RatFunc::constant(Rat(4))));
    const std::vector<std::string> xyt = {"x", "y", "t"};
    Poly x = Poly::variable("x", xyt), y = Poly::variable("y", xyt);
    auto lift = [&](const RatFunc& f) {
        // embed a Q(t) element as a fraction of polynomials in (x,y,t)
        auto embed = [&](const UniPoly& u) {
            Poly out(xyt);
            for (std::size_t i = 0; i < u.coeffs().size(); ++i)
                out.add_term({0, 0, static_cast<unsigned>(i)}, u[i]);
            if (u.is_zero()) return Poly(xyt);
            return out;
        };
        return std::make_pair(embed(f.num()), embed(f.den()));
    };
    auto [bn, bd] = lift(B);
    // x + B/x = (x^2 bd + bn)/(x bd);  y (1 - B/x^2) = y (x^2 bd - bn)/(x^2 bd)
    TwoTorsionQuotient q{target, x * x * bd + bn, x * bd, y * (x * x * bd - bn), x * x * bd};
    return q;
}

}  // namespace cy8
