#include "cy8/symbolic.hpp"

#include <algorithm>
#include <stdexcept>

namespace cy8 {

bool certificate_ok(const Certificate& c) {
    return std::visit([](const auto& x) { return x.ok; }, c);
}

std::string certificate_summary(const Certificate& c) {
    return std::visit([](const auto& x) { return x.note; }, c);
}

Poly reduce_square_relations(const Poly& value, const std::vector<SquareRewrite>& relations,
                             std::vector<std::pair<std::size_t, Poly>>* trace) {
    for (const auto& r : relations) {
        for (const auto& r2 : relations) {
            for (const auto& [e, c] : r.replacement.terms()) {
                (void)c;
                if (e[r2.var] != 0)
                    throw std::invalid_argument("reduce_square_relations: replacement mentions a rewrite variable "
                                                "(cyclic relations rejected)");
            }
        }
    }
    Poly cur = value;
    for (std::size_t ri = 0; ri < relations.size(); ++ri) {
        const auto& rel = relations[ri];
        Poly next(cur.vars());
        Poly mult(cur.vars());
        for (const auto& [e, c] : cur.terms()) {
            unsigned k = e[rel.var];
            if (k < 2) {
                next.add_term(e, c);
                continue;
            }
            unsigned a = k / 2, b = k % 2;
            auto base = e;
            base[rel.var] = b;
            Poly mono(cur.vars());
            mono.add_term(base, c);
            // c x^base v^{2a} = c x^base R^a + c x^base (v^2 - R) sum_{j<a} v^{2j} R^{a-1-j}
            next = next + mono * rel.replacement.pow(a);
            if (trace) {
                Poly geom(cur.vars());
                for (unsigned j = 0; j < a; ++j) {
                    std::vector<unsigned> ve(cur.vars().size(), 0);
                    ve[rel.var] = 2 * j;
                    Poly vj(cur.vars());
                    vj.add_term(ve, Rat(1));
                    geom = geom + vj * rel.replacement.pow(a - 1 - j);
                }
                mult = mult + mono * geom;
            }
        }
        if (trace && !mult.is_zero()) trace->emplace_back(ri, mult);
        cur = next;
    }
    return cur;
}

namespace {

Poly substitute_into(const Poly& target, const std::vector<Poly>& components) {
    if (components.size() != target.vars().size())
        throw std::invalid_argument("pullback: component count does not match target arity");
    return target.substitute(components);
}

CofactorCertificate divide_by_source(Poly pullback, const Poly& source, bool require_even) {
    CofactorCertificate cert;
    cert.pullback = pullback;
    if (pullback.is_zero()) {
        cert.note = "pullback vanished identically";
        return cert;
    }
    auto [ep, cp] = pullback.leading_term();
    auto [es, cs] = source.leading_term();
    std::vector<unsigned> co(ep.size());
    for (std::size_t i = 0; i < ep.size(); ++i) {
        if (ep[i] < es[i]) {
            cert.residual = pullback;
            cert.note = "leading monomial not divisible by source leading monomial";
            return cert;
        }
        co[i] = ep[i] - es[i];
    }
    Poly cof(pullback.vars());
    cof.add_term(co, cp / cs);
    cert.unit = cp / cs;
    cert.cofactor_exps = co;
    cert.residual = pullback - cof * source;
    bool even = true;
    if (require_even)
        for (auto e : co) even &= (e % 2 == 0);
    cert.ok = cert.residual.is_zero() && even;
    if (cert.ok) {
        std::string mono;
        for (std::size_t i = 0; i < co.size(); ++i)
            if (co[i]) mono += (mono.empty() ? "" : "*") + pullback.vars()[i] + "^" + std::to_string(co[i]);
        cert.note = "pullback = (" + cert.unit.get_str() + ")" + (mono.empty() ? "" : " * " + mono) + " * source";
    } else if (cert.residual.is_zero()) {
        cert.note = "cofactor monomial has an odd exponent";
    } else {
        cert.note = "nonzero remainder of degree " + std::to_string(cert.residual.total_degree());
    }
    return cert;
}

}  // namespace

CofactorCertificate verify_cover(const std::vector<Poly>& components, const Poly& target_eq,
                                 const Poly& source_eq) {
    // weighted homogeneity sanity: every component must be a form
    for (const auto& c : components)
        if (!c.is_zero() && !c.homogeneous(c.total_degree()))
            throw std::invalid_argument("verify_cover: inhomogeneous map component " + c.str());
    Poly pullback = substitute_into(target_eq, components);
    return divide_by_source(pullback, source_eq, /*require_even=*/true);
}

RewriteCertificate verify_cover_on_relations(const std::vector<Poly>& components, const Poly& target_eq,
                                             const std::vector<SquareRewrite>& relations) {
    RewriteCertificate cert;
    cert.original = substitute_into(target_eq, components);
    cert.residual = reduce_square_relations(cert.original, relations, &cert.trace);
    cert.ok = cert.residual.is_zero();
    cert.note = cert.ok ? "pullback rewrites to zero under the source relations"
                        : "residual " + cert.residual.str();
    return cert;
}

CofactorCertificate verify_cremona(const std::vector<Poly>& sigma, const Poly& octic1, const Poly& octic2) {
    if (!octic1.homogeneous(8) || !octic2.homogeneous(8))
        throw std::invalid_argument("verify_cremona: inputs must be degree-8 forms");
    Poly pullback = substitute_into(octic2, sigma);
    return divide_by_source(pullback, octic1, /*require_even=*/true);
}

RewriteCertificate verify_isogeny(const PolyFrac& X, const PolyFrac& Y, const Poly& source_rhs,
                                  const Poly& target_rhs) {
    if (X.den.is_zero() || Y.den.is_zero())
        throw std::invalid_argument("verify_isogeny: map component with zero denominator");
    const auto& vars = X.num.vars();
    // value of y^2 - target_rhs(X) over the common denominator Yd^2 * Xd^3
    Poly xn = X.num, xd = X.den, yn = Y.num, yd = Y.den;
    // target_rhs is a polynomial in x (and t); substitute x -> xn/xd keeping
    // track of the denominator xd^deg_x
    unsigned dx = 0;
    for (const auto& [e, c] : target_rhs.terms()) {
        (void)c;
        dx = std::max(dx, e[0]);
    }
    Poly acc(vars);
    for (const auto& [e, c] : target_rhs.terms()) {
        // coefficient c * x^e0 * t^e2 -> c * xn^e0 * xd^{dx-e0} * t^e2
        Poly term = Poly::constant(c, vars);
        std::vector<unsigned> rest = e;
        rest[0] = 0;
        Poly mono(vars);
        mono.add_term(rest, Rat(1));
        term = term * mono * xn.pow(e[0]) * xd.pow(dx - e[0]);
        acc = acc + term;
    }
    // y^2 -> yn^2 / yd^2 ; equation numerator = yn^2 xd^dx - acc yd^2
    Poly numerator = yn * yn * xd.pow(dx) - acc * yd * yd;

    // y is variable index 1 in the {x, y, t} roster
    unsigned yvar = 1;
    std::vector<SquareRewrite> rel = {{yvar, source_rhs}};
    RewriteCertificate cert;
    cert.original = numerator;
    cert.residual = reduce_square_relations(numerator, rel, &cert.trace);
    cert.ok = cert.residual.is_zero();
    cert.note = cert.ok ? "isogeny relation reduces to zero modulo the source equation"
                        : "residual of degree " + std::to_string(cert.residual.total_degree());
    return cert;
}

namespace {

// square root of a rational function that is a perfect square; nullopt otherwise
std::optional<RatFunc> ratfunc_sqrt(const RatFunc& f) {
    if (f.is_zero()) return RatFunc(UniPoly());
    auto poly_sqrt = [](const UniPoly& p) -> std::optional<UniPoly> {
        if (p.degree() == 0) return std::nullopt;  // handled by caller via content
        UniPoly root = UniPoly::constant(Rat(1));
        for (const auto& [f2, m] : squarefree_decomposition(p)) {
            if (m % 2) return std::nullopt;
            root = root * f2.pow(m / 2);
        }
        return root;
    };
    UniPoly n = f.num(), d = f.den();
    UniPoly rn = UniPoly::constant(Rat(1)), rd = UniPoly::constant(Rat(1));
    if (n.degree() >= 1) {
        auto r = poly_sqrt(n.monic());
        if (!r) return std::nullopt;
        rn = *r;
    }
    if (d.degree() >= 1) {
        auto r = poly_sqrt(d.monic());
        if (!r) return std::nullopt;
        rd = *r;
    }
    // the remaining scalar must be a rational square
    RatFunc rest = f / (RatFunc(rn * rn) / RatFunc(rd * rd));
    if (!(rest.num().degree() == 0 && rest.den().degree() == 0)) return std::nullopt;
    Rat c = rest.num()[0] / rest.den()[0];
    if (c < 0) return std::nullopt;
    Int ns, ds;
    if (!mpz_perfect_square_p(c.get_num().get_mpz_t()) || !mpz_perfect_square_p(c.get_den().get_mpz_t()))
        return std::nullopt;
    mpz_sqrt(ns.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_sqrt(ds.get_mpz_t(), c.get_den().get_mpz_t());
    Rat scale(ns, ds);
    scale.canonicalize();
    return RatFunc(rn * scale, rd);
}

}  // namespace

ModelMatchCertificate verify_base_change(const WeierstrassModel& base, const UniPoly& substitution,
                                         const WeierstrassModel& pulled) {
    ModelMatchCertificate cert;
    if (substitution.degree() < 1) {
        cert.note = "substitution must be nonconstant";
        return cert;
    }
    WeierstrassModel E = base.base_change(substitution);
    if (E.c4().is_zero() || E.c6().is_zero() || pulled.c4().is_zero() || pulled.c6().is_zero()) {
        cert.note = "c4 or c6 vanishes; matching by invariants unavailable";
        return cert;
    }
    // probe = pulled with x -> x + r0 then (x,y) -> (x/u^2, y/u^3); matching
    // the invariants forces u^4 = c4(pulled)/c4(E), u^6 = c6(pulled)/c6(E)
    RatFunc r4 = pulled.c4() / E.c4();
    RatFunc r6 = pulled.c6() / E.c6();
    RatFunc u2 = r6 / r4;
    if (!(u2 * u2 == r4) || !(u2 * u2 * u2 == r6)) {
        cert.note = "invariant ratios are not compatible (different j or twist)";
        return cert;
    }
    auto u = ratfunc_sqrt(u2);
    if (!u) {
        cert.u = u2;  // record the obstruction
        cert.note = "u^2 = " + u2.str() + " is not a square in Q(t): quadratic twist, not an isomorphism";
        return cert;
    }
    RatFunc r0 = (E.A() * u2 - pulled.A()) / RatFunc::constant(Rat(3));
    WeierstrassModel probe = pulled.shift_x(r0).rescale(*u);
    // probe should equal E exactly
    if (!(probe == E)) {
        cert.note = "coefficient match failed after (u, r0) transformation";
        return cert;
    }
    cert.ok = true;
    cert.u = *u;
    cert.r0 = r0;
    cert.note = "pullback isomorphic via u = " + u->str() + ", r0 = " + r0.str();
    return cert;
}

RewriteCertificate verify_on_variety(const std::vector<PolyFrac>& components,
                                     const std::vector<SquareRewrite>& relations, const Poly& target_eq) {
    if (components.size() != target_eq.vars().size())
        throw std::invalid_argument("verify_on_variety: component count does not match target arity");
    const auto& vars = components.empty() ? target_eq.vars() : components[0].num.vars();
    // substitute with a single common denominator D = prod den_i^{deg_i}
    // (clear denominators term by term against the total degree per variable)
    std::vector<unsigned> maxdeg(components.size(), 0);
    for (const auto& [e, c] : target_eq.terms()) {
        (void)c;
        for (std::size_t i = 0; i < e.size(); ++i) maxdeg[i] = std::max(maxdeg[i], e[i]);
    }
    Poly acc(vars);
    for (const auto& [e, c] : target_eq.terms()) {
        Poly term = Poly::constant(c, vars);
        for (std::size_t i = 0; i < e.size(); ++i) {
            term = term * components[i].num.pow(e[i]) * components[i].den.pow(maxdeg[i] - e[i]);
        }
        acc = acc + term;
    }
    RewriteCertificate cert;
    cert.original = acc;
    cert.residual = reduce_square_relations(acc, relations, &cert.trace);
    cert.ok = cert.residual.is_zero();
    cert.note = cert.ok ? "substitution reduces to zero modulo the variety relations"
                        : "residual of degree " + std::to_string(cert.residual.total_degree());
    return cert;
}

bool recheck(const CofactorCertificate& c, const Poly& source_eq) {
    if (!c.ok) return false;
    Poly cof(c.pullback.vars());
    cof.add_term(c.cofactor_exps, c.unit);
    Poly recomposed = cof * source_eq + c.residual;
    return recomposed == c.pullback;
}

bool recheck(const RewriteCertificate& c, const std::vector<SquareRewrite>& relations) {
    Poly acc = c.residual;
    const auto& vars = c.original.vars();
    for (const auto& [idx, mult] : c.trace) {
        const auto& rel = relations.at(idx);
        std::vector<unsigned> e(vars.size(), 0);
        e[rel.var] = 2;
        Poly v2(vars);
        v2.add_term(e, Rat(1));
        acc = acc + mult * (v2 - rel.replacement);
    }
    return acc == c.original;
}

bool recheck(const ModelMatchCertificate& c, const WeierstrassModel& base, const UniPoly& substitution,
             const WeierstrassModel& pulled) {
    if (!c.ok) return false;
    WeierstrassModel E = base.base_change(substitution);
    WeierstrassModel probe = pulled.shift_x(c.r0).rescale(c.u);
    return probe == E;
}

}  // namespace cy8
