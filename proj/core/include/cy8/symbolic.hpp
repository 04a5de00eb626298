#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cy8/elliptic.hpp"
#include "cy8/poly.hpp"

namespace cy8 {

// Numerator/denominator pair over a shared roster; not reduced.
struct PolyFrac {
    Poly num, den;

    static PolyFrac of(Poly p) {
        Poly one = Poly::constant(Rat(1), p.vars());
        return {std::move(p), std::move(one)};
    }
};

// A relation solved for the square of one variable: var^2 = replacement,
// where replacement contains no rewrite variable (this keeps the directed
// rewriting terminating by degree descent).
struct SquareRewrite {
    unsigned var;
    Poly replacement;
};

// pullback = unit * x^monomial * source + residual, found by leading-term
// division in graded-lex order. Success means residual = 0 and the cofactor
// exponent vector is even in every variable.
struct CofactorCertificate {
    bool ok = false;
    Rat unit;
    std::vector<unsigned> cofactor_exps;
    Poly pullback;
    Poly residual;
    std::string note;
};

// original = sum_i multiplier_i * (v_i^2 - R_i) + residual. Success means
// residual = 0. The multipliers are the re-checkable trace.
struct RewriteCertificate {
    bool ok = false;
    Poly original;
    Poly residual;
    std::vector<std::pair<std::size_t, Poly>> trace;
    std::string note;
};

// pulled-back model equals target after (x,y) -> (u^2 x + r0, u^3 y).
struct ModelMatchCertificate {
    bool ok = false;
    RatFunc u, r0;
    std::string note;
};

using Certificate = std::variant<CofactorCertificate, RewriteCertificate, ModelMatchCertificate>;

bool certificate_ok(const Certificate& c);
std::string certificate_summary(const Certificate& c);

// Rewrite every v^2 (v a rewrite variable) until none remains; records the
// relation multipliers when trace is non-null.
Poly reduce_square_relations(const Poly& value, const std::vector<SquareRewrite>& relations,
                             std::vector<std::pair<std::size_t, Poly>>* trace = nullptr);

// --- certificate constructors -------------------------------------------

// Weighted-projective double-cover pullback: components give the images of
// the source variables (including the cover coordinate w); certifies
//   (pullback of target_eq) = unit * m^2 * source_eq
// where target_eq/source_eq are the full equations w^2 - branch form.
CofactorCertificate verify_cover(const std::vector<Poly>& components, const Poly& target_eq,
                                 const Poly& source_eq);

// As above but the source is cut out by square relations (u_i^2 = f_i);
// certifies the pullback of target_eq rewrites to zero.
RewriteCertificate verify_cover_on_relations(const std::vector<Poly>& components, const Poly& target_eq,
                                             const std::vector<SquareRewrite>& relations);

// sigma-pullback of octic2 = unit * m^2 * octic1
CofactorCertificate verify_cremona(const std::vector<Poly>& sigma, const Poly& octic1, const Poly& octic2);

// Substitute the map (x,y) -> (X,Y) into y^2 = rhs_target(x,t), clear
// denominators, rewrite y^2 -> rhs_source(x,t); certifies zero. The rosters
// are {x, y, t}.
RewriteCertificate verify_isogeny(const PolyFrac& X, const PolyFrac& Y, const Poly& source_rhs,
                                  const Poly& target_rhs);

// E_base pulled back along t -> r(t) is isomorphic to E_pulled via
// (x,y) -> (u^2 x + r0, u^3 y) with explicit u, r0 in Q(t).
ModelMatchCertificate verify_base_change(const WeierstrassModel& base, const UniPoly& substitution,
                                         const WeierstrassModel& pulled);

// Substitute rational-map components into target_eq, clear denominators,
// rewrite with the source relations; certifies zero residual (the residual
// is reported either way).
RewriteCertificate verify_on_variety(const std::vector<PolyFrac>& components,
                                     const std::vector<SquareRewrite>& relations, const Poly& target_eq);

// --- independent re-checks ----------------------------------------------
// Each recheck re-multiplies the stored cofactors against freshly computed
// data; it never reuses the search path that produced the certificate.

bool recheck(const CofactorCertificate& c, const Poly& source_eq);
bool recheck(const RewriteCertificate& c, const std::vector<SquareRewrite>& relations);
bool recheck(const ModelMatchCertificate& c, const WeierstrassModel& base, const UniPoly& substitution,
             const WeierstrassModel& pulled);

}  // namespace cy8
