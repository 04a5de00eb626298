#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cy8/ff.hpp"
#include "cy8/poly.hpp"
#include "cy8/unipoly.hpp"

namespace cy8 {

// Rational function in one variable t, normalized: gcd(num, den) = 1,
// denominator primitive with positive leading coefficient.
class RatFunc {
  public:
    RatFunc() : num_(), den_(UniPoly::constant(Rat(1))) {}
    RatFunc(UniPoly num, UniPoly den);
    RatFunc(const UniPoly& p) : num_(p), den_(UniPoly::constant(Rat(1))) {}  // NOLINT implicit
    static RatFunc constant(const Rat& c) { return RatFunc(UniPoly::constant(c)); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    RatFunc pow(unsigned e) const;

    // substitute t -> r(t)
    RatFunc compose(const RatFunc& r) const;

    // order of vanishing at t = a (negative for poles)
    int valuation_at(const Rat& a) const;
    // order of vanishing at t = infinity: deg den - deg num
    int valuation_at_infinity() const;
    // multiplicity of a monic nonconstant factor f
    int valuation_at(const UniPoly& f) const;

    std::string str(const std::string& var = "t") const;

  private:
    UniPoly num_, den_;
    void normalize();
};

// Place of the projective t-line: t = a for rational a, the closed point of a
// monic irreducible polynomial, or t = infinity.
struct Place {
    bool at_infinity = false;
    UniPoly minpoly;  // monic, nonconstant when finite

    static Place rational(const Rat& a) { return {false, UniPoly({-a, Rat(1)})}; }
    static Place infinity() { return {true, UniPoly()}; }
    bool is_rational() const { return at_infinity || minpoly.degree() == 1; }
    // value for degree-1 places; infinity has none
    Rat value() const { return -minpoly[0]; }
    std::string str() const;
    bool operator==(const Place& o) const { return at_infinity == o.at_infinity && minpoly == o.minpoly; }
};

struct KodairaType {
    enum Kind { In, Instar, II, III, IV, IVstar, IIIstar, IIstar } kind = In;
    unsigned n = 0;  // for In / Instar

    unsigned local_euler() const;
    std::string str() const;          // I4, I2*, ...
    std::string display() const;      // I2* shown with its D-alias D6*
    bool operator==(const KodairaType& o) const { return kind == o.kind && n == o.n; }
};

KodairaType classify_kodaira(unsigned v_c4, unsigned v_c6, unsigned v_disc);

struct KodairaFiber {
    Place place;
    KodairaType type;
};

// Elliptic curve over Q(t) in the form y^2 = x^3 + A x^2 + B x + C.
//
//   b2 = 4A    b4 = 2B    b6 = 4C
//   c4 = b2^2 - 24 b4
//   c6 = -b2^3 + 36 b2 b4 - 216 b6
//   1728 disc = c4^3 - c6^2
class WeierstrassModel {
  public:
    WeierstrassModel(RatFunc A, RatFunc B, RatFunc C);

    const RatFunc& A() const { return A_; }
    const RatFunc& B() const { return B_; }
    const RatFunc& C() const { return C_; }
    const RatFunc& c4() const { return c4_; }
    const RatFunc& c6() const { return c6_; }
    const RatFunc& disc() const { return disc_; }
    RatFunc j_invariant() const;

    // model in the local coordinate s = 1/t, integral and minimal at s = 0
    const WeierstrassModel& infinity_model() const;

    // (v(c4), v(c6), v(disc)) of a minimal integral model at the place
    struct LocalData {
        unsigned v_c4, v_c6, v_disc;
        int scaling;  // exponent k of the uniformizer used to minimalize
    };
    LocalData local_data(const Place& place) const;

    KodairaFiber kodaira_type(const Place& place) const;
    std::vector<KodairaFiber> fiber_configuration() const;
    unsigned total_euler() const;

    // number of points of the plane cubic over F_p at t = t0 (p+1 means t0
    // = infinity uses the s-model at s=0); singular fibers counted as they
    // are, node and cusp once.
    std::uint64_t fiber_count(std::uint64_t t0_or_p_for_infinity, bool at_infinity,
                              const PrimeField& F) const;

    // coefficients rescaled by (x,y) -> (u^2 x, u^3 y)
    WeierstrassModel rescale(const RatFunc& u) const;
    // x -> x + r0 shift
    WeierstrassModel shift_x(const RatFunc& r0) const;
    // t -> r(t)
    WeierstrassModel base_change(const UniPoly& r) const;

    bool operator==(const WeierstrassModel& o) const { return A_ == o.A_ && B_ == o.B_ && C_ == o.C_; }

  private:
    RatFunc A_, B_, C_;
    RatFunc c4_, c6_, disc_;
    mutable std::optional<std::shared_ptr<WeierstrassModel>> inf_model_;
};

// minimal integral model at a finite rational place or infinity, with the
// scaling exponent k that was removed
std::pair<WeierstrassModel, int> minimal_model_at(const WeierstrassModel& E, const Place& place);

// Branch data of a double cover of P^2 fibered by the pencil of lines
// through (1:0:0): factors are linear forms in (x, z, t); the affine chart
// t = 1 with base parameter s = z/t is used throughout.
struct QuarticBranch {
    std::vector<Poly> factors;  // vars {x, z, t}
};

// Convert the branch data to a Weierstrass model over Q(s); the x-root of
// the first x-dependent factor is sent to infinity. Throws when two
// sections coincide identically (degenerate family).
WeierstrassModel from_quartic(const QuarticBranch& branch);

// 2-isogeny quotient by (0,0) of y^2 = x^3 + A x^2 + B x: target
// y^2 = (x+A)(x^2-4B) and the map (x,y) -> (x + B/x, y (1 - B/x^2)).
struct TwoTorsionQuotient {
    WeierstrassModel target;
    // map components as fractions in the variables {x, y, t}
    Poly x_num, x_den, y_num, y_den;
};
TwoTorsionQuotient quotient_by_two_torsion(const RatFunc& A, const RatFunc& B);

}  // namespace cy8
