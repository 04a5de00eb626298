#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cy8/numeric.hpp"

namespace cy8 {

// Dense univariate polynomial over Q, coefficients lowest-degree first.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(const Rat& c) { return UniPoly({c}); }
    static UniPoly t() { return UniPoly({Rat(0), Rat(1)}); }
    // c0 + c1 t + ... from integer literals
    static UniPoly from_ints(std::initializer_list<long> cs);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Rat& operator[](std::size_t i) const { return c_.at(i); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat leading() const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rat& s) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    UniPoly divexact(const UniPoly& d) const;
    UniPoly derivative() const;
    Rat eval(const Rat& x) const;
    UniPoly pow(unsigned e) const;
    // p(r(t)) for polynomial r
    UniPoly compose(const UniPoly& r) const;
    // reverse coefficients, i.e. t^deg * p(1/t)
    UniPoly reversed() const;

    // monic multiple of the primitive part; leading coefficient 1
    UniPoly monic() const;
    // positive-leading integer-primitive associate
    UniPoly primitive() const;

    // multiplicity of the monic irreducible-or-squarefree factor f
    unsigned valuation(const UniPoly& f) const;

    std::string str(const std::string& var = "t") const;

  private:
    std::vector<Rat> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic gcd

// squarefree decomposition: list of (factor, multiplicity), factors monic,
// pairwise coprime, product of factor^mult = monic(p)
std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& p);

// all rational roots with multiplicities
std::vector<std::pair<Rat, unsigned>> rational_roots(const UniPoly& p);

}  // namespace cy8
