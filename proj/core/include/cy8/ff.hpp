#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cy8/numeric.hpp"

namespace cy8 {

// Arithmetic context for F_p, p an odd prime, with the quadratic character
// chi(a) in {-1,0,+1}. Character values are table-driven for p <= 2^16 and
// computed by exponentiation above that. Immutable after construction.
class PrimeField {
  public:
    explicit PrimeField(std::uint64_t p);

    std::uint64_t p() const { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;

    // chi(a) = a^((p-1)/2) read in {-1,0,1}
    int legendre(std::uint64_t a) const;
    // #{u in F_p : u^2 = a} = 1 + chi(a)
    int sqrt_count(std::uint64_t a) const { return 1 + legendre(a); }

    std::uint64_t reduce(const Int& v) const;
    std::uint64_t reduce(const Rat& v) const;

  private:
    std::uint64_t p_;
    std::vector<std::int8_t> chi_;  // empty when p > 2^16
};

// Multivariate form with integer coefficients in expanded sparse-monomial
// representation; at most 8 variables (enough for the P^7 intersections).
struct Form {
    static constexpr int kMaxVars = 8;
    using Exps = std::array<std::uint8_t, kMaxVars>;

    int nvars = 0;
    std::vector<std::pair<Int, Exps>> terms;

    void add_term(const Int& c, const Exps& e);
    bool homogeneous(unsigned degree) const;
    unsigned total_degree() const;

    static Form product(const std::vector<Form>& factors);
    Form operator*(const Form& o) const;
};

// A Form with coefficients reduced into a fixed PrimeField, ready for the
// counting loops. Reduction happens once per (form, p).
class ReducedForm {
  public:
    ReducedForm(const Form& f, const PrimeField& F);

    int nvars() const { return nvars_; }
    unsigned max_exp() const { return max_exp_; }

    // point must have nvars entries in [0, p-1]
    std::uint64_t eval(const std::uint64_t* point, const PrimeField& F) const;

  private:
    int nvars_;
    unsigned max_exp_;
    std::vector<std::pair<std::uint64_t, Form::Exps>> terms_;
};

}  // namespace cy8
