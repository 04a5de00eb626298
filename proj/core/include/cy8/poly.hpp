#pragma once

#include <map>
#include <string>
#include <vector>

#include "cy8/ff.hpp"
#include "cy8/numeric.hpp"

namespace cy8 {

// Exponent vector under graded lexicographic order.
struct GrlexLess {
    bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const;
};

// Sparse multivariate polynomial over Q with a fixed variable roster.
// No zero coefficients are stored.
class Poly {
  public:
    using Terms = std::map<std::vector<unsigned>, Rat, GrlexLess>;

    Poly() = default;
    explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Poly constant(const Rat& c, std::vector<std::string> vars);
    static Poly variable(const std::string& name, std::vector<std::string> vars);
    // recursive-descent parse of +, -, *, ^, parentheses, integers, rationals
    static Poly parse(const std::string& text, std::vector<std::string> vars);

    const std::vector<std::string>& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // requires is_constant()
    unsigned total_degree() const;
    bool homogeneous(unsigned degree) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    bool operator==(const Poly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    Poly pow(unsigned e) const;

    void add_term(const std::vector<unsigned>& exps, const Rat& c);
    Rat coefficient(const std::vector<unsigned>& exps) const;

    // substitute images[i] for variable i; images live in a common roster
    Poly substitute(const std::vector<Poly>& images) const;
    Poly derivative(unsigned var) const;
    // embed into a larger roster (old variables must appear in new_vars)
    Poly with_vars(const std::vector<std::string>& new_vars) const;
    // evaluate one variable at a rational, keeping the roster
    Poly eval_var(unsigned var, const Rat& value) const;

    // leading term in graded-lex order
    std::pair<std::vector<unsigned>, Rat> leading_term() const;

    // divide by a single term c*x^e; throws unless exactly divisible
    Poly div_term(const std::vector<unsigned>& exps, const Rat& c) const;

    // largest content: positive rational g with (*this)/g integral and primitive
    Rat content() const;

    Form to_form() const;  // integer coefficients required
    std::string str() const;

  private:
    std::vector<std::string> vars_;
    Terms terms_;
    int var_index(const std::string& name) const;
};

}  // namespace cy8
