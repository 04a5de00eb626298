#include "cy8/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cy8 {

bool GrlexLess::operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
    unsigned da = 0, db = 0;
    for (auto x : a) da += x;
    for (auto x : b) db += x;
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Poly Poly::constant(const Rat& c, std::vector<std::string> vars) {
    Poly p(std::move(vars));
    p.add_term(std::vector<unsigned>(p.vars_.size(), 0), c);
    return p;
}

Poly Poly::variable(const std::string& name, std::vector<std::string> vars) {
    Poly p(std::move(vars));
    int i = p.var_index(name);
    if (i < 0) throw std::invalid_argument("Poly::variable: unknown variable " + name);
    std::vector<unsigned> e(p.vars_.size(), 0);
    e[static_cast<unsigned>(i)] = 1;
    p.add_term(e, Rat(1));
    return p;
}

int Poly::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

void Poly::add_term(const std::vector<unsigned>& exps, const Rat& c) {
    if (c == 0) return;
    if (exps.size() != vars_.size()) throw std::invalid_argument("Poly::add_term: arity mismatch");
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat Poly::coefficient(const std::vector<unsigned>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rat(0) : it->second;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    for (auto x : terms_.begin()->first)
        if (x) return false;
    return true;
}

Rat Poly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::domain_error("Poly::constant_value: not constant");
    return terms_.begin()->second;
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned s = 0;
        for (auto x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

bool Poly::homogeneous(unsigned degree) const {
    if (terms_.empty()) return false;
    for (const auto& [e, c] : terms_) {
        unsigned s = 0;
        for (auto x : e) s += x;
        if (s != degree) return false;
    }
    return true;
}

Poly Poly::operator+(const Poly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("Poly: mixed variable rosters");
    Poly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("Poly: mixed variable rosters");
    Poly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

Poly Poly::operator-() const {
    Poly out(vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("Poly: mixed variable rosters");
    Poly out(vars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            std::vector<unsigned> e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            out.add_term(e, c1 * c2);
        }
    }
    if (out.total_degree() > 64) throw std::domain_error("Poly: total degree cap (64) exceeded");
    return out;
}

Poly Poly::operator*(const Rat& c) const {
    Poly out(vars_);
    if (c == 0) return out;
    for (const auto& [e, cc] : terms_) out.terms_.emplace(e, cc * c);
    return out;
}

Poly Poly::pow(unsigned e) const {
    Poly out = Poly::constant(Rat(1), vars_);
    Poly base = *this;
    while (e) {
        if (e & 1) out = out * base;
        base = e > 1 ? base * base : base;
        e >>= 1;
    }
    return out;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (images.size() != vars_.size()) throw std::invalid_argument("Poly::substitute: arity mismatch");
    const auto& roster = images.empty() ? vars_ : images[0].vars_;
    Poly out(roster);
    for (const auto& [e, c] : terms_) {
        Poly term = Poly::constant(c, roster);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) term = term * images[i].pow(e[i]);
        out = out + term;
    }
    return out;
}

Poly Poly::derivative(unsigned var) const {
    Poly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        auto e2 = e;
        e2[var] -= 1;
        out.add_term(e2, c * Rat(e[var]));
    }
    return out;
}

Poly Poly::with_vars(const std::vector<std::string>& new_vars) const {
    Poly out(new_vars);
    // variables absent from the new roster must not occur
    std::vector<int> pos(vars_.size(), -1);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
        if (it != new_vars.end()) pos[i] = static_cast<int>(it - new_vars.begin());
    }
    for (const auto& [e, c] : terms_) {
        std::vector<unsigned> e2(new_vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (pos[i] < 0)
                throw std::invalid_argument("Poly::with_vars: variable " + vars_[i] + " missing from new roster");
            e2[static_cast<unsigned>(pos[i])] = e[i];
        }
        out.add_term(e2, c);
    }
    return out;
}

Poly Poly::eval_var(unsigned var, const Rat& value) const {
    Poly out(vars_);
    for (const auto& [e, c] : terms_) {
        Rat cc = c;
        for (unsigned k = 0; k < e[var]; ++k) cc *= value;
        auto e2 = e;
        e2[var] = 0;
        out.add_term(e2, cc);
    }
    return out;
}

std::pair<std::vector<unsigned>, Rat> Poly::leading_term() const {
    if (terms_.empty()) throw std::domain_error("Poly::leading_term of zero");
    auto it = std::prev(terms_.end());
    return {it->first, it->second};
}

Poly Poly::div_term(const std::vector<unsigned>& exps, const Rat& c) const {
    if (c == 0) throw std::domain_error("Poly::div_term by zero");
    Poly out(vars_);
    for (const auto& [e, cc] : terms_) {
        std::vector<unsigned> e2(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < exps[i]) throw std::domain_error("Poly::div_term: not divisible");
            e2[i] = e[i] - exps[i];
        }
        out.add_term(e2, cc / c);
    }
    return out;
}

Rat Poly::content() const {
    if (terms_.empty()) return Rat(0);
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        Int n = c.get_num();
        if (n < 0) n = -n;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        Int d = c.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    Rat g(num_gcd, den_lcm);
    g.canonicalize();
    return g;
}

Form Poly::to_form() const {
    Form f;
    if (vars_.size() > Form::kMaxVars) throw std::invalid_argument("Poly::to_form: too many variables");
    for (const auto& [e, c] : terms_) {
        if (c.get_den() != 1) throw std::domain_error("Poly::to_form: non-integer coefficient " + c.get_str());
        Form::Exps ee{};
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 255) throw std::domain_error("Poly::to_form: exponent too large");
            ee[i] = static_cast<std::uint8_t>(e[i]);
        }
        f.add_term(Int(c.get_num()), ee);
    }
    f.nvars = static_cast<int>(vars_.size());
    return f;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat ac = c < 0 ? Rat(-c) : c;
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        bool need_coeff = true;
        unsigned deg = 0;
        for (auto x : e) deg += x;
        if (ac == 1 && deg > 0) need_coeff = false;
        if (need_coeff) os << ac.get_str();
        bool star = need_coeff;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (star) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            star = true;
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    const std::vector<std::string>& vars;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Poly expr() {
        Poly p = term();
        for (;;) {
            skip();
            if (eat('+'))
                p = p + term();
            else if (eat('-'))
                p = p - term();
            else
                return p;
        }
    }

    Poly term() {
        Poly p = factor();
        for (;;) {
            skip();
            if (eat('*')) {
                p = p * factor();
            } else if (pos < s.size() && (s[pos] == '(' || std::isalpha(static_cast<unsigned char>(s[pos])))) {
                p = p * factor();  // implicit multiplication: 2x, x(y+z)
            } else {
                return p;
            }
        }
    }

    Poly factor() {
        skip();
        if (eat('-')) return -factor();  // unary minus binds below '^'
        Poly p = atom();
        skip();
        if (eat('^')) {
            skip();
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) throw std::invalid_argument("poly parse: exponent expected at " + std::to_string(pos));
            p = p.pow(static_cast<unsigned>(std::stoul(s.substr(start, pos - start))));
        }
        return p;
    }

    Poly atom() {
        skip();
        if (pos >= s.size()) throw std::invalid_argument("poly parse: unexpected end of input");
        if (eat('(')) {
            Poly p = expr();
            if (!eat(')')) throw std::invalid_argument("poly parse: missing ')' at " + std::to_string(pos));
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::size_t start = pos;
            while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
            Rat c(s.substr(start, pos - start));
            c.canonicalize();
            return Poly::constant(c, vars);
        }
        if (std::isalpha(static_cast<unsigned char>(s[pos]))) {
            std::size_t start = pos;
            while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
            return Poly::variable(s.substr(start, pos - start), vars);
        }
        throw std::invalid_argument("poly parse: unexpected character '" + std::string(1, s[pos]) + "' at " +
                                    std::to_string(pos));
    }
};

}  // namespace

Poly Poly::parse(const std::string& text, std::vector<std::string> vars) {
    Parser p{text, 0, vars};
    Poly out = p.expr();
    p.skip();
    if (p.pos != text.size())
        throw std::invalid_argument("poly parse: trailing input at " + std::to_string(p.pos) + " in '" + text + "'");
    return out;
}

}  // namespace cy8
