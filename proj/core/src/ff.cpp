#include "cy8/ff.hpp"

#include <algorithm>
#include <stdexcept>

namespace cy8 {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("PrimeField: p must be an odd prime, got " + std::to_string(p));
    if (p <= (1u << 16)) {
        chi_.assign(p, -1);
        chi_[0] = 0;
        for (std::uint64_t a = 1; a < p; ++a) chi_[mul(a, a)] = 1;
    }
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a %= p_;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    a %= p_;
    if (a == 0) throw std::domain_error("PrimeField::inv of zero");
    return pow(a, p_ - 2);
}

int PrimeField::legendre(std::uint64_t a) const {
    a %= p_;
    if (!chi_.empty()) return chi_[a];
    if (a == 0) return 0;
    return pow(a, (p_ - 1) / 2) == 1 ? 1 : -1;
}

std::uint64_t PrimeField::reduce(const Int& v) const {
    Int r = v % Int(static_cast<unsigned long>(p_));
    if (r < 0) r += Int(static_cast<unsigned long>(p_));
    return r.get_ui();
}

std::uint64_t PrimeField::reduce(const Rat& v) const {
    std::uint64_t num = reduce(Int(v.get_num()));
    std::uint64_t den = reduce(Int(v.get_den()));
    if (den == 0) throw std::domain_error("PrimeField::reduce: denominator divisible by p");
    return mul(num, inv(den));
}

void Form::add_term(const Int& c, const Exps& e) {
    if (c == 0) return;
    for (auto& [cc, ee] : terms) {
        if (ee == e) {
            cc += c;
            if (cc == 0) {
                ee = terms.back().second;
                cc = terms.back().first;
                terms.pop_back();
            }
            return;
        }
    }
    terms.emplace_back(c, e);
    for (int i = 0; i < kMaxVars; ++i)
        if (e[i] != 0) nvars = std::max(nvars, i + 1);
}

bool Form::homogeneous(unsigned degree) const {
    for (const auto& [c, e] : terms) {
        unsigned d = 0;
        for (auto x : e) d += x;
        if (d != degree) return false;
    }
    return !terms.empty();
}

unsigned Form::total_degree() const {
    unsigned d = 0;
    for (const auto& [c, e] : terms) {
        unsigned s = 0;
        for (auto x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

Form Form::operator*(const Form& o) const {
    Form out;
    out.nvars = std::max(nvars, o.nvars);
    for (const auto& [c1, e1] : terms) {
        for (const auto& [c2, e2] : o.terms) {
            Exps e{};
            for (int i = 0; i < kMaxVars; ++i) e[i] = static_cast<std::uint8_t>(e1[i] + e2[i]);
            out.add_term(c1 * c2, e);
        }
    }
    return out;
}

Form Form::product(const std::vector<Form>& factors) {
    if (factors.empty()) throw std::invalid_argument("Form::product: empty factor list");
    Form out = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) out = out * factors[i];
    return out;
}

ReducedForm::ReducedForm(const Form& f, const PrimeField& F) : nvars_(f.nvars), max_exp_(0) {
    for (const auto& [c, e] : f.terms) {
        std::uint64_t r = F.reduce(c);
        if (r == 0) continue;
        terms_.emplace_back(r, e);
        for (auto x : e) max_exp_ = std::max<unsigned>(max_exp_, x);
    }
    if (max_exp_ > 16) throw std::invalid_argument("ReducedForm: exponent exceeds power-table size");
}

std::uint64_t ReducedForm::eval(const std::uint64_t* point, const PrimeField& F) const {
    // power tables per coordinate keep the inner loop multiplication-only
    std::uint64_t pows[Form::kMaxVars][17];
    for (int v = 0; v < nvars_; ++v) {
        pows[v][0] = 1;
        for (unsigned e = 1; e <= max_exp_; ++e) pows[v][e] = F.mul(pows[v][e - 1], point[v]);
    }
    std::uint64_t acc = 0;
    for (const auto& [c, e] : terms_) {
        std::uint64_t m = c;
        for (int v = 0; v < nvars_; ++v)
            if (e[v]) m = F.mul(m, pows[v][e[v]]);
        acc = F.add(acc, m);
    }
    return acc;
}

}  // namespace cy8
