#include "cy8/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cy8 {

UniPoly UniPoly::from_ints(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long x : cs) v.emplace_back(x);
    return UniPoly(std::move(v));
}

Rat UniPoly::leading() const {
    if (c_.empty()) return Rat(0);
    return c_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rat> v = c_;
    for (auto& x : v) x = -x;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (c_.empty() || o.c_.empty()) return UniPoly();
    std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Rat& s) const {
    if (s == 0) return UniPoly();
    std::vector<Rat> v = c_;
    for (auto& x : v) x *= s;
    return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw std::domain_error("UniPoly: division by zero");
    std::vector<Rat> rem = c_;
    std::vector<Rat> quo(rem.size() > d.c_.size() ? rem.size() - d.c_.size() + 1 : 1, Rat(0));
    while (rem.size() >= d.c_.size() && !(rem.size() == 1 && rem[0] == 0)) {
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (rem.size() < d.c_.size()) break;
        Rat f = rem.back() / d.c_.back();
        std::size_t shift = rem.size() - d.c_.size();
        quo[shift] = f;
        for (std::size_t i = 0; i < d.c_.size(); ++i) rem[shift + i] -= f * d.c_[i];
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::divexact(const UniPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::domain_error("UniPoly::divexact: remainder nonzero");
    return q;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rat> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<unsigned long>(i));
    return UniPoly(std::move(v));
}

Rat UniPoly::eval(const Rat& x) const {
    Rat r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly out = UniPoly::constant(Rat(1));
    UniPoly base = *this;
    while (e) {
        if (e & 1) out = out * base;
        if (e > 1) base = base * base;
        e >>= 1;
    }
    return out;
}

UniPoly UniPoly::compose(const UniPoly& r) const {
    UniPoly out;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * r + UniPoly::constant(*it);
    return out;
}

UniPoly UniPoly::reversed() const {
    std::vector<Rat> v(c_.rbegin(), c_.rend());
    return UniPoly(std::move(v));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / leading());
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return *this;
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& c : c_) {
        Int n = c.get_num();
        if (n < 0) n = -n;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        Int d = c.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    Rat g(num_gcd, den_lcm);
    g.canonicalize();
    UniPoly out = *this * (Rat(1) / g);
    if (out.leading() < 0) out = -out;
    return out;
}

unsigned UniPoly::valuation(const UniPoly& f) const {
    if (f.degree() < 1) throw std::invalid_argument("UniPoly::valuation: factor must be nonconstant");
    if (is_zero()) throw std::domain_error("UniPoly::valuation of zero polynomial");
    unsigned v = 0;
    UniPoly cur = *this;
    for (;;) {
        auto [q, r] = cur.divmod(f);
        if (!r.is_zero()) return v;
        ++v;
        cur = q;
    }
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Rat a = c_[i];
        if (!first)
            os << (a < 0 ? " - " : " + ");
        else if (a < 0)
            os << "-";
        first = false;
        Rat aa = a < 0 ? Rat(-a) : a;
        if (i == 0 || aa != 1) os << aa.get_str();
        if (i > 0) {
            if (aa != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = x.divmod(y);
        x = y;
        y = r;
    }
    return x.monic();
}

std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& p) {
    // Yun's algorithm over Q
    std::vector<std::pair<UniPoly, unsigned>> out;
    UniPoly f = p.monic();
    if (f.degree() < 1) return out;
    UniPoly fp = f.derivative();
    UniPoly a = gcd(f, fp);
    UniPoly b = f.divexact(a);
    UniPoly c = fp.divexact(a);
    UniPoly d = c - b.derivative();
    unsigned i = 1;
    while (b.degree() >= 1) {
        UniPoly g = gcd(b, d);
        if (g.degree() >= 1) out.emplace_back(g, i);
        b = b.divexact(g);
        c = d.divexact(g);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

namespace {

std::vector<Int> divisors_of(const Int& n0) {
    Int n = n0 < 0 ? Int(-n0) : n0;
    std::vector<Int> out;
    if (n == 0) return out;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            out.push_back(n / d);
        }
        if (d > 1000000) throw std::domain_error("rational_roots: coefficient too large to factor");
    }
    return out;
}

}  // namespace

std::vector<std::pair<Rat, unsigned>> rational_roots(const UniPoly& p) {
    std::vector<std::pair<Rat, unsigned>> out;
    if (p.degree() < 1) return out;
    UniPoly f = p.primitive();
    // strip t^k
    unsigned k = 0;
    while (f.degree() >= 1 && f[0] == 0) {
        std::vector<Rat> v(f.coeffs().begin() + 1, f.coeffs().end());
        f = UniPoly(std::move(v));
        ++k;
    }
    if (k > 0) out.emplace_back(Rat(0), k);
    if (f.degree() < 1) return out;
    Int a0 = f[0].get_num();
    Int an = f.leading().get_num();
    for (const Int& r : divisors_of(a0)) {
        for (const Int& s : divisors_of(an)) {
            for (int sign : {1, -1}) {
                Rat cand(sign * r, s);
                cand.canonicalize();
                if (f.eval(cand) != 0) continue;
                bool seen = false;
                for (auto& [root, mult] : out) seen |= (root == cand);
                if (seen) continue;
                UniPoly lin({-cand, Rat(1)});
                unsigned m = f.valuation(lin);
                out.emplace_back(cand, m);
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace cy8
