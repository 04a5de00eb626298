#include "cy8/qseries.hpp"

#include <stdexcept>

namespace cy8 {

QSeries QSeries::one(unsigned order) {
    QSeries s(order);
    s.at(0) = 1;
    return s;
}

QSeries QSeries::operator+(const QSeries& o) const {
    unsigned n = std::min(order(), o.order());
    QSeries out(n);
    for (unsigned i = 0; i <= n; ++i) out.at(i) = coeff_[i] + o.coeff_[i];
    return out;
}

QSeries QSeries::operator-(const QSeries& o) const {
    unsigned n = std::min(order(), o.order());
    QSeries out(n);
    for (unsigned i = 0; i <= n; ++i) out.at(i) = coeff_[i] - o.coeff_[i];
    return out;
}

QSeries QSeries::operator*(const QSeries& o) const {
    unsigned n = std::min(order(), o.order());
    QSeries out(n);
    for (unsigned i = 0; i <= n; ++i) {
        if (coeff_[i] == 0) continue;
        for (unsigned j = 0; i + j <= n; ++j) {
            if (o.coeff_[j] == 0) continue;
            out.at(i + j) += coeff_[i] * o.coeff_[j];
        }
    }
    return out;
}

QSeries QSeries::pow(unsigned e) const {
    QSeries out = one(order());
    QSeries base = *this;
    while (e) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

QSeries QSeries::inverse() const {
    if (coeff_[0] != 1 && coeff_[0] != -1)
        throw std::domain_error("QSeries::inverse: constant term must be a unit");
    unsigned n = order();
    QSeries out(n);
    out.at(0) = coeff_[0];  // 1/(+-1) = +-1
    for (unsigned k = 1; k <= n; ++k) {
        Int s = 0;
        for (unsigned j = 1; j <= k; ++j) s += coeff_[j] * out[k - j];
        out.at(k) = -coeff_[0] * s;  // a_0 = +-1 so 1/a_0 = a_0
    }
    return out;
}

QSeries QSeries::shift(unsigned k) const {
    QSeries out(order());
    for (unsigned i = 0; i + k <= order(); ++i) out.at(i + k) = coeff_[i];
    return out;
}

QSeries eta_expansion(unsigned m, unsigned order) {
    if (m == 0) throw std::invalid_argument("eta_expansion: scale must be positive");
    QSeries s = QSeries::one(order);
    // multiply the binomials (1 - q^{mn}) in place
    std::vector<Int> c(order + 1, Int(0));
    c[0] = 1;
    for (unsigned n = 1; m * n <= order; ++n) {
        unsigned k = m * n;
        for (unsigned i = order; i >= k; --i) {
            c[i] -= c[i - k];
            if (i == k) break;
        }
    }
    QSeries out(order);
    for (unsigned i = 0; i <= order; ++i) out.at(i) = c[i];
    return out;
}

EtaProductExpansion eta_product_expansion(const std::vector<EtaFactor>& factors, unsigned order) {
    Rat lead(0);
    QSeries s = QSeries::one(order);
    for (const auto& f : factors) {
        Rat piece(Int(f.scale) * Int(f.exponent), Int(24));
        piece.canonicalize();
        lead += piece;
        QSeries base = eta_expansion(f.scale, order);
        if (f.exponent >= 0)
            s = s * base.pow(static_cast<unsigned>(f.exponent));
        else
            s = s * base.inverse().pow(static_cast<unsigned>(-f.exponent));
    }
    lead.canonicalize();
    return {lead, s};
}

QSeries EtaProductExpansion::materialize() const {
    if (leading_exponent.get_den() != 1)
        throw std::domain_error("eta product: leading q-exponent " + leading_exponent.get_str() +
                                " is not an integer");
    Int l = leading_exponent.get_num();
    if (l < 0)
        throw std::domain_error("eta product: negative leading q-exponent (series has a pole at q=0)");
    if (l > series.order()) throw std::domain_error("eta product: truncation order below leading exponent");
    return series.shift(static_cast<unsigned>(l.get_ui()));
}

QSeries eta_product(const std::vector<EtaFactor>& factors, unsigned order) {
    return eta_product_expansion(factors, order).materialize();
}

QSeries newform_level8(unsigned order) {
    return eta_product({{2, 4}, {4, 4}}, order);
}

std::vector<HeckeViolation> hecke_check(const QSeries& f, unsigned weight,
                                        const std::vector<std::uint64_t>& bad_primes) {
    if (f.order() < 1 || f[1] != 1) throw std::invalid_argument("hecke_check: series not normalized (a_1 != 1)");
    std::vector<HeckeViolation> out;
    unsigned N = f.order();

    auto gcd = [](unsigned a, unsigned b) {
        while (b) {
            unsigned t = a % b;
            a = b;
            b = t;
        }
        return a;
    };
    for (unsigned m = 2; m <= N; ++m) {
        for (unsigned n = m; m * n <= N; ++n) {
            if (gcd(m, n) != 1) continue;
            Int expect = f[m] * f[n];
            if (f[m * n] != expect) out.push_back({m, n, "multiplicative", expect, f[m * n]});
        }
    }

    Int pk1;  // p^{weight-1}
    for (std::uint64_t p = 2; p <= N; ++p) {
        if (!is_prime(p)) continue;
        bool bad = false;
        for (auto q : bad_primes) bad |= (q == p);
        if (bad) continue;
        mpz_ui_pow_ui(pk1.get_mpz_t(), p, weight - 1);
        // a_{p^{j+1}} = a_p a_{p^j} - p^{w-1} a_{p^{j-1}}
        std::uint64_t pj = p;
        while (pj * p <= N) {
            Int expect = f[static_cast<unsigned>(p)] * f[static_cast<unsigned>(pj)] -
                         pk1 * f[static_cast<unsigned>(pj / p)];
            if (f[static_cast<unsigned>(pj * p)] != expect)
                out.push_back({static_cast<unsigned>(p), static_cast<unsigned>(pj * p), "prime-power", expect,
                               f[static_cast<unsigned>(pj * p)]});
            pj *= p;
        }
    }
    return out;
}

QSeries twist(const QSeries& f, const Int& d) {
    if (!is_fundamental_discriminant(d))
        throw std::invalid_argument("twist: " + d.get_str() + " is not 1 or a fundamental discriminant");
    QSeries out(f.order());
    for (unsigned n = 0; n <= f.order(); ++n) out.at(n) = f[n] * kronecker(d, Int(n));
    return out;
}

std::vector<std::uint64_t> deligne_violations(const QSeries& f, unsigned weight) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= f.order(); ++p) {
        if (!is_prime(p)) continue;
        Int bound;
        mpz_ui_pow_ui(bound.get_mpz_t(), p, weight - 1);
        const Int& ap = f[static_cast<unsigned>(p)];
        if (ap * ap > 4 * bound) out.push_back(p);
    }
    return out;
}

}  // namespace cy8
