#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cy8/numeric.hpp"

namespace cy8 {

// Truncated integer-coefficient power series in q, coefficients a_0..a_N.
class QSeries {
  public:
    QSeries() = default;
    explicit QSeries(unsigned order) : coeff_(order + 1, Int(0)) {}

    unsigned order() const { return static_cast<unsigned>(coeff_.size()) - 1; }
    const Int& operator[](unsigned n) const { return coeff_.at(n); }
    Int& at(unsigned n) { return coeff_.at(n); }

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries pow(unsigned e) const;
    // multiplicative inverse; requires a_0 = +-1
    QSeries inverse() const;
    // multiply by q^k, dropping coefficients beyond the truncation order
    QSeries shift(unsigned k) const;

    static QSeries one(unsigned order);

  private:
    std::vector<Int> coeff_;
};

// One factor eta(m*tau)^e of an eta product.
struct EtaFactor {
    unsigned scale;  // m
    int exponent;    // e
};

// prod_{n>=1} (1 - q^{m n}) truncated at the given order (the eta product
// without its fractional q-power, which is tracked separately).
QSeries eta_expansion(unsigned m, unsigned order);

// An eta product split into its rational leading q-exponent sum(m_i e_i)/24
// and the integral power-series part.
struct EtaProductExpansion {
    Rat leading_exponent;
    QSeries series;  // prod (1-q^{m_i n})^{e_i}

    // q^{leading}*series as a QSeries; throws unless the leading exponent is
    // a non-negative integer.
    QSeries materialize() const;
};

EtaProductExpansion eta_product_expansion(const std::vector<EtaFactor>& factors, unsigned order);
QSeries eta_product(const std::vector<EtaFactor>& factors, unsigned order);

// The weight-4 level-8 cusp form eta(2 tau)^4 eta(4 tau)^4 through the given order.
QSeries newform_level8(unsigned order);

struct HeckeViolation {
    unsigned m, n;  // indices of the identity that failed
    std::string kind;
    Int expected, found;
};

// Checks a_{mn} = a_m a_n for coprime m,n and the weight-k prime-power
// recursion a_{p^{j+1}} = a_p a_{p^j} - p^{k-1} a_{p^{j-1}} away from the bad
// primes, through the series order. Violations are returned, not thrown.
std::vector<HeckeViolation> hecke_check(const QSeries& f, unsigned weight,
                                        const std::vector<std::uint64_t>& bad_primes);

// b_n = a_n * kronecker(d, n); d must be 1 or a fundamental discriminant.
QSeries twist(const QSeries& f, const Int& d);

// |a_p| <= 2 p^{(w-1)/2} as the integer inequality a_p^2 <= 4 p^{w-1};
// returns the primes violating it (empty on success).
std::vector<std::uint64_t> deligne_violations(const QSeries& f, unsigned weight);

}  // namespace cy8
