#include "cy8/euler.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cy8/ff.hpp"

namespace cy8 {

void Arrangement::validate() const {
    if (ambient_dim != 2 && ambient_dim != 3)
        throw std::invalid_argument("Arrangement: ambient dimension must be 2 or 3");
    if (forms.size() > 32) throw std::invalid_argument("Arrangement: too many hypersurfaces");
    for (const auto& f : forms) {
        if (!f.homogeneous(1)) throw std::invalid_argument("Arrangement: form " + f.str() + " is not linear");
        if (f.vars().size() != ambient_dim + 1)
            throw std::invalid_argument("Arrangement: form arity does not match ambient dimension");
    }
    // pairwise non-proportional
    for (std::size_t i = 0; i < forms.size(); ++i) {
        for (std::size_t j = i + 1; j < forms.size(); ++j) {
            const auto& a = forms[i];
            const auto& b = forms[j];
            auto [ea, ca] = a.leading_term();
            auto [eb, cb] = b.leading_term();
            if (ea == eb && (a * (cb / ca)) == b)
                throw std::invalid_argument("Arrangement: proportional forms " + a.str() + ", " + b.str());
        }
    }
    for (const auto& g : groups)
        for (auto i : g)
            if (i >= forms.size()) throw std::invalid_argument("Arrangement: group index out of range");
}

namespace {

std::map<std::uint32_t, std::uint64_t> signature_counts(const Arrangement& arr, const PrimeField& F) {
    unsigned n = arr.ambient_dim + 1;
    std::vector<ReducedForm> rf;
    rf.reserve(arr.forms.size());
    for (const auto& f : arr.forms) {
        Poly scaled = f * (Rat(1) / f.content());
        rf.emplace_back(scaled.to_form(), F);
    }
    std::map<std::uint32_t, std::uint64_t> counts;
    std::uint64_t p = F.p();
    std::vector<std::uint64_t> pt(n, 0);
    // normalized representatives: first nonzero coordinate = 1
    for (unsigned lead = 0; lead < n; ++lead) {
        for (unsigned i = 0; i < lead; ++i) pt[i] = 0;
        pt[lead] = 1;
        unsigned free = n - lead - 1;
        std::uint64_t total = 1;
        for (unsigned i = 0; i < free; ++i) total *= p;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::uint64_t also = idx;
            for (unsigned i = 0; i < free; ++i) {
                pt[lead + 1 + i] = also % p;
                also /= p;
            }
            std::uint32_t sig = 0;
            for (std::size_t k = 0; k < rf.size(); ++k)
                if (rf[k].eval(pt.data(), F) == 0) sig |= (1u << k);
            ++counts[sig];
        }
    }
    return counts;
}

std::vector<Int> lagrange_interpolate(const std::vector<std::uint64_t>& xs, const std::vector<std::uint64_t>& ys,
                                      unsigned max_degree) {
    // exact interpolation through the first max_degree+1 points
    unsigned n = max_degree + 1;
    if (xs.size() < n) throw std::invalid_argument("interpolation: not enough sample primes");
    std::vector<Rat> poly(n, Rat(0));
    for (unsigned i = 0; i < n; ++i) {
        // basis polynomial prod_{j!=i} (x - x_j)/(x_i - x_j)
        std::vector<Rat> basis = {Rat(1)};
        Rat denom(1);
        for (unsigned j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<Rat> next(basis.size() + 1, Rat(0));
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k] += basis[k] * Rat(-static_cast<long>(xs[j]));
                next[k + 1] += basis[k];
            }
            basis = next;
            denom *= Rat(static_cast<long>(xs[i]) - static_cast<long>(xs[j]));
        }
        Rat scale = Rat(static_cast<long>(ys[i])) / denom;
        for (std::size_t k = 0; k < basis.size(); ++k) poly[k] += basis[k] * scale;
    }
    std::vector<Int> out;
    for (const auto& c : poly) {
        if (c.get_den() != 1) throw std::domain_error("interpolation: non-integer counting polynomial");
        out.push_back(Int(c.get_num()));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

Int eval_int_poly(const std::vector<Int>& poly, const Int& x) {
    Int acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Stratification stratify_once(const Arrangement& arr, const std::vector<std::uint64_t>& primes) {
    unsigned deg = arr.ambient_dim;
    if (primes.size() < deg + 2)
        throw std::invalid_argument("stratify: need at least degree+2 primes for cross-checking");
    std::vector<std::map<std::uint32_t, std::uint64_t>> tables;
    for (auto p : primes) tables.push_back(signature_counts(arr, PrimeField(p)));
    std::map<std::uint32_t, std::vector<std::uint64_t>> per_sig;
    for (std::size_t i = 0; i < tables.size(); ++i)
        for (const auto& [sig, c] : tables[i]) {
            auto& v = per_sig[sig];
            v.resize(tables.size(), 0);
            v[i] = c;
        }
    Stratification out;
    out.primes_used = primes;
    for (auto& [sig, ys] : per_sig) {
        ys.resize(tables.size(), 0);
        auto poly = lagrange_interpolate(primes, ys, deg);
        // cross-check on the extra primes
        for (std::size_t i = deg + 1; i < primes.size(); ++i) {
            if (eval_int_poly(poly, Int(static_cast<unsigned long>(primes[i]))) !=
                Int(static_cast<unsigned long>(ys[i])))
                throw std::domain_error("stratify: interpolation inconsistent at p = " + std::to_string(primes[i]) +
                                        " (bad-prime contamination)");
        }
        Int chi = eval_int_poly(poly, Int(1));
        out.strata.push_back({sig, poly, static_cast<long>(chi.get_si())});
    }
    return out;
}

}  // namespace

Stratification stratify(const Arrangement& arr, std::vector<std::uint64_t> primes) {
    arr.validate();
    if (primes.empty()) primes = {11, 13, 17, 19, 23};
    try {
        return stratify_once(arr, primes);
    } catch (const std::domain_error&) {
        // retry once with larger primes before giving up
        std::vector<std::uint64_t> larger;
        std::uint64_t q = primes.back();
        while (larger.size() < primes.size()) {
            q += 2;
            while (!is_prime(q)) q += 2;
            larger.push_back(q);
        }
        return stratify_once(arr, larger);
    }
}

unsigned fiber_size(std::uint32_t signature, const Arrangement& arr) {
    unsigned fs = 1;
    for (const auto& g : arr.groups) {
        bool on = false;
        for (auto i : g) on |= ((signature >> i) & 1u) != 0;
        if (!on) fs *= 2;
    }
    return fs;
}

long chi_cover(const Arrangement& arr, const Stratification& strata) {
    long acc = 0;
    for (const auto& s : strata.strata) acc += static_cast<long>(fiber_size(s.signature, arr)) * s.chi;
    return acc;
}

std::vector<std::pair<unsigned, long>> chi_by_fiber_size(const Arrangement& arr, const Stratification& strata) {
    std::map<unsigned, long> acc;
    for (const auto& s : strata.strata) acc[fiber_size(s.signature, arr)] += s.chi;
    return {acc.begin(), acc.end()};
}

long blowup_correction(const BlowupCenter& center) {
    if (center.small_resolution_nodes) return static_cast<long>(center.count);
    long exc = 0;
    if (!center.exceptional_arr.empty()) {
        const auto& arr = center.exceptional_arr.front();
        exc = chi_cover(arr, stratify(arr));
    } else {
        for (const auto& e : center.exceptional_table) exc += static_cast<long>(e.fiber_size) * e.chi;
    }
    long rep = 0;
    for (const auto& e : center.replaced_table) rep += static_cast<long>(e.fiber_size) * e.chi;
    return static_cast<long>(center.count) * (exc - rep);
}

EulerBreakdown chi_resolved(const Arrangement& arr, const ResolutionPlan& plan) {
    EulerBreakdown out{};
    auto strata = stratify(arr);
    long total = 0;
    for (const auto& s : strata.strata) total += s.chi;
    out.chi_complement = 0;
    out.chi_union = 0;
    for (const auto& s : strata.strata) {
        if (s.signature == 0)
            out.chi_complement += s.chi;
        else
            out.chi_union += s.chi;
    }
    if (total != static_cast<long>(arr.ambient_dim) + 1)
        throw std::logic_error("chi_resolved: strata do not add up to chi of projective space");
    out.by_fiber_size = chi_by_fiber_size(arr, strata);
    out.chi_singular = chi_cover(arr, strata);
    out.chi_resolved = out.chi_singular;
    for (const auto& c : plan.centers) {
        long corr = blowup_correction(c);
        out.corrections.emplace_back(c.label, corr);
        out.chi_resolved += corr;
    }
    return out;
}

}  // namespace cy8
