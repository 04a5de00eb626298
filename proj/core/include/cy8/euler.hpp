#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cy8/poly.hpp"
#include "cy8/unipoly.hpp"

namespace cy8 {

// Hyperplane arrangement in P^n (n = 2 or 3) with the hypersurfaces grouped
// into branch divisors D_1..D_k of an iterated double cover. Empty groups
// are allowed: they contribute a constant factor 2 to every fiber.
struct Arrangement {
    unsigned ambient_dim = 3;
    std::vector<Poly> forms;                    // homogeneous linear forms
    std::vector<std::vector<unsigned>> groups;  // indices into forms

    void validate() const;
};

// Locus of points lying on exactly the hypersurfaces in the signature mask;
// its F_p-count is a polynomial in p, interpolated from sampled primes.
struct Stratum {
    std::uint32_t signature;        // bit i set = on forms[i]
    std::vector<Int> count_poly;    // coefficients in p, lowest first
    long chi;                       // value at p = 1
};

struct Stratification {
    std::vector<Stratum> strata;
    std::vector<std::uint64_t> primes_used;
};

// Count points per signature over each prime, Lagrange-interpolate the
// counting polynomials (degree <= ambient_dim) and evaluate at p = 1.
// Extra primes beyond degree+1 cross-check the interpolation; on mismatch
// the computation is retried once with larger primes before throwing.
Stratification stratify(const Arrangement& arr, std::vector<std::uint64_t> primes = {});

// fiber cardinality of the iterated double cover over a point with the
// given incidence signature: prod over groups of (1 if the point lies on
// the group's divisor else 2)
unsigned fiber_size(std::uint32_t signature, const Arrangement& arr);

// chi of the (singular) iterated double cover: sum over strata of
// fiber_size * chi
long chi_cover(const Arrangement& arr, const Stratification& strata);

// chi grouped by fiber size, for reporting
std::vector<std::pair<unsigned, long>> chi_by_fiber_size(const Arrangement& arr, const Stratification& strata);

// Blow-up corrections are catalog data: each center replaces a stratified
// piece of the cover by the cover of an exceptional locus.
struct StratumTableEntry {
    unsigned fiber_size;
    long chi;
};

struct BlowupCenter {
    std::string label;
    unsigned count = 1;  // number of identical centers
    // chi of the cover over one exceptional locus: either computed from an
    // arrangement or given as an explicit stratified table
    std::vector<Arrangement> exceptional_arr;           // empty or one entry
    std::vector<StratumTableEntry> exceptional_table;   // used when no arrangement
    std::vector<StratumTableEntry> replaced_table;      // cover part removed per center
    bool small_resolution_nodes = false;                // point -> rational curve, +1 each
};

struct ResolutionPlan {
    std::vector<BlowupCenter> centers;
};

// total correction contributed by one center group
long blowup_correction(const BlowupCenter& center);

struct EulerBreakdown {
    long chi_union;      // union of the hyperplanes
    long chi_complement;
    std::vector<std::pair<unsigned, long>> by_fiber_size;
    long chi_singular;   // the iterated double cover
    std::vector<std::pair<std::string, long>> corrections;
    long chi_resolved;
};

EulerBreakdown chi_resolved(const Arrangement& arr, const ResolutionPlan& plan);

}  // namespace cy8
