#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cy8/catalog.hpp"
#include "cy8/ff.hpp"

namespace cy8 {

// sum over P^3(F_p) of 1 + chi(f8(P)); well-defined since f8 is an octic
std::uint64_t count_double_octic(const Poly& branch, const PrimeField& F, unsigned width = 1);

// projective count in P^7 of u_i^2 = f_i: (cone count - 1)/(p - 1)
std::uint64_t count_quadric_intersection(const std::vector<Poly>& quadrics, const PrimeField& F,
                                         unsigned width = 1);

// (x,y,z,t) in (F_p^*)^4 with g(x,y) = g(z,t), g = (x+y)(xy+1)/(xy), via the
// O(p^2) value histogram
std::uint64_t count_fermi(const PrimeField& F);

// brute-force oracles (used by tests and --oracle runs)
std::uint64_t oracle_double_octic_weighted(const Poly& branch, const PrimeField& F);
std::uint64_t oracle_quadric_cone(const std::vector<Poly>& quadrics, const PrimeField& F);
std::uint64_t oracle_fermi(const PrimeField& F);

struct FiberProductCount {
    std::uint64_t raw;  // sum over t of n1(t) n2(t)
    long long trace;    // sum over t of a1(t) a2(t), a_i = p+1-n_i
};

FiberProductCount count_fiber_product(const WeierstrassModel& left, const WeierstrassModel& right,
                                      const Moebius& matching, const PrimeField& F);

// raw = sum n1 n2 by direct per-fiber point enumeration
std::uint64_t oracle_fiber_product_raw(const WeierstrassModel& left, const WeierstrassModel& right,
                                       const Moebius& matching, const PrimeField& F);

// Equisingularity of a plane arrangement mod p: the rank of every subset of
// the forms matches its rank over Q. Primes failing this are bad for the
// congruence checks.
bool arrangement_equisingular(const std::vector<Poly>& linear_forms, const PrimeField& F);

// good odd primes of a catalog variety inside [lo, hi]
std::vector<std::uint64_t> good_primes(const VarietySpec& v, std::uint64_t lo, std::uint64_t hi);

struct CountReport {
    std::string variety;
    std::uint64_t p = 0;
    std::uint64_t raw = 0;
    Int a_p;           // coefficient used for the comparison (after model twist)
    Int residue;       // (raw - (1 - a_p)) mod p
    bool applicable = false;  // congruence is part of the contract
    bool pass = false;
    std::string note;
};

// count the variety and compare against 1 - (d|p) a_p mod p, d the model twist
CountReport lefschetz_congruence(const VarietySpec& v, const PrimeField& F, const Int& a_p, unsigned width = 1);

// h11 = (resolved_count - 1 - p^3 + a_p)/(p + p^2); throws on non-integral input
Rat h11_from_count(const Int& resolved_count, std::uint64_t p, const Int& a_p);

struct NodeScan {
    std::vector<std::array<std::uint64_t, 8>> points;  // normalized (x | u)
    bool isolated = true;
};

// rational singular points of a quadric intersection over F_p (Jacobian rank
// deficiency scan over the cone); refuses varieties whose singular locus is
// known to be positive-dimensional
NodeScan rational_nodes(const VarietySpec& v, const PrimeField& F);
// the raw scan without the isolation gate
std::vector<std::array<std::uint64_t, 8>> singular_point_scan(const std::vector<Poly>& quadrics,
                                                              const PrimeField& F);

struct HodgeRow {
    std::uint64_t p;
    std::uint64_t raw;
    unsigned rational_nodes;
    bool eligible;            // all geometric nodes rational at p
    std::optional<long> h11;  // integral solution with m = rational node count
    std::string note;
};

// van Geemen pipeline: count, add p per rational node, read off h11
HodgeRow hodge_row(const VarietySpec& v, const PrimeField& F, const Int& a_p, unsigned width = 1);

// integers congruent to 1 - count (mod p) within the weight-4 bound
// |a| <= 2 p^{3/2}; one congruence never pins a_p alone, so candidates are
// returned rather than a single value
std::vector<Int> ap_candidates(std::uint64_t p, const Int& count);

}  // namespace cy8
