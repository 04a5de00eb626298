#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cy8 {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    // deterministic Miller-Rabin for 64-bit input
    auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) -> std::uint64_t {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
        std::uint64_t r = 1;
        a %= m;
        while (e) {
            if (e & 1) r = mulmod(r, a, m);
            a = mulmod(a, a, m);
            e >>= 1;
        }
        return r;
    };
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> odd_primes_in(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = lo < 3 ? 3 : lo | 1; n <= hi; n += 2)
        if (is_prime(n)) out.push_back(n);
    return out;
}

// Kronecker symbol (a|n), full generality (a any integer, n any integer).
inline int kronecker(const Int& a, const Int& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}
inline int kronecker(long a, long n) { return kronecker(Int(a), Int(n)); }

// d = 1 or the discriminant of a quadratic field.
inline bool is_fundamental_discriminant(const Int& d) {
    if (d == 1) return true;
    if (d == 0) return false;
    auto squarefree = [](Int m) {
        if (m < 0) m = -m;
        for (Int q = 2; q * q <= m; ++q) {
            if (m % (q * q) == 0) return false;
        }
        return true;
    };
    Int r = ((d % 4) + 4) % 4;
    if (r == 1) return squarefree(d);
    if (r == 0) {
        Int m = d / 4;
        Int rm = ((m % 4) + 4) % 4;
        return (rm == 2 || rm == 3) && squarefree(m);
    }
    return false;
}

inline std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

}  // namespace cy8
