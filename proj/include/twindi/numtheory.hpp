#pragma once

#include <utility>
#include <vector>

#include "twindi/errors.hpp"
#include "twindi/types.hpp"

namespace twindi {

// Ascending table of all primes <= limit. Immutable after construction;
// safe to share across threads.
struct PrimeTable {
    i64 limit = 0;
    std::vector<i64> primes;
};

inline constexpr i64 kDefaultSegment = i64{1} << 18;

// Segmented sieve of Eratosthenes. Throws domain_error for limit < 2.
PrimeTable primes_upto(i64 limit, i64 segment_size = kDefaultSegment);

// Deterministic Miller–Rabin, valid for all 64-bit inputs.
bool is_prime(u64 n);

i64 isqrt64(i64 n);

struct MobiusNu {
    int mu; // in {-1, 0, 1}
    int nu; // number of distinct prime factors
};

MobiusNu mobius_and_nu(i64 n);

struct Factorization {
    i64 value;
    std::vector<std::pair<i64, int>> factors; // (prime, exponent), ascending
};

// Trial division; intended for values up to ~1e9 (cost sqrt(n)).
Factorization factorize(i64 n);

// b with a*b == 1 (mod m); throws domain_error when gcd(a, m) != 1.
i64 mod_inverse(i64 a, i64 m);

// Simultaneous congruences with pairwise coprime moduli >= 2.
// Returns (residue, product of moduli).
std::pair<i64, i64> crt(const std::vector<std::pair<i64, i64>>& congruences);

} // namespace twindi
