#pragma once

#include <vector>

#include "twindi/progressions.hpp"

namespace twindi {

enum class Verdict {
    TwinRank,
    TrivialNonRank,     // witness = smallest q | D dividing m
    ProgressionNonRank, // witness = parent prime
    ThreePowerNonRank,  // only composite member(s) are pure powers of 3
    BelowRange,         // m < (D+3)/2, so 2m - D < 3
};

struct Classification {
    i64 m = 0;
    Verdict verdict = Verdict::BelowRange;
    i64 witness = 0;
};

const char* verdict_name(Verdict v);

struct SieveRun {
    HalfDistance d;
    i64 m_min = 0;
    i64 m_max = 0;
    std::vector<i64> base_primes; // 5 <= p <= sqrt(2*m_max + D), coprime to D
    i64 segment_size = kDefaultSegment;

    static SieveRun make(const HalfDistance& d, i64 m_max,
                         i64 segment_size = kDefaultSegment);
};

// Ground truth: all m in [(D+3)/2, m_max] with both 2m +/- D prime,
// by direct primality testing.
std::vector<i64> oracle_twin_ranks(const HalfDistance& d, i64 m_max);

// The pair sieve. Strikes trivial classes (q | D), both residue classes of
// every base prime, and (when 3 does not divide D) the classes where a pair
// member >= 9 is divisible by 3. Progression hits whose p-divisible member
// equals p itself are re-checked and kept when both members are prime.
// threads = 0 means hardware concurrency.
std::vector<i64> sieve_twin_ranks(const SieveRun& run, int threads = 0);

Classification classify(i64 m, const HalfDistance& d);

// Count of twin ranks m with 2m + D <= x (pairs, not pair members).
i64 pi2_half(const HalfDistance& d, i64 x);

} // namespace twindi
