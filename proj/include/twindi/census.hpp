#pragma once

#include <vector>

#include "twindi/pair_sieve.hpp"
#include "twindi/rational.hpp"

namespace twindi {

inline constexpr i64 kDefaultBudget = 10'000'000;

// Primes 5 <= p <= p_j with gcd(p, D) = 1. Throws domain_error if p_j is not
// a prime >= 5 or p_j | D.
std::vector<i64> eligible_primes(i64 p_j, const HalfDistance& d);

// L_bar(p_j): product of the eligible primes, with overflow detection.
u128 primorial_bar(i64 p_j, const HalfDistance& d);

// Exact counts of non-ranks and remnants over one period [1, L_bar].
// All identities hold in exact integer/rational arithmetic:
//   G(p) = q(p) * L_bar,  sum q = Q,  S = L_bar * Q,  R0 = L_bar * x,
//   Q + x = 1,  S + R0 = L_bar.
struct CensusReport {
    HalfDistance d;
    i64 p_j = 0;
    std::vector<i64> eligible; // ascending
    u128 l_bar = 1;
    u128 s = 0;                // non-ranks in a supergroup per period
    u128 r0 = 0;               // remnants = prod (p - 2)
    std::vector<u128> g;       // G(p), aligned with eligible
    std::vector<Rat> q;        // q(p) = G(p) / L_bar
    Rat big_q;                 // Q = S / L_bar
    Rat x;                     // x = R0 / L_bar
};

CensusReport census(i64 p_j, const HalfDistance& d);

// One period [1, L_bar] with every eligible prime's two residue classes
// struck. covered[m] != 0 iff m is struck. Counts must reproduce the census.
struct SupergroupSets {
    i64 period = 0;
    std::vector<uint8_t> covered; // index 1..period
    i64 nonrank_count = 0;
    i64 remnant_count = 0;
    i64 coprime_remnant_count = 0;

    std::vector<i64> nonranks() const;
    std::vector<i64> remnants() const;
    std::vector<i64> coprime_remnants(const HalfDistance& d) const;
};

SupergroupSets enumerate_supergroup(i64 p_j, const HalfDistance& d,
                                    i64 budget = kDefaultBudget);

// m <= L_bar lying in an eligible residue class only because a pair member
// equals the striking prime itself, yet both members are prime. These are
// twin ranks that the formal census counts as non-ranks.
std::vector<i64> exceptional_points(i64 p_j, const HalfDistance& d,
                                    i64 budget = kDefaultBudget);

// Smallest eligible prime > p_j.
i64 next_eligible_prime(i64 p_j, const HalfDistance& d);

struct FrontTwinRanks {
    i64 p_j = 0;
    i64 p_next = 0;
    i64 m_bound = 0;               // M(j+1) = (p_next^2 - D^2) / 2
    std::vector<i64> ranks;        // oracle-confirmed twin ranks < M
    std::vector<i64> three_power_dropped; // leak patch: composite member divisible by 3
    std::vector<i64> below_range_dropped; // remnants t with 2t - D < 3
};

// Coprime remnants below M(j+1), minus the 3-divisibility leak (when
// 3 does not divide D) and below-range residues; every returned value is
// verified as a twin rank against the oracle.
// Throws regime_error when M(j+1) > L_bar.
FrontTwinRanks front_twin_ranks(i64 p_j, const HalfDistance& d,
                                i64 budget = kDefaultBudget);

} // namespace twindi
