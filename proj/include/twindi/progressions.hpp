#pragma once

#include <vector>

#include "twindi/errors.hpp"
#include "twindi/numtheory.hpp"
#include "twindi/types.hpp"

namespace twindi {

// The half-distance D: pairs under study are (2m - D, 2m + D), D odd >= 3.
struct HalfDistance {
    i64 value = 3;
    std::vector<i64> prime_divisors; // distinct, ascending
    bool three_divides = false;

    static HalfDistance of(i64 d); // throws domain_error unless d odd, >= 3

    bool coprime(i64 n) const;
    i64 m_min() const { return (value + 3) / 2; } // smallest m with 2m - D >= 3
};

// A set of 2^order residue classes mod `modulus` (a prime p >= 5 coprime to
// 6D, or a product of such primes) whose members m satisfy
// p | (2m - D)(2m + D) for every prime p | modulus.
struct NonRankProgression {
    i64 modulus = 1;
    std::vector<i64> residues; // ascending, in [0, modulus)
    int order = 0;

    bool contains(i64 m) const;
};

// Witness that k = lambda * parent +/- 3 * D * N(parent / 6).
struct Decomposition {
    i64 parent = 0;
    i64 lambda = 0;
    int sign = +1;
};

// N(p/6): (p-1)/6 if p == 1 (mod 6), (p+1)/6 if p == -1 (mod 6).
i64 nearest_sixth(i64 p);

// The two residue classes {+-3*D*N(p/6) mod p} of non-ranks to prime p.
NonRankProgression single_progression(i64 p, const HalfDistance& d);

struct ProgressionMember {
    i64 k = 0;
    i64 pair_lo = 0; // 2k - D
    i64 pair_hi = 0; // 2k + D
    i64 divisible_member = 0; // the pair member divisible by p
    i64 cofactor = 0;         // divisible_member / p, equals 2n +/- D
    bool valid = false;       // k >= 1 and cofactor >= 3
};

// k(n, p)^sign = n*p + sign * 3*D*N(p/6) and the pair it generates.
// Negative n is allowed; validity is the cofactor test, not an n-range.
ProgressionMember progression_member(i64 n, i64 p, int sign, const HalfDistance& d);

// Inverse of progression_member for nontrivial non-ranks: parent is the
// smallest prime >= 5 coprime to D dividing 2k - D or 2k + D.
// Throws not_a_nonrank_error / trivial_nonrank_error / three_power_leak_error.
Decomposition decompose(i64 k, const HalfDistance& d);

// Minimal prime >= 5 coprime to D dividing 2k - D or 2k + D. Unlike
// decompose this also accepts trivial non-ranks (e.g. k = 9, D = 3).
i64 parent_prime(i64 k, const HalfDistance& d);

// All 2^m CRT combinations of the per-prime residues: the m-fold common
// non-rank lattice. Residue membership alone does not certify a non-rank;
// points where a pair member equals one of the primes may be twin ranks.
NonRankProgression common_progression(const std::vector<i64>& primes,
                                      const HalfDistance& d);

struct TwinRelation {
    i64 p = 0, p2 = 0;
    i64 n_p = 0, n_p2 = 0;   // N(p/6), N(p2/6)
    bool n_equal = false;     // gap-2 ordinary twin characterization
    bool gap2_twin = false;   // p2 == p + 2
    bool same_mod6 = false;
    int case_label = 0;       // 1, 2, 3 for D == 0, 1, 2 (mod 3); 0 if p2 !≡ p (mod 6)
    i64 required_diff = 0;    // D/3, (D-1)/3 or (D+1)/3
    i64 implied_gap = 0;      // 2D, 2(D-1) or 2(D+1)
    bool diff_matches = false; // N(p2/6) - N(p/6) == required_diff
    bool gap_matches = false;  // p2 - p == implied_gap
    bool iff_holds = false;    // diff_matches <=> gap_matches
};

// N-function relations between two primes: the gap-2 criterion and the
// D-dependent cases for p2 == p (mod 6).
TwinRelation twin_relation(i64 p, i64 p2, const HalfDistance& d);

} // namespace twindi
