#pragma once

#include <vector>

#include "twindi/census.hpp"

namespace twindi {

// Twin-prime constant prod_{p>=3} (1 - (p-1)^-2) and Euler's gamma.
inline constexpr double kTwinConstant = 0.66016181584686957;
inline constexpr double kEulerGamma = 0.57721566490153286;

// M(j+1) = (p_next^2 - D^2) / 2 for the smallest eligible prime > p_j.
// Throws domain_error when the bound is not positive.
i64 m_bound(i64 p_j, const HalfDistance& d);

struct AuditTerm {
    i64 n = 0;
    int mu = 0;
    int nu = 0;
    i64 bracket = 0;     // floor((L_bar - M) / n) for n > 1; R0 for n = 1
    i64 signed_term = 0; // mu * 2^nu * bracket
};

// Both sides of the remnant identity
//   R * prod_{p|D} (1 - 1/p)^-1  vs  R0 + sum mu(n) 2^nu(n) [(L_bar - M)/n],
// n squarefree over primes in (p_j, (2*L_bar + 1)/D] coprime to D.
// No exactness is asserted; the discrepancy is measured and reported along
// with the exceptional-point correction.
struct AuditReport {
    HalfDistance d;
    i64 p_j = 0;
    i64 l_bar = 0;
    i64 m_next = 0;
    i64 prime_limit = 0;  // (2*L_bar + 1) / D
    i64 r_oracle = 0;     // twin ranks in [1, L_bar]
    Rat lhs;              // r_oracle * prod p/(p-1) over p | D
    i64 r0 = 0;
    i64 ie_sum = 0;       // sum over n > 1
    i64 rhs = 0;          // r0 + ie_sum
    Rat discrepancy;      // lhs - rhs
    i64 exceptional_correction = 0; // census exceptional points
    std::vector<AuditTerm> term_log; // ascending n, n = 1 row included
};

AuditReport audit_theorem52(i64 p_j, const HalfDistance& d,
                            i64 budget = kDefaultBudget);

struct MainTermReport {
    HalfDistance d;
    i64 p_j = 0;
    i64 l_bar = 0;
    i64 m_next = 0;
    i64 prime_limit = 0;
    double full_product = 0;  // prod_{5<=p<=limit, (p,D)=1} (1 - 2/p)
    double tail_product = 0;  // prod_{p_j<p<=limit, (p,D)=1} (1 - 2/p)
    double r_m = 0;           // main term
    double asymptotic_r_m = 0;
    double c_d = 0;           // coefficient C(D)
    double c2 = kTwinConstant;
    double gamma = kEulerGamma;
};

// Product-form main term:
//   R_M * prod_{p|D}(1 - 1/p)^-1 =
//     L_bar * full_product + M * (1 - tail_product).
MainTermReport main_term(i64 p_j, const HalfDistance& d);

struct ErrorTermReport {
    double r_e = 0;    // r_oracle - r_m
    i64 r_oracle = 0;
    double r_m = 0;
    double frac_first = 0;  // 2 * sum {c * (L_bar - M)/p}
    double frac_second = 0; // 4 * sum {c * (L_bar - M)/(p p')}
};

ErrorTermReport error_term(i64 p_j, const HalfDistance& d,
                           i64 budget = kDefaultBudget);

// The asymptotic law evaluated at L_bar(p_j):
//   prod_{p|D}(1-1/p) * 6 c2 e^{-2 gamma} * 2 L_bar
//   / (prod_{p|D}(1-2/p) * log^2((2 L_bar + 1)/D)).
double asymptotic_main(i64 p_j, const HalfDistance& d);

// C(D) = 12 c2 e^{-2 gamma} * prod_{p|D} (1 - 1/p)/(1 - 2/p).
double coefficient_C(const HalfDistance& d);

// Signed Moebius expansion sum_{squarefree n over the set} mu(n) 2^nu(n) / n,
// which telescopes to prod (1 - 2/p) exactly.
Rat signed_expansion(const std::vector<i64>& primes);

struct HLComparison {
    HalfDistance d;
    i64 x = 0;
    i64 m_max = 0;       // (x - D) / 2
    i64 oracle_pairs = 0;
    double estimated = 0; // asymptotic density integrated over [m0, m_max]
    double ratio = 0;     // oracle / estimated
    bool in_band = false; // ratio in [0.9, 1.1]
};

// Empirical sanity panel: oracle pair count against the integrated
// asymptotic density. Reports, never asserts.
HLComparison hl_comparison(const HalfDistance& d, i64 x);

} // namespace twindi
