#include "twindi/census.hpp"

#include <algorithm>
#include <numeric>

namespace twindi {

std::vector<i64> eligible_primes(i64 p_j, const HalfDistance& d) {
    if (p_j < 5 || !is_prime(static_cast<u64>(p_j)))
        throw domain_error("eligible_primes: p_j must be a prime >= 5");
    if (!d.coprime(p_j))
        throw domain_error("eligible_primes: p_j divides D");
    std::vector<i64> out;
    for (i64 p : primes_upto(p_j).primes)
        if (p >= 5 && d.coprime(p)) out.push_back(p);
    return out;
}

u128 primorial_bar(i64 p_j, const HalfDistance& d) {
    u128 prod = 1;
    for (i64 p : eligible_primes(p_j, d)) {
        if (prod > static_cast<u128>(-1) / static_cast<u128>(p))
            throw domain_error("primorial_bar: product overflows 128 bits");
        prod *= static_cast<u128>(p);
    }
    return prod;
}

CensusReport census(i64 p_j, const HalfDistance& d) {
    CensusReport rep;
    rep.d = d;
    rep.p_j = p_j;
    rep.eligible = eligible_primes(p_j, d);
    rep.l_bar = primorial_bar(p_j, d);

    // G(p) = 2 * prod_{p' < p} (p' - 2) * prod_{p'' > p} p''
    u128 r0 = 1;
    for (size_t i = 0; i < rep.eligible.size(); ++i) {
        u128 gp = 2;
        for (size_t j = 0; j < i; ++j) gp *= static_cast<u128>(rep.eligible[j] - 2);
        for (size_t j = i + 1; j < rep.eligible.size(); ++j)
            gp *= static_cast<u128>(rep.eligible[j]);
        rep.g.push_back(gp);
        r0 *= static_cast<u128>(rep.eligible[i] - 2);
    }
    rep.r0 = r0;
    rep.s = rep.l_bar - r0;
    if (rep.l_bar > static_cast<u128>(INT64_MAX))
        throw domain_error("census: L_bar too large for exact rational reporting");
    i128 lbar = static_cast<i128>(rep.l_bar);
    for (u128 gp : rep.g) rep.q.push_back(Rat(static_cast<i128>(gp), lbar));
    rep.big_q = Rat(static_cast<i128>(rep.s), lbar);
    rep.x = Rat(static_cast<i128>(rep.r0), lbar);
    return rep;
}

SupergroupSets enumerate_supergroup(i64 p_j, const HalfDistance& d, i64 budget) {
    u128 l_bar = primorial_bar(p_j, d);
    if (l_bar > static_cast<u128>(budget))
        throw budget_error(
            "enumerate_supergroup: period " + to_string_u128(l_bar) +
            " exceeds budget " + std::to_string(budget) +
            "; use the closed-form census instead");
    SupergroupSets sets;
    sets.period = static_cast<i64>(l_bar);
    sets.covered.assign(static_cast<size_t>(sets.period) + 1, 0);
    for (i64 p : eligible_primes(p_j, d)) {
        for (i64 r : single_progression(p, d).residues) {
            i64 start = r == 0 ? p : r;
            for (i64 m = start; m <= sets.period; m += p)
                sets.covered[static_cast<size_t>(m)] = 1;
        }
    }
    for (i64 m = 1; m <= sets.period; ++m) {
        if (sets.covered[static_cast<size_t>(m)]) {
            ++sets.nonrank_count;
        } else {
            ++sets.remnant_count;
            if (d.coprime(m)) ++sets.coprime_remnant_count;
        }
    }
    return sets;
}

std::vector<i64> SupergroupSets::nonranks() const {
    std::vector<i64> out;
    for (i64 m = 1; m <= period; ++m)
        if (covered[static_cast<size_t>(m)]) out.push_back(m);
    return out;
}

std::vector<i64> SupergroupSets::remnants() const {
    std::vector<i64> out;
    for (i64 m = 1; m <= period; ++m)
        if (!covered[static_cast<size_t>(m)]) out.push_back(m);
    return out;
}

std::vector<i64> SupergroupSets::coprime_remnants(const HalfDistance& d) const {
    std::vector<i64> out;
    for (i64 m = 1; m <= period; ++m)
        if (!covered[static_cast<size_t>(m)] && d.coprime(m)) out.push_back(m);
    return out;
}

std::vector<i64> exceptional_points(i64 p_j, const HalfDistance& d, i64 budget) {
    u128 l_bar_big = primorial_bar(p_j, d);
    u128 cap = std::min<u128>(l_bar_big, static_cast<u128>(budget));
    i64 l_bar = static_cast<i64>(cap);
    std::vector<i64> out;
    for (i64 p : eligible_primes(p_j, d)) {
        for (i64 c : {(p - d.value) / 2, (p + d.value) / 2}) {
            if (c < d.m_min() || c > l_bar) continue;
            if (is_prime(static_cast<u64>(2 * c - d.value)) &&
                is_prime(static_cast<u64>(2 * c + d.value)))
                out.push_back(c);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

i64 next_eligible_prime(i64 p_j, const HalfDistance& d) {
    i64 p = p_j + 2;
    while (!(is_prime(static_cast<u64>(p)) && d.coprime(p))) p += 2;
    return p;
}

FrontTwinRanks front_twin_ranks(i64 p_j, const HalfDistance& d, i64 budget) {
    FrontTwinRanks front;
    front.p_j = p_j;
    front.p_next = next_eligible_prime(p_j, d);
    front.m_bound = (front.p_next * front.p_next - d.value * d.value) / 2;
    u128 l_bar = primorial_bar(p_j, d);
    if (static_cast<u128>(front.m_bound) > l_bar)
        throw regime_error("front_twin_ranks: M(j+1) = " +
                               std::to_string(front.m_bound) + " exceeds L_bar = " +
                               to_string_u128(l_bar),
                           front.m_bound, static_cast<i64>(l_bar));

    auto sets = enumerate_supergroup(p_j, d, budget);
    for (i64 t = 1; t < front.m_bound; ++t) {
        if (sets.covered[static_cast<size_t>(t)] || !d.coprime(t)) continue;
        if (t < d.m_min()) {
            front.below_range_dropped.push_back(t);
            continue;
        }
        i64 lo = 2 * t - d.value;
        i64 hi = 2 * t + d.value;
        if (!d.three_divides && ((lo >= 9 && lo % 3 == 0) || (hi >= 9 && hi % 3 == 0))) {
            front.three_power_dropped.push_back(t);
            continue;
        }
        if (!(is_prime(static_cast<u64>(lo)) && is_prime(static_cast<u64>(hi))))
            throw domain_error("front_twin_ranks: remnant " + std::to_string(t) +
                               " failed oracle verification");
        front.ranks.push_back(t);
    }
    return front;
}

} // namespace twindi
