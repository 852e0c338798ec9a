#include "twindi/progressions.hpp"

#include <algorithm>
#include <numeric>

#include "twindi/pair_sieve.hpp"

namespace twindi {

HalfDistance HalfDistance::of(i64 d) {
    if (d < 3 || d % 2 == 0)
        throw domain_error("HalfDistance: d must be odd and >= 3");
    HalfDistance h;
    h.value = d;
    for (auto& [p, e] : factorize(d).factors) h.prime_divisors.push_back(p);
    h.three_divides = d % 3 == 0;
    return h;
}

bool HalfDistance::coprime(i64 n) const {
    return std::gcd(n < 0 ? -n : n, value) == 1;
}

bool NonRankProgression::contains(i64 m) const {
    i64 r = ((m % modulus) + modulus) % modulus;
    return std::binary_search(residues.begin(), residues.end(), r);
}

i64 nearest_sixth(i64 p) {
    if (p < 5 || !is_prime(static_cast<u64>(p)))
        throw domain_error("nearest_sixth: argument must be a prime >= 5");
    return p % 6 == 1 ? (p - 1) / 6 : (p + 1) / 6;
}

namespace {

// +3*D*N(p/6) reduced mod p
i64 base_residue(i64 p, const HalfDistance& d) {
    i128 r = static_cast<i128>(3) * d.value % p * nearest_sixth(p) % p;
    return static_cast<i64>(r);
}

} // namespace

NonRankProgression single_progression(i64 p, const HalfDistance& d) {
    if (p < 5 || !is_prime(static_cast<u64>(p)))
        throw domain_error("single_progression: p must be a prime >= 5");
    if (!d.coprime(p))
        throw domain_error("single_progression: p divides D, no progression exists");
    i64 r = base_residue(p, d);
    NonRankProgression prog;
    prog.modulus = p;
    prog.order = 1;
    prog.residues = {r, p - r};
    std::sort(prog.residues.begin(), prog.residues.end());
    return prog;
}

ProgressionMember progression_member(i64 n, i64 p, int sign, const HalfDistance& d) {
    if (sign != 1 && sign != -1)
        throw domain_error("progression_member: sign must be +1 or -1");
    if (p < 5 || !is_prime(static_cast<u64>(p)) || !d.coprime(p))
        throw domain_error("progression_member: p must be a prime >= 5 coprime to D");
    ProgressionMember out;
    out.k = n * p + sign * 3 * d.value * nearest_sixth(p);
    out.pair_lo = 2 * out.k - d.value;
    out.pair_hi = 2 * out.k + d.value;
    // 2k = p(2n + sign*D) - e*sign*D with e = +-1 per p mod 6,
    // so p divides the member 2k + (e*sign)*D with cofactor 2n + sign*D.
    int e = p % 6 == 1 ? 1 : -1;
    out.divisible_member = e * sign > 0 ? out.pair_hi : out.pair_lo;
    out.cofactor = 2 * n + sign * d.value;
    out.valid = out.k >= 1 && out.cofactor >= 3;
    return out;
}

namespace {

// smallest prime >= 5 coprime to D dividing v with cofactor >= 3; the
// cofactor of an odd member is odd, so only v itself is excluded
i64 min_eligible_factor(i64 v, const HalfDistance& d) {
    if (v < 5) return 0;
    i64 best = 0;
    i64 n = v;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        if (p >= 5 && d.coprime(p)) return p;
    }
    if (n >= 5 && n != v && d.coprime(n)) best = n;
    return best;
}

bool is_three_power(i64 v) {
    if (v < 3) return false;
    while (v % 3 == 0) v /= 3;
    return v == 1;
}

} // namespace

i64 parent_prime(i64 k, const HalfDistance& d) {
    if (k < 1) throw domain_error("parent_prime: k must be positive");
    i64 lo = 2 * k - d.value;
    i64 hi = 2 * k + d.value;
    if (lo >= 3 && is_prime(static_cast<u64>(lo)) && is_prime(static_cast<u64>(hi)))
        throw not_a_nonrank_error("parent_prime: k is a twin rank");
    i64 a = min_eligible_factor(lo, d);
    i64 b = min_eligible_factor(hi, d);
    if (a == 0 && b == 0)
        throw three_power_leak_error(
            "parent_prime: no prime >= 5 coprime to D divides either member");
    if (a == 0) return b;
    if (b == 0) return a;
    return std::min(a, b);
}

Decomposition decompose(i64 k, const HalfDistance& d) {
    if (k < 1) throw domain_error("decompose: k must be positive");
    if (!d.coprime(k))
        throw trivial_nonrank_error("decompose: k is a trivial non-rank");
    i64 lo = 2 * k - d.value;
    i64 hi = 2 * k + d.value;
    if (lo >= 3 && is_prime(static_cast<u64>(lo)) && is_prime(static_cast<u64>(hi)))
        throw not_a_nonrank_error("decompose: k is a twin rank");
    i64 p = parent_prime(k, d);
    // p divides 2k + (e*sign)*D; solve for the sign it witnesses.
    int e = p % 6 == 1 ? 1 : -1;
    int sign = (((hi % p) + p) % p == 0) ? e : -e;
    i64 offset = sign * 3 * d.value * nearest_sixth(p);
    if ((k - offset) % p != 0)
        throw domain_error("decompose: internal inconsistency");
    Decomposition dec;
    dec.parent = p;
    dec.sign = sign;
    dec.lambda = (k - offset) / p;
    return dec;
}

NonRankProgression common_progression(const std::vector<i64>& primes,
                                      const HalfDistance& d) {
    if (primes.empty())
        throw domain_error("common_progression: need at least one prime");
    std::vector<i64> ps = primes;
    std::sort(ps.begin(), ps.end());
    if (std::adjacent_find(ps.begin(), ps.end()) != ps.end())
        throw domain_error("common_progression: primes must be distinct");

    NonRankProgression prog;
    prog.order = static_cast<int>(ps.size());
    i64 partial = 1;
    std::vector<i64> combined;
    for (i64 p : ps) {
        auto single = single_progression(p, d); // validates p and gcd(p, D)
        if (static_cast<i128>(partial) * p > static_cast<i128>(INT64_MAX))
            throw domain_error("common_progression: modulus overflows 64 bits");
        if (combined.empty()) {
            combined = single.residues;
        } else {
            std::vector<i64> next;
            next.reserve(combined.size() * 2);
            for (i64 r : combined)
                for (i64 rp : single.residues)
                    next.push_back(crt({{r, partial}, {rp, p}}).first);
            combined = std::move(next);
        }
        partial *= p;
    }
    prog.modulus = partial;
    std::sort(combined.begin(), combined.end());
    prog.residues = std::move(combined);
    return prog;
}

TwinRelation twin_relation(i64 p, i64 p2, const HalfDistance& d) {
    if (p < 5 || p2 <= p || !is_prime(static_cast<u64>(p)) ||
        !is_prime(static_cast<u64>(p2)))
        throw domain_error("twin_relation: need primes p2 > p >= 5");
    TwinRelation rel;
    rel.p = p;
    rel.p2 = p2;
    rel.n_p = nearest_sixth(p);
    rel.n_p2 = nearest_sixth(p2);
    rel.n_equal = rel.n_p == rel.n_p2;
    rel.gap2_twin = p2 == p + 2;
    rel.same_mod6 = p % 6 == p2 % 6;
    if (rel.same_mod6) {
        switch (d.value % 3) {
            case 0:
                rel.case_label = 1;
                rel.required_diff = d.value / 3;
                rel.implied_gap = 2 * d.value;
                break;
            case 1:
                rel.case_label = 2;
                rel.required_diff = (d.value - 1) / 3;
                rel.implied_gap = 2 * (d.value - 1);
                break;
            default:
                rel.case_label = 3;
                rel.required_diff = (d.value + 1) / 3;
                rel.implied_gap = 2 * (d.value + 1);
                break;
        }
        rel.diff_matches = rel.n_p2 - rel.n_p == rel.required_diff;
        rel.gap_matches = p2 - p == rel.implied_gap;
        rel.iff_holds = rel.diff_matches == rel.gap_matches;
    }
    return rel;
}

} // namespace twindi
