#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "twindi/estimate.hpp"

using namespace twindi;

namespace {

// independent oracle recount by trial division, no Miller-Rabin involved
bool td_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

i64 td_rank_count(i64 d, i64 limit) {
    i64 count = 0;
    for (i64 m = (d + 3) / 2; m <= limit; ++m)
        if (td_prime(2 * m - d) && td_prime(2 * m + d)) ++count;
    return count;
}

struct Rng {
    u64 s = 0x853c49e6748fea9bull;
    u64 next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    u64 below(u64 n) { return next() % n; }
};

} // namespace

TEST_CASE("m_bound examples") {
    CHECK(m_bound(11, HalfDistance::of(3)) == 80);
    CHECK(m_bound(13, HalfDistance::of(3)) == 140);
    CHECK(m_bound(7, HalfDistance::of(5)) == 48);
    // p_{j+1} = 7 <= D = 11 would give a nonpositive bound
    CHECK_THROWS_AS(m_bound(5, HalfDistance::of(11)), domain_error);
}

TEST_CASE("audit (11, D=3)") {
    auto d = HalfDistance::of(3);
    auto rep = audit_theorem52(11, d);
    CHECK(rep.l_bar == 385);
    CHECK(rep.m_next == 80);
    CHECK(rep.prime_limit == 257);
    CHECK(rep.r0 == 135);
    CHECK(rep.r_oracle == td_rank_count(3, 385));
    CHECK(rep.lhs == Rat(3 * rep.r_oracle, 2));

    // term log internally consistent
    i64 rebuilt = 0;
    CHECK(rep.term_log.front().n == 1);
    CHECK(rep.term_log.front().signed_term == rep.r0);
    i64 prev = 0;
    for (const auto& t : rep.term_log) {
        CHECK(t.n > prev);
        prev = t.n;
        // the lead row carries R0; every other bracket is the floor count
        CHECK(t.bracket == (t.n == 1 ? rep.r0 : (rep.l_bar - rep.m_next) / t.n));
        CHECK(t.signed_term == t.mu * (i64{1} << t.nu) * t.bracket);
        CHECK(mobius_and_nu(t.n).mu == t.mu);
        CHECK(mobius_and_nu(t.n).nu == t.nu);
        rebuilt += t.signed_term;
    }
    CHECK(rebuilt == rep.rhs);
    CHECK(rep.discrepancy == rep.lhs - Rat(rep.rhs));

    // primes used lie in (p_j, limit] and are coprime to D
    for (const auto& t : rep.term_log) {
        if (t.n == 1) continue;
        for (auto [p, e] : factorize(t.n).factors) {
            CHECK(e == 1);
            CHECK(p > 11);
            CHECK(p <= 257);
            CHECK(p % 3 != 0);
        }
    }
}

TEST_CASE("audit (13, D=3)") {
    auto rep = audit_theorem52(13, HalfDistance::of(3));
    CHECK(rep.l_bar == 5005);
    CHECK(rep.m_next == 140);
    CHECK(rep.r0 == 1485); // 3 * 5 * 9 * 11
    CHECK(rep.prime_limit == 3337);
    CHECK(rep.r_oracle == static_cast<i64>(oracle_twin_ranks(HalfDistance::of(3), 5005).size()));
}

TEST_CASE("audit regime error") {
    CHECK_THROWS_AS(audit_theorem52(7, HalfDistance::of(3)), regime_error);
}

TEST_CASE("audit is deterministic") {
    auto d = HalfDistance::of(3);
    auto a = audit_theorem52(11, d);
    auto b = audit_theorem52(11, d);
    CHECK(a.term_log.size() == b.term_log.size());
    for (size_t i = 0; i < a.term_log.size(); ++i) {
        CHECK(a.term_log[i].n == b.term_log[i].n);
        CHECK(a.term_log[i].signed_term == b.term_log[i].signed_term);
    }
}

TEST_CASE("bracket sum equals direct inclusion-exclusion on toy instances") {
    auto d = HalfDistance::of(3);
    auto rep = audit_theorem52(11, d);
    std::vector<i64> primes;
    for (i64 p : primes_upto(rep.prime_limit).primes)
        if (p > 11 && d.coprime(p)) primes.push_back(p);
    i64 window = rep.l_bar - rep.m_next;
    i64 direct = 0;
    // depth-first over squarefree products <= window; larger products have
    // an empty bracket and contribute nothing
    auto dfs = [&](auto&& self, size_t from, i64 prod, int bits) -> void {
        if (bits > 0)
            direct += (bits % 2 == 1 ? -1 : 1) * (i64{1} << bits) * (window / prod);
        for (size_t b = from; b < primes.size(); ++b) {
            if (primes[b] > window / prod) break;
            self(self, b + 1, prod * primes[b], bits + 1);
        }
    };
    dfs(dfs, 0, 1, 0);
    CHECK(rep.ie_sum == direct);
}

TEST_CASE("toy identities for the signed expansion") {
    CHECK(signed_expansion({13, 17}) == Rat(11 * 15, 13 * 17));
    CHECK(signed_expansion({7}) == Rat(5, 7));
    // 1 - sum 2/p + sum 4/pp' for {13, 17}: 1 - 2/13 - 2/17 + 4/221 = 165/221
    CHECK(signed_expansion({13, 17}).str() == "165/221");
}

TEST_CASE("signed expansion equals the product for random subsets") {
    // primes kept below 60 so any 12-element product stays within 64 bits
    auto primes = primes_upto(60).primes;
    Rng rng;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<i64> subset;
        size_t size = 1 + rng.below(12);
        while (subset.size() < size) {
            i64 p = primes[rng.below(primes.size())];
            if (p < 5) continue;
            if (std::find(subset.begin(), subset.end(), p) == subset.end())
                subset.push_back(p);
        }
        std::sort(subset.begin(), subset.end());
        Rat product(1);
        for (i64 p : subset) product = product * Rat(p - 2, p);
        CHECK(signed_expansion(subset) == product);
    }
}

TEST_CASE("main term and error term") {
    auto d = HalfDistance::of(3);
    auto rep = main_term(11, d);
    CHECK(rep.prime_limit == 257);
    CHECK(rep.r_m > 0);
    CHECK(rep.full_product > 0);
    CHECK(rep.full_product < rep.tail_product);

    auto err = error_term(11, d);
    CHECK(err.r_m == doctest::Approx(rep.r_m));
    CHECK(err.r_e == doctest::Approx(static_cast<double>(err.r_oracle) - rep.r_m));
    CHECK(err.frac_first >= 0);
    CHECK(err.frac_second >= 0);
}

TEST_CASE("asymptotic coefficient values") {
    double base = 12.0 * kTwinConstant * std::exp(-2.0 * kEulerGamma);
    CHECK(base > 2.49);
    CHECK(base < 2.51);

    double c3 = coefficient_C(HalfDistance::of(3));
    CHECK(c3 > 4.97);
    CHECK(c3 < 5.02);

    double c5 = coefficient_C(HalfDistance::of(5));
    CHECK(c5 > 3.31);
    CHECK(c5 < 3.35);

    // D = 15 multiplier: (2/3)/(1/3) * (4/5)/(3/5) = 8/3
    CHECK(coefficient_C(HalfDistance::of(15)) == doctest::Approx(base * 8.0 / 3.0));
}

TEST_CASE("coefficient grows along primorial D") {
    double prev = 0;
    for (i64 dv : {3, 15, 105, 1155}) {
        double c = coefficient_C(HalfDistance::of(dv));
        CHECK(c > prev);
        prev = c;
    }
}

TEST_CASE("asymptotic_main matches the coefficient form") {
    auto d = HalfDistance::of(3);
    double l_bar = 385.0;
    double via_c = coefficient_C(d) * l_bar / std::pow(std::log((2 * l_bar + 1) / 3.0), 2);
    CHECK(asymptotic_main(11, d) == doctest::Approx(via_c));
}

TEST_CASE("hl comparison at small scale") {
    auto rep = hl_comparison(HalfDistance::of(3), 100000);
    CHECK(rep.oracle_pairs == pi2_half(HalfDistance::of(3), 100000));
    CHECK(rep.estimated > 0);
    CHECK(rep.ratio == doctest::Approx(static_cast<double>(rep.oracle_pairs) / rep.estimated));
    // spot value recomputed by oracle: pairs with larger member <= 100
    CHECK(pi2_half(HalfDistance::of(3), 100) == 15);
}
