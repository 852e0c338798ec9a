#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "twindi/pair_sieve.hpp"
#include "twindi/progressions.hpp"

using namespace twindi;

TEST_CASE("half distance validation") {
    auto d = HalfDistance::of(15);
    CHECK(d.prime_divisors == std::vector<i64>{3, 5});
    CHECK(d.three_divides);
    CHECK(d.m_min() == 9);
    CHECK_FALSE(HalfDistance::of(5).three_divides);
    CHECK_THROWS_AS(HalfDistance::of(4), domain_error);
    CHECK_THROWS_AS(HalfDistance::of(1), domain_error);
}

TEST_CASE("nearest_sixth examples") {
    CHECK(nearest_sixth(5) == 1);
    CHECK(nearest_sixth(7) == 1);
    CHECK(nearest_sixth(13) == 2);
    CHECK(nearest_sixth(11) == 2);
    CHECK_THROWS_AS(nearest_sixth(4), domain_error);
    CHECK_THROWS_AS(nearest_sixth(9), domain_error);
}

TEST_CASE("single_progression examples") {
    auto d3 = HalfDistance::of(3);
    CHECK(single_progression(5, d3).residues == std::vector<i64>{1, 4});
    CHECK(single_progression(7, d3).residues == std::vector<i64>{2, 5});
    CHECK(single_progression(11, d3).residues == std::vector<i64>{4, 7});
    CHECK_THROWS_AS(single_progression(3, d3), domain_error);
    CHECK_THROWS_AS(single_progression(5, HalfDistance::of(5)), domain_error);
}

TEST_CASE("single_progression characterizes p | (2r-D)(2r+D)") {
    for (i64 dv : {3, 5, 7, 9, 25}) {
        auto d = HalfDistance::of(dv);
        for (i64 p : primes_upto(1000).primes) {
            if (p < 5 || !d.coprime(p)) continue;
            auto prog = single_progression(p, d);
            CHECK(prog.residues.size() == 2);
            CHECK(prog.residues[0] != prog.residues[1]);
            for (i64 r = 0; r < p; ++r) {
                bool divides = ((2 * r - dv) % p == 0) || ((2 * r + dv) % p == 0);
                CHECK(prog.contains(r) == divides);
            }
        }
    }
}

TEST_CASE("non-rank symmetry about multiples of p") {
    // members sit at equal distances from multiples of p: r and p - r
    for (i64 dv : {3, 5, 21}) {
        auto d = HalfDistance::of(dv);
        for (i64 p : {5, 7, 11, 13, 97}) {
            if (!d.coprime(p)) continue;
            auto prog = single_progression(p, d);
            CHECK(prog.residues[0] + prog.residues[1] == p);
        }
    }
}

TEST_CASE("progression_member examples") {
    auto d3 = HalfDistance::of(3);
    auto m1 = progression_member(0, 5, +1, d3);
    CHECK(m1.k == 9);
    CHECK(m1.pair_lo == 15);
    CHECK(m1.pair_hi == 21);
    CHECK(m1.valid);
    CHECK(m1.divisible_member == 15);

    auto m2 = progression_member(3, 5, -1, d3);
    CHECK(m2.k == 6);
    CHECK(m2.pair_lo == 9);
    CHECK(m2.pair_hi == 15);
    CHECK(m2.valid);

    auto d5 = HalfDistance::of(5);
    auto m3 = progression_member(-1, 7, +1, d5);
    CHECK(m3.k == 8);
    CHECK(m3.pair_lo == 11);
    CHECK(m3.pair_hi == 21);
    CHECK(m3.valid);
    CHECK(m3.divisible_member == 21);
    CHECK(m3.cofactor == 3);

    // cofactor 1: the p-divisible member is p itself, not composite
    auto m4 = progression_member(-1, 5, +1, d3); // k = 4, pair (5, 11)
    CHECK(m4.k == 4);
    CHECK_FALSE(m4.valid);
}

TEST_CASE("progression_member marks the divisible member correctly") {
    for (i64 dv : {3, 5, 7, 11}) {
        auto d = HalfDistance::of(dv);
        for (i64 p : {5, 7, 11, 13, 17, 19}) {
            if (!d.coprime(p)) continue;
            for (i64 n = -10; n <= 10; ++n) {
                for (int sign : {+1, -1}) {
                    auto m = progression_member(n, p, sign, d);
                    CHECK(m.divisible_member % p == 0);
                    CHECK(m.divisible_member == p * m.cofactor);
                }
            }
        }
    }
}

TEST_CASE("decompose examples") {
    auto d3 = HalfDistance::of(3);
    auto dec = decompose(11, d3);
    CHECK(dec.parent == 5);
    CHECK(dec.lambda == 4);
    CHECK(dec.sign == -1);

    auto d5 = HalfDistance::of(5);
    auto dec2 = decompose(8, d5);
    CHECK(dec2.parent == 7);
    CHECK(dec2.lambda == -1);
    CHECK(dec2.sign == +1);

    CHECK_THROWS_AS(decompose(11, d5), three_power_leak_error);
    CHECK_THROWS_AS(decompose(4, d3), not_a_nonrank_error);  // (5, 11) both prime
    CHECK_THROWS_AS(decompose(9, d3), trivial_nonrank_error);
}

TEST_CASE("parent_prime examples") {
    auto d3 = HalfDistance::of(3);
    auto d5 = HalfDistance::of(5);
    CHECK(parent_prime(9, d3) == 5);   // trivial non-rank, parent still defined
    CHECK(parent_prime(13, d5) == 7);  // (21, 31), 21 = 3*7
    CHECK(parent_prime(16, d3) == 5);  // (29, 35), 35 = 5*7
    CHECK_THROWS_AS(parent_prime(4, d3), not_a_nonrank_error);
}

TEST_CASE("decompose round trip") {
    for (i64 dv : {3, 5, 7}) {
        auto d = HalfDistance::of(dv);
        for (i64 p : {5, 7, 11, 13, 101}) {
            if (!d.coprime(p)) continue;
            for (i64 n = -50; n <= 50; ++n) {
                for (int sign : {+1, -1}) {
                    auto m = progression_member(n, p, sign, d);
                    if (!m.valid || m.k > 100000) continue;
                    if (m.k < d.m_min() || !d.coprime(m.k)) continue;
                    auto dec = decompose(m.k, d);
                    // parent may differ from p; reconstruction must hold
                    auto back = progression_member(dec.lambda, dec.parent, dec.sign, d);
                    CHECK(back.k == m.k);
                }
            }
        }
    }
}

TEST_CASE("common_progression examples") {
    auto d3 = HalfDistance::of(3);
    auto ab = common_progression({5, 7}, d3);
    CHECK(ab.modulus == 35);
    CHECK(ab.residues == std::vector<i64>{9, 16, 19, 26});

    auto ac = common_progression({5, 11}, d3);
    CHECK(ac.modulus == 55);
    CHECK(ac.residues == std::vector<i64>{4, 26, 29, 51});

    auto abc = common_progression({5, 7, 11}, d3);
    CHECK(abc.modulus == 385);
    CHECK(abc.residues.size() == 8);
    // enumeration oracle: k in [1, 385] with p | (2k)^2 - D^2 for all three
    std::vector<i64> expected;
    for (i64 k = 0; k < 385; ++k) {
        bool all = true;
        for (i64 p : {5, 7, 11})
            all = all && (((2 * k - 3) % p == 0) || ((2 * k + 3) % p == 0));
        if (all) expected.push_back(k);
    }
    CHECK(abc.residues == expected);
}

TEST_CASE("common_progression counts are 2^|S|") {
    std::vector<i64> pool = {5, 7, 11, 13};
    for (i64 dv : {3, 9}) {
        auto d = HalfDistance::of(dv);
        for (int mask = 1; mask < 16; ++mask) {
            std::vector<i64> subset;
            for (int b = 0; b < 4; ++b)
                if (mask & (1 << b)) subset.push_back(pool[static_cast<size_t>(b)]);
            auto prog = common_progression(subset, d);
            CHECK(prog.residues.size() == (size_t{1} << subset.size()));
        }
    }
}

TEST_CASE("common_progression equals intersection of single classes") {
    auto d = HalfDistance::of(3);
    auto prog = common_progression({5, 7, 11, 13}, d); // modulus 5005 <= 1e6
    std::vector<i64> expected;
    for (i64 k = 0; k < prog.modulus; ++k) {
        bool all = true;
        for (i64 p : {5, 7, 11, 13}) all = all && single_progression(p, d).contains(k);
        if (all) expected.push_back(k);
    }
    CHECK(prog.residues == expected);
}

TEST_CASE("twin_relation examples") {
    auto d3 = HalfDistance::of(3);
    auto r1 = twin_relation(5, 7, d3);
    CHECK(r1.n_equal);
    CHECK(r1.gap2_twin);

    auto r2 = twin_relation(5, 11, d3);
    CHECK(r2.same_mod6);
    CHECK(r2.case_label == 1);
    CHECK(r2.n_p2 - r2.n_p == 1); // 2 - 1 = D/3
    CHECK(r2.diff_matches);
    CHECK(r2.implied_gap == 6);
    CHECK(r2.gap_matches);
    CHECK(r2.iff_holds);

    auto r3 = twin_relation(7, 13, d3);
    CHECK(r3.case_label == 1);
    CHECK(r3.diff_matches);
    CHECK(r3.gap_matches);

    CHECK_THROWS_AS(twin_relation(7, 5, d3), domain_error);
    CHECK_THROWS_AS(twin_relation(5, 9, d3), domain_error);
}

TEST_CASE("twin_relation iff over a prime range") {
    for (i64 dv : {3, 7, 11}) {
        auto d = HalfDistance::of(dv);
        auto primes = primes_upto(500).primes;
        for (size_t i = 0; i < primes.size(); ++i) {
            if (primes[i] < 5) continue;
            for (size_t j = i + 1; j < primes.size(); ++j) {
                auto rel = twin_relation(primes[i], primes[j], d);
                CHECK(rel.n_equal == (nearest_sixth(primes[j]) == nearest_sixth(primes[i])));
                if (rel.same_mod6) CHECK(rel.iff_holds);
            }
        }
    }
}
