#include "twindi/pair_sieve.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace twindi {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::TwinRank: return "TwinRank";
        case Verdict::TrivialNonRank: return "TrivialNonRank";
        case Verdict::ProgressionNonRank: return "ProgressionNonRank";
        case Verdict::ThreePowerNonRank: return "ThreePowerNonRank";
        case Verdict::BelowRange: return "BelowRange";
    }
    return "?";
}

SieveRun SieveRun::make(const HalfDistance& d, i64 m_max, i64 segment_size) {
    if (m_max > (INT64_MAX - d.value) / 2)
        throw domain_error("SieveRun: 2*m_max + D overflows 64 bits");
    SieveRun run;
    run.d = d;
    run.m_min = d.m_min();
    run.m_max = m_max;
    run.segment_size = std::max<i64>(segment_size, 64);
    i64 bound = isqrt64(2 * m_max + d.value);
    if (bound >= 5) {
        for (i64 p : primes_upto(bound).primes)
            if (p >= 5 && d.coprime(p)) run.base_primes.push_back(p);
    }
    return run;
}

std::vector<i64> oracle_twin_ranks(const HalfDistance& d, i64 m_max) {
    std::vector<i64> out;
    for (i64 m = d.m_min(); m <= m_max; ++m)
        if (is_prime(static_cast<u64>(2 * m - d.value)) &&
            is_prime(static_cast<u64>(2 * m + d.value)))
            out.push_back(m);
    return out;
}

namespace {

// strike m == r (mod step) within [lo, hi]
void strike_class(std::vector<uint8_t>& marks, i64 lo, i64 hi, i64 r, i64 step,
                  i64 from) {
    i64 start = std::max(lo, from);
    i64 rem = ((start - r) % step + step) % step;
    i64 m = start + (rem == 0 ? 0 : step - rem);
    for (; m <= hi; m += step) marks[static_cast<size_t>(m - lo)] = 1;
}

std::vector<i64> sieve_segment(const SieveRun& run, i64 lo, i64 hi) {
    const HalfDistance& d = run.d;
    std::vector<uint8_t> marks(static_cast<size_t>(hi - lo + 1), 0);

    // trivial non-ranks: q | D implies q | m strikes the pair
    for (i64 q : d.prime_divisors) strike_class(marks, lo, hi, 0, q, run.m_min);

    // members divisible by 3 and >= 9 are composite; invisible to the
    // p >= 5 progressions when the 3-free part is a prime beyond the
    // base bound, so strike the full classes (covers pure 3-powers too)
    if (!d.three_divides) {
        i64 r_minus = ((2 * d.value) % 3 + 3) % 3;      // 3 | 2m - D
        i64 r_plus = ((-2 * d.value) % 3 + 9) % 3;      // 3 | 2m + D
        strike_class(marks, lo, hi, r_minus, 3, std::max(run.m_min, (9 + d.value) / 2));
        strike_class(marks, lo, hi, r_plus, 3, run.m_min);
    }

    for (i64 p : run.base_primes) {
        auto prog = single_progression(p, d);
        for (i64 r : prog.residues) strike_class(marks, lo, hi, r, p, run.m_min);
    }

    // exceptional points: a hit whose p-divisible member equals p itself
    // does not certify compositeness; keep such m when both members are prime
    for (i64 p : run.base_primes) {
        if ((p - d.value) / 2 > hi) break; // base_primes ascending
        for (i64 c : {(p - d.value) / 2, (p + d.value) / 2}) {
            if (c < std::max(lo, run.m_min) || c > hi) continue;
            if (!marks[static_cast<size_t>(c - lo)]) continue;
            if (is_prime(static_cast<u64>(2 * c - d.value)) &&
                is_prime(static_cast<u64>(2 * c + d.value)))
                marks[static_cast<size_t>(c - lo)] = 0;
        }
    }

    std::vector<i64> out;
    for (i64 m = std::max(lo, run.m_min); m <= hi; ++m)
        if (!marks[static_cast<size_t>(m - lo)]) out.push_back(m);
    return out;
}

} // namespace

std::vector<i64> sieve_twin_ranks(const SieveRun& run, int threads) {
    if (run.m_max < run.m_min) return {};
    i64 lo0 = run.m_min;
    i64 count = (run.m_max - lo0) / run.segment_size + 1;
    std::vector<std::vector<i64>> parts(static_cast<size_t>(count));

    unsigned hw = std::thread::hardware_concurrency();
    int nthreads = threads > 0 ? threads : (hw > 0 ? static_cast<int>(hw) : 1);
    nthreads = static_cast<int>(std::min<i64>(nthreads, count));

    std::atomic<i64> next{0};
    auto worker = [&] {
        for (;;) {
            i64 i = next.fetch_add(1);
            if (i >= count) return;
            i64 lo = lo0 + i * run.segment_size;
            i64 hi = std::min(run.m_max, lo + run.segment_size - 1);
            parts[static_cast<size_t>(i)] = sieve_segment(run, lo, hi);
        }
    };
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::vector<i64> out;
    for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    return out;
}

Classification classify(i64 m, const HalfDistance& d) {
    if (m < 1) throw domain_error("classify: m must be positive");
    Classification c;
    c.m = m;
    if (m < d.m_min()) {
        c.verdict = Verdict::BelowRange;
        return c;
    }
    for (i64 q : d.prime_divisors) {
        if (m % q == 0) {
            c.verdict = Verdict::TrivialNonRank;
            c.witness = q;
            return c;
        }
    }
    i64 lo = 2 * m - d.value;
    i64 hi = 2 * m + d.value;
    if (is_prime(static_cast<u64>(lo)) && is_prime(static_cast<u64>(hi))) {
        c.verdict = Verdict::TwinRank;
        return c;
    }
    try {
        c.witness = parent_prime(m, d);
        c.verdict = Verdict::ProgressionNonRank;
    } catch (const three_power_leak_error&) {
        c.verdict = Verdict::ThreePowerNonRank;
    }
    return c;
}

i64 pi2_half(const HalfDistance& d, i64 x) {
    if (x < 3) throw domain_error("pi2_half: x must be >= 3");
    i64 m_max = (x - d.value) / 2;
    i64 count = 0;
    for (i64 m = d.m_min(); m <= m_max; ++m)
        if (is_prime(static_cast<u64>(2 * m - d.value)) &&
            is_prime(static_cast<u64>(2 * m + d.value)))
            ++count;
    return count;
}

} // namespace twindi
