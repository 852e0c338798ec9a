#include "twindi/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "twindi/rational.hpp"
#include "twindi/types.hpp"

namespace twindi {

std::string to_string_u128(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

std::string to_string_i128(i128 v) {
    if (v < 0) return "-" + to_string_u128(static_cast<u128>(-v));
    return to_string_u128(static_cast<u128>(v));
}

i64 isqrt64(i64 n) {
    if (n < 0) throw domain_error("isqrt64: negative argument");
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

PrimeTable primes_upto(i64 limit, i64 segment_size) {
    if (limit < 2) throw domain_error("primes_upto: limit < 2 yields an empty table");
    if (segment_size < 16) segment_size = 16;

    // base primes up to sqrt(limit) by a plain sieve
    i64 root = isqrt64(limit);
    std::vector<uint8_t> small(static_cast<size_t>(root) + 1, 1);
    std::vector<i64> base;
    for (i64 i = 2; i <= root; ++i) {
        if (!small[static_cast<size_t>(i)]) continue;
        base.push_back(i);
        for (i64 j = i * i; j <= root; j += i) small[static_cast<size_t>(j)] = 0;
    }

    PrimeTable table;
    table.limit = limit;
    std::vector<uint8_t> seg;
    for (i64 lo = 2; lo <= limit; lo += segment_size) {
        i64 hi = std::min(limit, lo + segment_size - 1);
        seg.assign(static_cast<size_t>(hi - lo + 1), 1);
        for (i64 p : base) {
            if (p * p > hi) break;
            i64 start = std::max(p * p, ((lo + p - 1) / p) * p);
            for (i64 j = start; j <= hi; j += p) seg[static_cast<size_t>(j - lo)] = 0;
        }
        for (i64 v = lo; v <= hi; ++v)
            if (seg[static_cast<size_t>(v - lo)]) table.primes.push_back(v);
    }
    return table;
}

namespace {

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

bool mr_witness(u64 n, u64 a, u64 d, int s) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

} // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 41 * 41) return true;

    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // tiered deterministic base sets
    static constexpr u64 kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    int count = 12;
    if (n < 3215031751ull)
        count = 4;
    else if (n < 3474749660383ull)
        count = 6;
    for (int i = 0; i < count; ++i)
        if (mr_witness(n, kBases[i], d, s)) return false;
    return true;
}

MobiusNu mobius_and_nu(i64 n) {
    if (n < 1) throw domain_error("mobius_and_nu: n must be positive");
    int nu = 0;
    bool square = false;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        ++nu;
        n /= p;
        if (n % p == 0) {
            square = true;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ++nu;
    int mu = square ? 0 : ((nu & 1) ? -1 : 1);
    return {mu, nu};
}

Factorization factorize(i64 n) {
    if (n < 1) throw domain_error("factorize: n must be positive");
    Factorization f;
    f.value = n;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.factors.emplace_back(p, e);
    }
    if (n > 1) f.factors.emplace_back(n, 1);
    return f;
}

i64 mod_inverse(i64 a, i64 m) {
    if (m < 1) throw domain_error("mod_inverse: modulus must be positive");
    i64 r0 = m, r1 = ((a % m) + m) % m;
    i64 t0 = 0, t1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    if (r0 != 1) throw domain_error("mod_inverse: arguments are not coprime");
    return ((t0 % m) + m) % m;
}

std::pair<i64, i64> crt(const std::vector<std::pair<i64, i64>>& congruences) {
    if (congruences.empty()) throw domain_error("crt: no congruences given");
    i128 r = 0;
    i128 m = 1;
    for (auto [ri, mi] : congruences) {
        if (mi < 2) throw domain_error("crt: modulus must be >= 2");
        i64 mod = static_cast<i64>(m % mi);
        if (std::gcd(mod, mi) != 1 && m > 1)
            throw domain_error("crt: moduli are not pairwise coprime");
        // r + m*t == ri (mod mi)
        i64 cur = static_cast<i64>(((r % mi) + mi) % mi);
        i64 want = ((ri % mi) + mi) % mi;
        i64 t = static_cast<i64>(static_cast<i128>(mod_inverse(mod, mi)) *
                                 (((want - cur) % mi + mi) % mi) % mi);
        r += m * t;
        m *= mi;
        if (m > static_cast<i128>(INT64_MAX))
            throw domain_error("crt: modulus product overflows 64 bits");
    }
    return {static_cast<i64>(r % m), static_cast<i64>(m)};
}

Rat::Rat(i128 n, i128 d) {
    if (d == 0) throw domain_error("Rat: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 a = n < 0 ? -n : n;
    i128 b = d;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    if (a == 0) a = 1;
    num = n / a;
    den = d / a;
}

Rat Rat::operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
Rat Rat::operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }
Rat Rat::operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }
Rat Rat::operator/(const Rat& o) const {
    if (o.num == 0) throw domain_error("Rat: division by zero");
    return Rat(num * o.den, den * o.num);
}
bool Rat::operator<(const Rat& o) const { return num * o.den < o.num * den; }

double Rat::to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
}

std::string Rat::str() const {
    if (den == 1) return to_string_i128(num);
    return to_string_i128(num) + "/" + to_string_i128(den);
}

} // namespace twindi
