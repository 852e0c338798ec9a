#include "twindi/estimate.hpp"

#include <algorithm>
#include <cmath>

namespace twindi {

i64 m_bound(i64 p_j, const HalfDistance& d) {
    if (p_j < 5 || !is_prime(static_cast<u64>(p_j)) || !d.coprime(p_j))
        throw domain_error("m_bound: p_j must be an eligible prime >= 5");
    i64 p_next = next_eligible_prime(p_j, d);
    if (p_next <= d.value)
        throw domain_error("m_bound: p_{j+1} <= D gives a nonpositive bound");
    return (p_next * p_next - d.value * d.value) / 2;
}

namespace {

// squarefree products n <= cap of the given ascending primes, with factor count
void squarefree_products(const std::vector<i64>& primes, i64 cap, size_t start,
                         i64 acc, int count, std::vector<std::pair<i64, int>>& out) {
    for (size_t i = start; i < primes.size(); ++i) {
        if (primes[i] > cap / acc) break;
        i64 n = acc * primes[i];
        out.emplace_back(n, count + 1);
        squarefree_products(primes, cap, i + 1, n, count + 1, out);
    }
}

std::vector<i64> range_primes(i64 lo_exclusive, i64 hi, const HalfDistance& d) {
    std::vector<i64> out;
    if (hi < 2) return out;
    for (i64 p : primes_upto(hi).primes)
        if (p > lo_exclusive && d.coprime(p)) out.push_back(p);
    return out;
}

Rat trivial_factor_inverse(const HalfDistance& d) {
    // prod_{p|D} (1 - 1/p)^{-1} = prod p / (p - 1)
    Rat f(1);
    for (i64 p : d.prime_divisors) f = f * Rat(p, p - 1);
    return f;
}

} // namespace

AuditReport audit_theorem52(i64 p_j, const HalfDistance& d, i64 budget) {
    AuditReport rep;
    rep.d = d;
    rep.p_j = p_j;
    u128 l_bar_big = primorial_bar(p_j, d);
    if (l_bar_big > static_cast<u128>(budget))
        throw budget_error("audit_theorem52: L_bar exceeds enumeration budget");
    rep.l_bar = static_cast<i64>(l_bar_big);
    rep.m_next = m_bound(p_j, d);
    if (rep.m_next >= rep.l_bar)
        throw regime_error("audit_theorem52: M(j+1) = " + std::to_string(rep.m_next) +
                               " >= L_bar = " + std::to_string(rep.l_bar),
                           rep.m_next, rep.l_bar);
    rep.prime_limit = (2 * rep.l_bar + 1) / d.value;

    rep.r_oracle = static_cast<i64>(oracle_twin_ranks(d, rep.l_bar).size());
    rep.lhs = Rat(rep.r_oracle) * trivial_factor_inverse(d);

    auto cen = census(p_j, d);
    rep.r0 = static_cast<i64>(cen.r0);
    rep.term_log.push_back({1, 1, 0, rep.r0, rep.r0});

    i64 cap = rep.l_bar - rep.m_next;
    auto primes = range_primes(p_j, rep.prime_limit, d);
    std::vector<std::pair<i64, int>> products;
    squarefree_products(primes, cap, 0, 1, 0, products);
    std::sort(products.begin(), products.end());
    for (auto [n, count] : products) {
        AuditTerm t;
        t.n = n;
        t.mu = (count & 1) ? -1 : 1;
        t.nu = count;
        t.bracket = cap / n;
        t.signed_term = static_cast<i64>(t.mu) * (i64{1} << count) * t.bracket;
        rep.ie_sum += t.signed_term;
        rep.term_log.push_back(t);
    }
    rep.rhs = rep.r0 + rep.ie_sum;
    rep.discrepancy = rep.lhs - Rat(rep.rhs);
    rep.exceptional_correction =
        static_cast<i64>(exceptional_points(p_j, d, budget).size());
    return rep;
}

MainTermReport main_term(i64 p_j, const HalfDistance& d) {
    MainTermReport rep;
    rep.d = d;
    rep.p_j = p_j;
    u128 l_bar_big = primorial_bar(p_j, d);
    if (l_bar_big > static_cast<u128>(i64{1} << 56))
        throw domain_error("main_term: L_bar too large for a prime table up to (2*L_bar+1)/D");
    rep.l_bar = static_cast<i64>(l_bar_big);
    rep.m_next = m_bound(p_j, d);
    rep.prime_limit = (2 * rep.l_bar + 1) / d.value;
    if (rep.prime_limit > 100'000'000)
        throw domain_error("main_term: prime table bound exceeds 1e8");

    rep.full_product = 1.0;
    rep.tail_product = 1.0;
    for (i64 p : primes_upto(std::max<i64>(rep.prime_limit, 2)).primes) {
        if (p < 5 || !d.coprime(p)) continue;
        double f = 1.0 - 2.0 / static_cast<double>(p);
        rep.full_product *= f;
        if (p > p_j) rep.tail_product *= f;
    }

    double lhs = static_cast<double>(rep.l_bar) * rep.full_product +
                 static_cast<double>(rep.m_next) * (1.0 - rep.tail_product);
    double trivial = 1.0;
    for (i64 p : d.prime_divisors) trivial *= 1.0 - 1.0 / static_cast<double>(p);
    rep.r_m = lhs * trivial;
    rep.asymptotic_r_m = asymptotic_main(p_j, d);
    rep.c_d = coefficient_C(d);
    return rep;
}

ErrorTermReport error_term(i64 p_j, const HalfDistance& d, i64 budget) {
    auto audit = audit_theorem52(p_j, d, budget);
    auto main = main_term(p_j, d);
    ErrorTermReport rep;
    rep.r_oracle = audit.r_oracle;
    rep.r_m = main.r_m;
    rep.r_e = static_cast<double>(audit.r_oracle) - main.r_m;

    double trivial = 1.0;
    for (i64 p : d.prime_divisors) trivial *= 1.0 - 1.0 / static_cast<double>(p);
    double window = static_cast<double>(audit.l_bar - audit.m_next);
    auto primes = range_primes(p_j, audit.prime_limit, d);
    auto frac = [](double v) { return v - std::floor(v); };
    for (size_t i = 0; i < primes.size(); ++i) {
        double pi = static_cast<double>(primes[i]);
        rep.frac_first += 2.0 * frac(trivial * window / pi);
        for (size_t j = i + 1; j < primes.size(); ++j) {
            double pp = pi * static_cast<double>(primes[j]);
            if (pp > window) break;
            rep.frac_second += 4.0 * frac(trivial * window / pp);
        }
    }
    return rep;
}

double asymptotic_main(i64 p_j, const HalfDistance& d) {
    double l_bar = static_cast<double>(primorial_bar(p_j, d));
    double num = 1.0, den = 1.0;
    for (i64 p : d.prime_divisors) {
        num *= 1.0 - 1.0 / static_cast<double>(p);
        den *= 1.0 - 2.0 / static_cast<double>(p);
    }
    double log_arg = std::log((2.0 * l_bar + 1.0) / static_cast<double>(d.value));
    return num * 6.0 * kTwinConstant * std::exp(-2.0 * kEulerGamma) * 2.0 * l_bar /
           (den * log_arg * log_arg);
}

double coefficient_C(const HalfDistance& d) {
    double factor = 1.0;
    for (i64 p : d.prime_divisors)
        factor *= (1.0 - 1.0 / static_cast<double>(p)) /
                  (1.0 - 2.0 / static_cast<double>(p));
    return 12.0 * kTwinConstant * std::exp(-2.0 * kEulerGamma) * factor;
}

Rat signed_expansion(const std::vector<i64>& primes) {
    std::vector<std::pair<i64, int>> products;
    // cap large enough to keep every subset product (subsets of <= 12 primes)
    i64 cap = INT64_MAX / 2;
    i128 full = 1;
    for (i64 p : primes) {
        full *= p;
        if (full > static_cast<i128>(cap))
            throw domain_error("signed_expansion: prime product overflows");
    }
    squarefree_products(primes, cap, 0, 1, 0, products);
    Rat sum(1);
    for (auto [n, count] : products) {
        i64 coeff = ((count & 1) ? -1 : 1) * (i64{1} << count);
        sum = sum + Rat(coeff, n);
    }
    return sum;
}

HLComparison hl_comparison(const HalfDistance& d, i64 x) {
    if (x < d.value + 3 || x > 100'000'000)
        throw domain_error("hl_comparison: x out of range");
    HLComparison rep;
    rep.d = d;
    rep.x = x;
    rep.m_max = (x - d.value) / 2;
    rep.oracle_pairs = pi2_half(d, x);

    // integrate the derivative of the asymptotic law C(D) * m / log^2((2m+1)/D)
    // from an anchor where the logarithm is safely away from zero
    double c = coefficient_C(d);
    auto f = [&](double m) {
        double lg = std::log((2.0 * m + 1.0) / static_cast<double>(d.value));
        return m / (lg * lg);
    };
    double m0 = std::max<double>(static_cast<double>(d.m_min()),
                                 (std::exp(2.0) * static_cast<double>(d.value) - 1.0) / 2.0);
    rep.estimated = c * (f(static_cast<double>(rep.m_max)) - f(m0));
    rep.ratio = static_cast<double>(rep.oracle_pairs) / rep.estimated;
    rep.in_band = rep.ratio >= 0.9 && rep.ratio <= 1.1;
    return rep;
}

} // namespace twindi
