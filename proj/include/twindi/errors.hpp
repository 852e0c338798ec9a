#pragma once

#include <stdexcept>
#include <string>

#include "twindi/types.hpp"

namespace twindi {

// Violated precondition or malformed argument. Maps to CLI exit code 2.
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Asymptotic-regime violation, e.g. M(j+1) > L_bar(p_j). Maps to exit code 3.
struct regime_error : std::runtime_error {
    i64 bound;
    i64 period;
    regime_error(const std::string& what, i64 bound_, i64 period_)
        : std::runtime_error(what), bound(bound_), period(period_) {}
};

// Enumeration budget exceeded. Maps to exit code 3.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// k is a twin rank, so no non-rank decomposition exists.
struct not_a_nonrank_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// k is a trivial non-rank (shares a factor with D).
struct trivial_nonrank_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The only composite pair member is a pure power of 3 (3 does not divide D),
// so no prime p >= 5 coprime to D divides either member.
struct three_power_leak_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace twindi
