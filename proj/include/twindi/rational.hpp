#pragma once

#include <string>

#include "twindi/errors.hpp"
#include "twindi/types.hpp"

namespace twindi {

// Exact rational with 128-bit numerator/denominator, always normalized
// (den > 0, gcd(|num|, den) = 1). Enough headroom for every census and
// audit identity; throws on division by zero.
struct Rat {
    i128 num = 0;
    i128 den = 1;

    Rat() = default;
    Rat(i128 n) : num(n), den(1) {}
    Rat(i128 n, i128 d);

    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    Rat operator*(const Rat& o) const;
    Rat operator/(const Rat& o) const;
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const;
    bool operator>(const Rat& o) const { return o < *this; }

    bool is_integer() const { return den == 1; }
    double to_double() const;
    std::string str() const; // "num/den", or "num" when den == 1
};

} // namespace twindi
