#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "megha/errors.hpp"

namespace megha {

// Exact nonnegative rational used only at the instance boundary; solvers see
// integers after canonicalization scales everything by the common denominator.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n, long long d);
    static Rat from_int(long long n) { return Rat(n, 1); }

    // Accepts "p", "p/q" and plain decimals like "1.25".
    static Rat parse(const std::string& s);

    bool operator==(const Rat&) const = default;
};

// lcm with overflow detection; raises Err::Overflow.
long long checked_lcm(long long a, long long b);

// a*b with overflow detection against the given cap; raises Err::Overflow.
long long checked_mul(long long a, long long b, long long cap);

} // namespace megha
