#pragma once

#include <cstdint>
#include <string>

#include "megha/errors.hpp"

namespace megha {

// All envy arithmetic runs in 128-bit integers over scaled valuations.
// Canonicalization guarantees that every total an algorithm can form stays
// strictly below kEnvyInf, so the sentinel survives saturating addition.
using envy_t = __int128;

inline constexpr envy_t kEnvyInf = envy_t(1) << 126;

inline envy_t sat_add(envy_t a, envy_t b) {
    if (a >= kEnvyInf || b >= kEnvyInf) return kEnvyInf;
    return a + b;
}

std::string envy_str(envy_t v);

} // namespace megha
