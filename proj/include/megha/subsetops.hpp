#pragma once

#include <cstdint>
#include <vector>

#include "megha/types.hpp"

namespace megha {

// Function on all subsets of {0..ground_n-1}; kEnvyInf marks "undefined".
// Ground sets are capped at 24 bits.
struct SubsetFunction {
    int ground_n = 0;
    std::vector<envy_t> v;

    static SubsetFunction constant(int n, envy_t value);
    size_t size() const { return v.size(); }
};

struct ConvOptions {
    // Fast path admitted only while 2^n * n^2 * (B+1) stays below this.
    unsigned long long work_budget = 1ULL << 36;
    // ... and the materialized value layers fit in this many bytes.
    unsigned long long mem_budget = 3ULL << 29;
    int threads = 0; // 0 = library default
};

struct ConvStats {
    long long layers_f = 0;
    long long layers_g = 0;
    long long degrees_processed = 0;
    long long resolved = 0;
    long long witness_fallbacks = 0;
};

// h(S) = min over X subset of S of f(X) + g(S\X); exact, saturating at the
// infinity sentinel. Serves as the reference implementation.
SubsetFunction naive_min_sum_convolution(const SubsetFunction& f, const SubsetFunction& g);

// Same h, restricted to the value window [0, bound]: entries whose true
// minimum exceeds `bound` come back as infinity. Runs the rank/value-layered
// transform arithmetic mod 2^61-1; every recovered minimum is certified by an
// explicit witness split before being reported (a failed certificate falls
// back to the naive scan for that entry). Raises Err::BoundTooLarge when the
// bound blows the work or memory budget.
SubsetFunction fast_min_sum_convolution(const SubsetFunction& f, const SubsetFunction& g,
                                        envy_t bound, const ConvOptions& opts = {},
                                        ConvStats* stats = nullptr);

// Additive zeta/moebius transforms over the subset lattice, exact in int64.
std::vector<long long> zeta_transform(std::vector<long long> f, int n);
std::vector<long long> moebius_transform(std::vector<long long> f, int n);

// Rank-stratified zeta: layer r holds sums over rank-r subsets only, so the
// pair below round-trips exactly on any integer-valued input.
std::vector<std::vector<long long>> ranked_zeta(const std::vector<long long>& f, int n);
std::vector<long long> ranked_moebius(const std::vector<std::vector<long long>>& layers, int n);

} // namespace megha
