#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "megha/core.hpp"
#include "megha/solvers.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace megha::detail {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long millis() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

inline int solver_threads(const SolveOptions& opts) {
#ifdef _OPENMP
    return opts.threads > 0 ? opts.threads : omp_get_max_threads();
#else
    return opts.threads > 0 ? opts.threads : 1;
#endif
}

// Loose upper bound on any allocation's total envy: per edge, each endpoint
// contributes at most its valuation range.
inline envy_t worst_case_total(const Instance& inst) {
    std::vector<envy_t> range(inst.n, 0);
    for (int a = 0; a < inst.n; ++a) {
        long long lo = inst.value(a, 0), hi = inst.value(a, 0);
        for (int h = 1; h < inst.n; ++h) {
            lo = std::min(lo, inst.value(a, h));
            hi = std::max(hi, inst.value(a, h));
        }
        range[a] = (envy_t)hi - lo;
    }
    envy_t total = 0;
    for (auto [u, v] : inst.edges) total += range[u] + range[v];
    return total;
}

// Deterministic parallel argmin over an index space: each thread minimizes
// (value, index) over its stripe, the stripes merge in order, so the result
// is the first index attaining the minimum regardless of thread count.
template <class Eval>
std::pair<envy_t, long long> parallel_argmin(long long count, int threads, Eval&& eval) {
    if (count <= 0) return {kEnvyInf, -1};
    int nt = std::max(1, threads);
    std::vector<std::pair<envy_t, long long>> best(nt, {kEnvyInf, -1});
#ifdef _OPENMP
#pragma omp parallel num_threads(nt) if (nt > 1)
    {
        int tid = omp_get_thread_num();
#pragma omp for schedule(static)
        for (long long i = 0; i < count; ++i) {
            envy_t v = eval(i);
            if (v < best[tid].first) best[tid] = {v, i};
        }
    }
#else
    for (long long i = 0; i < count; ++i) {
        envy_t v = eval(i);
        if (v < best[0].first) best[0] = {v, i};
    }
#endif
    std::pair<envy_t, long long> out = {kEnvyInf, -1};
    for (const auto& b : best)
        if (b.second >= 0 && (b.first < out.first || (b.first == out.first && (out.second < 0 || b.second < out.second))))
            out = b;
    return out;
}

// next subset of the same popcount (Gosper); masks enumerate ascending.
inline unsigned long long next_same_popcount(unsigned long long x) {
    unsigned long long c = x & -x, r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

// binomial table up to 24 fits comfortably in long long
std::vector<std::vector<long long>> inline make_binomials(int n) {
    std::vector<std::vector<long long>> c(n + 1, std::vector<long long>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        c[i][0] = 1;
        for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
    }
    return c;
}

} // namespace megha::detail
