#include "megha/subsetops.hpp"

#include <algorithm>
#include <bit>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace megha {

namespace {

constexpr int kMaxGround = 24;
constexpr uint64_t kPrime = (1ULL << 61) - 1;

uint64_t mulmod(uint64_t a, uint64_t b) {
    return (uint64_t)((unsigned __int128)a * b % kPrime);
}

void check_ground(const SubsetFunction& f) {
    if (f.ground_n < 0 || f.ground_n > kMaxGround)
        raise(Err::TooLarge, "ground set limited to " + std::to_string(kMaxGround) + " elements");
    if (f.v.size() != (size_t)1 << f.ground_n)
        raise(Err::GroundSetMismatch, "subset table size does not match ground set");
}

void check_pair(const SubsetFunction& f, const SubsetFunction& g) {
    check_ground(f);
    check_ground(g);
    if (f.ground_n != g.ground_n)
        raise(Err::GroundSetMismatch, "operands live on different ground sets");
}

int resolve_threads(int requested) {
#ifdef _OPENMP
    return requested > 0 ? requested : omp_get_max_threads();
#else
    (void)requested;
    return 1;
#endif
}

// In-place transforms mod p; the per-bit passes have disjoint read/write
// sets, so the mask loop parallelizes without changing any result.
void zeta_mod(std::vector<uint64_t>& a, int n, int threads) {
    const long long size = (long long)a.size();
    for (int b = 0; b < n; ++b) {
        const long long bit = 1LL << b;
#ifdef _OPENMP
#pragma omp parallel for num_threads(threads) if (threads > 1 && size >= (1 << 16))
#endif
        for (long long s = 0; s < size; ++s)
            if (s & bit) {
                uint64_t x = a[s] + a[s ^ bit];
                a[s] = x >= kPrime ? x - kPrime : x;
            }
    }
}

void moebius_mod(std::vector<uint64_t>& a, int n, int threads) {
    const long long size = (long long)a.size();
    for (int b = 0; b < n; ++b) {
        const long long bit = 1LL << b;
#ifdef _OPENMP
#pragma omp parallel for num_threads(threads) if (threads > 1 && size >= (1 << 16))
#endif
        for (long long s = 0; s < size; ++s)
            if (s & bit) {
                uint64_t x = a[s] + kPrime - a[s ^ bit];
                a[s] = x >= kPrime ? x - kPrime : x;
            }
    }
}

struct Layer {
    int rank;
    long long value;
    std::vector<uint64_t> zeta; // transformed indicator of {S : pc(S)=rank, f(S)=value}
};

std::vector<Layer> build_layers(const SubsetFunction& f, envy_t bound, int threads) {
    std::map<std::pair<int, long long>, size_t> index;
    std::vector<Layer> layers;
    for (size_t s = 0; s < f.v.size(); ++s) {
        envy_t val = f.v[s];
        if (val < 0) raise(Err::Internal, "negative subset-function value");
        if (val > bound) continue;
        auto key = std::make_pair(std::popcount(s), (long long)val);
        auto it = index.find(key);
        if (it == index.end()) {
            it = index.emplace(key, layers.size()).first;
            layers.push_back({key.first, key.second, std::vector<uint64_t>(f.v.size(), 0)});
        }
        layers[it->second].zeta[s] = 1;
    }
    for (auto& l : layers) zeta_mod(l.zeta, f.ground_n, threads);
    return layers;
}

} // namespace

SubsetFunction SubsetFunction::constant(int n, envy_t value) {
    SubsetFunction f;
    f.ground_n = n;
    f.v.assign((size_t)1 << n, value);
    return f;
}

SubsetFunction naive_min_sum_convolution(const SubsetFunction& f, const SubsetFunction& g) {
    check_pair(f, g);
    SubsetFunction h;
    h.ground_n = f.ground_n;
    h.v.assign(f.v.size(), kEnvyInf);
    for (size_t s = 0; s < h.v.size(); ++s) {
        envy_t best = kEnvyInf;
        size_t x = 0;
        do { // ascending submask walk
            best = std::min(best, sat_add(f.v[x], g.v[s ^ x]));
            x = (x - s) & s;
        } while (x);
        h.v[s] = best;
    }
    return h;
}

SubsetFunction fast_min_sum_convolution(const SubsetFunction& f, const SubsetFunction& g,
                                        envy_t bound, const ConvOptions& opts, ConvStats* stats) {
    check_pair(f, g);
    if (bound < 0) raise(Err::BoundTooLarge, "negative bound");
    const int n = f.ground_n;
    const size_t size = f.v.size();

    unsigned __int128 work =
        (unsigned __int128)size * (n > 0 ? n : 1) * (n > 0 ? n : 1) * ((unsigned __int128)bound + 1);
    if (work > opts.work_budget)
        raise(Err::BoundTooLarge, "bound " + envy_str(bound) + " exceeds the work budget");

    const int threads = resolve_threads(opts.threads);
    std::vector<Layer> lf = build_layers(f, bound, threads);
    std::vector<Layer> lg = build_layers(g, bound, threads);

    unsigned __int128 mem = (unsigned __int128)(lf.size() + lg.size() + 4) * size * 8;
    if (mem > opts.mem_budget)
        raise(Err::BoundTooLarge, "bound " + envy_str(bound) + " exceeds the memory budget");

    if (stats) {
        stats->layers_f = (long long)lf.size();
        stats->layers_g = (long long)lg.size();
    }

    SubsetFunction h;
    h.ground_n = n;
    h.v.assign(size, kEnvyInf);

    std::vector<long long> unresolved_by_rank(n + 1);
    for (int r = 0; r <= n; ++r) {
        long long binom = 1;
        for (int i = 0; i < r; ++i) binom = binom * (n - i) / (i + 1);
        unresolved_by_rank[r] = binom;
    }
    long long unresolved = (long long)size;

    // (value of f-layer -> layers), to find degree partners quickly
    std::map<long long, std::vector<size_t>> f_by_value, g_by_value;
    for (size_t i = 0; i < lf.size(); ++i) f_by_value[lf[i].value].push_back(i);
    for (size_t i = 0; i < lg.size(); ++i) g_by_value[lg[i].value].push_back(i);

    std::vector<uint64_t> acc(size);
    for (long long d = 0; d <= (long long)bound && unresolved > 0; ++d) {
        if (stats) stats->degrees_processed = d + 1;
        for (int rank = 0; rank <= n; ++rank) {
            if (unresolved_by_rank[rank] == 0) continue;
            // gather layer pairs with value sum d and rank sum `rank`
            bool any = false;
            std::fill(acc.begin(), acc.end(), 0);
            for (const auto& [fv, fidx] : f_by_value) {
                if (fv > d) break;
                auto git = g_by_value.find(d - fv);
                if (git == g_by_value.end()) continue;
                for (size_t fi : fidx)
                    for (size_t gi : git->second) {
                        if (lf[fi].rank + lg[gi].rank != rank) continue;
                        any = true;
                        const uint64_t* fa = lf[fi].zeta.data();
                        const uint64_t* ga = lg[gi].zeta.data();
#ifdef _OPENMP
#pragma omp parallel for num_threads(threads) if (threads > 1 && size >= (1 << 16))
#endif
                        for (long long s = 0; s < (long long)size; ++s) {
                            uint64_t x = acc[s] + mulmod(fa[s], ga[s]);
                            acc[s] = x >= kPrime ? x - kPrime : x;
                        }
                    }
            }
            if (!any) continue;
            moebius_mod(acc, n, threads);
            for (size_t s = 0; s < size; ++s) {
                if (std::popcount(s) != rank || h.v[s] != kEnvyInf || acc[s] % kPrime == 0)
                    continue;
                // certify with an explicit witness split before trusting it
                bool witnessed = false;
                size_t x = 0;
                do {
                    if (sat_add(f.v[x], g.v[s ^ x]) == d) {
                        witnessed = true;
                        break;
                    }
                    x = (x - s) & s;
                } while (x);
                if (witnessed) {
                    h.v[s] = d;
                } else {
                    if (stats) stats->witness_fallbacks++;
                    envy_t best = kEnvyInf;
                    x = 0;
                    do {
                        best = std::min(best, sat_add(f.v[x], g.v[s ^ x]));
                        x = (x - s) & s;
                    } while (x);
                    h.v[s] = best <= bound ? best : kEnvyInf;
                }
                --unresolved;
                --unresolved_by_rank[rank];
            }
        }
    }
    if (stats) stats->resolved = (long long)size - unresolved;
    return h;
}

// ---- exact additive transforms ----

std::vector<long long> zeta_transform(std::vector<long long> f, int n) {
    for (int b = 0; b < n; ++b)
        for (long long s = 0; s < (long long)f.size(); ++s)
            if (s & (1LL << b)) f[s] += f[s ^ (1LL << b)];
    return f;
}

std::vector<long long> moebius_transform(std::vector<long long> f, int n) {
    for (int b = 0; b < n; ++b)
        for (long long s = 0; s < (long long)f.size(); ++s)
            if (s & (1LL << b)) f[s] -= f[s ^ (1LL << b)];
    return f;
}

std::vector<std::vector<long long>> ranked_zeta(const std::vector<long long>& f, int n) {
    std::vector<std::vector<long long>> layers(n + 1);
    for (int r = 0; r <= n; ++r) {
        std::vector<long long> slice(f.size(), 0);
        for (size_t s = 0; s < f.size(); ++s)
            if (std::popcount(s) == r) slice[s] = f[s];
        layers[r] = zeta_transform(std::move(slice), n);
    }
    return layers;
}

std::vector<long long> ranked_moebius(const std::vector<std::vector<long long>>& layers, int n) {
    if ((int)layers.size() != n + 1) raise(Err::GroundSetMismatch, "expected n+1 rank layers");
    std::vector<long long> f((size_t)1 << n, 0);
    for (int r = 0; r <= n; ++r) {
        std::vector<long long> slice = moebius_transform(layers[r], n);
        for (size_t s = 0; s < f.size(); ++s)
            if (std::popcount(s) == r) f[s] = slice[s];
    }
    return f;
}

} // namespace megha
