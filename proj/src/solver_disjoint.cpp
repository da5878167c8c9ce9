#include <algorithm>
#include <bit>

#include "megha/graph.hpp"
#include "megha/solvers.hpp"
#include "solver_util.hpp"

namespace megha {

// Decomposition across connected components. Envy only crosses edges, so an
// optimal allocation hands each component some house subset of matching size
// and solves it independently; the interaction is purely which subset each
// component receives. g_i[S] = optimum of component i on house set S feeds a
// layered min-sum combine over disjoint subsets, by direct submask
// enumeration or by the bounded fast transform (falling back to enumeration
// when the transform's budget trips).

namespace {

struct Tables {
    int n = 0;
    std::vector<std::vector<long long>> binom;
    std::vector<unsigned> rank_tab;

    explicit Tables(int n_) : n(n_) {
        binom = detail::make_binomials(std::max(n, 1));
        rank_tab.resize(1u << n);
        std::vector<unsigned> counter(n + 1, 0);
        for (unsigned m = 0; m < (1u << n); ++m) rank_tab[m] = counter[std::popcount(m)]++;
    }
};

// min over submasks Y of Z with |Y| = part of prev[Z\Y] + cur[Y]
std::vector<envy_t> merge_enum(const Tables& tb, const std::vector<envy_t>& prev, int s,
                               const std::vector<envy_t>& cur, int part) {
    int s_new = s + part;
    std::vector<envy_t> out(tb.binom[tb.n][s_new], kEnvyInf);
    unsigned long long z = (1ull << s_new) - 1;
    for (long long zr = 0; zr < (long long)out.size(); ++zr) {
        envy_t best = kEnvyInf;
        unsigned long long y = 0;
        do {
            if (std::popcount(y) == part) {
                envy_t g = cur[tb.rank_tab[y]];
                envy_t p = prev[tb.rank_tab[z ^ y]];
                if (g < kEnvyInf && p < kEnvyInf) best = std::min(best, p + g);
            }
            y = (y - z) & z;
        } while (y);
        out[zr] = best;
        z = detail::next_same_popcount(z);
    }
    return out;
}

std::vector<envy_t> expand(const Tables& tb, const std::vector<envy_t>& compressed, int size) {
    std::vector<envy_t> out(1u << tb.n, kEnvyInf);
    unsigned long long m = (1ull << size) - 1;
    for (long long r = 0; r < (long long)compressed.size(); ++r) {
        out[m] = compressed[r];
        if (size == 0) break;
        m = detail::next_same_popcount(m);
    }
    return out;
}

std::vector<envy_t> compress(const Tables& tb, const std::vector<envy_t>& fullvec, int size) {
    std::vector<envy_t> out(tb.binom[tb.n][size], kEnvyInf);
    unsigned long long m = (1ull << size) - 1;
    for (long long r = 0; r < (long long)out.size(); ++r) {
        out[r] = fullvec[m];
        if (size == 0) break;
        m = detail::next_same_popcount(m);
    }
    return out;
}

std::vector<envy_t> merge_conv(const Tables& tb, const std::vector<envy_t>& prev, int s,
                               const std::vector<envy_t>& cur, int part, envy_t bound,
                               const SolveOptions& opts, long long& calls) {
    SubsetFunction f, g;
    f.ground_n = tb.n;
    f.v = expand(tb, prev, s);
    g.ground_n = tb.n;
    g.v = expand(tb, cur, part);
    ConvOptions co = opts.conv;
    co.threads = opts.threads;
    ++calls;
    SubsetFunction h = fast_min_sum_convolution(f, g, bound, co);
    return compress(tb, h.v, s + part);
}

} // namespace

SolveResult solve_disjoint_union(const Instance& inst, const ComponentSolver& component_solver,
                                 const SolveOptions& opts) {
    detail::Timer timer;
    SolveResult res;
    res.solver_name = "disjoint";

    if (inst.n == 0) {
        res.allocation = verify_allocation(inst, {});
        res.optimal = true;
        res.stats["components"] = 0;
        res.stats["millis"] = timer.millis();
        return res;
    }

    SocialGraph g = SocialGraph::of(inst);
    std::vector<std::vector<int>> comps = components(g);
    for (auto& c : comps) std::sort(c.begin(), c.end());

    if (comps.size() == 1) {
        SolveResult inner;
        try {
            inner = component_solver(inst);
        } catch (const Error& e) {
            raise(Err::ComponentSolverFailure, std::string("component 0: ") + e.what());
        }
        res.allocation = verify_allocation(inst, inner.allocation.assignment);
        res.optimal = inner.optimal;
        res.stats["components"] = 1;
        res.stats["subsolves"] = 1;
        res.stats["millis"] = timer.millis();
        return res;
    }

    if (inst.n > opts.subset_ceiling)
        raise(Err::TooLarge,
              "component combine is capped at n <= " + std::to_string(opts.subset_ceiling));

    Tables tb(inst.n);
    int k = (int)comps.size();
    bool all_optimal = true;
    long long subsolves = 0;

    // g_i[rank(S)] = component i's optimum on house set S (|S| = |comp i|)
    std::vector<std::vector<envy_t>> gtab(k);
    for (int i = 0; i < k; ++i) {
        int ni = (int)comps[i].size();
        gtab[i].assign(tb.binom[inst.n][ni], kEnvyInf);
        unsigned long long s = (1ull << ni) - 1;
        for (long long r = 0; r < (long long)gtab[i].size(); ++r) {
            std::vector<int> houses;
            for (unsigned long long m = s; m; m &= m - 1) houses.push_back(std::countr_zero(m));
            Instance sub = subinstance(inst, comps[i], houses);
            SolveResult part;
            try {
                part = component_solver(sub);
            } catch (const Error& e) {
                raise(Err::ComponentSolverFailure,
                      "component " + std::to_string(i) + ": " + e.what());
            }
            ++subsolves;
            all_optimal = all_optimal && part.optimal;
            gtab[i][r] = part.allocation.total;
            s = detail::next_same_popcount(s);
        }
    }

    // layered combine; layers[i] covers the first i components
    std::vector<std::vector<envy_t>> layers;
    auto run_partition = [&] {
        layers.assign(1, {0});
        int s = 0;
        for (int i = 0; i < k; ++i) {
            layers.push_back(merge_enum(tb, layers.back(), s, gtab[i], (int)comps[i].size()));
            s += (int)comps[i].size();
        }
    };

    long long conv_calls = 0;
    bool used_conv = false, conv_fallback = false;
    envy_t used_bound = 0;
    if (opts.subset_mode == SubsetMode::Convolution) {
        envy_t ub = detail::worst_case_total(inst);
        envy_t bound = std::min<envy_t>(16, ub);
        try {
            for (;;) {
                layers.assign(1, {0});
                int s = 0;
                for (int i = 0; i < k; ++i) {
                    layers.push_back(merge_conv(tb, layers.back(), s, gtab[i],
                                                (int)comps[i].size(), bound, opts, conv_calls));
                    s += (int)comps[i].size();
                }
                if (layers.back()[0] < kEnvyInf) {
                    used_conv = true;
                    used_bound = bound;
                    break;
                }
                if (bound >= ub)
                    raise(Err::Internal, "component combine unreachable at the trivial bound");
                bound = std::min(ub, bound * 4);
            }
        } catch (const Error& e) {
            if (e.code != Err::BoundTooLarge) throw;
            conv_fallback = true;
        }
    }
    if (!used_conv) run_partition();

    envy_t value = layers.back()[0]; // single C(n,n) entry = the full house set
    if (value >= kEnvyInf) raise(Err::Internal, "component combine produced no value");

    // walk the layers back, peeling the first submask that certifies each step
    std::vector<unsigned long long> chosen(k, 0);
    unsigned long long z = (inst.n == 32 ? ~0u : (1ull << inst.n) - 1);
    for (int i = k - 1; i >= 0; --i) {
        envy_t target = layers[i + 1][tb.rank_tab[z]];
        int part = (int)comps[i].size();
        bool split = false;
        unsigned long long y = 0;
        do {
            if (std::popcount(y) == part) {
                envy_t gv = gtab[i][tb.rank_tab[y]];
                envy_t pv = layers[i][tb.rank_tab[z ^ y]];
                if (gv < kEnvyInf && pv < kEnvyInf && pv + gv == target) {
                    chosen[i] = y;
                    z ^= y;
                    split = true;
                    break;
                }
            }
            y = (y - z) & z;
        } while (y);
        if (!split) raise(Err::Internal, "component combine reconstruction found no split");
    }

    // re-solve each component on its chosen set and stitch the assignment
    std::vector<int> assignment(inst.n, -1);
    for (int i = 0; i < k; ++i) {
        std::vector<int> houses;
        for (unsigned long long m = chosen[i]; m; m &= m - 1)
            houses.push_back(std::countr_zero(m));
        Instance sub = subinstance(inst, comps[i], houses);
        SolveResult part;
        try {
            part = component_solver(sub);
        } catch (const Error& e) {
            raise(Err::ComponentSolverFailure, "component " + std::to_string(i) + ": " + e.what());
        }
        ++subsolves;
        if (part.allocation.total != gtab[i][tb.rank_tab[chosen[i]]])
            raise(Err::Internal, "component solver was not deterministic across calls");
        for (size_t j = 0; j < comps[i].size(); ++j)
            assignment[comps[i][j]] = houses[part.allocation.assignment[j]];
    }

    res.allocation = verify_allocation(inst, assignment);
    if (res.allocation.total != value)
        raise(Err::Internal, "component combine value does not match its reconstruction");
    res.optimal = all_optimal;
    res.stats["components"] = k;
    res.stats["subsolves"] = subsolves;
    res.stats["mode"] = used_conv ? 1 : 0;
    if (used_conv) res.stats["conv_bound"] = (long long)used_bound;
    res.stats["conv_fallback"] = conv_fallback ? 1 : 0;
    res.stats["conv_calls"] = conv_calls;
    res.stats["millis"] = timer.millis();
    return res;
}

} // namespace megha
