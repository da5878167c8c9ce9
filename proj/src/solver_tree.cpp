#include <algorithm>
#include <bit>

#include "megha/solvers.hpp"
#include "solver_util.hpp"

namespace megha {

// Subset DP on trees. T[v][h][S] is the minimum envy inside v's subtree when
// v holds house h and the subtree consumes exactly the house set S. Children
// fold in one at a time through prefix tables P_i: the first i subtrees
// consume Z (never containing h), and each child contributes
//   G_i(Y) = min over h_i in Y of T[child][h_i][Y] + envy(v, child, h, h_i).
// P_i = min-sum convolution of P_{i-1} with G_i, taken either by direct
// submask enumeration or by the bounded fast transform with the bound
// deepened geometrically until the root becomes finite; partial sums along
// an optimal chain never exceed the optimum, so truncation is safe.
//
// Tables are rank-compressed: masks of one popcount in ascending order.

namespace {

struct TreeSolver {
    const Instance& inst;
    const SolveOptions& opts;
    int n;
    unsigned full;
    std::vector<std::vector<int>> children;
    std::vector<int> postorder, sz;
    std::vector<std::vector<long long>> binom;
    std::vector<unsigned> rank_tab;                 // mask -> rank within its popcount class
    std::vector<std::vector<std::vector<envy_t>>> T; // [v][h][rank]
    std::vector<std::vector<envy_t>> ecache;        // per vertex: envy(v,parent-side child) cache
    envy_t conv_bound = 0;                          // active bound in convolution mode
    long long conv_calls = 0;

    TreeSolver(const Instance& i, const SolveOptions& o) : inst(i), opts(o), n(i.n) {
        full = n == 32 ? ~0u : (1u << n) - 1;
        build_tree();
        binom = detail::make_binomials(std::max(n, 1));
        rank_tab.resize(1u << n);
        std::vector<unsigned> counter(n + 1, 0);
        for (unsigned m = 0; m < (1u << n); ++m) rank_tab[m] = counter[std::popcount(m)]++;
        // envy(v, u, h_v, h_u) for every tree edge, keyed by the child u
        ecache.assign(n, {});
        for (int v : postorder)
            for (int u : children[v]) {
                ecache[u].resize((size_t)n * n);
                for (int hv = 0; hv < n; ++hv)
                    for (int hu = 0; hu < n; ++hu)
                        ecache[u][(size_t)hv * n + hu] = edge_envy(inst, v, u, hv, hu);
            }
    }

    void build_tree() {
        SocialGraph g = SocialGraph::of(inst);
        if (n < 1 || (int)inst.edges.size() != n - 1 || components(g).size() != 1)
            raise(Err::NotATree, "social graph is not a tree");
        children.assign(n, {});
        std::vector<int> parent(n, -2), stack{0};
        parent[0] = -1;
        std::vector<int> order;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (int w : g.adj[v])
                if (parent[w] == -2) {
                    parent[w] = v;
                    children[v].push_back(w);
                    stack.push_back(w);
                }
        }
        for (auto& c : children) std::sort(c.begin(), c.end());
        postorder.assign(order.rbegin(), order.rend());
        sz.assign(n, 1);
        for (int v : postorder)
            for (int u : children[v]) sz[v] += sz[u];
    }

    // ---- shared helpers ----

    envy_t child_edge_envy(int u, int hv, int hu) const { return ecache[u][(size_t)hv * n + hu]; }

    // rank-compressed G_i for child u under parent house hv
    std::vector<envy_t> make_g(int u, int hv) const {
        int su = sz[u];
        std::vector<envy_t> G(binom[n][su], kEnvyInf);
        unsigned long long y = (1ull << su) - 1;
        for (long long r = 0; r < (long long)G.size(); ++r) {
            if (!(y >> hv & 1)) {
                envy_t best = kEnvyInf;
                unsigned long long rest = y;
                while (rest) {
                    int h = std::countr_zero(rest);
                    rest &= rest - 1;
                    envy_t tv = T[u][h][r];
                    if (tv < kEnvyInf) best = std::min(best, tv + child_edge_envy(u, hv, h));
                }
                G[r] = best;
            }
            y = detail::next_same_popcount(y);
        }
        return G;
    }

    // ---- partition-enumeration mode ----

    // one convolution step by ascending submask enumeration
    std::vector<envy_t> merge_enum(const std::vector<envy_t>& P, int s, const std::vector<envy_t>& G,
                                   int su, int hv) const {
        int s_new = s + su;
        std::vector<envy_t> out(binom[n][s_new], kEnvyInf);
        unsigned long long z = (1ull << s_new) - 1;
        for (long long zr = 0; zr < (long long)out.size(); ++zr) {
            if (!(z >> hv & 1)) {
                envy_t best = kEnvyInf;
                unsigned long long y = 0;
                do {
                    if (std::popcount(y) == su) {
                        envy_t g = G[rank_tab[y]];
                        if (g < kEnvyInf) {
                            envy_t p = P[rank_tab[z ^ y]];
                            if (p < kEnvyInf) best = std::min(best, p + g);
                        }
                    }
                    y = (y - z) & z;
                } while (y);
                out[zr] = best;
            }
            z = detail::next_same_popcount(z);
        }
        return out;
    }

    // ---- convolution mode ----

    std::vector<envy_t> expand(const std::vector<envy_t>& compressed, int size) const {
        std::vector<envy_t> out(1u << n, kEnvyInf);
        if (size == 0) {
            out[0] = compressed[0];
            return out;
        }
        unsigned long long m = (1ull << size) - 1;
        for (long long r = 0; r < (long long)compressed.size(); ++r) {
            out[m] = compressed[r];
            m = detail::next_same_popcount(m);
        }
        return out;
    }

    std::vector<envy_t> compress(const std::vector<envy_t>& fullvec, int size) const {
        std::vector<envy_t> out(binom[n][size], kEnvyInf);
        if (size == 0) {
            out[0] = fullvec[0];
            return out;
        }
        unsigned long long m = (1ull << size) - 1;
        for (long long r = 0; r < (long long)out.size(); ++r) {
            out[r] = fullvec[m];
            m = detail::next_same_popcount(m);
        }
        return out;
    }

    std::vector<envy_t> merge_conv(const std::vector<envy_t>& P, int s, const std::vector<envy_t>& G,
                                   int su) {
        SubsetFunction f, g;
        f.ground_n = n;
        f.v = expand(P, s);
        g.ground_n = n;
        g.v = expand(G, su);
        ConvOptions co = opts.conv;
        co.threads = opts.threads;
        ++conv_calls;
        SubsetFunction h = fast_min_sum_convolution(f, g, conv_bound, co);
        return compress(h.v, s + su);
    }

    // ---- forward pass ----

    void forward(SubsetMode mode) {
        T.assign(n, {});
        for (int v : postorder) {
            T[v].assign(n, {});
            if (children[v].empty()) {
                for (int h = 0; h < n; ++h) {
                    T[v][h].assign(n, kEnvyInf); // C(n,1) sets of size 1
                    T[v][h][rank_tab[1u << h]] = 0;
                }
                continue;
            }
            for (int h = 0; h < n; ++h) {
                std::vector<envy_t> P{0};
                int s = 0;
                for (int u : children[v]) {
                    std::vector<envy_t> G = make_g(u, h);
                    P = mode == SubsetMode::PartitionEnum ? merge_enum(P, s, G, sz[u], h)
                                                          : merge_conv(P, s, G, sz[u]);
                    s += sz[u];
                }
                T[v][h].assign(binom[n][sz[v]], kEnvyInf);
                if (s == 0) raise(Err::Internal, "tree DP lost its children");
                unsigned long long z = (1ull << s) - 1;
                for (long long zr = 0; zr < (long long)P.size(); ++zr) {
                    if (!(z >> h & 1) && P[zr] < kEnvyInf)
                        T[v][h][rank_tab[z | (1ull << h)]] = P[zr];
                    z = detail::next_same_popcount(z);
                }
            }
        }
    }

    // ---- reconstruction (both modes share it) ----

    void reconstruct(int v, int h, unsigned long long S, SubsetMode mode,
                     std::vector<int>& assignment) {
        assignment[v] = h;
        if (children[v].empty()) return;
        unsigned long long Z = S ^ (1ull << h);
        // rebuild this vertex's chain
        std::vector<std::vector<envy_t>> chain{{0}};
        std::vector<std::vector<envy_t>> gs;
        int s = 0;
        for (int u : children[v]) {
            gs.push_back(make_g(u, h));
            chain.push_back(mode == SubsetMode::PartitionEnum
                                ? merge_enum(chain.back(), s, gs.back(), sz[u], h)
                                : merge_conv(chain.back(), s, gs.back(), sz[u]));
            s += sz[u];
        }
        for (int i = (int)children[v].size() - 1; i >= 0; --i) {
            int u = children[v][i];
            envy_t target = chain[i + 1][rank_tab[Z]];
            bool split = false;
            unsigned long long y = 0;
            do {
                if (std::popcount(y) == sz[u]) {
                    envy_t g = gs[i][rank_tab[y]];
                    envy_t p = chain[i][rank_tab[Z ^ y]];
                    if (g < kEnvyInf && p < kEnvyInf && g + p == target) {
                        // pick the first house certifying G at this set
                        unsigned long long rest = y;
                        while (rest) {
                            int hu = std::countr_zero(rest);
                            rest &= rest - 1;
                            envy_t tv = T[u][hu][rank_tab[y]];
                            if (tv < kEnvyInf && tv + child_edge_envy(u, h, hu) == g) {
                                reconstruct(u, hu, y, mode, assignment);
                                break;
                            }
                        }
                        Z ^= y;
                        split = true;
                        break;
                    }
                }
                y = (y - Z) & Z;
            } while (y);
            if (!split) raise(Err::Internal, "tree DP reconstruction found no split");
        }
    }

    std::pair<envy_t, int> root_best() const {
        envy_t best = kEnvyInf;
        int best_h = -1;
        for (int h = 0; h < n; ++h) {
            envy_t v = T[0][h][rank_tab[full]];
            if (v < best) {
                best = v;
                best_h = h;
            }
        }
        return {best, best_h};
    }
};

} // namespace

SolveResult solve_tree(const Instance& inst, const SolveOptions& opts) {
    detail::Timer timer;
    if (inst.n > opts.subset_ceiling)
        raise(Err::TooLarge, "tree DP is capped at n <= " + std::to_string(opts.subset_ceiling));
    TreeSolver solver(inst, opts);

    // table memory gate: sum over v of n * C(n, sz(v)) entries
    unsigned __int128 entries = 0;
    for (int v = 0; v < inst.n; ++v)
        entries += (unsigned __int128)inst.n * solver.binom[inst.n][solver.sz[v]];
    if (entries * sizeof(envy_t) > opts.conv.mem_budget)
        raise(Err::TooLarge, "tree DP tables would exceed the memory budget");

    envy_t value = kEnvyInf;
    int root_h = -1;
    if (opts.subset_mode == SubsetMode::PartitionEnum) {
        solver.forward(SubsetMode::PartitionEnum);
        std::tie(value, root_h) = solver.root_best();
        if (root_h < 0) raise(Err::Internal, "tree DP produced no feasible root state");
    } else {
        envy_t ub = detail::worst_case_total(inst);
        envy_t bound = std::min<envy_t>(16, ub);
        try {
            for (;;) {
                solver.conv_bound = bound;
                solver.forward(SubsetMode::Convolution);
                std::tie(value, root_h) = solver.root_best();
                if (root_h >= 0) break;
                if (bound >= ub)
                    raise(Err::Internal, "tree DP root unreachable at the trivial bound");
                bound = std::min(ub, bound * 4);
            }
        } catch (const Error& e) {
            if (e.code == Err::BoundTooLarge)
                raise(Err::BudgetExceeded, "convolution bound outgrew its work budget");
            throw;
        }
    }

    std::vector<int> assignment(inst.n, -1);
    solver.reconstruct(0, root_h, solver.full, opts.subset_mode, assignment);

    SolveResult res;
    res.allocation = verify_allocation(inst, assignment);
    if (res.allocation.total != value)
        raise(Err::Internal, "tree DP value does not match its reconstruction");
    res.optimal = true;
    res.solver_name = "tree";
    res.stats["mode"] = opts.subset_mode == SubsetMode::PartitionEnum ? 0 : 1;
    res.stats["conv_calls"] = solver.conv_calls;
    if (opts.subset_mode == SubsetMode::Convolution)
        res.stats["conv_bound"] = (long long)solver.conv_bound;
    res.stats["millis"] = timer.millis();
    return res;
}

} // namespace megha
