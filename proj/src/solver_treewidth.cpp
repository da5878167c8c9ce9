#include <algorithm>
#include <unordered_map>

#include "megha/solvers.hpp"
#include "solver_util.hpp"

namespace megha {

// DP over a nice tree decomposition. A state at node i is (f, t): f assigns a
// house TYPE to every bag vertex, t counts, per type, the houses consumed by
// the vertices introduced so far. Both are packed into byte-string keys, so
// tables stay sparse: only reachable, supply-feasible states exist.
//
// Values compose as: introduce adds the envy between the new vertex and its
// bag neighbours; join adds the two branch totals and subtracts the envy of
// the bag-internal edges once, since both branches counted it.

namespace {

using TMap = std::unordered_map<std::string, envy_t>;      // t-key -> value
using FTable = std::unordered_map<std::string, TMap>;      // f-key -> t-table

std::string t_key(const std::vector<int>& t) {
    std::string k(t.size() * 2, '\0');
    for (size_t i = 0; i < t.size(); ++i) {
        k[2 * i] = (char)(t[i] & 0xff);
        k[2 * i + 1] = (char)((t[i] >> 8) & 0xff);
    }
    return k;
}

std::vector<int> t_unkey(const std::string& k) {
    std::vector<int> t(k.size() / 2);
    for (size_t i = 0; i < t.size(); ++i)
        t[i] = (unsigned char)k[2 * i] | ((unsigned char)k[2 * i + 1] << 8);
    return t;
}

struct TwSolver {
    const Instance& inst;
    const NiceTreeDecomposition& ntd;
    const SolveOptions& opts;
    HouseTypePartition types;
    SocialGraph g;
    std::vector<FTable> tables;
    long long states = 0;

    TwSolver(const Instance& i, const NiceTreeDecomposition& d, const SolveOptions& o)
        : inst(i), ntd(d), opts(o), types(compute_house_types(i)), g(SocialGraph::of(i)) {}

    void upsert(FTable& table, const std::string& fk, const std::string& tk, envy_t val) {
        TMap& tm = table[fk];
        auto [it, fresh] = tm.try_emplace(tk, val);
        if (fresh) {
            if (++states > opts.state_budget)
                raise(Err::StateBudgetExceeded,
                      "width DP exceeded " + std::to_string(opts.state_budget) + " states");
        } else if (val < it->second) {
            it->second = val;
        }
    }

    // envy between bag vertex `v` (type k) and the other bag members, whose
    // types are read off the child bag's assignment string
    envy_t introduce_cost(const std::vector<int>& bag, int v, int k, const std::string& child_f,
                          int pos) const {
        envy_t cost = 0;
        for (size_t j = 0, cj = 0; j < bag.size(); ++j) {
            if ((int)j == pos) continue;
            int u = bag[j];
            int ku = (unsigned char)child_f[cj];
            ++cj;
            if (g.has_edge(v, u)) cost += type_envy(inst, types, v, u, k, ku);
        }
        return cost;
    }

    envy_t bag_edges_envy(const std::vector<int>& bag, const std::string& f) const {
        envy_t total = 0;
        for (size_t i = 0; i < bag.size(); ++i)
            for (size_t j = i + 1; j < bag.size(); ++j)
                if (g.has_edge(bag[i], bag[j]))
                    total += type_envy(inst, types, bag[i], bag[j], (unsigned char)f[i],
                                       (unsigned char)f[j]);
        return total;
    }

    void run_forward() {
        tables.resize(ntd.nodes.size());
        for (size_t i = 0; i < ntd.nodes.size(); ++i) {
            const NiceNode& nd = ntd.nodes[i];
            FTable& out = tables[i];
            switch (nd.kind) {
                case NiceKind::Leaf: {
                    upsert(out, "", t_key(std::vector<int>(types.ell, 0)), 0);
                    break;
                }
                case NiceKind::Introduce: {
                    const FTable& child = tables[nd.children[0]];
                    int pos = (int)(std::lower_bound(nd.bag.begin(), nd.bag.end(), nd.vertex) -
                                    nd.bag.begin());
                    for (const auto& [cf, tmap] : child) {
                        for (int k = 0; k < types.ell; ++k) {
                            std::string f = cf;
                            f.insert(f.begin() + pos, (char)k);
                            envy_t cost = introduce_cost(nd.bag, nd.vertex, k, cf, pos);
                            for (const auto& [tk, val] : tmap) {
                                std::vector<int> t = t_unkey(tk);
                                if (t[k] >= types.supply[k]) continue;
                                t[k]++;
                                upsert(out, f, t_key(t), val + cost);
                            }
                        }
                    }
                    break;
                }
                case NiceKind::Forget: {
                    const FTable& child = tables[nd.children[0]];
                    const auto& cbag = ntd.nodes[nd.children[0]].bag;
                    int pos = (int)(std::lower_bound(cbag.begin(), cbag.end(), nd.vertex) -
                                    cbag.begin());
                    for (const auto& [cf, tmap] : child) {
                        std::string f = cf;
                        f.erase(f.begin() + pos);
                        for (const auto& [tk, val] : tmap) upsert(out, f, tk, val);
                    }
                    break;
                }
                case NiceKind::Join: {
                    const FTable& left = tables[nd.children[0]];
                    const FTable& right = tables[nd.children[1]];
                    for (const auto& [f, ltmap] : left) {
                        auto rit = right.find(f);
                        if (rit == right.end()) continue;
                        envy_t shared = bag_edges_envy(nd.bag, f);
                        std::vector<int> bag_count(types.ell, 0);
                        for (char c : f) bag_count[(unsigned char)c]++;
                        for (const auto& [ltk, lval] : ltmap) {
                            std::vector<int> lt = t_unkey(ltk);
                            for (const auto& [rtk, rval] : rit->second) {
                                std::vector<int> t = t_unkey(rtk);
                                bool ok = true;
                                for (int k = 0; k < types.ell && ok; ++k) {
                                    t[k] += lt[k] - bag_count[k];
                                    ok = t[k] <= types.supply[k];
                                }
                                if (!ok) continue;
                                upsert(out, f, t_key(t), lval + rval - shared);
                            }
                        }
                    }
                    break;
                }
            }
        }
    }

    // Walks optimal states top-down and pins each vertex's house type at its
    // introduce nodes; ties resolve to the smallest type / lexicographically
    // smallest branch split.
    void reconstruct(size_t node, const std::string& f, const std::string& tk, envy_t val,
                     std::vector<int>& type_of_agent) const {
        const NiceNode& nd = ntd.nodes[node];
        switch (nd.kind) {
            case NiceKind::Leaf:
                return;
            case NiceKind::Introduce: {
                int pos = (int)(std::lower_bound(nd.bag.begin(), nd.bag.end(), nd.vertex) -
                                nd.bag.begin());
                int k = (unsigned char)f[pos];
                type_of_agent[nd.vertex] = k;
                std::string cf = f;
                cf.erase(cf.begin() + pos);
                std::vector<int> t = t_unkey(tk);
                t[k]--;
                envy_t cost = introduce_cost(nd.bag, nd.vertex, k, cf, pos);
                reconstruct(nd.children[0], cf, t_key(t), val - cost, type_of_agent);
                return;
            }
            case NiceKind::Forget: {
                const auto& cbag = ntd.nodes[nd.children[0]].bag;
                int pos = (int)(std::lower_bound(cbag.begin(), cbag.end(), nd.vertex) -
                                cbag.begin());
                const FTable& child = tables[nd.children[0]];
                for (int k = 0; k < types.ell; ++k) {
                    std::string cf = f;
                    cf.insert(cf.begin() + pos, (char)k);
                    auto fit = child.find(cf);
                    if (fit == child.end()) continue;
                    auto tit = fit->second.find(tk);
                    if (tit == fit->second.end() || tit->second != val) continue;
                    reconstruct(nd.children[0], cf, tk, val, type_of_agent);
                    return;
                }
                raise(Err::Internal, "width DP reconstruction lost a forget state");
            }
            case NiceKind::Join: {
                const FTable& left = tables[nd.children[0]];
                const FTable& right = tables[nd.children[1]];
                auto lit = left.find(f);
                auto rit = right.find(f);
                if (lit == left.end() || rit == right.end())
                    raise(Err::Internal, "width DP reconstruction lost a join state");
                envy_t shared = bag_edges_envy(nd.bag, f);
                std::vector<int> bag_count(types.ell, 0);
                for (char c : f) bag_count[(unsigned char)c]++;
                std::vector<int> t = t_unkey(tk);
                const std::string* best_lt = nullptr;
                envy_t best_lval = 0, best_rval = 0;
                for (const auto& [ltk, lval] : lit->second) {
                    std::vector<int> lt = t_unkey(ltk);
                    std::vector<int> rt(types.ell);
                    bool ok = true;
                    for (int k = 0; k < types.ell && ok; ++k) {
                        rt[k] = t[k] - lt[k] + bag_count[k];
                        ok = rt[k] >= 0 && rt[k] <= types.supply[k];
                    }
                    if (!ok) continue;
                    auto rtv = rit->second.find(t_key(rt));
                    if (rtv == rit->second.end()) continue;
                    if (lval + rtv->second - shared != val) continue;
                    if (!best_lt || ltk < *best_lt) {
                        best_lt = &ltk;
                        best_lval = lval;
                        best_rval = rtv->second;
                    }
                }
                if (!best_lt) raise(Err::Internal, "width DP reconstruction found no join split");
                std::vector<int> lt = t_unkey(*best_lt);
                std::vector<int> rt(types.ell);
                for (int k = 0; k < types.ell; ++k) rt[k] = t[k] - lt[k] + bag_count[k];
                reconstruct(nd.children[0], f, *best_lt, best_lval, type_of_agent);
                reconstruct(nd.children[1], f, t_key(rt), best_rval, type_of_agent);
                return;
            }
        }
    }
};

} // namespace

SolveResult solve_treewidth(const Instance& inst, const NiceTreeDecomposition& ntd,
                            const SolveOptions& opts) {
    detail::Timer timer;
    SocialGraph g = SocialGraph::of(inst);
    validate_nice_decomposition(g, ntd);

    TwSolver solver(inst, ntd, opts);
    solver.run_forward();

    const FTable& root = solver.tables.back();
    std::string root_t = t_key(solver.types.supply);
    auto fit = root.find("");
    if (fit == root.end() || !fit->second.count(root_t))
        raise(Err::Internal, "width DP root state missing");
    envy_t best = fit->second.at(root_t);

    std::vector<int> type_of_agent(inst.n, -1);
    solver.reconstruct(ntd.nodes.size() - 1, "", root_t, best, type_of_agent);

    // concretize types: each agent takes the lowest-index unused house of its
    // type, in agent order
    std::vector<std::vector<int>> houses_by_type(solver.types.ell);
    for (int h = inst.n - 1; h >= 0; --h)
        houses_by_type[solver.types.type_of[h]].push_back(h);
    std::vector<int> assignment(inst.n, -1);
    for (int a = 0; a < inst.n; ++a) {
        auto& pool = houses_by_type[type_of_agent[a]];
        if (pool.empty()) raise(Err::Internal, "width DP type supply ran out");
        assignment[a] = pool.back();
        pool.pop_back();
    }

    SolveResult res;
    res.allocation = verify_allocation(inst, assignment);
    if (res.allocation.total != best)
        raise(Err::Internal, "width DP value does not match its reconstruction");
    res.optimal = true;
    res.solver_name = "treewidth";
    res.stats["states"] = solver.states;
    res.stats["ell"] = solver.types.ell;
    res.stats["width"] = ntd.width();
    res.stats["nodes"] = (long long)ntd.nodes.size();
    res.stats["millis"] = timer.millis();
    return res;
}

} // namespace megha
