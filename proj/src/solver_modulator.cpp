#include <algorithm>

#include "megha/matching.hpp"
#include "megha/solvers.hpp"
#include "solver_util.hpp"

namespace megha {

// Both solvers enumerate house-type assignments over the modulator X and
// finish the remaining agents with one minimum-cost matching per assignment.
// For a vertex cover the rest is independent, so a leftover house's cost is
// the envy along its owner's edges into X. For a clique modulator the rest is
// a clique over exactly the leftover houses, so on top of the X edges each
// agent u taking house h pays its outgoing envy towards every other leftover
// house; summing that over the matching counts every clique edge's two sides
// exactly once.

namespace {

struct Enumeration {
    const Instance& inst;
    HouseTypePartition types;
    std::vector<int> X, rest;
    std::vector<std::vector<int>> houses_by_type;
    long long count = 1; // ell^|X|

    Enumeration(const Instance& i, std::vector<int> x, long long enum_budget)
        : inst(i), types(compute_house_types(i)), X(std::move(x)) {
        std::sort(X.begin(), X.end());
        std::vector<char> in_x(inst.n, 0);
        for (int v : X) in_x[v] = 1;
        for (int v = 0; v < inst.n; ++v)
            if (!in_x[v]) rest.push_back(v);
        houses_by_type.resize(types.ell);
        for (int h = 0; h < inst.n; ++h) houses_by_type[types.type_of[h]].push_back(h);
        for (size_t i2 = 0; i2 < X.size(); ++i2) {
            count *= types.ell;
            if (count > enum_budget)
                raise(Err::StateBudgetExceeded,
                      "type enumeration over the modulator exceeds the budget");
        }
    }

    // decode index -> per-X-agent types (X[0] most significant), then concrete
    // houses (lowest unused per type); false when supply runs short
    bool decode(long long idx, std::vector<int>& type_of_x, std::vector<int>& house_of_x,
                std::vector<char>& taken) const {
        int m = (int)X.size();
        type_of_x.resize(m);
        for (int i = m - 1; i >= 0; --i) {
            type_of_x[i] = (int)(idx % types.ell);
            idx /= types.ell;
        }
        std::vector<int> used(types.ell, 0);
        for (int i = 0; i < m; ++i)
            if (++used[type_of_x[i]] > types.supply[type_of_x[i]]) return false;
        house_of_x.resize(m);
        std::fill(used.begin(), used.end(), 0);
        std::fill(taken.begin(), taken.end(), 0);
        for (int i = 0; i < m; ++i) {
            int h = houses_by_type[type_of_x[i]][used[type_of_x[i]]++];
            house_of_x[i] = h;
            taken[h] = 1;
        }
        return true;
    }
};

enum class Mode { Cover, Clique };

SolveResult solve_with_modulator(const Instance& inst, const std::vector<int>& x_in, Mode mode,
                                 const SolveOptions& opts) {
    detail::Timer timer;
    SocialGraph g = SocialGraph::of(inst);
    Enumeration en(inst, x_in, opts.enum_budget);

    std::vector<char> in_x(inst.n, 0);
    for (int v : en.X) in_x[v] = 1;
    if (mode == Mode::Cover) {
        for (auto [u, v] : inst.edges)
            if (!in_x[u] && !in_x[v])
                raise(Err::NotACover, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                          ") has no endpoint in the cover");
    } else {
        for (size_t i = 0; i < en.rest.size(); ++i)
            for (size_t j = i + 1; j < en.rest.size(); ++j)
                if (!g.has_edge(en.rest[i], en.rest[j]))
                    raise(Err::NotAModulator, "agents " + std::to_string(en.rest[i]) + " and " +
                                                  std::to_string(en.rest[j]) +
                                                  " are non-adjacent outside the modulator");
    }

    // edges fully inside X, and each rest-agent's X-neighbours
    std::vector<std::pair<int, int>> x_edges; // positions into en.X
    std::vector<std::vector<int>> x_nbrs(en.rest.size());
    std::vector<int> pos_in_x(inst.n, -1), pos_in_rest(inst.n, -1);
    for (size_t i = 0; i < en.X.size(); ++i) pos_in_x[en.X[i]] = (int)i;
    for (size_t i = 0; i < en.rest.size(); ++i) pos_in_rest[en.rest[i]] = (int)i;
    for (auto [u, v] : inst.edges) {
        if (in_x[u] && in_x[v]) x_edges.emplace_back(pos_in_x[u], pos_in_x[v]);
        else if (in_x[u] && pos_in_rest[v] >= 0) x_nbrs[pos_in_rest[v]].push_back(pos_in_x[u]);
        else if (in_x[v] && pos_in_rest[u] >= 0) x_nbrs[pos_in_rest[u]].push_back(pos_in_x[v]);
    }

    const int r = (int)en.rest.size();
    auto evaluate = [&](long long idx, std::vector<int>* out_assignment) -> envy_t {
        std::vector<int> type_of_x, house_of_x;
        std::vector<char> taken(inst.n, 0);
        if (!en.decode(idx, type_of_x, house_of_x, taken)) return kEnvyInf;
        envy_t fixed = 0;
        for (auto [i, j] : x_edges)
            fixed += edge_envy(inst, en.X[i], en.X[j], house_of_x[i], house_of_x[j]);

        std::vector<int> leftover;
        for (int h = 0; h < inst.n; ++h)
            if (!taken[h]) leftover.push_back(h);

        CostMatrix cm;
        cm.n = r;
        cm.cost.assign((size_t)r * r, 0);
        for (int i = 0; i < r; ++i) {
            int u = en.rest[i];
            for (int j = 0; j < r; ++j) {
                int h = leftover[j];
                envy_t w = 0;
                for (int xp : x_nbrs[i]) w += edge_envy(inst, u, en.X[xp], h, house_of_x[xp]);
                if (mode == Mode::Clique) {
                    long long mine = inst.value(u, h);
                    for (int h2 : leftover) {
                        envy_t d = (envy_t)inst.value(u, h2) - mine;
                        if (d > 0) w += d;
                    }
                }
                cm.at(i, j) = w;
            }
        }
        MatchingResult match = min_cost_matching(cm);
        if (out_assignment) {
            out_assignment->assign(inst.n, -1);
            for (size_t i = 0; i < en.X.size(); ++i) (*out_assignment)[en.X[i]] = house_of_x[i];
            for (int i = 0; i < r; ++i) (*out_assignment)[en.rest[i]] = leftover[match.col_of_row[i]];
        }
        return fixed + match.total;
    };

    auto [best, best_idx] = detail::parallel_argmin(
        en.count, detail::solver_threads(opts), [&](long long idx) { return evaluate(idx, nullptr); });
    if (best_idx < 0) raise(Err::Internal, "no supply-feasible type assignment exists");

    std::vector<int> assignment;
    envy_t replay = evaluate(best_idx, &assignment);
    if (replay != best) raise(Err::Internal, "modulator replay mismatch");

    SolveResult res;
    res.allocation = verify_allocation(inst, assignment);
    if (res.allocation.total != best)
        raise(Err::Internal, "modulator value does not match its reconstruction");
    res.optimal = true;
    res.solver_name = mode == Mode::Cover ? "vc" : "clique-mod";
    res.stats["assignments"] = en.count;
    res.stats["modulator"] = (long long)en.X.size();
    res.stats["ell"] = en.types.ell;
    res.stats["millis"] = timer.millis();
    return res;
}

} // namespace

SolveResult solve_vertex_cover(const Instance& inst, const std::vector<int>& cover,
                               const SolveOptions& opts) {
    return solve_with_modulator(inst, cover, Mode::Cover, opts);
}

SolveResult solve_clique_modulator(const Instance& inst, const std::vector<int>& modulator,
                                   const SolveOptions& opts) {
    return solve_with_modulator(inst, modulator, Mode::Clique, opts);
}

} // namespace megha
