#include <algorithm>

#include "megha/matching.hpp"
#include "megha/solvers.hpp"
#include "solver_util.hpp"

namespace megha {

// Complete bipartite graphs. General valuations: enumerate house types over
// the smaller side L, then a minimum-cost matching places R against the
// leftover houses (every R agent is adjacent to all of L, nothing else).
// Identical valuations: total envy depends only on how many houses of each
// type land in L, so enumerating supply-feasible count tuples suffices.

namespace {

void tuples_rec(const std::vector<int>& supply, int k, int remaining, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
    if (k == (int)supply.size()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    for (int c = 0; c <= std::min(remaining, supply[k]); ++c) {
        cur[k] = c;
        tuples_rec(supply, k + 1, remaining - c, cur, out);
    }
    cur[k] = 0;
}

} // namespace

SolveResult solve_complete_bipartite(const Instance& inst, const std::vector<int>& left,
                                     const std::vector<int>& right, const SolveOptions& opts) {
    detail::Timer timer;
    SocialGraph g = SocialGraph::of(inst);

    std::vector<int> L = left, R = right;
    std::sort(L.begin(), L.end());
    std::sort(R.begin(), R.end());
    if (L.size() > R.size()) std::swap(L, R);
    if (L.empty() || R.empty() || L.size() + R.size() != (size_t)inst.n)
        raise(Err::NotCompleteBipartite, "sides must partition the agents");
    std::vector<int> side(inst.n, -1);
    for (int v : L) side[v] = 0;
    for (int v : R) side[v] = 1;
    for (int v = 0; v < inst.n; ++v)
        if (side[v] < 0) raise(Err::NotCompleteBipartite, "sides must partition the agents");
    if (inst.edges.size() != L.size() * R.size())
        raise(Err::NotCompleteBipartite, "edge count does not match |L|*|R|");
    for (auto [u, v] : inst.edges)
        if (side[u] == side[v])
            raise(Err::NotCompleteBipartite, "edge inside one side");

    HouseTypePartition types = compute_house_types(inst);
    std::vector<std::vector<int>> houses_by_type(types.ell);
    for (int h = 0; h < inst.n; ++h) houses_by_type[types.type_of[h]].push_back(h);

    bool identical = true;
    for (int a = 1; a < inst.n && identical; ++a)
        for (int h = 0; h < inst.n && identical; ++h)
            identical = inst.value(a, h) == inst.value(0, h);

    SolveResult res;
    res.solver_name = "bipartite";

    auto build_from_l_houses = [&](const std::vector<int>& l_houses,
                                   const std::vector<int>& r_cols,
                                   const std::vector<int>& leftover) {
        std::vector<int> assignment(inst.n, -1);
        for (size_t i = 0; i < L.size(); ++i) assignment[L[i]] = l_houses[i];
        for (size_t i = 0; i < R.size(); ++i) assignment[R[i]] = leftover[r_cols[i]];
        return assignment;
    };

    if (identical) {
        long long tuple_cap = 1; // C(|L|+ell-1, ell-1), capped against the budget
        for (int i = 1; i < types.ell; ++i) {
            tuple_cap = tuple_cap * ((long long)L.size() + i) / i;
            if (tuple_cap > opts.enum_budget)
                raise(Err::StateBudgetExceeded, "tuple enumeration exceeds the budget");
        }
        std::vector<std::vector<int>> tuples;
        std::vector<int> cur(types.ell, 0);
        tuples_rec(types.supply, 0, (int)L.size(), cur, tuples);
        envy_t best = kEnvyInf;
        std::vector<int> best_assignment;
        for (const auto& t : tuples) {
            std::vector<int> l_houses;
            std::vector<char> taken(inst.n, 0);
            for (int k = 0; k < types.ell; ++k)
                for (int c = 0; c < t[k]; ++c) {
                    int h = houses_by_type[k][c];
                    l_houses.push_back(h);
                    taken[h] = 1;
                }
            std::vector<int> leftover;
            for (int h = 0; h < inst.n; ++h)
                if (!taken[h]) leftover.push_back(h);
            std::vector<int> r_cols(R.size());
            for (size_t i = 0; i < R.size(); ++i) r_cols[i] = (int)i;
            std::vector<int> assignment = build_from_l_houses(l_houses, r_cols, leftover);
            envy_t total = evaluate_assignment(inst, assignment).total;
            if (total < best) {
                best = total;
                best_assignment = std::move(assignment);
            }
        }
        res.allocation = verify_allocation(inst, best_assignment);
        res.stats["tuples"] = (long long)tuples.size();
    } else {
        long long count = 1;
        for (size_t i = 0; i < L.size(); ++i) {
            count *= types.ell;
            if (count > opts.enum_budget)
                raise(Err::StateBudgetExceeded,
                      "type enumeration over the left side exceeds the budget");
        }
        const int rn = (int)R.size();
        auto evaluate = [&](long long idx, std::vector<int>* out_assignment) -> envy_t {
            std::vector<int> type_of_l(L.size());
            for (int i = (int)L.size() - 1; i >= 0; --i) {
                type_of_l[i] = (int)(idx % types.ell);
                idx /= types.ell;
            }
            std::vector<int> used(types.ell, 0);
            for (int k : type_of_l)
                if (++used[k] > types.supply[k]) return kEnvyInf;
            std::fill(used.begin(), used.end(), 0);
            std::vector<int> l_houses(L.size());
            std::vector<char> taken(inst.n, 0);
            for (size_t i = 0; i < L.size(); ++i) {
                int h = houses_by_type[type_of_l[i]][used[type_of_l[i]]++];
                l_houses[i] = h;
                taken[h] = 1;
            }
            std::vector<int> leftover;
            for (int h = 0; h < inst.n; ++h)
                if (!taken[h]) leftover.push_back(h);
            CostMatrix cm;
            cm.n = rn;
            cm.cost.assign((size_t)rn * rn, 0);
            for (int i = 0; i < rn; ++i)
                for (int j = 0; j < rn; ++j) {
                    envy_t w = 0;
                    for (size_t li = 0; li < L.size(); ++li)
                        w += edge_envy(inst, L[li], R[i], l_houses[li], leftover[j]);
                    cm.at(i, j) = w;
                }
            MatchingResult match = min_cost_matching(cm);
            if (out_assignment)
                *out_assignment = build_from_l_houses(l_houses, match.col_of_row, leftover);
            return match.total;
        };
        auto [best, best_idx] = detail::parallel_argmin(
            count, detail::solver_threads(opts),
            [&](long long idx) { return evaluate(idx, nullptr); });
        if (best_idx < 0) raise(Err::Internal, "no supply-feasible type assignment exists");
        std::vector<int> assignment;
        envy_t replay = evaluate(best_idx, &assignment);
        if (replay != best) raise(Err::Internal, "bipartite replay mismatch");
        res.allocation = verify_allocation(inst, assignment);
        if (res.allocation.total != best)
            raise(Err::Internal, "bipartite value does not match its reconstruction");
        res.stats["assignments"] = count;
    }

    res.optimal = true;
    res.stats["ell"] = types.ell;
    res.stats["left"] = (long long)L.size();
    res.stats["identical"] = identical ? 1 : 0;
    res.stats["millis"] = timer.millis();
    return res;
}

} // namespace megha
