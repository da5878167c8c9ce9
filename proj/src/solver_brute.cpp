#include <algorithm>
#include <numeric>

#include "megha/solvers.hpp"
#include "solver_util.hpp"

namespace megha {

namespace {

envy_t assignment_total(const Instance& inst, const std::vector<int>& a) {
    envy_t total = 0;
    for (auto [u, v] : inst.edges) {
        envy_t du = (envy_t)inst.value(u, a[v]) - inst.value(u, a[u]);
        envy_t dv = (envy_t)inst.value(v, a[u]) - inst.value(v, a[v]);
        total += (du > 0 ? du : 0) + (dv > 0 ? dv : 0);
    }
    return total;
}

} // namespace

SolveResult solve_brute_force(const Instance& inst, const SolveOptions& opts) {
    detail::Timer timer;
    if (inst.n > opts.brute_ceiling)
        raise(Err::TooLarge, "brute force is capped at n <= " + std::to_string(opts.brute_ceiling));
    SolveResult res;
    res.solver_name = "brute";
    res.optimal = true;
    if (inst.n == 0) {
        res.allocation = verify_allocation(inst, {});
        res.stats["millis"] = timer.millis();
        return res;
    }

    const int n = inst.n;
    // Split the lexicographic permutation order by the first agent's house;
    // chunks merge in order, so the reported optimum is the first one in
    // full lexicographic order no matter how many threads ran.
    const int nt = detail::solver_threads(opts);
    std::vector<std::pair<envy_t, std::vector<int>>> best(n, {kEnvyInf, {}});
#ifdef _OPENMP
#pragma omp parallel for num_threads(nt) schedule(dynamic) if (nt > 1)
#endif
    for (int h0 = 0; h0 < n; ++h0) {
        std::vector<int> rest;
        for (int h = 0; h < n; ++h)
            if (h != h0) rest.push_back(h);
        std::vector<int> a(n);
        a[0] = h0;
        do {
            for (int i = 1; i < n; ++i) a[i] = rest[i - 1];
            envy_t total = assignment_total(inst, a);
            if (total < best[h0].first) best[h0] = {total, a};
        } while (std::next_permutation(rest.begin(), rest.end()));
    }

    int winner = 0;
    for (int h0 = 1; h0 < n; ++h0)
        if (best[h0].first < best[winner].first) winner = h0;

    res.allocation = verify_allocation(inst, best[winner].second);
    long long perms = 1;
    for (int i = 2; i <= n; ++i) perms *= i;
    res.stats["permutations"] = perms;
    res.stats["millis"] = timer.millis();
    return res;
}

} // namespace megha
