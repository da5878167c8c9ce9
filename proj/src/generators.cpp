#include <algorithm>
#include <cmath>
#include <set>

#include "megha/generators.hpp"

namespace megha {

namespace {

Instance canonicalize_integer(int n, std::vector<std::pair<int, int>> edges,
                              const std::vector<std::vector<long long>>& vals) {
    RawInstance raw;
    raw.agents = n;
    raw.houses = n;
    raw.edges = std::move(edges);
    raw.vals.resize(n);
    for (int a = 0; a < n; ++a) {
        raw.vals[a].reserve(n);
        for (int h = 0; h < n; ++h) raw.vals[a].push_back(Rat::from_int(vals[a][h]));
    }
    return canonicalize_instance(raw);
}

std::vector<std::pair<int, int>> graph_of_kind(const GenSpec& spec, SplitMix64& rng) {
    int n = spec.n;
    std::vector<std::pair<int, int>> edges;
    const std::string& k = spec.kind;
    if (k == "path") {
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    } else if (k == "cycle") {
        if (n < 3) raise(Err::InfeasibleSpec, "a cycle needs at least 3 vertices");
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(0, n - 1);
    } else if (k == "clique") {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    } else if (k == "matching") {
        for (int i = 0; i + 1 < n; i += 2) edges.emplace_back(i, i + 1);
    } else if (k == "tree") {
        // random labelled tree decoded from a Prüfer sequence
        if (n >= 3) {
            std::vector<int> prufer(n - 2);
            for (int& x : prufer) x = (int)rng.below(n);
            std::vector<int> deg(n, 1);
            for (int x : prufer) ++deg[x];
            std::set<int> leaves;
            for (int i = 0; i < n; ++i)
                if (deg[i] == 1) leaves.insert(i);
            for (int x : prufer) {
                int leaf = *leaves.begin();
                leaves.erase(leaves.begin());
                edges.emplace_back(leaf, x);
                if (--deg[x] == 1) leaves.insert(x);
            }
            int a = *leaves.begin(), b = *leaves.rbegin();
            edges.emplace_back(a, b);
        } else if (n == 2) {
            edges.emplace_back(0, 1);
        }
    } else if (k == "random-graph") {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.chance((unsigned)spec.edge_percent, 100)) edges.emplace_back(i, j);
    } else if (k == "complete-bipartite") {
        if (n < 2) raise(Err::InfeasibleSpec, "complete bipartite needs at least 2 vertices");
        int left = (n + 1) / 2;
        for (int i = 0; i < left; ++i)
            for (int j = left; j < n; ++j) edges.emplace_back(i, j);
    } else if (k == "split") {
        if (n < 2) raise(Err::InfeasibleSpec, "a split graph needs at least 2 vertices");
        int c = (n + 1) / 2; // vertices [0,c) form the clique, the rest stay independent
        for (int i = 0; i < c; ++i)
            for (int j = i + 1; j < c; ++j) edges.emplace_back(i, j);
        for (int i = 0; i < c; ++i)
            for (int j = c; j < n; ++j)
                if (rng.chance((unsigned)spec.edge_percent, 100)) edges.emplace_back(i, j);
    } else {
        raise(Err::InfeasibleSpec, "unknown graph kind '" + k + "'");
    }
    return edges;
}

} // namespace

Instance four_agent_matching_fixture() {
    std::vector<std::vector<long long>> vals = {
        {0, 1, 0, 1},
        {0, 1, 0, 1},
        {0, 0, 1, 1},
        {0, 0, 1, 1},
    };
    return canonicalize_integer(4, {{0, 1}, {2, 3}}, vals);
}

Instance gen_bisection(const SocialGraph& g) {
    if (g.n % 2 != 0) raise(Err::OddOrder, "bisection instances need an even number of agents");
    std::vector<std::vector<long long>> vals(g.n, std::vector<long long>(g.n, 0));
    for (int a = 0; a < g.n; ++a)
        for (int h = g.n / 2; h < g.n; ++h) vals[a][h] = 1;
    return canonicalize_integer(g.n, g.edges, vals);
}

Instance gen_random(const GenSpec& spec) {
    if (spec.n < 0) raise(Err::InfeasibleSpec, "negative n");
    if (spec.n > 0 && (spec.ell < 1 || spec.ell > spec.n))
        raise(Err::InfeasibleSpec, "ell must lie in [1, n]");
    if (spec.max_value < 0) raise(Err::InfeasibleSpec, "negative max value");
    if (spec.edge_percent < 0 || spec.edge_percent > 100)
        raise(Err::InfeasibleSpec, "edge percentage must lie in [0, 100]");
    SplitMix64 rng(spec.seed);
    auto edges = graph_of_kind(spec, rng);
    int n = spec.n;
    if (n == 0) return canonicalize_integer(0, {}, {});

    // ell pairwise distinct columns first, then houses round-robin over them
    if (std::pow((long double)spec.max_value + 1, (long double)n) < (long double)spec.ell)
        raise(Err::InfeasibleSpec, "value range too small for the requested ell");
    std::vector<std::vector<long long>> columns;
    int attempts = 0;
    while ((int)columns.size() < spec.ell) {
        std::vector<long long> col(n);
        for (long long& x : col) x = (long long)rng.below((unsigned long long)spec.max_value + 1);
        if (std::find(columns.begin(), columns.end(), col) == columns.end())
            columns.push_back(std::move(col));
        else if (++attempts > 1000)
            raise(Err::InfeasibleSpec, "could not draw enough distinct columns");
    }
    std::vector<std::vector<long long>> vals(n, std::vector<long long>(n));
    for (int h = 0; h < n; ++h)
        for (int a = 0; a < n; ++a) vals[a][h] = columns[h % spec.ell][a];
    return canonicalize_integer(n, std::move(edges), vals);
}

Instance gen_binary_matching(int pairs, int isolated, unsigned long long seed) {
    if (pairs < 0 || isolated < 0) raise(Err::InfeasibleSpec, "negative counts");
    int n = 2 * pairs + isolated;
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < pairs; ++i) edges.emplace_back(2 * i, 2 * i + 1);
    std::vector<std::vector<long long>> vals(n, std::vector<long long>(n));
    for (int a = 0; a < n; ++a)
        for (int h = 0; h < n; ++h) vals[a][h] = (long long)rng.below(2);
    return canonicalize_integer(n, std::move(edges), vals);
}

} // namespace megha
