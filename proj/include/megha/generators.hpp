#pragma once

#include <string>

#include "megha/core.hpp"
#include "megha/graph.hpp"
#include "megha/prng.hpp"

namespace megha {

// Deterministic instance construction: the seed fully determines the output.
struct GenSpec {
    std::string kind; // random-graph|tree|path|cycle|clique|split|complete-bipartite|matching
    int n = 0;
    int ell = 1;             // exact number of distinct valuation columns
    long long max_value = 10; // values drawn uniformly from [0, max_value]
    unsigned long long seed = 0;
    int edge_percent = 50; // density for random-graph and split cross edges
};

// The four-agent matching whose optimum is exactly one unit of envy: two
// agent pairs, binary valuations, no envy-free allocation exists.
Instance four_agent_matching_fixture();

// Identical 0/1 valuations over two equal house halves on the given graph;
// the optimum equals the graph's minimum bisection width. Err::OddOrder on
// odd-order graphs.
Instance gen_bisection(const SocialGraph& g);

// Random instance of the requested graph class with exactly `ell` distinct
// valuation columns, houses assigned to columns round-robin.
// Err::InfeasibleSpec when the parameters cannot be met.
Instance gen_random(const GenSpec& spec);

// Binary instance on `pairs` disjoint edges plus `isolated` lone agents.
Instance gen_binary_matching(int pairs, int isolated, unsigned long long seed);

} // namespace megha
