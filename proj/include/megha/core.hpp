#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "megha/rational.hpp"
#include "megha/types.hpp"

namespace megha {

// A canonical problem instance: n agents, n houses, an undirected social
// graph over the agents, and integer valuations val[a][h] obtained by scaling
// the raw rational inputs by the lcm of their denominators.
struct Instance {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // normalized (u<v), sorted, unique
    std::vector<long long> val;             // row-major n*n, nonnegative
    long long scale = 1;                    // envy unit: 1/scale of raw value

    long long value(int agent, int house) const { return val[(size_t)agent * n + house]; }
};

// Raw input as parsed; canonicalize_instance turns this into an Instance.
struct RawInstance {
    int agents = 0;
    int houses = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<Rat>> vals; // agents x houses
};

// Grouping of houses into classes with identical valuation columns.
struct HouseTypePartition {
    int ell = 0;
    std::vector<int> type_of;        // house -> type id (first-occurrence order)
    std::vector<int> supply;         // type -> number of houses
    std::vector<int> representative; // type -> lowest house index of that type
};

struct Allocation {
    std::vector<int> assignment; // agent -> house, a bijection
    envy_t total = 0;
    std::vector<envy_t> per_edge; // parallel to Instance::edges
};

struct SolveResult {
    Allocation allocation;
    bool optimal = false;
    std::string solver_name;
    std::map<std::string, long long> stats;
};

// ---- core operations ----

// Validates shape (square, nonnegative, edge sanity), scales rationals to a
// common integer grid, and rejects instances whose worst-case total envy
// would exhaust the 128-bit headroom.
Instance canonicalize_instance(const RawInstance& raw);

// Envy across one edge when v holds h_v and u holds h_u: each endpoint's
// shortfall against the neighbour's house, clamped at zero. Symmetric in the
// simultaneous swap of (v,h_v) with (u,h_u).
envy_t edge_envy(const Instance& inst, int v, int u, int h_v, int h_u);

// Sum of edge_envy over all edges for a full assignment.
Allocation evaluate_assignment(const Instance& inst, const std::vector<int>& assignment);

// Audits bijectivity, then evaluates. Every solver funnels its answer
// through this before returning.
Allocation verify_allocation(const Instance& inst, const std::vector<int>& assignment);

HouseTypePartition compute_house_types(const Instance& inst);

// Envy between two agents when each holds a representative house of the given
// type. Sound because same-type houses have identical columns.
envy_t type_envy(const Instance& inst, const HouseTypePartition& types, int v, int u,
                 int type_v, int type_u);

// Restriction to an agent subset and an equally sized house subset, both
// ascending; keeps only internal edges, preserves the scale.
Instance subinstance(const Instance& inst, const std::vector<int>& agents,
                     const std::vector<int>& houses);

} // namespace megha
