#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "megha/core.hpp"
#include "megha/graph.hpp"
#include "megha/subsetops.hpp"

namespace megha {

enum class SubsetMode { PartitionEnum, Convolution };

struct SolveOptions {
    int brute_ceiling = 9;       // n! enumeration above this is refused
    int subset_ceiling = 24;     // 2^n/3^n table solvers above this are refused
    int modulator_budget = 24;   // max vertex-cover / clique-modulator size searched
    int binary_exact_gate = 8;   // zero-envy completion search allowed up to this n
    long long enum_budget = 1LL << 22;      // max type-assignment enumerations
    long long state_budget = 1LL << 26;     // max width-DP table entries
    ConvOptions conv;                       // fast convolution budgets
    SubsetMode subset_mode = SubsetMode::PartitionEnum;
    int threads = 0; // 0 = all available; 1 = serial reference path
};

// Exhaustive permutation search; the oracle all other solvers are tested
// against. Raises Err::TooLarge beyond opts.brute_ceiling.
SolveResult solve_brute_force(const Instance& inst, const SolveOptions& opts = {});

// For binary valuations on graphs of maximum degree <= 1: pairs take a
// mutually non-envied house pair, a spare house from an isolated agent (or a
// bounded completion search for small n) removes the last unit when possible.
// Total envy is at most one unit; `optimal` is claimed only at zero.
SolveResult solve_binary_degree_one(const Instance& inst, const SolveOptions& opts = {});

// Zero-envy ordered house pair for one edge from `avail`, scanning pairs in
// lexicographic order; with binary valuations any three houses admit one.
std::optional<std::pair<int, int>> resolve_pair(const Instance& inst, int v, int u,
                                                const std::vector<int>& avail);

// Dynamic programming over a nice tree decomposition, with house-type counts
// as state. States are kept sparsely per (node, bag assignment).
SolveResult solve_treewidth(const Instance& inst, const NiceTreeDecomposition& ntd,
                            const SolveOptions& opts = {});

// Enumerates house types over the cover X, completes the independent rest by
// an assignment-problem matching.
SolveResult solve_vertex_cover(const Instance& inst, const std::vector<int>& cover,
                               const SolveOptions& opts = {});

// Same skeleton for a clique modulator X (G - X complete); the matching
// weights additionally carry each clique vertex's envy towards the leftover
// houses, so every clique edge is accounted exactly once.
SolveResult solve_clique_modulator(const Instance& inst, const std::vector<int>& modulator,
                                   const SolveOptions& opts = {});

// Complete bipartite graphs: type enumeration over the smaller side plus a
// matching completion; identical valuations collapse to count tuples.
SolveResult solve_complete_bipartite(const Instance& inst, const std::vector<int>& left,
                                     const std::vector<int>& right,
                                     const SolveOptions& opts = {});

// Trees: subset DP over exact house sets per subtree, either by direct
// partition enumeration (3^n) or via bounded min-sum subset convolution with
// iterative deepening on the bound (2^n-ish).
SolveResult solve_tree(const Instance& inst, const SolveOptions& opts = {});

using ComponentSolver = std::function<SolveResult(const Instance&)>;

// Components solved independently, stitched by a DP over which house subset
// each component consumes. A single-component instance routes straight to
// component_solver.
SolveResult solve_disjoint_union(const Instance& inst, const ComponentSolver& component_solver,
                                 const SolveOptions& opts = {});

// ---- dispatch ----

struct DispatchPlan {
    std::string route;                  // e.g. "treewidth" or "binary-deg1 / disjoint"
    std::vector<std::string> rationale; // one line per considered family
    // parameters the chosen route needs
    std::vector<int> cover, modulator, left, right;
    SubsetMode subset_mode = SubsetMode::PartitionEnum;
    bool binary_prepass = false;
    std::string primary; // solver actually executed for the exact answer
};

DispatchPlan plan_dispatch(const Instance& inst, const SolveOptions& opts = {});

// Runs the plan; Err::NoApplicableSolver when every family is out of budget.
SolveResult solve_auto(const Instance& inst, const SolveOptions& opts = {});

} // namespace megha
