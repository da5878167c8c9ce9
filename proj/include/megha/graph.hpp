#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "megha/core.hpp"

namespace megha {

struct SocialGraph {
    int n = 0;
    std::vector<std::vector<int>> adj; // sorted neighbour lists
    std::vector<std::pair<int, int>> edges;

    SocialGraph() = default;
    SocialGraph(int n_, std::vector<std::pair<int, int>> edges_);
    static SocialGraph of(const Instance& inst) { return SocialGraph(inst.n, inst.edges); }

    bool has_edge(int u, int v) const;
    int degree(int v) const { return (int)adj[v].size(); }
    int max_degree() const;
    SocialGraph complement() const;
};

// Connected components, each sorted ascending, ordered by smallest member.
std::vector<std::vector<int>> components(const SocialGraph& g);

enum class GraphClass { Edgeless, Matching, Tree, Clique, CompleteBipartite, Split, General };

struct ClassifyReport {
    int max_degree = 0;
    bool connected = false;
    bool is_tree = false;   // connected, acyclic
    bool is_clique = false; // n >= 1
    std::optional<std::pair<std::vector<int>, std::vector<int>>> complete_bipartition;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> split_partition; // (clique, independent)
    std::vector<GraphClass> component_classes; // parallel to components()
};

ClassifyReport classify(const SocialGraph& g);

// Minimum vertex cover by bounded search tree; present iff the optimum has
// size <= budget. Deterministic branch order.
std::optional<std::vector<int>> minimum_vertex_cover(const SocialGraph& g, int budget);

// Minimum set X with G - X complete: a vertex cover of the complement.
std::optional<std::vector<int>> minimum_clique_modulator(const SocialGraph& g, int budget);

// ---- tree decompositions ----

struct TreeDecomposition {
    int n_graph = 0;                     // vertices of the decomposed graph
    std::vector<std::vector<int>> bags;  // sorted vertex lists
    std::vector<std::pair<int, int>> tree_edges;
    int width() const;
};

// Raises Err::InvalidDecomposition unless td is a tree whose bags cover all
// vertices and edges with connected occurrence sets.
void validate_decomposition(const SocialGraph& g, const TreeDecomposition& td);

// Min-fill elimination heuristic, ties broken towards the smallest vertex
// index. Disconnected graphs are stitched under a synthetic empty root bag.
TreeDecomposition tree_decomposition_minfill(const SocialGraph& g);

enum class NiceKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
    NiceKind kind = NiceKind::Leaf;
    int vertex = -1;            // introduced/forgotten vertex
    std::vector<int> bag;       // sorted
    std::vector<int> children;  // node indices (post-order, so smaller)
};

struct NiceTreeDecomposition {
    int n_graph = 0;
    std::vector<NiceNode> nodes; // post-order; back() is the root, bag empty
    int width() const;
};

// Standard refinement into leaf/introduce/forget/join nodes with an empty
// root bag; preserves the width and re-validates the axioms.
NiceTreeDecomposition to_nice_decomposition(const SocialGraph& g, const TreeDecomposition& td);

// Node-shape checks (child counts, bag deltas, post-order) plus the plain
// decomposition axioms against g.
void validate_nice_decomposition(const SocialGraph& g, const NiceTreeDecomposition& ntd);

// Text format, 0-based ids throughout:
//   td <num_nodes> <width>
//   b <node> <vertex> <vertex> ...
//   e <node> <node>
TreeDecomposition parse_tree_decomposition(const std::string& text, int n_graph);
std::string format_tree_decomposition(const TreeDecomposition& td);

} // namespace megha
