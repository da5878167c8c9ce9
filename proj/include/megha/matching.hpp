#pragma once

#include <vector>

#include "megha/types.hpp"

namespace megha {

// Square cost matrix of exact nonnegative envy units.
struct CostMatrix {
    int n = 0;
    std::vector<envy_t> cost; // row-major

    envy_t at(int r, int c) const { return cost[(size_t)r * n + c]; }
    envy_t& at(int r, int c) { return cost[(size_t)r * n + c]; }
};

struct MatchingResult {
    std::vector<int> col_of_row;
    envy_t total = 0;
};

// Minimum-cost perfect matching via the O(n^3) potentials method, kept fully
// in integers. Deterministic: among equal-cost options the scan order of
// columns decides. Raises Err::NonSquare on malformed input.
MatchingResult min_cost_matching(const CostMatrix& m);

} // namespace megha
