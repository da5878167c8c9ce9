#include "megha/matching.hpp"

#include <vector>

namespace megha {

// Row-by-row augmentation with dual potentials (u, v) and a Dijkstra-style
// scan of minimal reduced costs; 1-indexed internally with column 0 as the
// virtual start.
MatchingResult min_cost_matching(const CostMatrix& m) {
    int n = m.n;
    if (n < 0 || (size_t)n * n != m.cost.size()) raise(Err::NonSquare, "cost matrix must be n*n");
    MatchingResult res;
    if (n == 0) return res;

    std::vector<envy_t> u(n + 1, 0), v(n + 1, 0), minv(n + 1, 0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::fill(minv.begin(), minv.end(), kEnvyInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            int i0 = p[j0], j1 = -1;
            envy_t delta = kEnvyInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                envy_t cur = m.at(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }

    res.col_of_row.assign(n, -1);
    for (int j = 1; j <= n; ++j)
        if (p[j] > 0) res.col_of_row[p[j] - 1] = j - 1;
    for (int i = 0; i < n; ++i) res.total += m.at(i, res.col_of_row[i]);
    return res;
}

} // namespace megha
