#include "megha/graph.hpp"

#include <algorithm>
#include <numeric>

namespace megha {

SocialGraph::SocialGraph(int n_, std::vector<std::pair<int, int>> edges_) : n(n_) {
    adj.resize(n);
    edges.reserve(edges_.size());
    for (auto [u, v] : edges_) {
        edges.emplace_back(std::min(u, v), std::max(u, v));
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::sort(edges.begin(), edges.end());
    for (auto& a : adj) std::sort(a.begin(), a.end());
}

bool SocialGraph::has_edge(int u, int v) const {
    const auto& a = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
    int w = adj[u].size() <= adj[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), w);
}

int SocialGraph::max_degree() const {
    int d = 0;
    for (const auto& a : adj) d = std::max(d, (int)a.size());
    return d;
}

SocialGraph SocialGraph::complement() const {
    std::vector<std::pair<int, int>> ce;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!has_edge(u, v)) ce.emplace_back(u, v);
    return SocialGraph(n, std::move(ce));
}

std::vector<std::vector<int>> components(const SocialGraph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n, 0);
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// ---- classification ----

// Two-colouring of a connected graph starting from its smallest vertex.
static std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition_of(
    const SocialGraph& g, const std::vector<int>& comp) {
    std::vector<int> color(g.n, -1);
    std::vector<int> stack{comp[0]};
    color[comp[0]] = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.adj[v]) {
            if (color[w] < 0) {
                color[w] = 1 - color[v];
                stack.push_back(w);
            } else if (color[w] == color[v]) {
                return std::nullopt;
            }
        }
    }
    std::vector<int> a, b;
    for (int v : comp) (color[v] == 0 ? a : b).push_back(v);
    return std::make_pair(a, b);
}

// Degree-sequence split test (largest-first ordering, ties by index).
static std::optional<std::pair<std::vector<int>, std::vector<int>>> split_of(const SocialGraph& g) {
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    long long lhs = 0;
    int m = 0;
    long long best_lhs = 0;
    for (int i = 0; i < g.n; ++i) {
        if (g.degree(order[i]) >= i) {
            m = i + 1;
            best_lhs = lhs + g.degree(order[i]);
        }
        lhs += g.degree(order[i]);
    }
    long long tail = 0;
    for (int i = m; i < g.n; ++i) tail += g.degree(order[i]);
    if (best_lhs != (long long)m * (m - 1) + tail) return std::nullopt;
    std::vector<int> clique(order.begin(), order.begin() + m);
    std::vector<int> indep(order.begin() + m, order.end());
    std::sort(clique.begin(), clique.end());
    std::sort(indep.begin(), indep.end());
    return std::make_pair(clique, indep);
}

static GraphClass classify_component(const SocialGraph& g, const std::vector<int>& comp) {
    int cn = (int)comp.size();
    long long ce = 0;
    int maxdeg = 0;
    for (int v : comp) {
        ce += g.degree(v);
        maxdeg = std::max(maxdeg, g.degree(v));
    }
    ce /= 2;
    if (ce == 0) return GraphClass::Edgeless;
    if (maxdeg <= 1) return GraphClass::Matching;
    if (ce == (long long)cn * (cn - 1) / 2) return GraphClass::Clique;
    auto bip = bipartition_of(g, comp);
    if (bip && ce == (long long)bip->first.size() * (long long)bip->second.size())
        return GraphClass::CompleteBipartite;
    if (ce == cn - 1) return GraphClass::Tree;
    return GraphClass::General;
}

ClassifyReport classify(const SocialGraph& g) {
    ClassifyReport r;
    r.max_degree = g.max_degree();
    auto comps = components(g);
    r.connected = comps.size() <= 1;
    long long m = (long long)g.edges.size();
    r.is_tree = r.connected && g.n >= 1 && m == g.n - 1;
    r.is_clique = m == (long long)g.n * (g.n - 1) / 2;
    if (r.connected && g.n >= 2) {
        auto bip = bipartition_of(g, comps[0]);
        if (bip && m == (long long)bip->first.size() * (long long)bip->second.size()) {
            // smaller side first; ties keep the side of vertex 0 first
            if (bip->second.size() < bip->first.size()) std::swap(bip->first, bip->second);
            r.complete_bipartition = *bip;
        }
    }
    r.split_partition = split_of(g);
    r.component_classes.reserve(comps.size());
    for (const auto& c : comps) r.component_classes.push_back(classify_component(g, c));
    return r;
}

// ---- vertex cover ----

namespace {

struct VcSearch {
    const SocialGraph& g;
    std::vector<char> in_cover;
    std::vector<int> cover;

    explicit VcSearch(const SocialGraph& g_) : g(g_), in_cover(g_.n, 0) {}

    const std::pair<int, int>* first_uncovered() const {
        for (const auto& e : g.edges)
            if (!in_cover[e.first] && !in_cover[e.second]) return &e;
        return nullptr;
    }

    bool run(int k) {
        const auto* e = first_uncovered();
        if (!e) return true;
        if (k == 0) return false;
        for (int v : {e->first, e->second}) {
            in_cover[v] = 1;
            cover.push_back(v);
            if (run(k - 1)) return true;
            cover.pop_back();
            in_cover[v] = 0;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> minimum_vertex_cover(const SocialGraph& g, int budget) {
    if (budget < 0) return std::nullopt;
    for (int k = 0; k <= budget; ++k) {
        VcSearch s(g);
        if (s.run(k)) {
            std::sort(s.cover.begin(), s.cover.end());
            return s.cover;
        }
    }
    return std::nullopt;
}

std::optional<std::vector<int>> minimum_clique_modulator(const SocialGraph& g, int budget) {
    return minimum_vertex_cover(g.complement(), budget);
}

} // namespace megha
