#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "megha/graph.hpp"

namespace megha {

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, (int)b.size() - 1);
    return w;
}

int NiceTreeDecomposition::width() const {
    int w = -1;
    for (const auto& nd : nodes) w = std::max(w, (int)nd.bag.size() - 1);
    return w;
}

// ---- validation ----

void validate_decomposition(const SocialGraph& g, const TreeDecomposition& td) {
    size_t k = td.bags.size();
    if (k == 0) raise(Err::InvalidDecomposition, "no bags");
    if (td.n_graph != g.n) raise(Err::InvalidDecomposition, "vertex count mismatch");

    std::vector<std::vector<int>> bags = td.bags;
    for (auto& b : bags) {
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        for (int v : b)
            if (v < 0 || v >= g.n) raise(Err::InvalidDecomposition, "bag vertex out of range");
    }

    // the bag graph must be a tree
    if (td.tree_edges.size() != k - 1) raise(Err::InvalidDecomposition, "bag graph is not a tree");
    std::vector<std::vector<int>> badj(k);
    for (auto [a, b] : td.tree_edges) {
        if (a < 0 || b < 0 || (size_t)a >= k || (size_t)b >= k || a == b)
            raise(Err::InvalidDecomposition, "bad bag edge");
        badj[a].push_back(b);
        badj[b].push_back(a);
    }
    std::vector<char> seen(k, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    size_t reached = 0;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        ++reached;
        for (int y : badj[x])
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
    }
    if (reached != k) raise(Err::InvalidDecomposition, "bag graph is not connected");

    // vertex coverage + connected occurrence per vertex
    std::vector<int> occurrences(g.n, 0);
    for (const auto& b : bags)
        for (int v : b) occurrences[v]++;
    for (int v = 0; v < g.n; ++v) {
        if (occurrences[v] == 0)
            raise(Err::InvalidDecomposition, "vertex " + std::to_string(v) + " in no bag");
        int start = -1;
        for (size_t i = 0; i < k && start < 0; ++i)
            if (std::binary_search(bags[i].begin(), bags[i].end(), v)) start = (int)i;
        std::vector<char> vis(k, 0);
        std::vector<int> st{start};
        vis[start] = 1;
        int cnt = 0;
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            ++cnt;
            for (int y : badj[x])
                if (!vis[y] && std::binary_search(bags[y].begin(), bags[y].end(), v)) {
                    vis[y] = 1;
                    st.push_back(y);
                }
        }
        if (cnt != occurrences[v])
            raise(Err::InvalidDecomposition,
                  "occurrences of vertex " + std::to_string(v) + " are not connected");
    }

    // edge coverage
    for (auto [u, v] : g.edges) {
        bool covered = false;
        for (const auto& b : bags)
            if (std::binary_search(b.begin(), b.end(), u) &&
                std::binary_search(b.begin(), b.end(), v)) {
                covered = true;
                break;
            }
        if (!covered)
            raise(Err::InvalidDecomposition, "edge (" + std::to_string(u) + "," +
                                                 std::to_string(v) + ") in no bag");
    }
}

// ---- min-fill heuristic ----

TreeDecomposition tree_decomposition_minfill(const SocialGraph& g) {
    int n = g.n;
    std::vector<std::set<int>> nb(n);
    for (auto [u, v] : g.edges) {
        nb[u].insert(v);
        nb[v].insert(u);
    }
    std::vector<char> gone(n, 0);
    std::vector<int> position(n, -1); // elimination position
    std::vector<std::vector<int>> bag_of(n);

    for (int step = 0; step < n; ++step) {
        int best = -1;
        long long best_fill = -1;
        for (int v = 0; v < n; ++v) {
            if (gone[v]) continue;
            long long fill = 0;
            for (auto it = nb[v].begin(); it != nb[v].end(); ++it)
                for (auto jt = std::next(it); jt != nb[v].end(); ++jt)
                    if (!nb[*it].count(*jt)) ++fill;
            if (best < 0 || fill < best_fill) {
                best = v;
                best_fill = fill;
            }
        }
        int v = best;
        position[v] = step;
        gone[v] = 1;
        bag_of[v].assign(nb[v].begin(), nb[v].end());
        bag_of[v].push_back(v);
        std::sort(bag_of[v].begin(), bag_of[v].end());
        for (int a : nb[v])
            for (int b : nb[v])
                if (a < b) {
                    nb[a].insert(b);
                    nb[b].insert(a);
                }
        for (int a : nb[v]) nb[a].erase(v);
        nb[v].clear();
    }

    TreeDecomposition td;
    td.n_graph = n;
    td.bags.resize(n);
    std::vector<int> node_of(n);
    for (int v = 0; v < n; ++v) {
        node_of[v] = v;
        td.bags[v] = bag_of[v];
    }
    std::vector<int> roots;
    for (int v = 0; v < n; ++v) {
        // parent: the earliest-eliminated other member of v's bag
        int parent = -1, best_pos = n + 1;
        for (int u : bag_of[v])
            if (u != v && position[u] < best_pos) {
                best_pos = position[u];
                parent = u;
            }
        if (parent >= 0)
            td.tree_edges.emplace_back(node_of[v], node_of[parent]);
        else
            roots.push_back(node_of[v]);
    }
    if (n == 0) {
        td.bags.push_back({});
        return td;
    }
    if (roots.size() > 1) {
        int synth = (int)td.bags.size();
        td.bags.push_back({});
        for (int r : roots) td.tree_edges.emplace_back(r, synth);
    }
    validate_decomposition(g, td);
    return td;
}

// ---- nice refinement ----

namespace {

struct NiceBuilder {
    NiceTreeDecomposition out;

    int add(NiceKind kind, int vertex, std::vector<int> bag, std::vector<int> children) {
        out.nodes.push_back({kind, vertex, std::move(bag), std::move(children)});
        return (int)out.nodes.size() - 1;
    }

    // Leaf + a chain introducing every vertex of `bag` in ascending order.
    int chain_from_empty(const std::vector<int>& bag) {
        int cur = add(NiceKind::Leaf, -1, {}, {});
        std::vector<int> acc;
        for (int v : bag) {
            acc.push_back(v);
            cur = add(NiceKind::Introduce, v, acc, {cur});
        }
        return cur;
    }

    // Forget/introduce chain morphing the bag at `cur` into `target`.
    int morph(int cur, const std::vector<int>& target) {
        std::vector<int> bag = out.nodes[cur].bag;
        std::vector<int> drop, gain;
        std::set_difference(bag.begin(), bag.end(), target.begin(), target.end(),
                            std::back_inserter(drop));
        std::set_difference(target.begin(), target.end(), bag.begin(), bag.end(),
                            std::back_inserter(gain));
        for (int v : drop) {
            bag.erase(std::find(bag.begin(), bag.end(), v));
            cur = add(NiceKind::Forget, v, bag, {cur});
        }
        for (int v : gain) {
            bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
            cur = add(NiceKind::Introduce, v, bag, {cur});
        }
        return cur;
    }
};

} // namespace

void validate_nice_decomposition(const SocialGraph& g, const NiceTreeDecomposition& ntd) {
    if (ntd.nodes.empty() || !ntd.nodes.back().bag.empty())
        raise(Err::InvalidDecomposition, "nice root must have an empty bag");
    TreeDecomposition flat;
    flat.n_graph = g.n;
    for (size_t i = 0; i < ntd.nodes.size(); ++i) {
        const NiceNode& nd = ntd.nodes[i];
        flat.bags.push_back(nd.bag);
        for (int c : nd.children) {
            if (c < 0 || (size_t)c >= i) raise(Err::InvalidDecomposition, "nodes not in post-order");
            flat.tree_edges.emplace_back((int)i, c);
        }
        size_t want_children = nd.kind == NiceKind::Leaf     ? 0
                               : nd.kind == NiceKind::Join   ? 2
                                                             : 1;
        if (nd.children.size() != want_children)
            raise(Err::InvalidDecomposition, "wrong child count for node kind");
        if (nd.kind == NiceKind::Introduce || nd.kind == NiceKind::Forget) {
            const auto& cb = ntd.nodes[nd.children[0]].bag;
            std::vector<int> diff;
            if (nd.kind == NiceKind::Introduce) {
                std::set_difference(nd.bag.begin(), nd.bag.end(), cb.begin(), cb.end(),
                                    std::back_inserter(diff));
                if (diff != std::vector<int>{nd.vertex} || cb.size() + 1 != nd.bag.size())
                    raise(Err::InvalidDecomposition, "bad introduce node");
            } else {
                std::set_difference(cb.begin(), cb.end(), nd.bag.begin(), nd.bag.end(),
                                    std::back_inserter(diff));
                if (diff != std::vector<int>{nd.vertex} || nd.bag.size() + 1 != cb.size())
                    raise(Err::InvalidDecomposition, "bad forget node");
            }
        }
        if (nd.kind == NiceKind::Join)
            for (int c : nd.children)
                if (ntd.nodes[c].bag != nd.bag)
                    raise(Err::InvalidDecomposition, "join children must repeat the bag");
    }
    validate_decomposition(g, flat);
}

NiceTreeDecomposition to_nice_decomposition(const SocialGraph& g, const TreeDecomposition& td) {
    validate_decomposition(g, td);
    size_t k = td.bags.size();
    std::vector<std::vector<int>> badj(k);
    for (auto [a, b] : td.tree_edges) {
        badj[a].push_back(b);
        badj[b].push_back(a);
    }
    for (auto& a : badj) std::sort(a.begin(), a.end());

    std::vector<std::vector<int>> bags = td.bags;
    for (auto& b : bags) std::sort(b.begin(), b.end());

    NiceBuilder nb;
    nb.out.n_graph = g.n;

    // iterative post-order from bag 0
    struct Frame {
        int node, parent;
        size_t next_child = 0;
        std::vector<int> child_tops;
    };
    std::vector<Frame> stack;
    stack.push_back(Frame{0, -1, 0, {}});
    int root_top = -1;
    while (!stack.empty()) {
        Frame& f = stack.back();
        int child = -1;
        while (f.next_child < badj[f.node].size()) {
            int c = badj[f.node][f.next_child++];
            if (c != f.parent) {
                child = c;
                break;
            }
        }
        if (child >= 0) {
            stack.push_back(Frame{child, f.node, 0, {}});
            continue;
        }
        int top;
        if (f.child_tops.empty()) {
            top = nb.chain_from_empty(bags[f.node]);
        } else {
            top = nb.morph(f.child_tops[0], bags[f.node]);
            for (size_t i = 1; i < f.child_tops.size(); ++i) {
                int other = nb.morph(f.child_tops[i], bags[f.node]);
                top = nb.add(NiceKind::Join, -1, bags[f.node], {top, other});
            }
        }
        stack.pop_back();
        if (stack.empty())
            root_top = top;
        else
            stack.back().child_tops.push_back(top);
    }
    nb.morph(root_top, {});
    if (nb.out.width() > std::max(td.width(), 0))
        raise(Err::InvalidDecomposition, "nice refinement widened the decomposition");
    validate_nice_decomposition(g, nb.out);
    return nb.out;
}

// ---- text format ----

TreeDecomposition parse_tree_decomposition(const std::string& text, int n_graph) {
    TreeDecomposition td;
    td.n_graph = n_graph;
    std::istringstream in(text);
    std::string line;
    long long declared_nodes = -1, declared_width = -1;
    std::vector<char> have_bag;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "#") continue;
        if (tag == "td") {
            if (declared_nodes >= 0) raise(Err::ParseError, "duplicate td header");
            if (!(ls >> declared_nodes >> declared_width) || declared_nodes < 1)
                raise(Err::ParseError, "bad td header");
            td.bags.assign(declared_nodes, {});
            have_bag.assign(declared_nodes, 0);
        } else if (tag == "b") {
            if (declared_nodes < 0) raise(Err::ParseError, "bag line before td header");
            long long id;
            if (!(ls >> id) || id < 0 || id >= declared_nodes)
                raise(Err::ParseError, "bag id out of range");
            if (have_bag[id]) raise(Err::ParseError, "duplicate bag id");
            have_bag[id] = 1;
            long long v;
            while (ls >> v) {
                if (v < 0 || v >= n_graph) raise(Err::ParseError, "bag vertex out of range");
                td.bags[id].push_back((int)v);
            }
            std::sort(td.bags[id].begin(), td.bags[id].end());
            td.bags[id].erase(std::unique(td.bags[id].begin(), td.bags[id].end()),
                              td.bags[id].end());
        } else if (tag == "e") {
            if (declared_nodes < 0) raise(Err::ParseError, "edge line before td header");
            long long a, b;
            if (!(ls >> a >> b) || a < 0 || b < 0 || a >= declared_nodes || b >= declared_nodes)
                raise(Err::ParseError, "bag edge out of range");
            td.tree_edges.emplace_back((int)a, (int)b);
        } else {
            raise(Err::ParseError, "unknown line tag '" + tag + "'");
        }
    }
    if (declared_nodes < 0) raise(Err::ParseError, "missing td header");
    for (long long i = 0; i < declared_nodes; ++i)
        if (!have_bag[i]) raise(Err::ParseError, "missing bag " + std::to_string(i));
    if (td.width() != (int)declared_width)
        raise(Err::ParseError, "declared width " + std::to_string(declared_width) +
                                   " but bags have width " + std::to_string(td.width()));
    return td;
}

std::string format_tree_decomposition(const TreeDecomposition& td) {
    std::ostringstream out;
    out << "td " << td.bags.size() << " " << td.width() << "\n";
    for (size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i;
        for (int v : td.bags[i]) out << " " << v;
        out << "\n";
    }
    for (auto [a, b] : td.tree_edges) out << "e " << a << " " << b << "\n";
    return out.str();
}

} // namespace megha
