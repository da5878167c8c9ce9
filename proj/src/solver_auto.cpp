#include <algorithm>
#include <cmath>
#include <cstdio>

#include "megha/graph.hpp"
#include "megha/solvers.hpp"
#include "solver_util.hpp"

namespace megha {

// Portfolio dispatch. Every family gets a coarse work estimate (in "basic
// operations"); affordable families run cheapest-first, falling through on
// structural or budget errors, so an optimistic estimate costs time but never
// correctness. Binary valuations on degree <= 1 graphs get a prepass whose
// answer is returned immediately when it reaches zero envy and kept as a
// fallback otherwise.

namespace {

constexpr long double kInfEst = 1e30L;
constexpr long double kWorkCeiling = 4e9L; // per-route affordability cutoff

long double pow_ld(long double base, int exp) {
    long double r = 1;
    while (exp-- > 0) {
        r *= base;
        if (r > kInfEst) return kInfEst;
    }
    return r;
}

long double factorial_ld(int n) {
    long double r = 1;
    for (int i = 2; i <= n; ++i) {
        r *= i;
        if (r > kInfEst) return kInfEst;
    }
    return r;
}

long double choose_ld(int n, int k) {
    if (k < 0 || k > n) return 0;
    long double r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::string est_str(long double e) {
    if (e >= kInfEst) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3Lg", e);
    return buf;
}

struct Candidate {
    std::string name;
    int priority = 0;
    long double est = kInfEst;
    std::vector<int> cover, modulator, left, right;
    SubsetMode mode = SubsetMode::PartitionEnum;
};

bool binary_degree_one_applicable(const Instance& inst) {
    for (long long v : inst.val)
        if (v != 0 && v != inst.scale) return false;
    return SocialGraph::of(inst).max_degree() <= 1;
}

SocialGraph induced(const SocialGraph& g, const std::vector<int>& verts) {
    std::vector<int> pos(g.n, -1);
    for (size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = (int)i;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges)
        if (pos[u] >= 0 && pos[v] >= 0) edges.emplace_back(pos[u], pos[v]);
    return SocialGraph((int)verts.size(), std::move(edges));
}

// coarse exact-solve estimate for one component (used by the disjoint route);
// only the families a small connected piece realistically lands in
long double component_estimate(const SocialGraph& comp_graph, const SolveOptions& opts) {
    int ni = comp_graph.n;
    long double best = kInfEst;
    if (ni <= opts.brute_ceiling) best = std::min(best, factorial_ld(ni) * ni);
    long long m = (long long)comp_graph.edges.size();
    bool clique = m == (long long)ni * (ni - 1) / 2;
    if (clique) best = std::min(best, pow_ld(ni, 3));
    bool tree = m == ni - 1 && components(comp_graph).size() == 1;
    if (tree && ni <= opts.subset_ceiling) best = std::min(best, ni * pow_ld(3, ni));
    return best;
}

// treewidth DP state-space estimate: nice nodes x bag assignments x consumed
// type vectors
long double treewidth_estimate(int n, int width, const HouseTypePartition& types) {
    long double t_space = 1;
    for (int s : types.supply) {
        t_space *= s + 1;
        if (t_space > kInfEst) return kInfEst;
    }
    long double est = 4.0L * std::max(n, 1) * pow_ld(types.ell, width + 1);
    if (est >= kInfEst) return kInfEst;
    est *= t_space;
    return std::min(est, kInfEst);
}

std::vector<Candidate> rank_candidates(const Instance& inst, const SolveOptions& opts,
                                       std::vector<std::string>& rationale) {
    SocialGraph g = SocialGraph::of(inst);
    HouseTypePartition types = compute_house_types(inst);
    ClassifyReport report = classify(g);
    std::vector<std::vector<int>> comps = components(g);
    int n = inst.n;
    std::vector<Candidate> out;

    auto note = [&](const std::string& line) { rationale.push_back(line); };
    auto offer = [&](Candidate c) {
        if (c.est < kWorkCeiling) {
            note(c.name + ": estimate " + est_str(c.est));
            out.push_back(std::move(c));
        } else {
            note(c.name + ": estimate " + est_str(c.est) + ", over the work ceiling");
        }
    };

    // disjoint union of components
    if (comps.size() >= 2 && n <= opts.subset_ceiling) {
        long double part_combine = pow_ld(3, n);
        long double conv_combine = ((long double)comps.size() - 1) * pow_ld(2, n) * n * n * 32;
        long double subsolves = 0;
        for (const auto& comp : comps) {
            long double ce = component_estimate(induced(g, comp), opts);
            subsolves += choose_ld(n, (int)comp.size()) * ce;
            if (subsolves > kInfEst) subsolves = kInfEst;
        }
        Candidate c;
        c.name = "disjoint";
        c.priority = 0;
        c.mode = part_combine <= conv_combine ? SubsetMode::PartitionEnum : SubsetMode::Convolution;
        c.est = std::min(part_combine, conv_combine) + subsolves;
        offer(std::move(c));
    } else if (comps.size() >= 2) {
        note("disjoint: n beyond the subset ceiling");
    } else {
        note("disjoint: graph is connected");
    }

    // tree subset DP
    if (report.is_tree && n <= opts.subset_ceiling) {
        long double part = n * pow_ld(3, n);
        long double conv = 34.0L * n * n * n * pow_ld(2, n);
        Candidate c;
        c.name = "tree";
        c.priority = 1;
        c.mode = part <= conv ? SubsetMode::PartitionEnum : SubsetMode::Convolution;
        c.est = std::min(part, conv);
        offer(std::move(c));
    } else {
        note(report.is_tree ? "tree: n beyond the subset ceiling" : "tree: graph is not a tree");
    }

    // complete bipartite
    if (report.complete_bipartition) {
        auto [L, R] = *report.complete_bipartition;
        if (L.size() > R.size()) std::swap(L, R);
        bool identical = true;
        for (int a = 1; a < n && identical; ++a)
            for (int h = 0; h < n; ++h)
                if (inst.value(a, h) != inst.value(0, h)) {
                    identical = false;
                    break;
                }
        Candidate c;
        c.name = "bipartite";
        c.priority = 2;
        c.left = L;
        c.right = R;
        c.est = identical ? choose_ld((int)L.size() + types.ell - 1, types.ell - 1) * n * n
                          : pow_ld(types.ell, (int)L.size()) * n * n * n;
        offer(std::move(c));
    } else {
        note("bipartite: graph is not complete bipartite");
    }

    // vertex cover / clique modulator enumeration
    int search_budget = std::min(opts.modulator_budget, 16);
    if (types.ell >= 2)
        search_budget = std::min(
            search_budget, (int)(std::log((double)opts.enum_budget) / std::log((double)types.ell)));
    if (auto cover = minimum_vertex_cover(g, search_budget)) {
        Candidate c;
        c.name = "vc";
        c.priority = 3;
        c.cover = *cover;
        c.est = pow_ld(types.ell, (int)cover->size()) * n * n * n;
        offer(std::move(c));
    } else {
        note("vc: no cover within size " + std::to_string(search_budget));
    }
    if (auto mod = minimum_clique_modulator(g, search_budget)) {
        Candidate c;
        c.name = "clique-mod";
        c.priority = 4;
        c.modulator = *mod;
        c.est = pow_ld(types.ell, (int)mod->size()) * n * n * n;
        offer(std::move(c));
    } else {
        note("clique-mod: no modulator within size " + std::to_string(search_budget));
    }

    // treewidth DP
    if (n >= 1) {
        TreeDecomposition td = tree_decomposition_minfill(g);
        Candidate c;
        c.name = "treewidth";
        c.priority = 5;
        c.est = treewidth_estimate(n, td.width(), types);
        offer(std::move(c));
    }

    // brute force, the last resort
    if (n <= opts.brute_ceiling) {
        Candidate c;
        c.name = "brute";
        c.priority = 6;
        c.est = factorial_ld(n) * std::max(n, 1);
        offer(std::move(c));
    } else {
        note("brute: n beyond ceiling " + std::to_string(opts.brute_ceiling));
    }

    // cheapest first with the declared family order as tie-break; brute force
    // stays at the very end no matter how small n! looks
    std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
        bool ab = a.name == "brute", bb = b.name == "brute";
        if (ab != bb) return bb;
        return a.est != b.est ? a.est < b.est : a.priority < b.priority;
    });
    return out;
}

} // namespace

DispatchPlan plan_dispatch(const Instance& inst, const SolveOptions& opts) {
    DispatchPlan plan;
    plan.binary_prepass = binary_degree_one_applicable(inst);
    if (plan.binary_prepass) plan.rationale.push_back("binary-deg1: prepass applies");
    std::vector<Candidate> cands = rank_candidates(inst, opts, plan.rationale);
    if (!cands.empty()) {
        const Candidate& c = cands.front();
        plan.primary = c.name;
        plan.cover = c.cover;
        plan.modulator = c.modulator;
        plan.left = c.left;
        plan.right = c.right;
        plan.subset_mode = c.mode;
    }
    if (plan.binary_prepass)
        plan.route = plan.primary.empty() ? "binary-deg1" : "binary-deg1 / " + plan.primary;
    else
        plan.route = plan.primary.empty() ? "none" : plan.primary;
    return plan;
}

SolveResult solve_auto(const Instance& inst, const SolveOptions& opts) {
    detail::Timer timer;
    std::optional<SolveResult> prepass;
    if (binary_degree_one_applicable(inst)) {
        prepass = solve_binary_degree_one(inst, opts);
        if (prepass->allocation.total == 0) {
            prepass->solver_name = "binary-deg1";
            prepass->stats["millis"] = timer.millis();
            return *prepass;
        }
    }

    std::vector<std::string> rationale;
    std::vector<Candidate> cands = rank_candidates(inst, opts, rationale);
    for (const Candidate& c : cands) {
        SolveOptions o = opts;
        o.subset_mode = c.mode;
        try {
            SolveResult res;
            if (c.name == "disjoint") {
                res = solve_disjoint_union(
                    inst, [o](const Instance& sub) { return solve_auto(sub, o); }, o);
            } else if (c.name == "tree") {
                res = solve_tree(inst, o);
            } else if (c.name == "bipartite") {
                res = solve_complete_bipartite(inst, c.left, c.right, o);
            } else if (c.name == "vc") {
                res = solve_vertex_cover(inst, c.cover, o);
            } else if (c.name == "clique-mod") {
                res = solve_clique_modulator(inst, c.modulator, o);
            } else if (c.name == "treewidth") {
                SocialGraph g = SocialGraph::of(inst);
                NiceTreeDecomposition ntd =
                    to_nice_decomposition(g, tree_decomposition_minfill(g));
                res = solve_treewidth(inst, ntd, o);
            } else if (c.name == "brute") {
                res = solve_brute_force(inst, o);
            } else {
                raise(Err::Internal, "unknown dispatch family " + c.name);
            }
            if (prepass) res.solver_name = "binary-deg1 / " + res.solver_name;
            res.stats["auto_millis"] = timer.millis();
            return res;
        } catch (const Error&) {
            // family declined at runtime; fall through to the next one
        }
    }

    if (prepass) {
        prepass->solver_name = "binary-deg1";
        prepass->stats["millis"] = timer.millis();
        return *prepass;
    }
    raise(Err::NoApplicableSolver, "no solver family fits this instance within its budgets");
}

} // namespace megha
