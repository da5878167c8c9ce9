#include "megha/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace megha {

// ---- errors ----

const char* err_name(Err e) {
    switch (e) {
        case Err::NegativeValuation: return "NegativeValuation";
        case Err::CountMismatch: return "CountMismatch";
        case Err::InvalidEdge: return "InvalidEdge";
        case Err::Overflow: return "Overflow";
        case Err::NotABijection: return "NotABijection";
        case Err::NonSquare: return "NonSquare";
        case Err::GroundSetMismatch: return "GroundSetMismatch";
        case Err::BoundTooLarge: return "BoundTooLarge";
        case Err::TooLarge: return "TooLarge";
        case Err::NotBinary: return "NotBinary";
        case Err::DegreeTooHigh: return "DegreeTooHigh";
        case Err::InvalidDecomposition: return "InvalidDecomposition";
        case Err::StateBudgetExceeded: return "StateBudgetExceeded";
        case Err::NotACover: return "NotACover";
        case Err::NotAModulator: return "NotAModulator";
        case Err::NotCompleteBipartite: return "NotCompleteBipartite";
        case Err::NotATree: return "NotATree";
        case Err::BudgetExceeded: return "BudgetExceeded";
        case Err::ComponentSolverFailure: return "ComponentSolverFailure";
        case Err::InfeasibleSpec: return "InfeasibleSpec";
        case Err::OddOrder: return "OddOrder";
        case Err::NoApplicableSolver: return "NoApplicableSolver";
        case Err::ParseError: return "ParseError";
        case Err::IoError: return "IoError";
        case Err::Internal: return "Internal";
    }
    return "Unknown";
}

bool is_structural(Err e) {
    switch (e) {
        case Err::ParseError:
        case Err::IoError:
            return false;
        default:
            return true;
    }
}

// ---- 128-bit printing ----

std::string envy_str(envy_t v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? (unsigned __int128)(-v) : (unsigned __int128)v;
    std::string s;
    while (u) {
        s.push_back(char('0' + (int)(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

// ---- rationals ----

Rat::Rat(long long n, long long d) {
    if (d == 0) raise(Err::ParseError, "zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

Rat Rat::parse(const std::string& s) {
    auto parse_ll = [&](const char* b, const char* e) -> long long {
        long long out = 0;
        auto res = std::from_chars(b, e, out);
        if (res.ec != std::errc() || res.ptr != e)
            raise(Err::ParseError, "bad rational literal '" + s + "'");
        return out;
    };
    const char* b = s.data();
    const char* e = b + s.size();
    if (b == e) raise(Err::ParseError, "empty rational literal");
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string::npos) {
        long long p = parse_ll(b, b + slash);
        long long q = parse_ll(b + slash + 1, e);
        return Rat(p, q);
    }
    if (dot != std::string::npos) {
        long long whole = dot == 0 ? 0 : parse_ll(b, b + dot);
        std::string frac = s.substr(dot + 1);
        if (frac.empty() || frac.size() > 18)
            raise(Err::ParseError, "bad decimal literal '" + s + "'");
        long long fnum = parse_ll(frac.data(), frac.data() + frac.size());
        long long fden = 1;
        for (size_t i = 0; i < frac.size(); ++i) fden *= 10;
        bool neg = s[0] == '-';
        long long scaled = whole * fden + (neg ? -fnum : fnum);
        // whole*fden fits: |whole| <= 9.2e18/fden enforced by the multiply check
        if (fden != 0 && (whole > (long long)9e18 / fden || whole < -(long long)9e18 / fden))
            raise(Err::Overflow, "decimal literal too large");
        return Rat(scaled, fden);
    }
    return Rat(parse_ll(b, e), 1);
}

long long checked_lcm(long long a, long long b) {
    long long g = std::gcd(a, b);
    __int128 l = (__int128)(a / g) * b;
    if (l > (__int128)1 << 62) raise(Err::Overflow, "common denominator too large");
    return (long long)l;
}

long long checked_mul(long long a, long long b, long long cap) {
    __int128 p = (__int128)a * b;
    if (p > cap) raise(Err::Overflow, "scaled valuation exceeds integer headroom");
    return (long long)p;
}

// ---- canonicalization ----

static constexpr long long kMaxScaledValue = 1LL << 62;

Instance canonicalize_instance(const RawInstance& raw) {
    if (raw.agents != raw.houses)
        raise(Err::CountMismatch, "need exactly as many houses as agents, got " +
                                      std::to_string(raw.agents) + " agents and " +
                                      std::to_string(raw.houses) + " houses");
    int n = raw.agents;
    if (n < 0) raise(Err::CountMismatch, "negative agent count");
    if ((int)raw.vals.size() != n) raise(Err::CountMismatch, "valuation row count != agents");
    for (const auto& row : raw.vals)
        if ((int)row.size() != n) raise(Err::CountMismatch, "valuation row length != houses");

    Instance inst;
    inst.n = n;

    // Edge sanity: in-range endpoints, no loops, no duplicates; normalized order.
    for (auto [u, v] : raw.edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            raise(Err::InvalidEdge, "endpoint out of range in edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        if (u == v) raise(Err::InvalidEdge, "self-loop at agent " + std::to_string(u));
        inst.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(inst.edges.begin(), inst.edges.end());
    if (std::adjacent_find(inst.edges.begin(), inst.edges.end()) != inst.edges.end())
        raise(Err::InvalidEdge, "duplicate edge");

    long long scale = 1;
    for (const auto& row : raw.vals)
        for (const Rat& r : row) {
            if (r.num < 0) raise(Err::NegativeValuation, "valuations must be nonnegative");
            scale = checked_lcm(scale, r.den);
        }
    inst.scale = scale;

    inst.val.resize((size_t)n * n);
    long long maxval = 0;
    for (int a = 0; a < n; ++a)
        for (int h = 0; h < n; ++h) {
            const Rat& r = raw.vals[a][h];
            long long v = checked_mul(r.num, scale / r.den, kMaxScaledValue);
            inst.val[(size_t)a * n + h] = v;
            maxval = std::max(maxval, v);
        }

    // Worst-case total envy must stay far below the 128-bit sentinel.
    if (maxval > 0 && !inst.edges.empty()) {
        envy_t budget = kEnvyInf / 4;
        envy_t pairs = (envy_t)n * (envy_t)inst.edges.size();
        if (pairs > budget / maxval)
            raise(Err::Overflow, "worst-case total envy exceeds integer headroom");
    }
    return inst;
}

// ---- envy ----

static void check_agent(const Instance& inst, int a) {
    if (a < 0 || a >= inst.n) raise(Err::InvalidEdge, "agent index out of range");
}
static void check_house(const Instance& inst, int h) {
    if (h < 0 || h >= inst.n) raise(Err::InvalidEdge, "house index out of range");
}

envy_t edge_envy(const Instance& inst, int v, int u, int h_v, int h_u) {
    check_agent(inst, v);
    check_agent(inst, u);
    check_house(inst, h_v);
    check_house(inst, h_u);
    envy_t dv = (envy_t)inst.value(v, h_u) - inst.value(v, h_v);
    envy_t du = (envy_t)inst.value(u, h_v) - inst.value(u, h_u);
    return (dv > 0 ? dv : 0) + (du > 0 ? du : 0);
}

Allocation evaluate_assignment(const Instance& inst, const std::vector<int>& assignment) {
    Allocation alloc;
    alloc.assignment = assignment;
    alloc.per_edge.reserve(inst.edges.size());
    envy_t total = 0;
    for (auto [u, v] : inst.edges) {
        envy_t e = edge_envy(inst, u, v, assignment[u], assignment[v]);
        alloc.per_edge.push_back(e);
        total += e;
    }
    alloc.total = total;
    return alloc;
}

Allocation verify_allocation(const Instance& inst, const std::vector<int>& assignment) {
    if ((int)assignment.size() != inst.n)
        raise(Err::NotABijection, "assignment covers " + std::to_string(assignment.size()) +
                                      " agents, expected " + std::to_string(inst.n));
    std::vector<char> seen(inst.n, 0);
    for (int h : assignment) {
        if (h < 0 || h >= inst.n) raise(Err::NotABijection, "house index out of range");
        if (seen[h]) raise(Err::NotABijection, "house " + std::to_string(h) + " assigned twice");
        seen[h] = 1;
    }
    return evaluate_assignment(inst, assignment);
}

// ---- house types ----

HouseTypePartition compute_house_types(const Instance& inst) {
    HouseTypePartition p;
    p.type_of.assign(inst.n, -1);
    for (int h = 0; h < inst.n; ++h) {
        for (int t = 0; t < p.ell; ++t) {
            int r = p.representative[t];
            bool same = true;
            for (int a = 0; a < inst.n && same; ++a)
                same = inst.value(a, h) == inst.value(a, r);
            if (same) {
                p.type_of[h] = t;
                p.supply[t]++;
                break;
            }
        }
        if (p.type_of[h] < 0) {
            p.type_of[h] = p.ell++;
            p.representative.push_back(h);
            p.supply.push_back(1);
        }
    }
    return p;
}

envy_t type_envy(const Instance& inst, const HouseTypePartition& types, int v, int u, int type_v,
                 int type_u) {
    if (type_v == type_u) return 0;
    return edge_envy(inst, v, u, types.representative[type_v], types.representative[type_u]);
}

// ---- restriction ----

Instance subinstance(const Instance& inst, const std::vector<int>& agents,
                     const std::vector<int>& houses) {
    if (agents.size() != houses.size())
        raise(Err::CountMismatch, "restriction needs equally many agents and houses");
    int m = (int)agents.size();
    Instance sub;
    sub.n = m;
    sub.scale = inst.scale;
    std::vector<int> agent_pos(inst.n, -1);
    for (int i = 0; i < m; ++i) agent_pos[agents[i]] = i;
    for (auto [u, v] : inst.edges) {
        int pu = agent_pos[u], pv = agent_pos[v];
        if (pu >= 0 && pv >= 0) sub.edges.emplace_back(std::min(pu, pv), std::max(pu, pv));
    }
    std::sort(sub.edges.begin(), sub.edges.end());
    sub.val.resize((size_t)m * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) sub.val[(size_t)i * m + j] = inst.value(agents[i], houses[j]);
    return sub;
}

} // namespace megha
