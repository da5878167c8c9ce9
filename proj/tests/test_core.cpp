#include <doctest.h>

#include "megha/core.hpp"
#include "megha/generators.hpp"
#include "megha/prng.hpp"

using namespace megha;

namespace {

RawInstance raw_int(int n, std::vector<std::pair<int, int>> edges,
                    std::vector<std::vector<long long>> vals) {
    RawInstance raw;
    raw.agents = n;
    raw.houses = n;
    raw.edges = std::move(edges);
    raw.vals.resize(vals.size());
    for (size_t a = 0; a < vals.size(); ++a)
        for (long long v : vals[a]) raw.vals[a].push_back(Rat::from_int(v));
    return raw;
}

} // namespace

TEST_CASE("rational parsing accepts integers, fractions, and decimals") {
    CHECK(Rat::parse("7").num == 7);
    CHECK(Rat::parse("7").den == 1);
    CHECK(Rat::parse("3/4").num == 3);
    CHECK(Rat::parse("3/4").den == 4);
    CHECK(Rat::parse("2/4").num == 1); // reduced
    CHECK(Rat::parse("2/4").den == 2);
    CHECK(Rat::parse("0.5").num == 1);
    CHECK(Rat::parse("0.5").den == 2);
    CHECK(Rat::parse("0.25").den == 4);
    CHECK(Rat::parse("-3/6").num == -1);
    CHECK(Rat::parse("-3/6").den == 2);
    CHECK_THROWS_AS(Rat::parse(""), Error);
    CHECK_THROWS_AS(Rat::parse("1/0"), Error);
    CHECK_THROWS_AS(Rat::parse("abc"), Error);
    CHECK_THROWS_AS(Rat::parse("1.2.3"), Error);
}

TEST_CASE("canonicalization scales by the denominator lcm") {
    RawInstance raw;
    raw.agents = raw.houses = 2;
    raw.vals = {{Rat(1, 2), Rat(1, 3)}, {Rat(0, 1), Rat(5, 6)}};
    Instance inst = canonicalize_instance(raw);
    CHECK(inst.scale == 6);
    CHECK(inst.value(0, 0) == 3);
    CHECK(inst.value(0, 1) == 2);
    CHECK(inst.value(1, 0) == 0);
    CHECK(inst.value(1, 1) == 5);
}

TEST_CASE("canonicalization rejects malformed input") {
    RawInstance bad;
    bad.agents = 2;
    bad.houses = 3;
    CHECK_THROWS_WITH_AS(canonicalize_instance(bad), doctest::Contains("CountMismatch"), Error);

    auto wrong_rows = raw_int(2, {}, {{0, 0}});
    CHECK_THROWS_AS(canonicalize_instance(wrong_rows), Error);

    auto wrong_cols = raw_int(2, {}, {{0}, {0, 1}});
    CHECK_THROWS_AS(canonicalize_instance(wrong_cols), Error);

    auto loop = raw_int(2, {{0, 0}}, {{0, 0}, {0, 0}});
    CHECK_THROWS_WITH_AS(canonicalize_instance(loop), doctest::Contains("InvalidEdge"), Error);

    auto range = raw_int(2, {{0, 2}}, {{0, 0}, {0, 0}});
    CHECK_THROWS_WITH_AS(canonicalize_instance(range), doctest::Contains("InvalidEdge"), Error);

    auto dup = raw_int(2, {{0, 1}, {1, 0}}, {{0, 0}, {0, 0}});
    CHECK_THROWS_WITH_AS(canonicalize_instance(dup), doctest::Contains("duplicate"), Error);

    RawInstance neg;
    neg.agents = neg.houses = 1;
    neg.vals = {{Rat(-1, 2)}};
    CHECK_THROWS_WITH_AS(canonicalize_instance(neg), doctest::Contains("NegativeValuation"),
                         Error);
}

TEST_CASE("canonicalization normalizes edge order") {
    auto raw = raw_int(3, {{2, 1}, {1, 0}}, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
    Instance inst = canonicalize_instance(raw);
    REQUIRE(inst.edges.size() == 2);
    CHECK(inst.edges[0] == std::pair<int, int>{0, 1});
    CHECK(inst.edges[1] == std::pair<int, int>{1, 2});
}

TEST_CASE("canonicalization rejects headroom-exhausting magnitudes") {
    long long huge = (1LL << 61);
    RawInstance raw;
    raw.agents = raw.houses = 4;
    raw.vals.assign(4, std::vector<Rat>(4, Rat::from_int(huge)));
    raw.edges = {{0, 1}, {1, 2}, {2, 3}};
    // single values scale fine, but n * |E| * maxval crosses the budget when
    // the lcm magnifies them further
    raw.vals[0][0] = Rat(huge, 3); // forces scale 3, tripling every value
    CHECK_THROWS_WITH_AS(canonicalize_instance(raw), doctest::Contains("Overflow"), Error);
}

TEST_CASE("edge envy is the clamped two-sided shortfall") {
    // agent 0 values (5,1), agent 1 values (2,7)
    auto inst = canonicalize_instance(raw_int(2, {{0, 1}}, {{5, 1}, {2, 7}}));
    // 0 holds h0 (5), 1 holds h1 (7): neither prefers the other's house
    CHECK(edge_envy(inst, 0, 1, 0, 1) == 0);
    // 0 holds h1 (1), 1 holds h0 (2): 0 misses 5-1=4, 1 misses 7-2=5
    CHECK(edge_envy(inst, 0, 1, 1, 0) == 9);
    // symmetry in simultaneous swap
    CHECK(edge_envy(inst, 1, 0, 0, 1) == 9);
    CHECK_THROWS_AS(edge_envy(inst, 0, 1, 0, 5), Error);
}

TEST_CASE("evaluate_assignment sums per-edge envies in edge order") {
    auto inst = canonicalize_instance(
        raw_int(4, {{0, 1}, {2, 3}}, {{0, 1, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 1, 1}}));
    Allocation alloc = evaluate_assignment(inst, {0, 1, 2, 3});
    // pair (0,1): 0 holds h0 (0), 1 holds h1 (1): agent 0 envies by 1
    // pair (2,3): 2 holds h2 (1), 3 holds h3 (1): no envy
    CHECK(alloc.total == 1);
    REQUIRE(alloc.per_edge.size() == 2);
    CHECK(alloc.per_edge[0] == 1);
    CHECK(alloc.per_edge[1] == 0);
}

TEST_CASE("verify_allocation audits bijectivity") {
    auto inst = canonicalize_instance(raw_int(3, {}, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
    CHECK(verify_allocation(inst, {2, 0, 1}).total == 0);
    CHECK_THROWS_WITH_AS(verify_allocation(inst, {0, 0, 1}), doctest::Contains("NotABijection"),
                         Error);
    CHECK_THROWS_AS(verify_allocation(inst, {0, 1}), Error);
    CHECK_THROWS_AS(verify_allocation(inst, {0, 1, 3}), Error);
    CHECK_THROWS_AS(verify_allocation(inst, {0, 1, -1}), Error);
}

TEST_CASE("house types partition identical columns in first-occurrence order") {
    auto inst = canonicalize_instance(
        raw_int(4, {}, {{1, 0, 1, 2}, {3, 0, 3, 1}, {0, 0, 0, 0}, {7, 7, 7, 7}}));
    // columns: h0=(1,3,0,7), h1=(0,0,0,7), h2=(1,3,0,7)=h0, h3=(2,1,0,7)
    HouseTypePartition t = compute_house_types(inst);
    CHECK(t.ell == 3);
    CHECK(t.type_of == std::vector<int>{0, 1, 0, 2});
    CHECK(t.supply == std::vector<int>{2, 1, 1});
    CHECK(t.representative == std::vector<int>{0, 1, 3});
}

TEST_CASE("type envy vanishes within a type and matches representatives across") {
    Instance inst = four_agent_matching_fixture();
    HouseTypePartition t = compute_house_types(inst);
    REQUIRE(t.ell == 4);
    for (int k = 0; k < t.ell; ++k) CHECK(type_envy(inst, t, 0, 1, k, k) == 0);
    for (int k1 = 0; k1 < t.ell; ++k1)
        for (int k2 = 0; k2 < t.ell; ++k2)
            CHECK(type_envy(inst, t, 0, 1, k1, k2) ==
                  edge_envy(inst, 0, 1, t.representative[k1], t.representative[k2]));
}

TEST_CASE("type instantiation neutrality: swapping same-type houses keeps the total") {
    SplitMix64 rng(404);
    for (int trial = 0; trial < 100; ++trial) {
        GenSpec spec;
        spec.kind = "random-graph";
        spec.n = 3 + (int)rng.below(5);
        spec.ell = 1 + (int)rng.below((unsigned)spec.n - 1); // ell < n forces a duplicate column
        spec.max_value = 5;
        spec.seed = rng.next();
        Instance inst = gen_random(spec);
        HouseTypePartition types = compute_house_types(inst);
        std::vector<int> assignment(inst.n);
        for (int i = 0; i < inst.n; ++i) assignment[i] = i;
        for (int i = inst.n - 1; i > 0; --i)
            std::swap(assignment[i], assignment[rng.below((unsigned)i + 1)]);
        envy_t before = evaluate_assignment(inst, assignment).total;

        int h1 = -1, h2 = -1;
        for (int a = 0; a < inst.n && h1 < 0; ++a)
            for (int b = a + 1; b < inst.n; ++b)
                if (types.type_of[a] == types.type_of[b]) {
                    h1 = a;
                    h2 = b;
                    break;
                }
        REQUIRE(h1 >= 0);
        for (int& h : assignment) h = h == h1 ? h2 : h == h2 ? h1 : h;
        CHECK(evaluate_assignment(inst, assignment).total == before);
    }
}

TEST_CASE("subinstance restricts agents, houses, and internal edges") {
    auto inst = canonicalize_instance(raw_int(4, {{0, 1}, {1, 2}, {2, 3}},
                                              {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11},
                                               {12, 13, 14, 15}}));
    Instance sub = subinstance(inst, {1, 3}, {0, 2});
    CHECK(sub.n == 2);
    CHECK(sub.edges.empty()); // (1,3) is not an edge of the original
    CHECK(sub.value(0, 0) == 4);
    CHECK(sub.value(0, 1) == 6);
    CHECK(sub.value(1, 0) == 12);
    CHECK(sub.value(1, 1) == 14);

    Instance sub2 = subinstance(inst, {1, 2}, {1, 3});
    REQUIRE(sub2.edges.size() == 1);
    CHECK(sub2.edges[0] == std::pair<int, int>{0, 1});
    CHECK(sub2.value(1, 0) == 9);
}

TEST_CASE("128-bit envy values print exactly") {
    CHECK(envy_str(0) == "0");
    CHECK(envy_str(-5) == "-5");
    envy_t big = 1;
    for (int i = 0; i < 100; ++i) big *= 2;
    CHECK(envy_str(big) == "1267650600228229401496703205376");
}

TEST_CASE("saturating addition never crosses the sentinel") {
    CHECK(sat_add(1, 2) == 3);
    CHECK(sat_add(kEnvyInf, 1) == kEnvyInf);
    CHECK(sat_add(kEnvyInf / 2, kEnvyInf / 2) == kEnvyInf);
    CHECK(sat_add(kEnvyInf, kEnvyInf) == kEnvyInf);
}

TEST_CASE("degenerate sizes are legal with zero envy") {
    Instance empty = canonicalize_instance(raw_int(0, {}, {}));
    CHECK(verify_allocation(empty, {}).total == 0);
    Instance one = canonicalize_instance(raw_int(1, {}, {{3}}));
    CHECK(verify_allocation(one, {0}).total == 0);
}
