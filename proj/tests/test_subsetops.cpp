#include <doctest.h>

#include "megha/prng.hpp"
#include "megha/subsetops.hpp"

using namespace megha;

namespace {

SubsetFunction random_fn(int n, envy_t maxval, int inf_percent, uint64_t seed) {
    SplitMix64 rng(seed);
    SubsetFunction f;
    f.ground_n = n;
    f.v.resize(1u << n);
    for (auto& x : f.v)
        x = rng.chance(inf_percent, 100) ? kEnvyInf : (envy_t)rng.below((uint64_t)maxval + 1);
    return f;
}

} // namespace

TEST_CASE("naive min-sum convolution on a worked example") {
    // ground {0,1}: f = [1, 4, 2, INF], g = [0, 3, 5, 7] indexed by mask
    SubsetFunction f, g;
    f.ground_n = g.ground_n = 2;
    f.v = {1, 4, 2, kEnvyInf};
    g.v = {0, 3, 5, 7};
    SubsetFunction h = naive_min_sum_convolution(f, g);
    CHECK(h.v[0] == 1);               // f{}+g{} = 1
    CHECK(h.v[1] == std::min(1 + 3, 4 + 0)); // {0}: f{}+g{0} or f{0}+g{}
    CHECK(h.v[2] == std::min(1 + 5, 2 + 0)); // {1}
    // {0,1}: min(f{}+g{01}, f{0}+g{1}, f{1}+g{0}, f{01}+g{}) = min(8, 9, 5, INF)
    CHECK(h.v[3] == 5);
}

TEST_CASE("fast convolution equals naive below the bound and INF above") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        int n = 1 + (int)(seed % 8);
        SubsetFunction f = random_fn(n, 20, 20, 31000 + seed);
        SubsetFunction g = random_fn(n, 20, 20, 32000 + seed);
        SubsetFunction naive = naive_min_sum_convolution(f, g);
        for (envy_t bound : {(envy_t)0, (envy_t)7, (envy_t)40}) {
            SubsetFunction fast = fast_min_sum_convolution(f, g, bound);
            for (size_t m = 0; m < naive.v.size(); ++m) {
                if (naive.v[m] <= bound)
                    CHECK(fast.v[m] == naive.v[m]);
                else
                    CHECK(fast.v[m] == kEnvyInf);
            }
        }
    }
}

TEST_CASE("fast convolution resolves every reachable entry and reports stats") {
    SubsetFunction f = random_fn(6, 10, 0, 555);
    SubsetFunction g = random_fn(6, 10, 0, 556);
    ConvStats stats;
    SubsetFunction h = fast_min_sum_convolution(f, g, 20, {}, &stats);
    SubsetFunction naive = naive_min_sum_convolution(f, g);
    for (size_t m = 0; m < h.v.size(); ++m)
        CHECK(h.v[m] == (naive.v[m] <= 20 ? naive.v[m] : kEnvyInf));
    CHECK(stats.layers_f > 0);
    CHECK(stats.layers_g > 0);
    CHECK(stats.degrees_processed > 0);
}

TEST_CASE("convolution guards its ground sets and budgets") {
    SubsetFunction f = random_fn(3, 5, 0, 1);
    SubsetFunction g = random_fn(4, 5, 0, 2);
    CHECK_THROWS_WITH_AS(naive_min_sum_convolution(f, g), doctest::Contains("GroundSetMismatch"),
                         Error);
    CHECK_THROWS_AS(fast_min_sum_convolution(f, g, 5), Error);

    SubsetFunction a = random_fn(4, 5, 0, 3), b = random_fn(4, 5, 0, 4);
    CHECK_THROWS_WITH_AS(fast_min_sum_convolution(a, b, -1), doctest::Contains("BoundTooLarge"),
                         Error);
    ConvOptions tiny;
    tiny.work_budget = 1;
    CHECK_THROWS_WITH_AS(fast_min_sum_convolution(a, b, 5, tiny),
                         doctest::Contains("BoundTooLarge"), Error);
    ConvOptions tiny_mem;
    tiny_mem.mem_budget = 1;
    CHECK_THROWS_AS(fast_min_sum_convolution(a, b, 5, tiny_mem), Error);
}

TEST_CASE("serial and parallel convolutions agree exactly") {
    SubsetFunction f = random_fn(9, 15, 10, 661);
    SubsetFunction g = random_fn(9, 15, 10, 662);
    ConvOptions serial;
    serial.threads = 1;
    ConvOptions parallel;
    parallel.threads = 0;
    SubsetFunction hs = fast_min_sum_convolution(f, g, 25, serial);
    SubsetFunction hp = fast_min_sum_convolution(f, g, 25, parallel);
    CHECK(hs.v == hp.v);
}

TEST_CASE("zeta and moebius transforms invert each other") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + (int)rng.below(8);
        std::vector<long long> v(1u << n);
        for (auto& x : v) x = (long long)rng.below(1000) - 500;
        std::vector<long long> z = zeta_transform(v, n);
        // zeta at the full set is the total sum
        long long sum = 0;
        for (long long x : v) sum += x;
        CHECK(z.back() == sum);
        CHECK(moebius_transform(z, n) == v);
    }
}

TEST_CASE("zeta on a hand example sums over subsets") {
    // n=2, v indexed by mask: v[{}]=1, v[{0}]=2, v[{1}]=3, v[{0,1}]=4
    std::vector<long long> v{1, 2, 3, 4};
    CHECK(zeta_transform(v, 2) == std::vector<long long>{1, 3, 4, 10});
}

TEST_CASE("ranked transforms round-trip by popcount layer") {
    SplitMix64 rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 1 + (int)rng.below(7);
        std::vector<long long> v(1u << n);
        for (auto& x : v) x = (long long)rng.below(200);
        auto ranked = ranked_zeta(v, n);
        REQUIRE(ranked.size() == (size_t)n + 1);
        std::vector<long long> back = ranked_moebius(ranked, n);
        CHECK(back == v);
    }
}
