#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "zeroforce/forcing.hpp"
#include "zeroforce/generators.hpp"

using namespace zf;

namespace {

// applies the forcing rule in a random valid order; the fixpoint must
// not depend on the order
VertexSet closure_randomized(const Graph& g, VertexSet colored, std::mt19937_64& rng) {
    for (;;) {
        std::vector<std::pair<int, int>> moves;
        for (int v = colored.first(); v >= 0; v = colored.next(v)) {
            VertexSet outside = g.neighbors(v) - colored;
            if (outside.count() == 1) moves.emplace_back(v, outside.first());
        }
        if (moves.empty()) return colored;
        std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
        colored.set(moves[pick(rng)].second);
    }
}

VertexSet random_subset(int n, std::mt19937_64& rng) {
    VertexSet s;
    std::uniform_int_distribution<int> coin(0, 1);
    for (int v = 0; v < n; ++v)
        if (coin(rng)) s.set(v);
    return s;
}

}  // namespace

TEST_CASE("closure examples") {
    SECTION("path propagation") {
        auto c = closure(path_graph(3), {0});
        CHECK(c.set == VertexSet::full(3));
        CHECK(c.schedule.forced == std::vector<int>{1, 2});
        CHECK(c.schedule.forcers == std::vector<int>{0, 1});
    }
    SECTION("empty start never forces when delta >= 2") {
        CHECK(closure(cycle_graph(5), {}).set.empty());
        CHECK(closure(petersen(), {}).set.empty());
    }
    SECTION("adjacent pair forces C4") {
        CHECK(closure(cycle_graph(4), {0, 1}).set == VertexSet::full(4));
    }
}

TEST_CASE("is_zero_forcing_set") {
    Graph c5 = cycle_graph(5);
    CHECK(is_zero_forcing_set(c5, {0, 1}));
    CHECK_FALSE(is_zero_forcing_set(c5, {0}));
    CHECK(is_zero_forcing_set(c5, VertexSet::full(5)));
}

TEST_CASE("verify_schedule") {
    Graph p3 = path_graph(3);
    CHECK(verify_schedule(p3, closure(p3, {0}).schedule));
    SECTION("middle vertex cannot force with two outside neighbors") {
        ForcingSchedule bad;
        bad.z = {1};
        bad.forced = {0};
        bad.forcers = {1};
        CHECK_FALSE(verify_schedule(p3, bad));
    }
    SECTION("empty schedule with Z = V") {
        ForcingSchedule s;
        s.z = VertexSet::full(3);
        CHECK(verify_schedule(p3, s));
    }
    SECTION("out of range throws") {
        ForcingSchedule s;
        s.z = {0};
        s.forced = {5};
        s.forcers = {0};
        CHECK_THROWS_AS(verify_schedule(p3, s), std::out_of_range);
    }
}

TEST_CASE("zero_forcing_number examples") {
    for (int n = 1; n <= 8; ++n) CHECK(zero_forcing_number(path_graph(n)).value == 1);
    for (int n = 2; n <= 6; ++n)
        CHECK(zero_forcing_number(complete_graph(n)).value == n - 1);
    CHECK(zero_forcing_number(petersen()).value == 5);
    CHECK(zero_forcing_number(cycle_graph(9)).value == 2);
    CHECK_THROWS_AS(zero_forcing_number(Graph(0)), std::invalid_argument);
}

TEST_CASE("witness is a zero forcing set and hint does not change the result") {
    for (const Graph& g : all_connected(6)) {
        auto r = zero_forcing_number(g);
        CHECK(r.witness.count() == r.value);
        CHECK(is_zero_forcing_set(g, r.witness));
        CHECK(zero_forcing_number(g, min_degree(g)).value == r.value);
        CHECK(zero_forcing_number(g, min_degree(g)).witness == r.witness);
    }
}

TEST_CASE("closure properties on all graphs n <= 6") {
    std::mt19937_64 rng(1234);
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : all_graphs(n)) {
            for (int rep = 0; rep < 4; ++rep) {
                VertexSet z = random_subset(n, rng);
                auto c = closure(g, z);
                // idempotence
                CHECK(closure(g, c.set).set == c.set);
                // schedule produced by closure verifies
                CHECK(verify_schedule(g, c.schedule));
                // monotonicity against a random superset
                VertexSet z2 = z | random_subset(n, rng);
                CHECK(c.set.is_subset_of(closure(g, z2).set));
                // order independence of the fixpoint
                CHECK(closure_randomized(g, z, rng) == c.set);
            }
        }
    }
}

TEST_CASE("superset of a zero forcing set is zero forcing") {
    std::mt19937_64 rng(99);
    for (const Graph& g : all_connected(6)) {
        VertexSet w = zero_forcing_number(g).witness;
        VertexSet bigger = w | random_subset(g.n(), rng);
        CHECK(is_zero_forcing_set(g, bigger));
    }
}

TEST_CASE("Z(G) >= delta(G) on connected graphs n <= 6") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : all_connected(n))
            CHECK(zero_forcing_number(g).value >= min_degree(g));
}
