#include <random>

#include "doctest.h"
#include "gbp/errors.hpp"
#include "gbp/heuristics.hpp"
#include "gbp/ingest.hpp"
#include "gbp/oracle.hpp"
#include "generators.hpp"

using namespace gbp;

TEST_CASE("bff-d on a single vertex") {
    Graph g = testgen::from_edges(1, {});
    DistanceCache cache;
    BurningSequence s = farthest_first_sequence(g, cache);
    CHECK(s == BurningSequence{0});
    CHECK(cache.bfs_runs() <= 1);
}

TEST_CASE("bff-d burns a complete graph in two rounds") {
    Graph g = testgen::complete(5);
    DistanceCache cache;
    CHECK(farthest_first_sequence(g, cache).size() == 2);
}

TEST_CASE("bff-d on karate stays within the published bound window") {
    Instance inst = parse_instance_file(testgen::fixture_path("karate.mtx"));
    DistanceCache cache;
    BurningSequence s = farthest_first_sequence(inst.graph, cache);
    Bounds b = bounds_from_sequence(s);
    CHECK(b.lower == 2);
    CHECK(s.size() >= 3);
    CHECK(s.size() <= 4);
    CHECK(cache.bfs_runs() <= static_cast<int64_t>(s.size()));
    CHECK_FALSE(validate_sequence(inst.graph, s, cache).has_value());
}

TEST_CASE("bff-d output is always a burning sequence, within the ratio bound") {
    auto suite = testgen::oracle_suite(2);
    for (const Graph& g : suite) {
        DistanceCache cache;
        BurningSequence s = farthest_first_sequence(g, cache);
        CHECK_FALSE(validate_sequence(g, s, cache).has_value());
        CHECK(cache.bfs_runs() <= static_cast<int64_t>(s.size()));

        const auto opt = oracle::brute_force_burning_number(g).burning_number;
        Bounds b = bounds_from_sequence(s);
        CHECK(static_cast<int32_t>(s.size()) <= 3 * opt - 2);
        CHECK(b.lower <= opt);
        CHECK(opt <= b.upper);
    }
}

TEST_CASE("bff-d is deterministic for a fixed seed and honors tie seeds") {
    std::mt19937 rng(47);
    Graph g = testgen::erdos_renyi(20, 0.2, rng);
    DistanceCache c1, c2;
    CHECK(farthest_first_sequence(g, c1, 5) == farthest_first_sequence(g, c2, 5));

    // On a cycle every vertex ties for max degree, so the seed picks v1.
    Graph cyc = testgen::cycle(7);
    for (uint32_t seed = 0; seed < 7; ++seed) {
        DistanceCache cache;
        CHECK(farthest_first_sequence(cyc, cache, seed).front() == static_cast<Vertex>(seed));
    }
}

TEST_CASE("bff-d jumps across components") {
    // Two far-apart paths; the heuristic must place sources in both.
    Graph g = testgen::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}});
    DistanceCache cache;
    BurningSequence s = farthest_first_sequence(g, cache);
    bool left = false, right = false;
    for (Vertex v : s) (v <= 3 ? left : right) = true;
    CHECK(left);
    CHECK(right);
    CHECK_FALSE(validate_sequence(g, s, cache).has_value());
}

TEST_CASE("bound arithmetic from the approximation ratio") {
    CHECK(bounds_from_sequence(BurningSequence(4, 0)).lower == 2);
    CHECK(bounds_from_sequence(BurningSequence(4, 0)).upper == 4);
    CHECK(bounds_from_sequence(BurningSequence(1, 0)).lower == 1);
    CHECK(bounds_from_sequence(BurningSequence(1, 0)).upper == 1);
    CHECK(bounds_from_sequence(BurningSequence(7, 0)).lower == 3);
    CHECK(bounds_from_sequence(BurningSequence(7, 0)).upper == 7);
}

TEST_CASE("validate_sequence accepts and rejects hand-checked sequences") {
    DistanceCache cache;
    Graph p4 = testgen::path(4);
    CHECK_FALSE(validate_sequence(p4, {1, 3}, cache).has_value());

    DistanceCache cache5;
    Graph p5 = testgen::path(5);
    auto bad = validate_sequence(p5, {2, 4}, cache5);
    REQUIRE(bad.has_value());
    CHECK(bad->vertex == 0);
    CHECK(bad->deficit == 1);
}

TEST_CASE("validate_sequence rejects malformed sequences") {
    Graph g = testgen::path(4);
    DistanceCache cache;
    CHECK_THROWS_AS(validate_sequence(g, {1, 1}, cache), MalformedSequenceError);
    CHECK_THROWS_AS(validate_sequence(g, {1, 9}, cache), MalformedSequenceError);
    CHECK_THROWS_AS(validate_sequence(g, {}, cache), MalformedSequenceError);
}

TEST_CASE("validate_sequence flags stranded components as unreachable") {
    Graph g = testgen::from_edges(4, {{0, 1}, {2, 3}});
    DistanceCache cache;
    auto res = validate_sequence(g, {0, 1}, cache);
    REQUIRE(res.has_value());
    CHECK(res->vertex == 2);
    CHECK(res->deficit == kUnreachable);
}

TEST_CASE("component-based upper bound formula and validity") {
    CHECK(component_upper_bound(testgen::from_edges(1, {})) == 3);
    CHECK(component_upper_bound(testgen::from_edges(4, {{0, 1}, {2, 3}})) == 6);

    Instance karate = parse_instance_file(testgen::fixture_path("karate.mtx"));
    CHECK(component_upper_bound(karate.graph) == 8);

    auto suite = testgen::oracle_suite(2);
    for (const Graph& g : suite) {
        if (g.vertex_count() == 0) continue;
        CHECK(component_upper_bound(g) >= oracle::brute_force_burning_number(g).burning_number);
    }
}

TEST_CASE("conjectured bound is reported but holds on the small suite") {
    CHECK(conjectured_upper_bound(testgen::from_edges(4, {{0, 1}, {2, 3}})) == 4);
    auto suite = testgen::oracle_suite(1);
    for (const Graph& g : suite) {
        if (g.vertex_count() == 0) continue;
        CHECK(conjectured_upper_bound(g) >= oracle::brute_force_burning_number(g).burning_number);
    }
}
