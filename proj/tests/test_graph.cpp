#include <doctest.h>

#include <algorithm>
#include <set>

#include "dim/graph.hpp"
#include "dim/oracle.hpp"

#include "helpers.hpp"

using namespace dim;
using testutil::make_graph;
using testutil::make_unit;
using testutil::parse;

TEST_CASE("parse_graph reads the edge-list format")
{
    Graph g = parse("p dim 2 1\ne 1 2 5.0\n");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.weight(0, 1) == 5.0);

    Graph k3 = parse("p dim 3 3\ne 1 2 1\ne 2 3 1\ne 1 3 1\n");
    CHECK(k3.edge_count() == 3);
    CHECK(k3.adjacent(0, 2));

    Graph commented = parse("c a comment\np dim 3 1\nc another\ne 1 3 -2.5\n");
    CHECK(commented.weight(0, 2) == -2.5);
}

TEST_CASE("parse_graph rejects malformed input with line numbers")
{
    CHECK_THROWS_WITH_AS(parse("p dim 2 2\ne 1 2 1\ne 1 2 2\n"),
                         doctest::Contains("duplicate edge"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse("p dim 2 1\ne 2 2 1\n"), doctest::Contains("self loop"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse("p dim 2 1\ne 1 3 1\n"), doctest::Contains("out of range"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse("p dim 2 1\ne 2 1 1\n"), doctest::Contains("u < v"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse("p dim 2 1\ne 1 x 1\n"), doctest::Contains("line 2"),
                         std::runtime_error);
    CHECK_THROWS_AS(parse("e 1 2 1\n"), std::runtime_error);
    CHECK_THROWS_AS(parse("p dim 3 2\ne 1 2 1\n"), std::runtime_error); // edge count mismatch
    CHECK_THROWS_AS(parse("q dim 2 0\n"), std::runtime_error);
}

TEST_CASE("write_graph round-trips through parse_graph")
{
    Graph g = make_graph(4, {{0, 1, 0.1}, {1, 2, -3.0}, {0, 3, 17.0}});
    Graph back = parse(write_graph(g));
    CHECK(back == g);
}

TEST_CASE("normalize_weights shifts by the most negative weight")
{
    Graph g = make_graph(3, {{0, 1, -3.0}, {1, 2, 2.0}, {0, 2, 0.0}});
    auto [norm, shift] = normalize_weights(g);
    CHECK(shift.amount == 3.0);
    CHECK(shift.applied);
    CHECK(norm.weight(0, 1) == 0.0);
    CHECK(norm.weight(1, 2) == 5.0);
    CHECK(norm.weight(0, 2) == 3.0);

    Graph pos = make_graph(2, {{0, 1, 1.0}});
    auto [norm2, shift2] = normalize_weights(pos);
    CHECK(shift2.amount == 0.0);
    CHECK(norm2.weight(0, 1) == 1.0);

    Graph single = make_graph(2, {{0, 1, -1.5}});
    auto [norm3, shift3] = normalize_weights(single);
    CHECK(shift3.amount == 1.5);
    CHECK(norm3.weight(0, 1) == 0.0);
}

TEST_CASE("unshift_weight maps optima back to the original scale")
{
    CHECK(unshift_weight(5.0, 1, {3.0, true}) == 2.0);
    CHECK(unshift_weight(7.0, 2, {0.0, true}) == 7.0);
    CHECK(unshift_weight(6.0, 2, {1.5, true}) == 3.0);
}

TEST_CASE("normalize then unshift recovers integer optima exactly")
{
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Graph g = testutil::random_int_weighted(8, 0.4, -5, 20, seed);
        OracleResult original = brute_force_solve(g);
        if (!original.found)
            continue;
        auto [norm, shift] = normalize_weights(g);
        OracleResult shifted = brute_force_solve(norm);
        REQUIRE(shifted.found);
        CHECK(unshift_weight(shifted.min_weight, static_cast<int>(shifted.witness.size()), shift)
              == original.min_weight);
    }
}

TEST_CASE("connected_components partitions the vertex set")
{
    Graph two_k2 = make_unit(4, {{0, 1}, {2, 3}});
    auto comps = connected_components(two_k2);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].graph.edge_count() == 1);
    CHECK(comps[1].graph.edge_count() == 1);
    CHECK(comps[0].to_original == std::vector<int>{0, 1});
    CHECK(comps[1].to_original == std::vector<int>{2, 3});

    CHECK(connected_components(testutil::path(4)).size() == 1);
    CHECK(connected_components(Graph(3)).size() == 3);

    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = testutil::random_int_weighted(8, 0.2, 1, 3, seed);
        auto cs = connected_components(g);
        std::set<int> seen;
        for (const auto& c : cs) {
            REQUIRE(c.graph.vertex_count() == static_cast<int>(c.to_original.size()));
            for (int v : c.to_original)
                CHECK(seen.insert(v).second);
        }
        CHECK(static_cast<int>(seen.size()) == g.vertex_count());
    }
}

TEST_CASE("contains_k4 finds an induced K4 witness")
{
    auto w = contains_k4(testutil::complete(4));
    REQUIRE(w.has_value());
    std::set<int> vs(w->begin(), w->end());
    CHECK(vs == std::set<int>{0, 1, 2, 3});

    CHECK(!contains_k4(testutil::cycle(4)).has_value());

    auto k5 = contains_k4(testutil::complete(5));
    REQUIRE(k5.has_value());
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            CHECK(testutil::complete(5).adjacent((*k5)[i], (*k5)[j]));

    // diamond: K4 minus one edge
    Graph diamond = make_unit(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(!contains_k4(diamond).has_value());
}

TEST_CASE("is_dim counts domination exactly once per edge")
{
    Graph k3 = testutil::complete(3);
    CHECK(is_dim(k3, {k3.edge_id(0, 1)}));

    Graph c4 = testutil::cycle(4);
    CHECK(!is_dim(c4, {c4.edge_id(0, 1)}));

    Graph p4 = testutil::path(4);
    CHECK(!is_dim(p4, {p4.edge_id(0, 1), p4.edge_id(2, 3)})); // middle edge dominated twice
    CHECK(is_dim(p4, {p4.edge_id(1, 2)}));

    CHECK(is_dim(Graph(3), {})); // edgeless: nothing to dominate
}
