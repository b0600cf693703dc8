#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>
#include <tuple>

#include "dim/patterns.hpp"

#include "helpers.hpp"

using namespace dim;
using testutil::make_unit;

namespace {

// Independent classification of all 4-subsets by induced degree
// multiset: diamond = 5 edges, paw = 4 edges with degrees {1,2,2,3},
// C4 = 4 edges with degrees {2,2,2,2}.
struct Classified {
    std::set<std::tuple<std::set<int>, std::set<int>>> diamonds; // hubs, tips
    std::set<std::tuple<std::set<int>, int>> paws;               // triangle, pendant
    std::set<std::set<int>> c4s;                                 // vertex set (determines the cycle)
};

Classified classify_four_subsets(const Graph& g)
{
    Classified out;
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    std::array<int, 4> vs{a, b, c, d};
                    int edges = 0;
                    std::array<int, 4> deg{};
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.adjacent(vs[i], vs[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                    std::array<int, 4> sorted = deg;
                    std::sort(sorted.begin(), sorted.end());
                    if (edges == 5) {
                        std::set<int> hubs, tips;
                        for (int i = 0; i < 4; ++i)
                            (deg[i] == 3 ? hubs : tips).insert(vs[i]);
                        out.diamonds.insert({hubs, tips});
                    } else if (edges == 4 && sorted == std::array<int, 4>{1, 2, 2, 3}) {
                        std::set<int> tri;
                        int pendant = -1;
                        for (int i = 0; i < 4; ++i)
                            if (deg[i] == 1)
                                pendant = vs[i];
                            else
                                tri.insert(vs[i]);
                        out.paws.insert({tri, pendant});
                    } else if (edges == 4 && sorted == std::array<int, 4>{2, 2, 2, 2}) {
                        out.c4s.insert({a, b, c, d});
                    }
                }
    return out;
}

Classified from_index(const PatternIndex& idx)
{
    Classified out;
    for (const Diamond& d : idx.diamonds)
        out.diamonds.insert({{d.hubs.begin(), d.hubs.end()}, {d.tips.begin(), d.tips.end()}});
    for (const Paw& p : idx.paws)
        out.paws.insert({{p.triangle.begin(), p.triangle.end()}, p.pendant});
    for (const CycleFour& c : idx.c4s)
        out.c4s.insert({c.cycle.begin(), c.cycle.end()});
    return out;
}

} // namespace

TEST_CASE("pattern index on the canonical small graphs")
{
    Graph diamond = make_unit(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    PatternIndex idx = build_pattern_index(diamond);
    REQUIRE(idx.diamonds.size() == 1);
    CHECK(idx.diamonds[0].hubs == std::array<int, 2>{0, 1});
    CHECK(idx.diamonds[0].tips == std::array<int, 2>{2, 3});
    CHECK(idx.paws.empty());
    CHECK(idx.c4s.empty());

    PatternIndex c4 = build_pattern_index(testutil::cycle(4));
    CHECK(c4.diamonds.empty());
    CHECK(c4.paws.empty());
    REQUIRE(c4.c4s.size() == 1);
    // cyclic order must alternate around the cycle 0-1-2-3
    const auto& cyc = c4.c4s[0].cycle;
    Graph g = testutil::cycle(4);
    for (int k = 0; k < 4; ++k)
        CHECK(g.adjacent(cyc[k], cyc[(k + 1) % 4]));

    Graph paw = make_unit(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    PatternIndex pidx = build_pattern_index(paw);
    REQUIRE(pidx.paws.size() == 1);
    CHECK(pidx.paws[0].triangle == std::array<int, 3>{0, 1, 2});
    CHECK(pidx.paws[0].attach == 0);
    CHECK(pidx.paws[0].pendant == 3);
    CHECK(pidx.diamonds.empty());
    CHECK(pidx.c4s.empty());

    // K4 induces none of the three patterns
    PatternIndex k4 = build_pattern_index(testutil::complete(4));
    CHECK(k4.diamonds.empty());
    CHECK(k4.paws.empty());
    CHECK(k4.c4s.empty());
}

TEST_CASE("pattern index matches exhaustive 4-subset classification")
{
    for (int n = 4; n <= 8; ++n) {
        for (std::uint64_t seed = 1; seed <= 40; ++seed) {
            double p = 0.25 + 0.15 * static_cast<double>(seed % 4);
            Graph g = testutil::random_int_weighted(n, p, 1, 1, seed * 977 + n);
            Classified expected = classify_four_subsets(g);
            Classified got = from_index(build_pattern_index(g));
            CHECK(got.diamonds == expected.diamonds);
            CHECK(got.paws == expected.paws);
            CHECK(got.c4s == expected.c4s);
        }
    }
}

TEST_CASE("membership lists point back to patterns containing the vertex")
{
    Graph g = testutil::random_int_weighted(9, 0.45, 1, 1, 4242);
    PatternIndex idx = build_pattern_index(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int i : idx.diamond_membership[v]) {
            const Diamond& d = idx.diamonds[i];
            bool member = d.hubs[0] == v || d.hubs[1] == v || d.tips[0] == v || d.tips[1] == v;
            CHECK(member);
        }
        for (int i : idx.paw_membership[v]) {
            const Paw& p = idx.paws[i];
            bool member = p.pendant == v
                || std::find(p.triangle.begin(), p.triangle.end(), v) != p.triangle.end();
            CHECK(member);
        }
        for (int i : idx.c4_membership[v]) {
            const auto& cyc = idx.c4s[i].cycle;
            CHECK(std::find(cyc.begin(), cyc.end(), v) != cyc.end());
        }
        // duplicate-free
        auto uniq = [](std::vector<int> xs) {
            std::sort(xs.begin(), xs.end());
            return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
        };
        CHECK(uniq(idx.diamond_membership[v]));
        CHECK(uniq(idx.paw_membership[v]));
        CHECK(uniq(idx.c4_membership[v]));
    }
}
