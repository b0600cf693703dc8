#include "dim/patterns.hpp"

#include <algorithm>

namespace dim {

namespace {

std::vector<int> common_neighbors(const Graph& g, int u, int v)
{
    std::vector<int> out;
    const auto& a = g.neighbors(u);
    const auto& b = g.neighbors(v);
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace

PatternIndex build_pattern_index(const Graph& g)
{
    const int n = g.vertex_count();
    PatternIndex idx;
    idx.diamond_membership.resize(n);
    idx.paw_membership.resize(n);
    idx.c4_membership.resize(n);

    for (const Edge& e : g.edges()) {
        std::vector<int> common = common_neighbors(g, e.u, e.v);

        // Diamonds with hub edge uv: two common neighbors that are not
        // adjacent to each other. Each diamond has a unique hub edge, so
        // this enumerates every diamond exactly once.
        for (std::size_t i = 0; i < common.size(); ++i)
            for (std::size_t j = i + 1; j < common.size(); ++j)
                if (!g.adjacent(common[i], common[j]))
                    idx.diamonds.push_back({{e.u, e.v}, {common[i], common[j]}});

        // Triangles in canonical order u < v < w; from each, paws with
        // pendants hanging off exactly one triangle vertex.
        for (int w : common) {
            if (w <= e.v)
                continue;
            const std::array<int, 3> tri{e.u, e.v, w};
            for (int a : tri) {
                for (int x : g.neighbors(a)) {
                    if (x == tri[0] || x == tri[1] || x == tri[2])
                        continue;
                    bool induced = true;
                    for (int b : tri)
                        if (b != a && g.adjacent(x, b))
                            induced = false;
                    if (induced)
                        idx.paws.push_back({tri, a, x});
                }
            }
        }
    }

    // Induced C4s from their diagonal containing the cycle-minimum
    // vertex: non-adjacent u < w with two non-adjacent common neighbors
    // x < y, keeping only u < x (so each C4 appears once).
    for (int u = 0; u < n; ++u) {
        for (int w = u + 1; w < n; ++w) {
            if (g.adjacent(u, w))
                continue;
            std::vector<int> common = common_neighbors(g, u, w);
            for (std::size_t i = 0; i < common.size(); ++i) {
                if (common[i] < u)
                    continue;
                for (std::size_t j = i + 1; j < common.size(); ++j)
                    if (!g.adjacent(common[i], common[j]))
                        idx.c4s.push_back({{u, common[i], w, common[j]}});
            }
        }
    }

    for (int i = 0; i < static_cast<int>(idx.diamonds.size()); ++i) {
        const Diamond& d = idx.diamonds[i];
        for (int v : d.hubs)
            idx.diamond_membership[v].push_back(i);
        for (int v : d.tips)
            idx.diamond_membership[v].push_back(i);
    }
    for (int i = 0; i < static_cast<int>(idx.paws.size()); ++i) {
        const Paw& p = idx.paws[i];
        for (int v : p.triangle)
            idx.paw_membership[v].push_back(i);
        idx.paw_membership[p.pendant].push_back(i);
    }
    for (int i = 0; i < static_cast<int>(idx.c4s.size()); ++i)
        for (int v : idx.c4s[i].cycle)
            idx.c4_membership[v].push_back(i);

    return idx;
}

} // namespace dim
