#pragma once

#include <initializer_list>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "dim/gen.hpp"
#include "dim/graph.hpp"

namespace testutil {

inline dim::Graph make_graph(int n, std::initializer_list<std::tuple<int, int, double>> edges)
{
    dim::Graph g(n);
    for (auto [u, v, w] : edges)
        g.add_edge(u, v, w);
    return g;
}

inline dim::Graph make_unit(int n, std::initializer_list<std::pair<int, int>> edges)
{
    dim::Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v, 1.0);
    return g;
}

inline dim::Graph parse(const std::string& text)
{
    std::istringstream in(text);
    return dim::parse_graph(in);
}

inline dim::Graph path(int n, double w = 1.0)
{
    dim::Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1, w);
    return g;
}

inline dim::Graph cycle(int n, double w = 1.0)
{
    dim::Graph g = path(n, w);
    g.add_edge(0, n - 1, w);
    return g;
}

inline dim::Graph complete(int n, double w = 1.0)
{
    dim::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v, w);
    return g;
}

// Every labeled graph on n vertices, one per edge-subset mask.
inline dim::Graph from_mask(int n, std::uint64_t mask)
{
    dim::Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask & (1ull << bit))
                g.add_edge(u, v, 1.0);
    return g;
}

inline bool connected(const dim::Graph& g)
{
    return dim::connected_components(g).size() <= 1;
}

// Random graph with integer weights drawn from [wlo, whi].
inline dim::Graph random_int_weighted(int n, double p, int wlo, int whi, std::uint64_t seed)
{
    dim::SplitMix64 rng(seed);
    dim::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_unit() < p) {
                int w = wlo + static_cast<int>(rng.next() % static_cast<std::uint64_t>(whi - wlo + 1));
                g.add_edge(u, v, static_cast<double>(w));
            }
    return g;
}

} // namespace testutil
