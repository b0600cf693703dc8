#include "dim/oracle.hpp"

#include <bit>
#include <stdexcept>

namespace dim {

namespace {

// Bitmask adjacency; valid for n <= 25 < 32.
std::vector<std::uint32_t> adjacency_masks(const Graph& g)
{
    std::vector<std::uint32_t> mask(g.vertex_count(), 0);
    for (const Edge& e : g.edges()) {
        mask[e.u] |= 1u << e.v;
        mask[e.v] |= 1u << e.u;
    }
    return mask;
}

bool valid_bipartition(const std::vector<std::uint32_t>& adj, int n, std::uint32_t black)
{
    for (int v = 0; v < n; ++v) {
        if (black & (1u << v)) {
            if (std::popcount(adj[v] & black) != 1)
                return false; // black vertex not paired exactly once
        } else {
            if (adj[v] & ~black)
                return false; // adjacent whites
        }
    }
    return true;
}

} // namespace

OracleResult brute_force_solve(const Graph& g)
{
    const int n = g.vertex_count();
    if (n > 25)
        throw std::invalid_argument("brute_force_solve: instance too large (n > 25)");
    auto adj = adjacency_masks(g);

    OracleResult r;
    for (std::uint64_t black = 0; black < (1ull << n); ++black) {
        if (!valid_bipartition(adj, n, static_cast<std::uint32_t>(black)))
            continue;
        double weight = 0.0;
        std::vector<int> edges;
        for (int id = 0; id < g.edge_count(); ++id) {
            const Edge& e = g.edge(id);
            if ((black & (1ull << e.u)) && (black & (1ull << e.v))) {
                weight += e.weight;
                edges.push_back(id);
            }
        }
        if (!r.found || weight < r.min_weight) {
            r.min_weight = weight;
            r.witness = std::move(edges);
        }
        r.found = true;
        ++r.count;
    }
    return r;
}

std::vector<std::vector<int>> enumerate_dims(const Graph& g, std::size_t cap, bool* truncated)
{
    const int n = g.vertex_count();
    if (n > 20)
        throw std::invalid_argument("enumerate_dims: instance too large (n > 20)");
    auto adj = adjacency_masks(g);

    if (truncated)
        *truncated = false;
    std::vector<std::vector<int>> out;
    for (std::uint64_t black = 0; black < (1ull << n); ++black) {
        if (!valid_bipartition(adj, n, static_cast<std::uint32_t>(black)))
            continue;
        if (out.size() == cap) {
            if (truncated)
                *truncated = true;
            break;
        }
        std::vector<int> edges;
        for (int id = 0; id < g.edge_count(); ++id) {
            const Edge& e = g.edge(id);
            if ((black & (1ull << e.u)) && (black & (1ull << e.v)))
                edges.push_back(id);
        }
        out.push_back(std::move(edges));
    }
    return out;
}

} // namespace dim
