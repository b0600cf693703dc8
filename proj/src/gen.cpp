#include "dim/gen.hpp"

#include <stdexcept>

namespace dim {

Graph random_graph(int n, double p, double wmin, double wmax, std::uint64_t seed)
{
    if (n < 0)
        throw std::invalid_argument("random_graph: negative vertex count");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("random_graph: edge probability outside [0, 1]");
    if (!(wmin <= wmax))
        throw std::invalid_argument("random_graph: wmin > wmax");

    SplitMix64 rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.next_unit() >= p)
                continue;
            double w = wmin == wmax ? wmin : wmin + rng.next_unit() * (wmax - wmin);
            g.add_edge(u, v, w);
        }
    }
    return g;
}

} // namespace dim
