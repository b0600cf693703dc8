#pragma once

#include <array>
#include <vector>

#include "dim/graph.hpp"

namespace dim {

// Two triangles sharing an edge. The hubs are the shared-edge endpoints
// (degree 3 within the pattern), the tips the other two vertices
// (degree 2, mutually non-adjacent).
struct Diamond {
    std::array<int, 2> hubs;
    std::array<int, 2> tips;
};

// Triangle plus one pendant edge. `attach` is the triangle vertex the
// pendant hangs off; attach and pendant are the two odd-degree vertices
// of the pattern.
struct Paw {
    std::array<int, 3> triangle; // sorted
    int attach;
    int pendant;
};

// Induced 4-cycle, vertices in cyclic order.
struct CycleFour {
    std::array<int, 4> cycle;
};

// All induced diamonds, paws and C4s of a graph, plus per-vertex
// membership lists (indices into the pattern vectors). Built once per
// graph; immutable afterwards.
struct PatternIndex {
    std::vector<Diamond> diamonds;
    std::vector<Paw> paws;
    std::vector<CycleFour> c4s;

    std::vector<std::vector<int>> diamond_membership;
    std::vector<std::vector<int>> paw_membership;
    std::vector<std::vector<int>> c4_membership;
};

// Bounded enumeration: edges x common-neighbor pairs for diamonds and
// paws, non-adjacent vertex pairs x common-neighbor pairs for C4s.
// Every stored tuple induces exactly the claimed pattern and each
// pattern appears once.
PatternIndex build_pattern_index(const Graph& g);

} // namespace dim
