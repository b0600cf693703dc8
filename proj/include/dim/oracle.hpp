#pragma once

#include <cstdint>
#include <vector>

#include "dim/graph.hpp"

namespace dim {

struct OracleResult {
    bool found = false;
    double min_weight = 0.0;
    std::uint64_t count = 0;
    std::vector<int> witness; // edge ids of one minimum-weight DIM
};

// Ground truth by definition: iterates all 2^n black/white bipartitions
// and keeps those where the whites are independent and every black
// vertex has exactly one black neighbor. Deliberately ignorant of the
// propagation, bifurcation and pattern machinery. Throws
// std::invalid_argument when n > 25.
OracleResult brute_force_solve(const Graph& g);

// All DIMs as edge-id sets, truncated at cap. Throws when n > 20.
std::vector<std::vector<int>> enumerate_dims(const Graph& g, std::size_t cap,
                                             bool* truncated = nullptr);

} // namespace dim
