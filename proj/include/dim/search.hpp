#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "dim/coloring.hpp"
#include "dim/graph.hpp"
#include "dim/patterns.hpp"
#include "dim/stats.hpp"

namespace dim {

struct SearchStats {
    std::uint64_t nodes = 0;     // colorings taken off the pending stack
    std::uint64_t leaves = 0;    // nodes that did not bifurcate
    std::uint64_t max_stack = 0; // peak size of the pending stack
    RuleFirings firings;

    bool operator==(const SearchStats&) const = default;
};

// S, U and T of a stable coloring: the single black vertices, the
// uncolored vertices, and the uncolored vertices with no single
// neighbor (U minus the union of N_U(s) over s in S).
struct FrontierSets {
    std::vector<int> singles;
    std::vector<int> uncolored;
    std::vector<int> outside;
};

FrontierSets frontier(const Coloring& c);

// The selected bifurcation rule instance: one or two child seed
// assignments, explored in order. A child multiplier other than 1
// scales the count of every total valid coloring found below it.
struct BranchPlan {
    struct ChildSeed {
        int vertex;
        Color color;
        std::uint32_t multiplier;
    };

    Rule rule;
    std::vector<ChildSeed> children;
};

// First applicable rule in the order B1, B2, B3(a), B3(b)i, B3(b)ii,
// B3(b)iii, each scanned over the whole graph before the next.
// Requires a stable, non-total coloring.
BranchPlan select_bifurcation(const Coloring& c, const FrontierSets& f);

struct Solution {
    enum class Status { no_dim, found };

    Status status = Status::no_dim;
    double min_weight = 0.0;  // meaningful only when found
    std::vector<int> witness; // edge ids of one minimum-weight DIM
    mpz_class count = 0;      // number of distinct DIMs
    SearchStats stats;
    std::optional<std::array<int, 4>> k4; // set when the K4 check rejected the graph

    bool operator==(const Solution&) const = default;
};

// Depth-first branch and reduce over one connected graph: propagate,
// account total colorings (weight incumbent and exact count in a single
// pass), bifurcate stable ones, backtrack over the trail. Weights are
// used as given; the caller is responsible for normalization and for
// checking K4-freeness.
Solution solve_connected(const Graph& g, const PatternIndex& idx);

// Full pipeline: K4 short-circuit, weight normalization, component
// decomposition (components of at most 4 vertices go to the brute-force
// oracle), per-component search, recombination. min_weight is reported
// on the original weight scale and witness ids refer to g.
Solution solve(const Graph& g);

// The branching factor tau(t): unique positive root of
// 1 = sum_i x^(-t_i), rounded to 6 decimals. Requires at least two
// entries, all >= 1.
double branching_factor(const std::vector<int>& decreases);

} // namespace dim
