#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dim/graph.hpp"
#include "dim/search.hpp"

namespace dim {

// Machine-readable result of one run. Serializes to
//   {input, status, weight, edges, count,
//    stats: {nodes, leaves, max_stack, rule_firings}, wall_ms}
// with 1-based edge endpoints, the count as a decimal string and
// weight null when no DIM exists.
struct RunReport {
    std::string input;
    bool found = false;
    std::optional<double> weight;
    std::vector<std::pair<int, int>> edges;
    std::string count = "0";
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;
    std::uint64_t max_stack = 0;
    std::map<std::string, std::uint64_t> rule_firings;
    double wall_ms = 0.0;

    nlohmann::json to_json() const;
    static RunReport from_json(const nlohmann::json& j);

    bool operator==(const RunReport&) const = default;
};

RunReport make_report(std::string input, const Graph& g, const Solution& s, double wall_ms);

} // namespace dim
