#include "dim/report.hpp"

#include <algorithm>

namespace dim {

nlohmann::json RunReport::to_json() const
{
    nlohmann::json edge_list = nlohmann::json::array();
    for (auto [u, v] : edges)
        edge_list.push_back({u, v});
    nlohmann::json firing_map = nlohmann::json::object();
    for (const auto& [name, n] : rule_firings)
        firing_map[name] = n;
    return {
        {"input", input},
        {"status", found ? "found" : "no-dim"},
        {"weight", weight ? nlohmann::json(*weight) : nlohmann::json()},
        {"edges", edge_list},
        {"count", count},
        {"stats",
         {{"nodes", nodes},
          {"leaves", leaves},
          {"max_stack", max_stack},
          {"rule_firings", firing_map}}},
        {"wall_ms", wall_ms},
    };
}

RunReport RunReport::from_json(const nlohmann::json& j)
{
    RunReport r;
    r.input = j.at("input").get<std::string>();
    r.found = j.at("status").get<std::string>() == "found";
    if (!j.at("weight").is_null())
        r.weight = j.at("weight").get<double>();
    for (const auto& e : j.at("edges"))
        r.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    r.count = j.at("count").get<std::string>();
    const auto& st = j.at("stats");
    r.nodes = st.at("nodes").get<std::uint64_t>();
    r.leaves = st.at("leaves").get<std::uint64_t>();
    r.max_stack = st.at("max_stack").get<std::uint64_t>();
    for (const auto& [name, n] : st.at("rule_firings").items())
        r.rule_firings[name] = n.get<std::uint64_t>();
    r.wall_ms = j.at("wall_ms").get<double>();
    return r;
}

RunReport make_report(std::string input, const Graph& g, const Solution& s, double wall_ms)
{
    RunReport r;
    r.input = std::move(input);
    r.found = s.status == Solution::Status::found;
    if (r.found)
        r.weight = s.min_weight;
    for (int id : s.witness) {
        const Edge& e = g.edge(id);
        r.edges.emplace_back(e.u + 1, e.v + 1);
    }
    std::sort(r.edges.begin(), r.edges.end());
    r.count = s.count.get_str();
    r.nodes = s.stats.nodes;
    r.leaves = s.stats.leaves;
    r.max_stack = s.stats.max_stack;
    for (std::size_t i = 0; i < rule_count; ++i) {
        Rule rule = static_cast<Rule>(i);
        if (rule == Rule::seed)
            continue;
        r.rule_firings[std::string(rule_name(rule))] = s.stats.firings[rule];
    }
    r.wall_ms = wall_ms;
    return r;
}

} // namespace dim
