#include "dim/graph.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace dim {

namespace {

std::uint64_t pair_key(int u, int v)
{
    if (u > v)
        std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

} // namespace

Graph::Graph(int n) : n_(n), adj_(n)
{
    if (n < 0)
        throw std::invalid_argument("graph: negative vertex count");
}

int Graph::add_edge(int u, int v, double weight)
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("graph: endpoint out of range");
    if (u == v)
        throw std::invalid_argument("graph: self loop");
    if (u > v)
        std::swap(u, v);
    auto [it, fresh] = index_.try_emplace(pair_key(u, v), edge_count());
    if (!fresh)
        throw std::invalid_argument("graph: duplicate edge");
    edges_.push_back({u, v, weight});
    auto& au = adj_[u];
    au.insert(std::lower_bound(au.begin(), au.end(), v), v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    return edge_count() - 1;
}

int Graph::edge_id(int u, int v) const
{
    auto it = index_.find(pair_key(u, v));
    return it == index_.end() ? -1 : it->second;
}

double Graph::weight(int u, int v) const
{
    int id = edge_id(u, v);
    assert(id >= 0);
    return edges_[id].weight;
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what)
{
    throw std::runtime_error("line " + std::to_string(line) + ": " + what);
}

} // namespace

Graph parse_graph(std::istream& in)
{
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    int seen = 0;
    Graph g;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag))
            continue; // blank line
        if (tag == "c")
            continue;
        if (tag == "p") {
            if (n >= 0)
                parse_fail(lineno, "duplicate problem line");
            std::string kind;
            if (!(ls >> kind >> n >> m) || kind != "dim" || n < 0 || m < 0)
                parse_fail(lineno, "malformed problem line, expected 'p dim <n> <m>'");
            std::string rest;
            if (ls >> rest)
                parse_fail(lineno, "trailing tokens after problem line");
            g = Graph(n);
            continue;
        }
        if (tag == "e") {
            if (n < 0)
                parse_fail(lineno, "edge before problem line");
            int u, v;
            double w;
            if (!(ls >> u >> v >> w))
                parse_fail(lineno, "malformed edge line, expected 'e <u> <v> <w>'");
            std::string rest;
            if (ls >> rest)
                parse_fail(lineno, "trailing tokens after edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                parse_fail(lineno, "vertex id out of range");
            if (u == v)
                parse_fail(lineno, "self loop");
            if (u > v)
                parse_fail(lineno, "endpoints must satisfy u < v");
            if (!std::isfinite(w))
                parse_fail(lineno, "weight is not finite");
            if (g.edge_id(u - 1, v - 1) >= 0)
                parse_fail(lineno, "duplicate edge");
            g.add_edge(u - 1, v - 1, w);
            ++seen;
            continue;
        }
        parse_fail(lineno, "unknown line tag '" + tag + "'");
    }
    if (n < 0)
        throw std::runtime_error("missing problem line 'p dim <n> <m>'");
    if (seen != m)
        throw std::runtime_error("declared " + std::to_string(m) + " edges but found " + std::to_string(seen));
    return g;
}

Graph load_graph(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    return parse_graph(in);
}

std::string format_weight(double w)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, w);
    return std::string(buf, res.ptr);
}

std::string write_graph(const Graph& g)
{
    std::string out = "p dim " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const Edge& e : g.edges()) {
        out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + " " + format_weight(e.weight) + "\n";
    }
    return out;
}

std::pair<Graph, WeightShift> normalize_weights(const Graph& g)
{
    double lowest = 0.0;
    for (const Edge& e : g.edges())
        lowest = std::min(lowest, e.weight);
    WeightShift shift{-lowest, true};
    Graph out = g;
    if (shift.amount > 0)
        for (int id = 0; id < out.edge_count(); ++id)
            out.set_weight(id, out.weight_of(id) + shift.amount);
    return {std::move(out), shift};
}

double unshift_weight(double shifted_opt, int dim_edge_cardinality, const WeightShift& shift)
{
    return shifted_opt - shift.amount * dim_edge_cardinality;
}

std::vector<Component> connected_components(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<Component> out;
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
        if (comp[root] >= 0)
            continue;
        int id = static_cast<int>(out.size());
        out.push_back({});
        std::vector<int>& members = out.back().to_original;
        comp[root] = id;
        stack.push_back(root);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int u : g.neighbors(v)) {
                if (comp[u] < 0) {
                    comp[u] = id;
                    stack.push_back(u);
                }
            }
        }
        std::sort(members.begin(), members.end());
    }
    // local ids follow the sorted original ids
    std::vector<int> local(n, -1);
    for (Component& c : out)
        for (int i = 0; i < static_cast<int>(c.to_original.size()); ++i)
            local[c.to_original[i]] = i;
    for (Component& c : out)
        c.graph = Graph(static_cast<int>(c.to_original.size()));
    for (const Edge& e : g.edges())
        out[comp[e.u]].graph.add_edge(local[e.u], local[e.v], e.weight);
    return out;
}

std::optional<std::array<int, 4>> contains_k4(const Graph& g)
{
    // For each edge, look for an adjacent pair among the common neighbors.
    std::vector<int> common;
    for (const Edge& e : g.edges()) {
        common.clear();
        const auto& a = g.neighbors(e.u);
        const auto& b = g.neighbors(e.v);
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        for (std::size_t i = 0; i < common.size(); ++i)
            for (std::size_t j = i + 1; j < common.size(); ++j)
                if (g.adjacent(common[i], common[j]))
                    return std::array<int, 4>{e.u, e.v, common[i], common[j]};
    }
    return std::nullopt;
}

bool is_dim(const Graph& g, const std::vector<int>& edge_ids)
{
    for (int id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        int dominators = 0;
        for (int f : edge_ids) {
            const Edge& d = g.edge(f);
            if (d.u == e.u || d.u == e.v || d.v == e.u || d.v == e.v)
                ++dominators;
        }
        if (dominators != 1)
            return false;
    }
    return true;
}

} // namespace dim
