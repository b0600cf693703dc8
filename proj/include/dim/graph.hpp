#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dim {

// One undirected edge; endpoints are stored with u < v.
struct Edge {
    int u;
    int v;
    double weight;

    bool operator==(const Edge&) const = default;
};

// Simple undirected graph with real edge weights. Vertices are
// 0-based internally; the file format uses 1-based ids. Construction is
// single-owner; once built the graph is treated as immutable and may be
// shared across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    // Throws std::invalid_argument on self loops, duplicate edges or
    // out-of-range endpoints. Returns the new edge id.
    int add_edge(int u, int v, double weight);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Sorted ascending.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const { return edge_id(u, v) >= 0; }

    // -1 when uv is not an edge.
    int edge_id(int u, int v) const;
    const Edge& edge(int id) const { return edges_[id]; }
    const std::vector<Edge>& edges() const { return edges_; }
    double weight(int u, int v) const;
    double weight_of(int edge_id) const { return edges_[edge_id].weight; }

    void set_weight(int edge_id, double w) { edges_[edge_id].weight = w; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
    std::unordered_map<std::uint64_t, int> index_;
};

// Reads the edge-list format: optional "c ..." comment lines, one
// "p dim <n> <m>" header, then m lines "e <u> <v> <w>" with
// 1 <= u < v <= n. Throws std::runtime_error with the offending line
// number on malformed input, self loops, duplicate edges or ids out of
// range.
Graph parse_graph(std::istream& in);
Graph load_graph(const std::string& path);

// Serializes in the same format; parse_graph(write_graph(g)) == g.
std::string write_graph(const Graph& g);

// Shortest decimal form of w that parses back to the same double.
std::string format_weight(double w);

// Uniform additive shift that makes all edge weights nonnegative.
struct WeightShift {
    double amount = 0.0;
    bool applied = false;
};

// Returns a copy of g with `amount` added to every edge weight, where
// amount = max(0, -min original weight).
std::pair<Graph, WeightShift> normalize_weights(const Graph& g);

// Maps an optimum computed on shifted weights back to the original
// scale. All DIMs of a graph have the same number of edges, so the
// shift contributes exactly amount * edge_cardinality.
double unshift_weight(double shifted_opt, int dim_edge_cardinality, const WeightShift& shift);

struct Component {
    Graph graph;
    std::vector<int> to_original; // local vertex id -> id in the parent graph
};

std::vector<Component> connected_components(const Graph& g);

// Vertex quadruple inducing a K4, if any.
std::optional<std::array<int, 4>> contains_k4(const Graph& g);

// True iff every edge of g is dominated by exactly one member of
// edge_ids (an edge dominates itself and every edge sharing an
// endpoint).
bool is_dim(const Graph& g, const std::vector<int>& edge_ids);

} // namespace dim
