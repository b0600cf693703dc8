#include "dim/search.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dim/oracle.hpp"

namespace dim {

FrontierSets frontier(const Coloring& c)
{
    const Graph& g = c.graph();
    FrontierSets f;
    f.singles.assign(c.singles().begin(), c.singles().end());
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (c.color(v) != Color::uncolored)
            continue;
        f.uncolored.push_back(v);
        bool near_single = false;
        for (int u : g.neighbors(v))
            if (c.is_single(u)) {
                near_single = true;
                break;
            }
        if (!near_single)
            f.outside.push_back(v);
    }
    return f;
}

namespace {

std::vector<int> uncolored_neighbors_of(const Coloring& c, int v)
{
    std::vector<int> out;
    for (int u : c.graph().neighbors(v))
        if (c.color(u) == Color::uncolored)
            out.push_back(u);
    return out;
}

int union_size(const Graph& g, int w, int w2)
{
    const auto& a = g.neighbors(w);
    const auto& b = g.neighbors(w2);
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    return static_cast<int>(a.size() + b.size() - common.size());
}

int first_common_neighbor(const Graph& g, int w, int w2)
{
    const auto& a = g.neighbors(w);
    const auto& b = g.neighbors(w2);
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    return common.empty() ? -1 : common[0];
}

BranchPlan black_or_white(Rule rule, int v)
{
    return {rule, {{v, Color::black, 1}, {v, Color::white, 1}}};
}

struct BCandidate {
    int s;
    int v;
    int w; // sole T-neighbor of v, d(w) == 3
};

} // namespace

BranchPlan select_bifurcation(const Coloring& c, const FrontierSets& f)
{
    const Graph& g = c.graph();

    // B1: empty coloring, pivot on a max-degree vertex.
    if (c.trail_size() == 0) {
        int pivot = 0;
        for (int v = 1; v < g.vertex_count(); ++v)
            if (g.degree(v) > g.degree(pivot))
                pivot = v;
        return black_or_white(Rule::b1, pivot);
    }

    assert(!f.singles.empty() && "stable non-total coloring of a connected graph must have a single");

    // B2: an edge between the uncolored neighborhoods of two distinct
    // singles.
    for (int s : f.singles) {
        for (int v : g.neighbors(s)) {
            if (c.color(v) != Color::uncolored)
                continue;
            for (int w : g.neighbors(v)) {
                if (c.color(w) != Color::uncolored)
                    continue;
                for (int s2 : g.neighbors(w)) {
                    if (s2 != s && c.is_single(s2))
                        return black_or_white(Rule::b2, v);
                }
            }
        }
    }

    std::vector<char> in_t(g.vertex_count(), 0);
    for (int v : f.outside)
        in_t[v] = 1;
    auto t_neighbors = [&](int v) {
        std::vector<int> out;
        for (int u : g.neighbors(v))
            if (in_t[u])
                out.push_back(u);
        return out;
    };

    // B3(a) over the whole graph first; (s, v) pairs that fail its
    // guard are the B3(b) candidates.
    std::vector<BCandidate> b_candidates;
    for (int s : f.singles) {
        std::vector<int> nu = uncolored_neighbors_of(c, s);
        for (int v : nu) {
            std::vector<int> nt = t_neighbors(v);
            if (nt.empty())
                continue;
            int w = nt[0];
            if (static_cast<int>(nu.size()) != 3 || static_cast<int>(nt.size()) >= 2
                || g.degree(w) != 3)
                return black_or_white(Rule::b3a, v);
            b_candidates.push_back({s, v, w});
        }
    }

    // B3(b)i
    for (const BCandidate& bc : b_candidates) {
        std::vector<int> nu = uncolored_neighbors_of(c, bc.s);
        bool all_isolated = true;
        for (int o : nu) {
            if (o == bc.v)
                continue;
            if (!uncolored_neighbors_of(c, o).empty())
                all_isolated = false;
        }
        if (all_isolated)
            return black_or_white(Rule::b3b_i, bc.v);
    }

    // B3(b)ii
    for (const BCandidate& bc : b_candidates) {
        std::vector<int> nu = uncolored_neighbors_of(c, bc.s);
        for (int o : nu) {
            if (o == bc.v)
                continue;
            for (int w2 : t_neighbors(o)) {
                if (w2 == bc.w)
                    continue;
                if (union_size(g, bc.w, w2) > 5 || !g.adjacent(bc.w, w2))
                    return black_or_white(Rule::b3b_ii, bc.v);
            }
        }
    }

    // B3(b)iii: children are forced pair choices rather than a
    // black/white split; the second child accounts for two
    // equinumerous pair choices, hence its count multiplier of 2.
    for (const BCandidate& bc : b_candidates) {
        std::vector<int> nu = uncolored_neighbors_of(c, bc.s);
        for (int o : nu) {
            if (o == bc.v)
                continue;
            for (int w2 : t_neighbors(o)) {
                if (w2 == bc.w || !g.adjacent(bc.w, w2))
                    continue;
                int z = first_common_neighbor(g, bc.w, w2);
                if (z < 0)
                    continue;
                int v2 = -1; // the third neighbor, besides v and o
                for (int x : nu)
                    if (x != bc.v && x != o)
                        v2 = x;
                assert(v2 >= 0);
                double keep_v = g.weight(bc.s, bc.v) + g.weight(w2, z);
                double keep_o = g.weight(bc.s, o) + g.weight(bc.w, z);
                int second = keep_v <= keep_o ? bc.v : o;
                return {Rule::b3b_iii,
                        {{v2, Color::black, 1}, {second, Color::black, 2}}};
            }
        }
    }

    // The bifurcation case analysis has two corners it does not cover:
    // w and w' adjacent with no common neighbor, and candidates whose
    // other two s-neighbors have uncolored neighbors but no T-neighbor.
    // Splitting on v is always sound, so both fall back to that.
    assert(!b_candidates.empty() && "no bifurcation rule applies to a stable coloring");
    return black_or_white(Rule::b3b_fallback, b_candidates.front().v);
}

Solution solve_connected(const Graph& g, const PatternIndex& idx)
{
    Solution out;
    out.min_weight = std::numeric_limits<double>::infinity();

    Coloring c(g, idx);
    SearchStats& st = out.stats;

    struct PendingChild {
        std::size_t mark;
        BranchPlan::ChildSeed seed;
    };
    std::vector<PendingChild> stack;

    auto account_or_bifurcate = [&](PropagationOutcome outcome) {
        if (outcome == PropagationOutcome::invalid) {
            ++st.leaves;
            return;
        }
        if (outcome == PropagationOutcome::total) {
            ++st.leaves;
            out.count += c.count_multiplier();
            auto [edges, weight] = c.extract_dim();
            if (weight < out.min_weight) {
                out.min_weight = weight;
                out.witness = std::move(edges);
            }
            return;
        }
        BranchPlan plan = select_bifurcation(c, frontier(c));
        st.firings.bump(plan.rule);
        std::size_t mark = c.trail_size();
        for (auto it = plan.children.rbegin(); it != plan.children.rend(); ++it)
            stack.push_back({mark, *it});
        st.max_stack = std::max<std::uint64_t>(st.max_stack, stack.size());
    };

    ++st.nodes;
    account_or_bifurcate(c.propagate(&st.firings));

    while (!stack.empty()) {
        PendingChild next = stack.back();
        stack.pop_back();
        c.restore_to_mark(next.mark);
        ++st.nodes;
        if (c.assign(next.seed.vertex, next.seed.color, Rule::seed, next.seed.multiplier)) {
            ++st.leaves; // seed assignment already violates validity
            continue;
        }
        account_or_bifurcate(c.propagate(&st.firings));
    }

    out.status = out.count > 0 ? Solution::Status::found : Solution::Status::no_dim;
    if (out.status == Solution::Status::no_dim) {
        out.min_weight = 0.0;
        out.witness.clear();
    }
    return out;
}

Solution solve(const Graph& g)
{
    Solution out;
    if (auto k4 = contains_k4(g)) {
        out.k4 = *k4;
        return out; // no DIM, zero search nodes
    }

    auto [normalized, shift] = normalize_weights(g);
    std::vector<Component> comps = connected_components(normalized);

    out.count = 1;
    double total_weight = 0.0;
    bool all_found = true;
    for (const Component& comp : comps) {
        std::vector<int> comp_witness;
        if (comp.graph.vertex_count() <= 4) {
            OracleResult r = brute_force_solve(comp.graph);
            if (!r.found) {
                all_found = false;
                break;
            }
            total_weight += r.min_weight;
            out.count *= mpz_class(static_cast<unsigned long>(r.count));
            comp_witness = std::move(r.witness);
        } else {
            PatternIndex idx = build_pattern_index(comp.graph);
            Solution s = solve_connected(comp.graph, idx);
            out.stats.nodes += s.stats.nodes;
            out.stats.leaves += s.stats.leaves;
            out.stats.max_stack = std::max(out.stats.max_stack, s.stats.max_stack);
            out.stats.firings += s.stats.firings;
            if (s.status == Solution::Status::no_dim) {
                all_found = false;
                break;
            }
            total_weight += s.min_weight;
            out.count *= s.count;
            comp_witness = std::move(s.witness);
        }
        for (int e : comp_witness) {
            const Edge& ce = comp.graph.edge(e);
            int id = g.edge_id(comp.to_original[ce.u], comp.to_original[ce.v]);
            assert(id >= 0);
            out.witness.push_back(id);
        }
    }

    if (!all_found) {
        out.status = Solution::Status::no_dim;
        out.count = 0;
        out.witness.clear();
        out.min_weight = 0.0;
        return out;
    }
    std::sort(out.witness.begin(), out.witness.end());
    out.status = Solution::Status::found;
    out.min_weight = unshift_weight(total_weight, static_cast<int>(out.witness.size()), shift);
    return out;
}

double branching_factor(const std::vector<int>& decreases)
{
    if (decreases.size() < 2)
        throw std::invalid_argument("branching_factor: need at least two entries");
    for (int t : decreases)
        if (t < 1)
            throw std::invalid_argument("branching_factor: entries must be >= 1");

    // 1 = sum x^(-t_i) is strictly decreasing in x on (1, inf), with
    // value r >= 2 at x = 1 and at most 1 at x = r.
    auto excess = [&](double x) {
        double s = 0.0;
        for (int t : decreases)
            s += std::pow(x, -t);
        return s - 1.0;
    };
    double lo = 1.0, hi = static_cast<double>(decreases.size());
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (excess(mid) > 0)
            lo = mid;
        else
            hi = mid;
    }
    return std::round(0.5 * (lo + hi) * 1e6) / 1e6;
}

} // namespace dim
