#include "dim/coloring.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace dim {

bool neighborhood_contained(const Graph& g, int v, int s)
{
    const auto& ns = g.neighbors(s);
    for (int x : g.neighbors(v)) {
        if (x == s)
            continue;
        if (!std::binary_search(ns.begin(), ns.end(), x))
            return false;
    }
    return true;
}

Coloring::Coloring(const Graph& g, const PatternIndex& idx)
    : g_(&g),
      idx_(&idx),
      color_(g.vertex_count(), Color::uncolored),
      black_nbrs_(g.vertex_count(), 0),
      white_nbrs_(g.vertex_count(), 0),
      uncolored_nbrs_(g.vertex_count()),
      pair_(g.vertex_count(), -1),
      uncolored_count_(g.vertex_count()),
      count_multiplier_(1),
      in_queue_(g.vertex_count(), 0)
{
    for (int v = 0; v < g.vertex_count(); ++v) {
        uncolored_nbrs_[v] = g.degree(v);
        if (g.degree(v) == 1)
            pendants_.push_back(v);
    }
    contained_.reserve(g.edge_count());
    for (const Edge& e : g.edges())
        contained_.emplace_back(neighborhood_contained(g, e.v, e.u),
                                neighborhood_contained(g, e.u, e.v));
}

bool Coloring::assign(int v, Color c, Rule why, std::uint32_t multiplier)
{
    assert(color_[v] == Color::uncolored && "assign to an already-colored vertex");
    assert(c != Color::uncolored);

    color_[v] = c;
    --uncolored_count_;
    trail_.push_back({v, c, multiplier, why});
    if (multiplier != 1)
        count_multiplier_ *= multiplier;

    bool conflict = false;
    for (int u : g_->neighbors(v)) {
        --uncolored_nbrs_[u];
        if (c == Color::black) {
            ++black_nbrs_[u];
            if (color_[u] == Color::black && black_nbrs_[u] >= 2)
                conflict = true; // V2: u would have two black neighbors
        } else {
            ++white_nbrs_[u];
            if (color_[u] == Color::white)
                conflict = true; // V1: adjacent whites
            if (color_[u] == Color::black && black_nbrs_[u] == 0 && uncolored_nbrs_[u] == 0)
                conflict = true; // V2: single u lost its last uncolored neighbor
        }
    }

    if (c == Color::black) {
        if (black_nbrs_[v] == 0) {
            singles_.insert(v);
            if (uncolored_nbrs_[v] == 0)
                conflict = true; // V2: single with nothing left to pair with
        } else if (black_nbrs_[v] == 1) {
            int partner = -1;
            for (int u : g_->neighbors(v))
                if (color_[u] == Color::black) {
                    partner = u;
                    break;
                }
            assert(partner >= 0);
            if (pair_[partner] < 0) {
                pair_[partner] = v;
                pair_[v] = partner;
                singles_.erase(partner);
            } else {
                conflict = true; // partner already paired (also caught above)
            }
        } else {
            conflict = true; // V2 for v itself
        }
    }
    return conflict;
}

void Coloring::restore_to_mark(std::size_t mark)
{
    assert(mark <= trail_.size());
    while (trail_.size() > mark) {
        const TrailEntry e = trail_.back();
        trail_.pop_back();
        const int v = e.vertex;
        if (e.multiplier != 1)
            mpz_divexact(count_multiplier_.get_mpz_t(), count_multiplier_.get_mpz_t(),
                         mpz_class(e.multiplier).get_mpz_t());
        color_[v] = Color::uncolored;
        ++uncolored_count_;
        if (e.color == Color::black) {
            if (pair_[v] >= 0) {
                int partner = pair_[v];
                pair_[partner] = -1;
                pair_[v] = -1;
                singles_.insert(partner); // partner is black again with no black neighbor
            } else {
                singles_.erase(v);
            }
        }
        for (int u : g_->neighbors(v)) {
            ++uncolored_nbrs_[u];
            if (e.color == Color::black)
                --black_nbrs_[u];
            else
                --white_nbrs_[u];
        }
    }
}

void Coloring::enqueue(int v)
{
    if (!in_queue_[v]) {
        in_queue_[v] = 1;
        queue_.push_back(v);
    }
}

void Coloring::enqueue_with_neighbors(int v)
{
    enqueue(v);
    for (int u : g_->neighbors(v))
        enqueue(u);
}

bool Coloring::force(int v, Color c, Rule why, RuleFirings* firings)
{
    if (color_[v] == c)
        return true;
    if (color_[v] != Color::uncolored)
        return false; // the forced color contradicts an existing one
    if (firings)
        firings->bump(why);
    if (assign(v, c, why))
        return false;
    enqueue_with_neighbors(v);
    return true;
}

bool Coloring::inspect(int u, RuleFirings* firings)
{
    switch (color_[u]) {
    case Color::white:
        for (int v : g_->neighbors(u))
            if (color_[v] == Color::uncolored && !force(v, Color::black, Rule::p3, firings))
                return false;
        break;
    case Color::black:
        if (pair_[u] >= 0) {
            for (int v : g_->neighbors(u))
                if (color_[v] == Color::uncolored && !force(v, Color::white, Rule::p4, firings))
                    return false;
        } else if (uncolored_nbrs_[u] == 1) {
            for (int v : g_->neighbors(u))
                if (color_[v] == Color::uncolored)
                    return force(v, Color::black, Rule::p6, firings);
        }
        break;
    case Color::uncolored:
        if (black_nbrs_[u] >= 2)
            return force(u, Color::white, Rule::p5, firings);
        if (white_nbrs_[u] >= 1)
            return force(u, Color::black, Rule::p3, firings);
        break;
    }

    if (color_[u] == Color::uncolored)
        return true;

    // structural rules triggered by u's patterns
    for (int pi : idx_->paw_membership[u]) {
        const Paw& p = idx_->paws[pi];
        int other;
        if (u == p.attach)
            other = p.pendant;
        else if (u == p.pendant)
            other = p.attach;
        else
            continue;
        if (color_[other] == Color::uncolored && !force(other, opposite(color_[u]), Rule::p7, firings))
            return false;
    }
    for (int ci : idx_->c4_membership[u]) {
        const auto& cyc = idx_->c4s[ci].cycle;
        for (int k = 0; k < 4; ++k) {
            if (cyc[k] != u)
                continue;
            for (int d : {1, 3}) {
                int v = cyc[(k + d) % 4];
                if (color_[v] == Color::uncolored && !force(v, opposite(color_[u]), Rule::p8, firings))
                    return false;
            }
        }
    }
    return true;
}

int Coloring::try_p9(RuleFirings* firings)
{
    for (int s : singles_) {
        bool all_contained = true;
        int cheapest = -1;
        double best = std::numeric_limits<double>::infinity();
        std::uint32_t options = 0;
        for (int v : g_->neighbors(s)) {
            if (color_[v] != Color::uncolored)
                continue;
            int e = g_->edge_id(s, v);
            const auto& flags = contained_[e];
            bool ok = g_->edge(e).u == s ? flags.first : flags.second;
            if (!ok) {
                all_contained = false;
                break;
            }
            ++options;
            double w = g_->weight_of(e);
            if (w < best) { // ties fall to the lowest id, visited first
                best = w;
                cheapest = v;
            }
        }
        if (!all_contained)
            continue;
        // P6 has already consumed |N_U(s)| == 1 and a starved single
        // would have been flagged at assignment time.
        assert(options >= 2);
        if (firings)
            firings->bump(Rule::p9);
        if (assign(cheapest, Color::black, Rule::p9, options))
            return -1;
        enqueue_with_neighbors(cheapest);
        return 1;
    }
    return 0;
}

PropagationOutcome Coloring::propagate(RuleFirings* firings)
{
    // P1 and P2 force fixed colors derived from the graph alone;
    // reapplying them after the first pass is a no-op.
    for (const Diamond& d : idx_->diamonds) {
        for (int v : d.hubs)
            if (!force(v, Color::black, Rule::p1, firings))
                return PropagationOutcome::invalid;
        for (int v : d.tips)
            if (!force(v, Color::white, Rule::p1, firings))
                return PropagationOutcome::invalid;
    }
    for (int p : pendants_)
        if (!force(g_->neighbors(p)[0], Color::black, Rule::p2, firings))
            return PropagationOutcome::invalid;

    for (int v = 0; v < g_->vertex_count(); ++v)
        enqueue(v);

    for (;;) {
        while (!queue_.empty()) {
            int u = queue_.front();
            queue_.pop_front();
            in_queue_[u] = 0;
            if (!inspect(u, firings)) {
                queue_.clear();
                std::fill(in_queue_.begin(), in_queue_.end(), 0);
                return PropagationOutcome::invalid;
            }
        }
        int fired = try_p9(firings);
        if (fired < 0) {
            queue_.clear();
            std::fill(in_queue_.begin(), in_queue_.end(), 0);
            return PropagationOutcome::invalid;
        }
        if (fired == 0)
            break;
    }

    if (uncolored_count_ == 0) {
        assert(validate_total());
        return PropagationOutcome::total;
    }
    return PropagationOutcome::stable;
}

bool Coloring::validate_total() const
{
    assert(uncolored_count_ == 0);
    for (const Edge& e : g_->edges())
        if (color_[e.u] == Color::white && color_[e.v] == Color::white)
            return false;
    for (int v = 0; v < g_->vertex_count(); ++v) {
        if (color_[v] != Color::black)
            continue;
        int black = 0;
        for (int u : g_->neighbors(v))
            if (color_[u] == Color::black)
                ++black;
        if (black != 1)
            return false;
    }
    return true;
}

std::pair<std::vector<int>, double> Coloring::extract_dim() const
{
    std::vector<int> edges;
    double weight = 0.0;
    for (int v = 0; v < g_->vertex_count(); ++v) {
        if (color_[v] != Color::black)
            continue;
        for (int u : g_->neighbors(v)) {
            if (color_[u] == Color::black && v < u) {
                int e = g_->edge_id(v, u);
                edges.push_back(e);
                weight += g_->weight_of(e);
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    return {std::move(edges), weight};
}

bool Coloring::counters_coherent() const
{
    int uncolored = 0;
    for (int v = 0; v < g_->vertex_count(); ++v) {
        int b = 0, w = 0, u = 0;
        for (int x : g_->neighbors(v)) {
            switch (color_[x]) {
            case Color::black: ++b; break;
            case Color::white: ++w; break;
            case Color::uncolored: ++u; break;
            }
        }
        if (b != black_nbrs_[v] || w != white_nbrs_[v] || u != uncolored_nbrs_[v])
            return false;
        if (color_[v] == Color::uncolored)
            ++uncolored;
        bool single = color_[v] == Color::black && b == 0;
        if (single != (singles_.count(v) > 0))
            return false;
        if (color_[v] == Color::black && b == 1) {
            int partner = pair_[v];
            if (partner < 0 || pair_[partner] != v || color_[partner] != Color::black
                || !g_->adjacent(v, partner))
                return false;
        }
        if (color_[v] != Color::black && pair_[v] >= 0)
            return false;
    }
    return uncolored == uncolored_count_;
}

bool Coloring::same_state(const Coloring& o) const
{
    return color_ == o.color_ && black_nbrs_ == o.black_nbrs_ && white_nbrs_ == o.white_nbrs_
        && uncolored_nbrs_ == o.uncolored_nbrs_ && pair_ == o.pair_ && singles_ == o.singles_
        && uncolored_count_ == o.uncolored_count_ && count_multiplier_ == o.count_multiplier_;
}

} // namespace dim
