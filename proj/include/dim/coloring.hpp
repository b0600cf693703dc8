#pragma once

#include <cstdint>
#include <deque>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dim/graph.hpp"
#include "dim/patterns.hpp"
#include "dim/stats.hpp"

namespace dim {

enum class Color : std::uint8_t { uncolored, white, black };

constexpr Color opposite(Color c)
{
    return c == Color::white ? Color::black : Color::white;
}

// One color assignment. Replaying the trail from an empty coloring
// reproduces the state exactly; multiplier records the counting factor
// applied by this step (1 except for P9 and the doubled bifurcation
// child).
struct TrailEntry {
    int vertex;
    Color color;
    std::uint32_t multiplier;
    Rule rule;
};

enum class PropagationOutcome : std::uint8_t {
    invalid, // some validity rule is violated; discard the branch
    total,   // every vertex colored and the coloring is valid
    stable,  // valid, partial, and no propagation rule applies
};

// Mutable partial two-coloring of a fixed graph with incremental
// neighbor counters, the single-vertex set, an undo trail and the
// counting multiplier accumulated along the current branch.
//
// A black vertex is single while it has no black neighbor and paired
// once it has exactly one. Partial validity: no two whites adjacent
// (V1); every black single or paired, and every single keeps an
// uncolored neighbor (V2). Total validity: V1 plus every black paired.
//
// Propagation applies these forced extensions to a fixpoint:
//   P1  diamond hubs are black, diamond tips are white
//   P2  the neighbor of a pendant vertex is black
//   P3  neighbors of a white vertex are black
//   P4  neighbors of a paired vertex are white (except its pair)
//   P5  a vertex with two black neighbors is white
//   P6  a single with one uncolored neighbor pairs with it
//   P7  the two odd-degree vertices of a paw get opposite colors
//   P8  adjacent vertices of an induced C4 get opposite colors
//   P9  a single s all of whose uncolored neighbors v satisfy
//       N(v) <= N[s] pairs with the cheapest of them; the number of
//       total valid extensions is multiplied by |N_U(s)|
// P9 runs only once P1-P8 are exhausted.
//
// Single-owner mutable state; distinct colorings over one shared graph
// may be used from different threads.
class Coloring {
public:
    Coloring(const Graph& g, const PatternIndex& idx);

    const Graph& graph() const { return *g_; }

    Color color(int v) const { return color_[v]; }
    int black_neighbors(int v) const { return black_nbrs_[v]; }
    int white_neighbors(int v) const { return white_nbrs_[v]; }
    int uncolored_neighbors(int v) const { return uncolored_nbrs_[v]; }
    bool is_single(int v) const { return color_[v] == Color::black && pair_[v] < 0; }

    // Matched partner of a paired black vertex, -1 otherwise.
    int pair_of(int v) const { return pair_[v]; }

    // Single black vertices, ordered by id.
    const std::set<int>& singles() const { return singles_; }

    int uncolored_count() const { return uncolored_count_; }
    const mpz_class& count_multiplier() const { return count_multiplier_; }

    std::size_t trail_size() const { return trail_.size(); }
    const std::vector<TrailEntry>& trail() const { return trail_; }

    // Colors an uncolored vertex, updating all bookkeeping. Returns
    // true when the assignment makes the coloring invalid (white-white
    // adjacency, a second black neighbor, or a starved single). The
    // state stays internally consistent for undo either way.
    bool assign(int v, Color c, Rule why = Rule::seed, std::uint32_t multiplier = 1);

    // Applies P1-P9 to a fixpoint. Rule firings (one per forced
    // assignment) are recorded in *firings when given.
    PropagationOutcome propagate(RuleFirings* firings = nullptr);

    // Full-scan check of total validity; requires uncolored_count()==0.
    bool validate_total() const;

    // Black-pair edges and their weight sum; requires validate_total().
    std::pair<std::vector<int>, double> extract_dim() const;

    // Rewinds the trail to the given length; the state becomes
    // identical to what it was at that point.
    void restore_to_mark(std::size_t mark);

    // Recomputes every counter, the pair map and the single set from
    // scratch and compares with the incremental values. Test support.
    bool counters_coherent() const;

    // Field-by-field comparison ignoring the trail. Test support.
    bool same_state(const Coloring& o) const;

private:
    bool force(int v, Color c, Rule why, RuleFirings* firings);
    bool inspect(int u, RuleFirings* firings);
    // 1 = fired, 0 = nothing applicable, -1 = fired and went invalid
    int try_p9(RuleFirings* firings);
    void enqueue(int v);
    void enqueue_with_neighbors(int v);

    const Graph* g_;
    const PatternIndex* idx_;

    std::vector<Color> color_;
    std::vector<int> black_nbrs_;
    std::vector<int> white_nbrs_;
    std::vector<int> uncolored_nbrs_;
    std::vector<int> pair_;
    std::set<int> singles_;
    int uncolored_count_;
    mpz_class count_multiplier_;
    std::vector<TrailEntry> trail_;

    std::vector<int> pendants_; // degree-1 vertices of the graph
    // contained_[e] = (N(v) <= N[u], N(u) <= N[v]) for edge e = uv, u < v
    std::vector<std::pair<bool, bool>> contained_;

    std::deque<int> queue_;
    std::vector<char> in_queue_;
};

// The containment test used by rule P9: every neighbor of v lies in
// the closed neighborhood of s (s and v adjacent).
bool neighborhood_contained(const Graph& g, int v, int s);

} // namespace dim
