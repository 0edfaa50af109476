#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "boxicity/graph.hpp"

namespace boxicity {

using Coord = std::int64_t;

/// Closed integer interval [lo, hi].
struct Interval {
    Coord lo = 0;
    Coord hi = 0;

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Closed-interval semantics: touching endpoints intersect.
inline bool overlaps(const Interval& a, const Interval& b) {
    return std::max(a.lo, b.lo) <= std::min(a.hi, b.hi);
}

/// One closed interval per vertex; defines one interval graph.
class IntervalRealization {
public:
    IntervalRealization() = default;
    /// Throws std::invalid_argument if some interval has lo > hi.
    explicit IntervalRealization(std::vector<Interval> intervals);
    IntervalRealization(std::initializer_list<Interval> intervals) : IntervalRealization(std::vector<Interval>(intervals)) {}

    Vertex size() const { return static_cast<Vertex>(intervals_.size()); }
    const Interval& operator[](Vertex v) const { return intervals_[v]; }
    std::span<const Interval> intervals() const { return intervals_; }

    friend bool operator==(const IntervalRealization&, const IntervalRealization&) = default;

private:
    std::vector<Interval> intervals_;
};

EdgeSet interval_edges(const IntervalRealization& r);

/// True iff every pair of intervals overlaps; on the line this reduces to
/// max(lo) <= min(hi).
bool is_complete(const IntervalRealization& r);

/// Oracle-scale recognition limit for is_interval_graph.
inline constexpr Vertex kIntervalOracleLimit = 16;

/// Maximal cliques via pivoted Bron-Kerbosch, each sorted, listed in
/// discovery order. Requires n <= 64.
std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g);

/// Interval realization of g, or nullopt if g is not an interval graph.
///
/// Looks for an ordering of the maximal cliques in which every vertex's
/// cliques are consecutive; vertex v then gets [first, last] clique index.
/// Throws std::invalid_argument when g.order() > max_n (max_n <= 64).
std::optional<IntervalRealization> interval_realization(const Graph& g,
                                                        Vertex max_n = kIntervalOracleLimit);

inline bool is_interval_graph(const Graph& g, Vertex max_n = kIntervalOracleLimit) {
    return interval_realization(g, max_n).has_value();
}

struct RepresentationCheck {
    bool ok = false;
    /// Lexicographically smallest pair whose membership differs.
    std::optional<Edge> counterexample;
    /// Whether the counterexample pair is an edge of the graph.
    bool counterexample_in_graph = false;

    explicit operator bool() const { return ok; }
};

/// Checks E(g) equals the intersection of the realizations' edge sets.
/// An empty list intersects to the complete edge set. Throws
/// std::invalid_argument on vertex-count mismatch.
RepresentationCheck verify_interval_representation(const Graph& g,
                                                   std::span<const IntervalRealization> realizations);

}  // namespace boxicity
