#include "boxicity/interval.hpp"

#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

#include "bitgraph.hpp"

namespace boxicity {

IntervalRealization::IntervalRealization(std::vector<Interval> intervals)
    : intervals_(std::move(intervals)) {
    for (std::size_t v = 0; v < intervals_.size(); ++v)
        if (intervals_[v].lo > intervals_[v].hi)
            throw std::invalid_argument("interval of vertex " + std::to_string(v) + " has lo > hi");
}

EdgeSet interval_edges(const IntervalRealization& r) {
    EdgeSet out;
    for (Vertex u = 0; u < r.size(); ++u)
        for (Vertex v = u + 1; v < r.size(); ++v)
            if (overlaps(r[u], r[v])) out.emplace_back(u, v);
    return out;
}

bool is_complete(const IntervalRealization& r) {
    Coord max_lo = std::numeric_limits<Coord>::min();
    Coord min_hi = std::numeric_limits<Coord>::max();
    for (const Interval& iv : r.intervals()) {
        max_lo = std::max(max_lo, iv.lo);
        min_hi = std::min(min_hi, iv.hi);
    }
    return max_lo <= min_hi;
}

namespace {

std::vector<Vertex> members(detail::Mask m) {
    std::vector<Vertex> out;
    for (; m; m &= m - 1) out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    return out;
}

}  // namespace

std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g) {
    auto adj = detail::adjacency_masks(g);
    std::vector<detail::Mask> cliques;
    detail::maximal_cliques(adj, cliques, std::numeric_limits<std::size_t>::max());
    std::vector<std::vector<Vertex>> out;
    out.reserve(cliques.size());
    for (auto c : cliques) out.push_back(members(c));
    return out;
}

std::optional<IntervalRealization> interval_realization(const Graph& g, Vertex max_n) {
    if (max_n > detail::kMaxMaskVertices) max_n = detail::kMaxMaskVertices;
    if (g.order() > max_n)
        throw std::invalid_argument("interval recognition limited to n <= " + std::to_string(max_n) +
                                    ", got n=" + std::to_string(g.order()));
    auto adj = detail::adjacency_masks(g);
    auto order = detail::consecutive_clique_order(adj);
    if (!order) return std::nullopt;

    std::vector<Interval> iv(static_cast<std::size_t>(g.order()), Interval{-1, -1});
    for (Coord i = 0; i < static_cast<Coord>(order->size()); ++i) {
        for (Vertex v : members((*order)[i])) {
            if (iv[v].lo < 0) iv[v].lo = i;
            iv[v].hi = i;
        }
    }
    return IntervalRealization(std::move(iv));
}

RepresentationCheck verify_interval_representation(const Graph& g,
                                                   std::span<const IntervalRealization> realizations) {
    for (const auto& r : realizations)
        if (r.size() != g.order())
            throw std::invalid_argument("realization covers " + std::to_string(r.size()) +
                                        " vertices, graph has " + std::to_string(g.order()));
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            bool all = true;
            for (const auto& r : realizations) {
                if (!overlaps(r[u], r[v])) {
                    all = false;
                    break;
                }
            }
            const bool edge = g.adjacent(u, v);
            if (all != edge) return {false, Edge(u, v), edge};
        }
    }
    return {true, std::nullopt, false};
}

}  // namespace boxicity
