#include "boxicity/boxrep.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace boxicity {

BoxRepresentation::BoxRepresentation(Vertex n, std::vector<IntervalRealization> dims)
    : n_(n), dims_(std::move(dims)) {
    for (std::size_t j = 0; j < dims_.size(); ++j)
        if (dims_[j].size() != n_)
            throw std::invalid_argument("dimension " + std::to_string(j) + " covers " +
                                        std::to_string(dims_[j].size()) + " vertices, expected " +
                                        std::to_string(n_));
}

std::vector<Interval> BoxRepresentation::box(Vertex v) const {
    std::vector<Interval> out;
    out.reserve(dims_.size());
    for (const auto& d : dims_) out.push_back(d[v]);
    return out;
}

bool boxes_intersect(const BoxRepresentation& b, Vertex u, Vertex v) {
    for (const auto& d : b.dims())
        if (!overlaps(d[u], d[v])) return false;
    return true;
}

namespace {

// Per-dimension sorted endpoint indexes. Boxes meeting u's box in dimension j
// are those with lo <= u.hi (a prefix of by_lo) and hi >= u.lo (a suffix of
// by_hi); each query scans whichever side is shorter in the dimension where
// that is cheapest, then checks the remaining dimensions.
class OverlapIndex {
public:
    explicit OverlapIndex(const BoxRepresentation& b) : b_(b) {
        const auto n = static_cast<std::size_t>(b.order());
        for (const auto& d : b.dims()) {
            Axis a;
            a.by_lo.resize(n);
            a.by_hi.resize(n);
            std::iota(a.by_lo.begin(), a.by_lo.end(), Vertex{0});
            std::iota(a.by_hi.begin(), a.by_hi.end(), Vertex{0});
            std::sort(a.by_lo.begin(), a.by_lo.end(),
                      [&](Vertex x, Vertex y) { return d[x].lo < d[y].lo; });
            std::sort(a.by_hi.begin(), a.by_hi.end(),
                      [&](Vertex x, Vertex y) { return d[x].hi < d[y].hi; });
            a.los.reserve(n);
            a.his.reserve(n);
            for (Vertex v : a.by_lo) a.los.push_back(d[v].lo);
            for (Vertex v : a.by_hi) a.his.push_back(d[v].hi);
            axes_.push_back(std::move(a));
        }
    }

    /// Vertices other than u whose boxes meet u's box, ascending.
    void neighbors(Vertex u, std::vector<Vertex>& out) {
        out.clear();
        const auto n = static_cast<std::size_t>(b_.order());
        const std::size_t d = axes_.size();
        if (d == 0) {
            for (Vertex v = 0; v < b_.order(); ++v)
                if (v != u) out.push_back(v);
            return;
        }
        cost_.resize(d);
        for (std::size_t j = 0; j < d; ++j) {
            const Interval& iv = b_.dims()[j][u];
            const Axis& a = axes_[j];
            auto prefix = static_cast<std::size_t>(
                std::upper_bound(a.los.begin(), a.los.end(), iv.hi) - a.los.begin());
            auto suffix = n - static_cast<std::size_t>(
                                  std::lower_bound(a.his.begin(), a.his.end(), iv.lo) - a.his.begin());
            cost_[j] = {std::min(prefix, suffix), j, prefix <= suffix};
        }
        std::sort(cost_.begin(), cost_.end(), [](const Cost& x, const Cost& y) {
            return x.count != y.count ? x.count < y.count : x.dim < y.dim;
        });

        const Cost& best = cost_.front();
        const Axis& a = axes_[best.dim];
        std::span<const Vertex> candidates =
            best.use_prefix ? std::span<const Vertex>(a.by_lo).first(best.count)
                            : std::span<const Vertex>(a.by_hi).last(best.count);
        for (Vertex v : candidates) {
            if (v == u) continue;
            bool meets = true;
            for (const Cost& c : cost_) {
                const auto& dim = b_.dims()[c.dim];
                if (!overlaps(dim[u], dim[v])) {
                    meets = false;
                    break;
                }
            }
            if (meets) out.push_back(v);
        }
        std::sort(out.begin(), out.end());
    }

private:
    struct Axis {
        std::vector<Vertex> by_lo, by_hi;
        std::vector<Coord> los, his;
    };
    struct Cost {
        std::size_t count = 0;
        std::size_t dim = 0;
        bool use_prefix = true;
    };

    const BoxRepresentation& b_;
    std::vector<Axis> axes_;
    std::vector<Cost> cost_;
};

}  // namespace

EdgeSet box_edges(const BoxRepresentation& b) {
    OverlapIndex index(b);
    EdgeSet out;
    std::vector<Vertex> nb;
    for (Vertex u = 0; u < b.order(); ++u) {
        index.neighbors(u, nb);
        for (Vertex v : nb)
            if (u < v) out.emplace_back(u, v);
    }
    return out;
}

VerifyReport verify(const Graph& g, const BoxRepresentation& b) {
    if (g.order() != b.order())
        throw std::invalid_argument("graph has " + std::to_string(g.order()) +
                                    " vertices, representation has " + std::to_string(b.order()));
    OverlapIndex index(b);
    std::vector<Vertex> nb;
    for (Vertex u = 0; u < g.order(); ++u) {
        index.neighbors(u, nb);
        auto want = g.neighbors(u);
        auto got_it = std::upper_bound(nb.begin(), nb.end(), u);
        auto want_it = std::upper_bound(want.begin(), want.end(), u);
        // Smallest v > u present in exactly one of the two sorted lists.
        while (got_it != nb.end() || want_it != want.end()) {
            if (got_it != nb.end() && want_it != want.end() && *got_it == *want_it) {
                ++got_it;
                ++want_it;
                continue;
            }
            Vertex v;
            bool in_graph;
            if (want_it == want.end() || (got_it != nb.end() && *got_it < *want_it)) {
                v = *got_it;
                in_graph = false;
            } else {
                v = *want_it;
                in_graph = true;
            }
            Mismatch m{Edge(u, v), in_graph, {}};
            for (const auto& d : b.dims()) m.overlap_per_dim.push_back(overlaps(d[u], d[v]));
            return {false, std::move(m)};
        }
    }
    return {true, std::nullopt};
}

BoxRepresentation prune(const BoxRepresentation& b) {
    std::vector<IntervalRealization> kept;
    std::unordered_multimap<std::size_t, std::size_t> seen;  // hash -> index into kept
    for (const auto& d : b.dims()) {
        if (is_complete(d)) continue;
        std::size_t h = 0;
        for (const Interval& iv : d.intervals()) {
            h ^= std::hash<Coord>{}(iv.lo) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h ^= std::hash<Coord>{}(iv.hi) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        auto [first, last] = seen.equal_range(h);
        bool duplicate = std::any_of(first, last, [&](const auto& e) { return kept[e.second] == d; });
        if (duplicate) continue;
        seen.emplace(h, kept.size());
        kept.push_back(d);
    }
    return BoxRepresentation(b.order(), std::move(kept));
}

}  // namespace boxicity
