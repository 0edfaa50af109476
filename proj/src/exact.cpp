#include "boxicity/exact.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

#include "bitgraph.hpp"

namespace boxicity {

namespace {

using detail::Mask;

// g restricted to bitmasks, with its non-edges indexed lexicographically.
struct Instance {
    Vertex n = 0;
    std::vector<Mask> adj;
    std::vector<Edge> non_edges;

    Instance(const Graph& g, const OracleBudget& budget) : n(g.order()) {
        if (n > budget.max_n || n > detail::kMaxMaskVertices)
            throw budget_exceeded("oracle limited to n <= " + std::to_string(budget.max_n) +
                                  ", got n=" + std::to_string(n));
        adj = detail::adjacency_masks(g);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (!g.adjacent(u, v)) non_edges.emplace_back(u, v);
    }

    Mask all_non_edges() const {
        return non_edges.size() == 64 ? ~Mask{0} : detail::bit(static_cast<int>(non_edges.size())) - 1;
    }

    Graph with_added(Mask added) const {
        EdgeSet edges;
        for (Vertex u = 0; u < n; ++u)
            for (Mask m = adj[u]; m; m &= m - 1)
                if (auto v = static_cast<Vertex>(std::countr_zero(m)); u < v) edges.emplace_back(u, v);
        for (Mask m = added; m; m &= m - 1) edges.push_back(non_edges[std::countr_zero(m)]);
        return Graph::from_edges(n, edges);
    }
};

// Masks of added non-edges that turn g into an interval graph, ascending.
std::vector<Mask> interval_additions(const Instance& inst, const OracleBudget& budget) {
    const std::size_t count = inst.non_edges.size();
    if (count >= 63 || (std::uint64_t{1} << count) > budget.max_supergraphs)
        throw budget_exceeded(std::to_string(count) + " non-edges give 2^" + std::to_string(count) +
                              " candidate supergraphs, over the cap of " +
                              std::to_string(budget.max_supergraphs));
    std::vector<Mask> found;
    std::vector<Mask> adj = inst.adj;
    // Gray-code walk: each step toggles one non-edge.
    const std::uint64_t total = std::uint64_t{1} << count;
    Mask added = 0;
    for (std::uint64_t i = 0; i < total; ++i) {
        if (i > 0) {
            int e = std::countr_zero(i);
            const Edge& ne = inst.non_edges[e];
            adj[ne.u] ^= detail::bit(ne.v);
            adj[ne.v] ^= detail::bit(ne.u);
            added ^= detail::bit(e);
        }
        if (detail::consecutive_clique_order(adj)) found.push_back(added);
    }
    std::sort(found.begin(), found.end());
    return found;
}

class CoverSearch {
public:
    CoverSearch(const Instance& inst, const std::vector<Mask>& additions) : full_(inst.all_non_edges()) {
        // A supergraph is useful through the non-edges it leaves out; keep
        // only inclusion-maximal exclusion sets.
        std::vector<std::pair<Mask, Mask>> cand;  // (excluded, added)
        for (Mask a : additions)
            if (Mask ex = full_ & ~a) cand.emplace_back(ex, a);
        std::sort(cand.begin(), cand.end(), [](const auto& x, const auto& y) {
            int px = std::popcount(x.first), py = std::popcount(y.first);
            return px != py ? px > py : x.first < y.first;
        });
        for (const auto& c : cand) {
            bool dominated = std::any_of(excluded_.begin(), excluded_.end(),
                                         [&](Mask k) { return (c.first & ~k) == 0; });
            if (dominated) continue;
            excluded_.push_back(c.first);
            added_.push_back(c.second);
        }
        by_edge_.resize(inst.non_edges.size());
        for (std::size_t i = 0; i < excluded_.size(); ++i)
            for (Mask m = excluded_[i]; m; m &= m - 1) by_edge_[std::countr_zero(m)].push_back(i);
    }

    /// Additions of a cover with at most `depth` supergraphs, if one exists.
    std::optional<std::vector<Mask>> find(int depth) {
        chosen_.clear();
        if (!run(full_, depth)) return std::nullopt;
        std::vector<Mask> out;
        for (std::size_t i : chosen_) out.push_back(added_[i]);
        return out;
    }

private:
    bool run(Mask uncovered, int depth) {
        if (uncovered == 0) return true;
        if (depth == 0) return false;
        if (auto it = failed_.find(uncovered); it != failed_.end() && it->second >= depth) return false;

        // Fail-first: branch on the uncovered non-edge with fewest candidates.
        int pick = -1;
        for (Mask m = uncovered; m; m &= m - 1) {
            int e = std::countr_zero(m);
            if (pick < 0 || by_edge_[e].size() < by_edge_[pick].size()) pick = e;
        }
        for (std::size_t i : by_edge_[pick]) {
            chosen_.push_back(i);
            if (run(uncovered & ~excluded_[i], depth - 1)) return true;
            chosen_.pop_back();
        }
        int& worst = failed_[uncovered];
        worst = std::max(worst, depth);
        return false;
    }

    Mask full_;
    std::vector<Mask> excluded_, added_;
    std::vector<std::vector<std::size_t>> by_edge_;
    std::vector<std::size_t> chosen_;
    std::unordered_map<Mask, int> failed_;  // uncovered set -> deepest failing depth
};

std::vector<IntervalRealization> realize(const Instance& inst, const std::vector<Mask>& additions) {
    std::vector<IntervalRealization> out;
    for (Mask a : additions) out.push_back(*interval_realization(inst.with_added(a), inst.n));
    return out;
}

}  // namespace

std::vector<EdgeSet> interval_supergraphs(const Graph& g, const OracleBudget& budget) {
    Instance inst(g, budget);
    std::vector<EdgeSet> out;
    for (Mask a : interval_additions(inst, budget)) out.push_back(inst.with_added(a).edges());
    return out;
}

std::optional<std::vector<IntervalRealization>> boxicity_at_most(const Graph& g, int k,
                                                                 const OracleBudget& budget) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    Instance inst(g, budget);
    if (inst.non_edges.empty()) return std::vector<IntervalRealization>{};
    if (k == 0) return std::nullopt;
    if (auto r = interval_realization(g, inst.n)) return std::vector<IntervalRealization>{*r};
    if (k == 1) return std::nullopt;
    if (k > budget.max_k)
        throw budget_exceeded("k=" + std::to_string(k) + " exceeds max_k=" + std::to_string(budget.max_k));
    CoverSearch search(inst, interval_additions(inst, budget));
    auto cover = search.find(k);
    if (!cover) return std::nullopt;
    return realize(inst, *cover);
}

ExactResult exact_boxicity(const Graph& g, const OracleBudget& budget) {
    Instance inst(g, budget);
    if (inst.non_edges.empty()) return {0, {}};
    if (auto r = interval_realization(g, inst.n)) return {1, {*r}};
    CoverSearch search(inst, interval_additions(inst, budget));
    for (int k = 2; k <= budget.max_k; ++k)
        if (auto cover = search.find(k)) return {k, realize(inst, *cover)};
    throw budget_exceeded("no cover with at most max_k=" + std::to_string(budget.max_k) + " interval graphs");
}

}  // namespace boxicity
