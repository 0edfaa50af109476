#include "boxicity/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace boxicity {

EdgeSet complete_edge_set(Vertex n) {
    EdgeSet out;
    if (n > 1) out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) out.emplace_back(u, v);
    return out;
}

EdgeSet intersect(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Graph::Graph(Vertex n) : n_(n), offsets_(static_cast<std::size_t>(n) + 1, 0) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges, Vertex bit_matrix_limit) {
    Graph g(n);
    std::vector<Edge> sorted;
    sorted.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v >= n)
            throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        ") out of range for n=" + std::to_string(n));
        if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        sorted.push_back(e);
    }
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<std::size_t> deg(static_cast<std::size_t>(n), 0);
    for (const Edge& e : sorted) {
        ++deg[e.u];
        ++deg[e.v];
    }
    for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.targets_.resize(g.offsets_[n]);
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    // Lexicographic edge order fills every row in ascending order.
    for (const Edge& e : sorted) {
        g.targets_[fill[e.u]++] = e.v;
        g.targets_[fill[e.v]++] = e.u;
    }

    if (n > 0 && n <= bit_matrix_limit) {
        g.words_per_row_ = (static_cast<std::size_t>(n) + 63) / 64;
        g.bits_.assign(g.words_per_row_ * n, 0);
        for (const Edge& e : sorted) {
            g.bits_[e.u * g.words_per_row_ + e.v / 64] |= std::uint64_t{1} << (e.v % 64);
            g.bits_[e.v * g.words_per_row_ + e.u / 64] |= std::uint64_t{1} << (e.u % 64);
        }
    }
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    if (!bits_.empty()) return (bits_[u * words_per_row_ + v / 64] >> (v % 64)) & 1u;
    auto row = degree(u) <= degree(v) ? neighbors(u) : neighbors(v);
    Vertex other = degree(u) <= degree(v) ? v : u;
    return std::binary_search(row.begin(), row.end(), other);
}

EdgeSet Graph::edges() const {
    EdgeSet out;
    out.reserve(size());
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::size_t max_degree(const Graph& g) {
    std::size_t best = 0;
    for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
    return best;
}

Graph square(const Graph& g) {
    const Vertex n = g.order();
    std::vector<Edge> edges;
    std::vector<Vertex> stamp(static_cast<std::size_t>(n), -1);
    for (Vertex u = 0; u < n; ++u) {
        stamp[u] = u;
        for (Vertex w : g.neighbors(u)) {
            if (stamp[w] != u) {
                stamp[w] = u;
                if (u < w) edges.emplace_back(u, w);
            }
            for (Vertex x : g.neighbors(w)) {
                if (stamp[x] != u) {
                    stamp[x] = u;
                    if (u < x) edges.emplace_back(u, x);
                }
            }
        }
    }
    return Graph::from_edges(n, edges);
}

}  // namespace boxicity
