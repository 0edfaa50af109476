#include "boxicity/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace boxicity {

VertexColoring::VertexColoring(std::vector<int> colors) : colors_(std::move(colors)) {
    for (int c : colors_) {
        if (c < 1) throw std::invalid_argument("color " + std::to_string(c) + " is not positive");
        k_ = std::max(k_, c);
    }
    std::vector<bool> used(static_cast<std::size_t>(k_) + 1, false);
    for (int c : colors_) used[c] = true;
    for (int c = 1; c <= k_; ++c)
        if (!used[c]) throw std::invalid_argument("color " + std::to_string(c) + " is unused");
}

bool VertexColoring::is_proper_for(const Graph& g) const {
    if (g.order() != size()) return false;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v : g.neighbors(u))
            if (colors_[u] == colors_[v]) return false;
    return true;
}

std::vector<Vertex> smallest_last_order(const Graph& g) {
    const Vertex n = g.order();
    const std::size_t maxd = max_degree(g);
    std::vector<std::size_t> deg(static_cast<std::size_t>(n));
    std::vector<std::vector<Vertex>> buckets(maxd + 1);
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        buckets[deg[v]].push_back(v);
    }
    // Buckets hold stale entries; an entry is live iff its degree still matches.
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    std::vector<Vertex> stripped;
    stripped.reserve(n);
    std::size_t low = 0;
    while (static_cast<Vertex>(stripped.size()) < n) {
        while (true) {
            auto& b = buckets[low];
            while (!b.empty() && (removed[b.back()] || deg[b.back()] != low)) b.pop_back();
            if (!b.empty()) break;
            ++low;
        }
        Vertex v = buckets[low].back();
        buckets[low].pop_back();
        removed[v] = true;
        stripped.push_back(v);
        for (Vertex w : g.neighbors(v)) {
            if (removed[w]) continue;
            --deg[w];
            buckets[deg[w]].push_back(w);
        }
        if (low > 0) --low;
    }
    std::reverse(stripped.begin(), stripped.end());
    return stripped;
}

VertexColoring greedy_color(const Graph& g, std::span<const Vertex> order) {
    const Vertex n = g.order();
    if (static_cast<Vertex>(order.size()) != n)
        throw std::invalid_argument("order has " + std::to_string(order.size()) +
                                    " entries, expected " + std::to_string(n));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (Vertex v : order) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("order is not a permutation (vertex " + std::to_string(v) + ")");
        seen[v] = true;
    }

    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    // forbidden[c] == v marks color c as taken by a neighbor of v.
    std::vector<Vertex> forbidden(max_degree(g) + 2, -1);
    for (Vertex v : order) {
        for (Vertex w : g.neighbors(v))
            if (colors[w] != 0) forbidden[colors[w]] = v;
        int c = 1;
        while (forbidden[c] == v) ++c;
        colors[v] = c;
    }
    return VertexColoring(std::move(colors));
}

VertexColoring greedy_color(const Graph& g, ColoringOrder order) {
    std::vector<Vertex> seq;
    if (order == ColoringOrder::smallest_last) {
        seq = smallest_last_order(g);
    } else {
        seq.resize(static_cast<std::size_t>(g.order()));
        std::iota(seq.begin(), seq.end(), Vertex{0});
    }
    return greedy_color(g, seq);
}

std::vector<std::vector<Vertex>> color_classes(const VertexColoring& c) {
    std::vector<std::vector<Vertex>> classes(static_cast<std::size_t>(c.num_colors()));
    for (Vertex v = 0; v < c.size(); ++v) classes[c.color(v) - 1].push_back(v);
    return classes;
}

}  // namespace boxicity
