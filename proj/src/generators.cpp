#include "boxicity/generators.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace boxicity {

namespace {

void require_order(Vertex n, Vertex min, const char* what) {
    if (n < min)
        throw std::invalid_argument(std::string(what) + " requires n >= " + std::to_string(min) +
                                    ", got " + std::to_string(n));
}

}  // namespace

Graph path_graph(Vertex n) {
    require_order(n, 1, "path");
    std::vector<Edge> e;
    for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph::from_edges(n, e);
}

Graph cycle_graph(Vertex n) {
    require_order(n, 3, "cycle");
    std::vector<Edge> e;
    for (Vertex v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, e);
}

Graph complete_graph(Vertex n) {
    require_order(n, 0, "complete");
    return Graph::from_edges(n, complete_edge_set(n));
}

Graph edgeless_graph(Vertex n) {
    require_order(n, 0, "edgeless");
    return Graph(n);
}

Graph complete_multipartite(std::span<const Vertex> sizes) {
    if (sizes.empty()) throw std::invalid_argument("complete_multipartite needs at least one part");
    std::vector<Vertex> part;
    for (std::size_t p = 0; p < sizes.size(); ++p) {
        if (sizes[p] <= 0)
            throw std::invalid_argument("part " + std::to_string(p) + " has non-positive size");
        part.insert(part.end(), static_cast<std::size_t>(sizes[p]), static_cast<Vertex>(p));
    }
    const auto n = static_cast<Vertex>(part.size());
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (part[u] != part[v]) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

Graph cocktail_party(Vertex k) {
    if (k < 1) throw std::invalid_argument("cocktail_party requires k >= 1");
    std::vector<Vertex> sizes(static_cast<std::size_t>(k), 2);
    return complete_multipartite(sizes);
}

Graph random_bounded_degree(Vertex n, Vertex dmax, std::uint64_t seed) {
    require_order(n, 1, "random_bounded_degree");
    if (dmax < 0) throw std::invalid_argument("dmax must be non-negative");
    std::mt19937_64 rng(seed);
    std::vector<Vertex> deg(static_cast<std::size_t>(n), 0);
    std::unordered_set<std::uint64_t> present;
    std::vector<Edge> edges;
    const std::uint64_t attempts = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(dmax);
    const auto un = static_cast<std::uint64_t>(n);
    for (std::uint64_t t = 0; t < attempts; ++t) {
        auto u = static_cast<Vertex>(rng() % un);
        auto v = static_cast<Vertex>(rng() % un);
        if (u == v || deg[u] >= dmax || deg[v] >= dmax) continue;
        Edge e(u, v);
        auto key = (static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint32_t>(e.v);
        if (!present.insert(key).second) continue;
        ++deg[u];
        ++deg[v];
        edges.push_back(e);
    }
    return Graph::from_edges(n, edges);
}

}  // namespace boxicity
