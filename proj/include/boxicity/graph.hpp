#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace boxicity {

using Vertex = std::int32_t;

/// Undirected edge, normalized so that u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

/// Sorted, duplicate-free list of edges.
using EdgeSet = std::vector<Edge>;

EdgeSet complete_edge_set(Vertex n);
EdgeSet intersect(const EdgeSet& a, const EdgeSet& b);

/// Graphs up to this order also carry a packed adjacency bit-matrix.
inline constexpr Vertex kDefaultBitMatrixLimit = 4096;

/// Simple undirected graph over 0..n-1. Immutable once built.
///
/// Neighbors are stored in compressed sparse rows, sorted ascending, so
/// neighbor iteration is cache-friendly and deterministic. Membership uses
/// the bit-matrix when present and binary search over the row otherwise.
class Graph {
public:
    Graph() = default;
    explicit Graph(Vertex n);

    /// Builds a graph from an edge list. Repeated edges collapse into one.
    /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
    static Graph from_edges(Vertex n, std::span<const Edge> edges,
                            Vertex bit_matrix_limit = kDefaultBitMatrixLimit);

    Vertex order() const { return n_; }
    std::size_t size() const { return targets_.size() / 2; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    bool adjacent(Vertex u, Vertex v) const;
    bool has_bit_matrix() const { return !bits_.empty(); }

    EdgeSet edges() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
    }

private:
    Vertex n_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> targets_;
    std::vector<std::uint64_t> bits_;
    std::size_t words_per_row_ = 0;
};

std::size_t max_degree(const Graph& g);

/// Graph on the same vertices with u~v iff their distance in g is 1 or 2.
Graph square(const Graph& g);

}  // namespace boxicity
