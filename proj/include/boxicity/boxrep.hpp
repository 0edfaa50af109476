#pragma once

#include <optional>
#include <span>
#include <vector>

#include "boxicity/graph.hpp"
#include "boxicity/interval.hpp"

namespace boxicity {

/// Per-vertex axis-parallel boxes, stored dimension-major: dims()[j][v] is
/// the j-th side of vertex v's box.
class BoxRepresentation {
public:
    BoxRepresentation() = default;
    /// Zero-dimensional representation of n vertices (every pair intersects).
    explicit BoxRepresentation(Vertex n) : n_(n) {}
    /// Throws std::invalid_argument if some realization does not cover n vertices.
    BoxRepresentation(Vertex n, std::vector<IntervalRealization> dims);

    Vertex order() const { return n_; }
    std::size_t dimension() const { return dims_.size(); }
    const std::vector<IntervalRealization>& dims() const { return dims_; }
    std::vector<Interval> box(Vertex v) const;

    friend bool operator==(const BoxRepresentation&, const BoxRepresentation&) = default;

private:
    Vertex n_ = 0;
    std::vector<IntervalRealization> dims_;
};

bool boxes_intersect(const BoxRepresentation& b, Vertex u, Vertex v);

/// Intersection graph of the boxes. Dimension 0 gives the complete graph.
EdgeSet box_edges(const BoxRepresentation& b);

struct Mismatch {
    Edge pair;
    bool in_graph = false;
    std::vector<bool> overlap_per_dim;
};

struct VerifyReport {
    bool ok = false;
    std::optional<Mismatch> mismatch;  // lexicographically smallest bad pair

    explicit operator bool() const { return ok; }
};

/// Checks box_edges(b) == E(g). Throws std::invalid_argument on order mismatch.
VerifyReport verify(const Graph& g, const BoxRepresentation& b);

/// Drops dimensions whose interval graph is complete, then structurally
/// identical duplicates (first occurrence kept). Never changes box_edges.
BoxRepresentation prune(const BoxRepresentation& b);

}  // namespace boxicity
