#pragma once

#include <optional>
#include <span>
#include <vector>

#include "boxicity/boxrep.hpp"
#include "boxicity/coloring.hpp"
#include "boxicity/graph.hpp"
#include "boxicity/interval.hpp"

namespace boxicity {

/// The two interval realizations built for one color class: vertices of the
/// class sit at points along the forward labeling and along its reversal.
struct ClassRealizations {
    IntervalRealization forward;  // labels 1..h
    IntervalRealization reverse;  // labels h..1
};

/// Audit record of a construction run. Entry i of every list belongs to
/// color i+1 of the coloring of square(G).
struct ConstructionTrace {
    VertexColoring coloring;
    std::vector<std::vector<Vertex>> classes;
    std::vector<Graph> augmented;
    std::vector<ClassRealizations> pairs;
};

struct ConstructOptions {
    ColoringOrder order = ColoringOrder::index;
    bool prune = true;
    /// Augmented graphs are nearly complete, so traces cost O(k n^2) memory.
    bool keep_trace = false;
    /// Build per-class realizations on worker threads. Output is identical.
    bool parallel = false;
};

struct Construction {
    BoxRepresentation representation;
    int colors = 0;                  // k, colors used on square(G)
    std::size_t raw_dimension = 0;   // 2k
    std::optional<ConstructionTrace> trace;
};

/// g plus every edge between distinct vertices outside `cls`. Throws
/// std::invalid_argument on out-of-range or repeated class members.
Graph augmented_graph(const Graph& g, std::span<const Vertex> cls);

/// Realizations for one class. `labeled` lists the class in label order:
/// labeled[j] gets label j+1. Every outside vertex may have at most one
/// neighbor in the class and the class must be independent; violations
/// throw std::invalid_argument naming the vertices involved.
ClassRealizations class_realizations(const Graph& g, std::span<const Vertex> labeled);

/// Box representation of g with dimension at most 2k <= 2*max_degree(g)^2 + 2.
Construction construct_box_representation(const Graph& g, const ConstructOptions& options = {});

/// Recomputes the trace invariants from scratch: list lengths agree with
/// the coloring, each class pair intersects to its augmented graph, and the
/// augmented graphs intersect to g.
bool pipeline_check(const Graph& g, const ConstructionTrace& trace);

}  // namespace boxicity
