#pragma once

#include <span>
#include <vector>

#include "boxicity/graph.hpp"

namespace boxicity {

/// Vertex coloring with colors 1..k, every color used at least once.
class VertexColoring {
public:
    VertexColoring() = default;
    /// Throws std::invalid_argument if a color is < 1 or some color in 1..k is unused.
    explicit VertexColoring(std::vector<int> colors);

    int color(Vertex v) const { return colors_[v]; }
    int num_colors() const { return k_; }
    Vertex size() const { return static_cast<Vertex>(colors_.size()); }
    const std::vector<int>& colors() const { return colors_; }

    bool is_proper_for(const Graph& g) const;

    friend bool operator==(const VertexColoring&, const VertexColoring&) = default;

private:
    std::vector<int> colors_;
    int k_ = 0;
};

enum class ColoringOrder { index, smallest_last };

/// Smallest-last (degeneracy) ordering: repeatedly strip a minimum-degree
/// vertex, then color in reverse stripping order.
std::vector<Vertex> smallest_last_order(const Graph& g);

/// First-fit coloring along `order`. Throws std::invalid_argument unless
/// `order` is a permutation of the vertices.
VertexColoring greedy_color(const Graph& g, std::span<const Vertex> order);
VertexColoring greedy_color(const Graph& g, ColoringOrder order = ColoringOrder::index);

/// classes[i] holds the vertices of color i+1, ascending.
std::vector<std::vector<Vertex>> color_classes(const VertexColoring& c);

}  // namespace boxicity
