#pragma once

// Bitmask graph kernels for oracle-scale graphs (n <= 64).

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "boxicity/graph.hpp"

namespace boxicity::detail {

using Mask = std::uint64_t;

inline constexpr Vertex kMaxMaskVertices = 64;

inline Mask bit(int i) { return Mask{1} << i; }

std::vector<Mask> adjacency_masks(const Graph& g);

bool is_chordal(std::span<const Mask> adj);

/// Pivoted Bron-Kerbosch. Returns false (with `out` partially filled) as soon
/// as more than `limit` maximal cliques have been found.
bool maximal_cliques(std::span<const Mask> adj, std::vector<Mask>& out, std::size_t limit);

/// Maximal cliques in an order where each vertex's cliques are consecutive,
/// or nullopt if the graph is not an interval graph.
std::optional<std::vector<Mask>> consecutive_clique_order(std::span<const Mask> adj);

}  // namespace boxicity::detail
