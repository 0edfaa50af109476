#pragma once

#include <cstdint>
#include <span>

#include "boxicity/graph.hpp"

namespace boxicity {

Graph path_graph(Vertex n);
/// Requires n >= 3.
Graph cycle_graph(Vertex n);
Graph complete_graph(Vertex n);
Graph edgeless_graph(Vertex n);

/// Parts of the given sizes, consecutive vertex ranges; u~v iff in different parts.
Graph complete_multipartite(std::span<const Vertex> sizes);

/// K_{k x 2}: complete k-partite graph with parts {2i, 2i+1}.
Graph cocktail_party(Vertex k);

/// Random graph with max_degree <= dmax, reproducible per seed.
///
/// Draws n*dmax candidate pairs from std::mt19937_64(seed), each endpoint
/// taken as `draw % n`, and keeps a pair when it is not a loop, not already
/// present and both endpoints still have degree below dmax. mt19937_64 is
/// fully specified by the standard, so output is identical across platforms.
Graph random_bounded_degree(Vertex n, Vertex dmax, std::uint64_t seed);

}  // namespace boxicity
