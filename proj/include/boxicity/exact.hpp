#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "boxicity/graph.hpp"
#include "boxicity/interval.hpp"

namespace boxicity {

/// Limits for the exhaustive boxicity oracle.
struct OracleBudget {
    Vertex max_n = 8;
    /// Deepest cover size the search will try.
    int max_k = 8;
    /// Cap on candidate supergraphs examined, i.e. 2^(number of non-edges).
    std::uint64_t max_supergraphs = std::uint64_t{1} << 22;
};

/// Raised when a query falls outside the OracleBudget.
class budget_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Every interval graph on V(g) whose edge set contains E(g), ordered by the
/// set of added non-edges (as a bitmask over g's non-edges in lexicographic order).
std::vector<EdgeSet> interval_supergraphs(const Graph& g, const OracleBudget& budget = {});

struct ExactResult {
    int boxicity = 0;
    /// One realization per dimension; verifies against g.
    std::vector<IntervalRealization> witness;
};

/// Minimum number of interval supergraphs whose edge sets intersect to E(g).
/// Complete graphs have boxicity 0. Throws budget_exceeded when n > max_n,
/// when enumeration would pass max_supergraphs, or when no cover of size
/// <= max_k exists.
ExactResult exact_boxicity(const Graph& g, const OracleBudget& budget = {});

/// Witness of size <= k when box(g) <= k, nullopt otherwise.
std::optional<std::vector<IntervalRealization>> boxicity_at_most(const Graph& g, int k,
                                                                 const OracleBudget& budget = {});

}  // namespace boxicity
