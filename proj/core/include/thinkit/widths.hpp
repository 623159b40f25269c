#pragma once

#include <cstdint>
#include <vector>

#include "thinkit/graph.hpp"

namespace thinkit {

struct WidthResult {
    int value;
    /// A layout attaining the value.
    Ordering layout;
};

/// Minimum over layouts of the maximum number of edges crossing a prefix
/// cut. Exact, by dynamic programming over vertex subsets. Throws
/// SizeCapError when n > max_vertices.
WidthResult cutwidth_bruteforce(const Graph& g, int max_vertices = 8);

/// Minimum over layouts of the maximum induced matching of a prefix cut.
WidthResult lmimw_bruteforce(const Graph& g, int max_vertices = 8);

/// max over 1 <= s <= n of min over |X| = s of |N(X) \ X|.
int isoperimetric_peak(const Graph& g, int max_vertices = 16);

int cutwidth_of(const Graph& g, const Ordering& layout);
int lmimw_of(const Graph& g, const Ordering& layout);

/// Maximum induced matching of the bipartite graph of edges between
/// `side` (a vertex bitmask) and the rest.
int cut_induced_matching(const Graph& g, std::uint64_t side);

/// Maximum induced matching of g (pairwise non-adjacent disjoint edges).
int max_induced_matching(const Graph& g);

}  // namespace thinkit
