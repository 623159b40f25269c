#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "thinkit/graph.hpp"

namespace thinkit {

/// Auxiliary graph whose proper colorings are exactly the partitions that
/// are consistent (strong: strongly consistent) with `source_order`.
struct IncompatibilityGraph {
    Graph graph;
    Ordering source_order;
    bool strong = false;
};

/// For v < w: vw is an edge iff some z > w has z ~ v and z !~ w; in strong
/// mode also iff some x < v has x ~ w and x !~ v.
IncompatibilityGraph incompatibility_graph(const Graph& g, const Ordering& ord, bool strong);

/// True iff no r < s < t (positions) has rs, st edges and rt a non-edge.
bool is_comparability_ordering(const Graph& g, const Ordering& ord);

/// Minimum-size partition (strongly) consistent with `ord`.
///
/// Classes are chains of the order {u before w, uw not incompatible}, found
/// by a maximum bipartite matching (Dilworth). Class ids are numbered by
/// first appearance along `ord`.
Partition min_consistent_partition(const Graph& g, const Ordering& ord, bool strong);

struct SearchLimits {
    int max_vertices = 10;
};

struct ExactThinness {
    int k;
    ThinRepresentation representation;
};

/// Minimum number of classes over all orderings (branch and bound over
/// ordering prefixes). Throws SizeCapError above limits.max_vertices.
ExactThinness thinness_exact(const Graph& g, const SearchLimits& limits = {});
ExactThinness proper_thinness_exact(const Graph& g, const SearchLimits& limits = {});

/// Some ordering (strongly) consistent with `part`, if one exists.
/// Default cap is 12 vertices.
std::optional<Ordering> consistent_order_for_partition(const Graph& g, const Partition& part,
                                                       bool strong,
                                                       const SearchLimits& limits = {12});

/// Ground set plus ordered triples, stored as indices into the ground set.
class NonBetweennessInstance {
public:
    using Triple = std::array<int, 3>;

    /// Throws InputError on repeated names, out-of-range indices or a triple
    /// with repeated elements.
    NonBetweennessInstance(std::vector<std::string> ground_set, std::vector<Triple> triples);

    /// Convenience constructor resolving triples given by element name.
    static NonBetweennessInstance from_names(
        std::vector<std::string> ground_set,
        const std::vector<std::array<std::string, 3>>& triples);

    int element_count() const { return static_cast<int>(ground_set_.size()); }
    const std::vector<std::string>& ground_set() const { return ground_set_; }
    const std::vector<Triple>& triples() const { return triples_; }

private:
    std::vector<std::string> ground_set_;
    std::vector<Triple> triples_;
};

/// Graph and partition of the hardness reduction.
///
/// Vertex layout: element a of the ground set is vertex a (class 0); the
/// copies of the i-th triple (x, y, z) are |A| + 3i + {0, 1, 2} (class i+1).
struct NonBetweennessReduction {
    Graph graph;
    Partition partition;
};

NonBetweennessReduction reduce_non_betweenness(const NonBetweennessInstance& inst);

/// Total order of the ground set (element indices, first to last) in which
/// no triple has its middle element between the other two; enumerates all
/// permutations. Throws SizeCapError when |A| > max_elements.
std::optional<std::vector<int>> solve_non_betweenness_bruteforce(
    const NonBetweennessInstance& inst, int max_elements = 8);

/// True iff `order` (element indices) satisfies every triple of `inst`.
bool satisfies_non_betweenness(const NonBetweennessInstance& inst, const std::vector<int>& order);

}  // namespace thinkit
