#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace thinkit {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on dense vertex ids 0..n-1.
///
/// Adjacency is stored both as a dense matrix (O(1) tests) and as sorted
/// neighbor lists. Instances are immutable once built.
class Graph {
public:
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) are merged. Throws InputError on n == 0, ids out of
    /// range or loops.
    Graph(int n, std::span<const Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool adjacent(Vertex u, Vertex v) const {
        return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
    }

    const std::vector<Vertex>& neighbors(Vertex v) const { return nbrs_[v]; }
    int degree(Vertex v) const { return static_cast<int>(nbrs_[v].size()); }
    int max_degree() const;

    /// Edges as (u, v) with u < v, sorted lexicographically.
    const std::vector<Edge>& edges() const { return edges_; }

    bool is_complete() const { return edge_count() == n_ * (n_ - 1) / 2; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_;
    std::vector<std::uint8_t> adj_;
    std::vector<std::vector<Vertex>> nbrs_;
    std::vector<Edge> edges_;
};

Graph build_graph(int n, std::span<const Edge> edges);
Graph complement(const Graph& g);
/// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// A total order v_1 < ... < v_n of the vertex set.
class Ordering {
public:
    /// Throws InputError unless `sequence` is a permutation of 0..n-1.
    explicit Ordering(std::vector<Vertex> sequence);

    static Ordering identity(int n);

    int size() const { return static_cast<int>(sequence_.size()); }
    Vertex at(int position) const { return sequence_[position]; }
    int position(Vertex v) const { return inverse_[v]; }
    const std::vector<Vertex>& sequence() const { return sequence_; }
    Ordering reversed() const;

    friend bool operator==(const Ordering&, const Ordering&) = default;

private:
    std::vector<Vertex> sequence_;
    std::vector<int> inverse_;
};

/// A partition of the vertex set into k non-empty classes 0..k-1.
class Partition {
public:
    /// Throws InputError if some class id in 0..max is unused or negative.
    explicit Partition(std::vector<int> class_of);

    static Partition single_class(int n);
    static Partition singletons(int n);

    int size() const { return static_cast<int>(class_of_.size()); }
    int class_count() const { return k_; }
    int class_of(Vertex v) const { return class_of_[v]; }
    const std::vector<int>& assignment() const { return class_of_; }
    std::vector<std::vector<Vertex>> classes() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> class_of_;
    int k_ = 0;
};

enum class ConsistencyMode { weak, strong };

/// True iff there is no positional triple r < s < t with v_r, v_s in one
/// class, v_t ~ v_r and v_t !~ v_s. O(n^2).
bool is_consistent(const Graph& g, const Ordering& ord, const Partition& part);

/// Consistent for the ordering and for its reverse.
bool is_strongly_consistent(const Graph& g, const Ordering& ord, const Partition& part);

bool is_consistent(const Graph& g, const Ordering& ord, const Partition& part,
                   ConsistencyMode mode);

/// Literal O(n^3) triple scan; reference implementation for tests.
bool is_consistent_naive(const Graph& g, const Ordering& ord, const Partition& part);

/// An ordering and a partition that are (strongly) consistent for a graph.
/// Validated on construction; the graph itself is not stored.
class ThinRepresentation {
public:
    ThinRepresentation(const Graph& g, Ordering ordering, Partition partition,
                       ConsistencyMode mode);

    const Ordering& ordering() const { return ordering_; }
    const Partition& partition() const { return partition_; }
    ConsistencyMode mode() const { return mode_; }
    int class_count() const { return partition_.class_count(); }
    int vertex_count() const { return ordering_.size(); }

    /// Re-checks the representation against `g` (which may differ from the
    /// graph it was built for).
    bool valid_for(const Graph& g) const;

private:
    Ordering ordering_;
    Partition partition_;
    ConsistencyMode mode_;
};

}  // namespace thinkit
