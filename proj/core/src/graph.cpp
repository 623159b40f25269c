#include "thinkit/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "thinkit/errors.hpp"

namespace thinkit {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
    if (n <= 0) {
        throw InputError("graph must have at least one vertex");
    }
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
    nbrs_.resize(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") has an id out of range for n=" + std::to_string(n));
        }
        if (u == v) {
            throw InputError("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
        if (adjacent(u, v)) continue;
        adj_[static_cast<std::size_t>(u) * n + v] = 1;
        adj_[static_cast<std::size_t>(v) * n + u] = 1;
        nbrs_[u].push_back(v);
        nbrs_[v].push_back(u);
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    for (auto& list : nbrs_) std::sort(list.begin(), list.end());
    std::sort(edges_.begin(), edges_.end());
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& list : nbrs_) best = std::max(best, static_cast<int>(list.size()));
    return best;
}

Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<Edge> edges;
    const int m = static_cast<int>(vertices.size());
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (g.adjacent(vertices[i], vertices[j])) edges.emplace_back(i, j);
        }
    }
    return Graph(m, edges);
}

Ordering::Ordering(std::vector<Vertex> sequence) : sequence_(std::move(sequence)) {
    const int n = static_cast<int>(sequence_.size());
    inverse_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        const Vertex v = sequence_[i];
        if (v < 0 || v >= n || inverse_[v] != -1) {
            throw InputError("ordering is not a permutation of 0.." + std::to_string(n - 1));
        }
        inverse_[v] = i;
    }
}

Ordering Ordering::identity(int n) {
    std::vector<Vertex> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    return Ordering(std::move(seq));
}

Ordering Ordering::reversed() const {
    return Ordering(std::vector<Vertex>(sequence_.rbegin(), sequence_.rend()));
}

Partition::Partition(std::vector<int> class_of) : class_of_(std::move(class_of)) {
    int max_id = -1;
    for (int c : class_of_) {
        if (c < 0) throw InputError("negative class id");
        max_id = std::max(max_id, c);
    }
    std::vector<bool> used(max_id + 1, false);
    for (int c : class_of_) used[c] = true;
    for (int c = 0; c <= max_id; ++c) {
        if (!used[c]) throw InputError("class " + std::to_string(c) + " is empty");
    }
    k_ = max_id + 1;
}

Partition Partition::single_class(int n) { return Partition(std::vector<int>(n, 0)); }

Partition Partition::singletons(int n) {
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    return Partition(std::move(ids));
}

std::vector<std::vector<Vertex>> Partition::classes() const {
    std::vector<std::vector<Vertex>> out(k_);
    for (Vertex v = 0; v < size(); ++v) out[class_of_[v]].push_back(v);
    return out;
}

namespace {

void check_dimensions(const Graph& g, const Ordering& ord, const Partition& part) {
    if (ord.size() != g.vertex_count() || part.size() != g.vertex_count()) {
        throw InputError("ordering/partition size does not match the graph (n=" +
                         std::to_string(g.vertex_count()) + ")");
    }
}

bool forward_consistent(const Graph& g, const std::vector<Vertex>& seq, const Partition& part) {
    const int n = static_cast<int>(seq.size());
    std::vector<char> seen_neighbor(part.class_count());
    // Earlier neighbors of v_t inside each class must form a suffix of that
    // class restricted to positions < t.
    for (int t = 0; t < n; ++t) {
        std::fill(seen_neighbor.begin(), seen_neighbor.end(), 0);
        const Vertex vt = seq[t];
        for (int s = 0; s < t; ++s) {
            const Vertex vs = seq[s];
            const int c = part.class_of(vs);
            if (g.adjacent(vt, vs)) {
                seen_neighbor[c] = 1;
            } else if (seen_neighbor[c]) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

bool is_consistent(const Graph& g, const Ordering& ord, const Partition& part) {
    check_dimensions(g, ord, part);
    return forward_consistent(g, ord.sequence(), part);
}

bool is_strongly_consistent(const Graph& g, const Ordering& ord, const Partition& part) {
    check_dimensions(g, ord, part);
    const auto& seq = ord.sequence();
    return forward_consistent(g, seq, part) &&
           forward_consistent(g, std::vector<Vertex>(seq.rbegin(), seq.rend()), part);
}

bool is_consistent(const Graph& g, const Ordering& ord, const Partition& part,
                   ConsistencyMode mode) {
    return mode == ConsistencyMode::strong ? is_strongly_consistent(g, ord, part)
                                           : is_consistent(g, ord, part);
}

bool is_consistent_naive(const Graph& g, const Ordering& ord, const Partition& part) {
    check_dimensions(g, ord, part);
    const int n = g.vertex_count();
    for (int r = 0; r < n; ++r) {
        for (int s = r + 1; s < n; ++s) {
            const Vertex vr = ord.at(r), vs = ord.at(s);
            if (part.class_of(vr) != part.class_of(vs)) continue;
            for (int t = s + 1; t < n; ++t) {
                const Vertex vt = ord.at(t);
                if (g.adjacent(vt, vr) && !g.adjacent(vt, vs)) return false;
            }
        }
    }
    return true;
}

ThinRepresentation::ThinRepresentation(const Graph& g, Ordering ordering, Partition partition,
                                       ConsistencyMode mode)
    : ordering_(std::move(ordering)), partition_(std::move(partition)), mode_(mode) {
    if (!is_consistent(g, ordering_, partition_, mode_)) {
        throw InputError(mode_ == ConsistencyMode::strong
                             ? "ordering and partition are not strongly consistent"
                             : "ordering and partition are not consistent");
    }
}

bool ThinRepresentation::valid_for(const Graph& g) const {
    if (g.vertex_count() != vertex_count()) return false;
    return is_consistent(g, ordering_, partition_, mode_);
}

}  // namespace thinkit
