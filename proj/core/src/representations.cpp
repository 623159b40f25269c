#include "thinkit/representations.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_set>

#include "thinkit/errors.hpp"

namespace thinkit {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

std::vector<Mask> neighbor_masks(const Graph& g) {
    std::vector<Mask> out(g.vertex_count(), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (Vertex u : g.neighbors(v)) out[v] |= bit(u);
    }
    return out;
}

void check_search_size(const Graph& g, const SearchLimits& limits, const char* what) {
    const int n = g.vertex_count();
    if (n > limits.max_vertices || n > 64) {
        throw SizeCapError(std::string("instance too large for exact search (") + what +
                           ": n=" + std::to_string(n) + ", limit " +
                           std::to_string(std::min(limits.max_vertices, 64)) + ")");
    }
}

int max_clique(const std::vector<Mask>& adj, Mask candidates, int best_so_far = 0, int depth = 0) {
    if (candidates == 0) return depth;
    if (depth + std::popcount(candidates) <= best_so_far) return best_so_far;
    const int v = std::countr_zero(candidates);
    int best = std::max(best_so_far, max_clique(adj, candidates & adj[v], best_so_far, depth + 1));
    best = std::max(best, max_clique(adj, candidates & ~bit(v), best, depth));
    return best;
}

bool incompatible(const Graph& g, const Ordering& ord, int pv, int pw, bool strong) {
    const int n = g.vertex_count();
    const Vertex v = ord.at(pv), w = ord.at(pw);
    for (int pz = pw + 1; pz < n; ++pz) {
        const Vertex z = ord.at(pz);
        if (g.adjacent(z, v) && !g.adjacent(z, w)) return true;
    }
    if (strong) {
        for (int px = 0; px < pv; ++px) {
            const Vertex x = ord.at(px);
            if (g.adjacent(x, w) && !g.adjacent(x, v)) return true;
        }
    }
    return false;
}

}  // namespace

IncompatibilityGraph incompatibility_graph(const Graph& g, const Ordering& ord, bool strong) {
    const int n = g.vertex_count();
    if (ord.size() != n) throw InputError("ordering size does not match the graph");
    std::vector<Edge> edges;
    for (int pv = 0; pv < n; ++pv) {
        for (int pw = pv + 1; pw < n; ++pw) {
            if (incompatible(g, ord, pv, pw, strong)) edges.emplace_back(ord.at(pv), ord.at(pw));
        }
    }
    return IncompatibilityGraph{Graph(n, edges), ord, strong};
}

bool is_comparability_ordering(const Graph& g, const Ordering& ord) {
    const int n = g.vertex_count();
    for (int r = 0; r < n; ++r) {
        for (int s = r + 1; s < n; ++s) {
            if (!g.adjacent(ord.at(r), ord.at(s))) continue;
            for (int t = s + 1; t < n; ++t) {
                if (g.adjacent(ord.at(s), ord.at(t)) && !g.adjacent(ord.at(r), ord.at(t))) {
                    return false;
                }
            }
        }
    }
    return true;
}

Partition min_consistent_partition(const Graph& g, const Ordering& ord, bool strong) {
    const int n = g.vertex_count();
    const IncompatibilityGraph inc = incompatibility_graph(g, ord, strong);

    // Comparable pairs, by position: p < q and the two vertices compatible.
    std::vector<std::vector<int>> succ(n);
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            if (!inc.graph.adjacent(ord.at(p), ord.at(q))) succ[p].push_back(q);
        }
    }

    std::vector<int> match_right(n, -1);  // right position -> left position
    std::vector<int> match_left(n, -1);
    std::vector<char> visited(n);
    std::function<bool(int)> augment = [&](int p) {
        for (int q : succ[p]) {
            if (visited[q]) continue;
            visited[q] = 1;
            if (match_right[q] == -1 || augment(match_right[q])) {
                match_right[q] = p;
                match_left[p] = q;
                return true;
            }
        }
        return false;
    };
    for (int p = 0; p < n; ++p) {
        std::fill(visited.begin(), visited.end(), 0);
        augment(p);
    }

    std::vector<int> class_of(n, -1);
    int next_class = 0;
    for (int p = 0; p < n; ++p) {
        if (class_of[ord.at(p)] != -1) continue;
        for (int q = p; q != -1; q = match_left[q]) class_of[ord.at(q)] = next_class;
        ++next_class;
    }
    return Partition(std::move(class_of));
}

namespace {

class ThinnessSearch {
public:
    ThinnessSearch(const Graph& g, bool strong)
        : g_(g), n_(g.vertex_count()), strong_(strong), nbr_(neighbor_masks(g)) {}

    ExactThinness run() {
        const ConsistencyMode mode = strong_ ? ConsistencyMode::strong : ConsistencyMode::weak;
        Ordering best_order = Ordering::identity(n_);
        Partition best_part = min_consistent_partition(g_, best_order, strong_);
        for (const Ordering& candidate : {best_order.reversed(), degree_order()}) {
            Partition part = min_consistent_partition(g_, candidate, strong_);
            if (part.class_count() < best_part.class_count()) {
                best_order = candidate;
                best_part = std::move(part);
            }
        }
        incumbent_ = best_part.class_count();
        if (incumbent_ > 1) {
            seq_.clear();
            inc_.assign(n_, 0);
            before_.assign(n_, 0);
            dfs(0, 0);
            if (found_) {
                best_order = Ordering(best_seq_);
                best_part = min_consistent_partition(g_, best_order, strong_);
            }
        }
        return ExactThinness{best_part.class_count(),
                             ThinRepresentation(g_, best_order, best_part, mode)};
    }

private:
    Ordering degree_order() const {
        std::vector<Vertex> seq(n_);
        std::iota(seq.begin(), seq.end(), 0);
        std::stable_sort(seq.begin(), seq.end(),
                         [&](Vertex a, Vertex b) { return g_.degree(a) < g_.degree(b); });
        return Ordering(std::move(seq));
    }

    void dfs(Mask placed, int lower_bound) {
        if (incumbent_ == 1) return;
        if (static_cast<int>(seq_.size()) == n_) {
            // lower_bound is the clique number of the full incompatibility
            // graph, which equals its chromatic number.
            if (lower_bound < incumbent_) {
                incumbent_ = lower_bound;
                best_seq_ = seq_;
                found_ = true;
            }
            return;
        }
        for (Vertex w = 0; w < n_; ++w) {
            if (placed & bit(w)) continue;
            const Mask after = ~(placed | bit(w)) & full_mask();
            Mask edges = 0;
            for (Vertex v : seq_) {
                bool hit = (nbr_[v] & ~nbr_[w] & after) != 0;
                if (!hit && strong_) hit = (nbr_[w] & ~nbr_[v] & before_[v]) != 0;
                if (hit) edges |= bit(v);
            }
            const int bound = std::max(lower_bound, 1 + max_clique(inc_, edges));
            if (bound >= incumbent_) continue;

            inc_[w] = edges;
            for (Vertex v : seq_) {
                if (edges & bit(v)) inc_[v] |= bit(w);
            }
            before_[w] = placed;
            seq_.push_back(w);
            dfs(placed | bit(w), bound);
            seq_.pop_back();
            for (Vertex v : seq_) inc_[v] &= ~bit(w);
            inc_[w] = 0;
            if (incumbent_ == 1) return;
        }
    }

    Mask full_mask() const { return n_ == 64 ? ~Mask{0} : (bit(n_) - 1); }

    const Graph& g_;
    int n_;
    bool strong_;
    std::vector<Mask> nbr_;
    std::vector<Mask> inc_;
    std::vector<Mask> before_;
    std::vector<Vertex> seq_;
    std::vector<Vertex> best_seq_;
    int incumbent_ = 0;
    bool found_ = false;
};

}  // namespace

ExactThinness thinness_exact(const Graph& g, const SearchLimits& limits) {
    check_search_size(g, limits, "thinness");
    return ThinnessSearch(g, false).run();
}

ExactThinness proper_thinness_exact(const Graph& g, const SearchLimits& limits) {
    check_search_size(g, limits, "proper thinness");
    return ThinnessSearch(g, true).run();
}

std::optional<Ordering> consistent_order_for_partition(const Graph& g, const Partition& part,
                                                       bool strong, const SearchLimits& limits) {
    check_search_size(g, limits, "consistent ordering");
    if (part.size() != g.vertex_count()) {
        throw InputError("partition size does not match the graph");
    }
    const int n = g.vertex_count();
    const std::vector<Mask> nbr = neighbor_masks(g);
    std::vector<Mask> class_mask(part.class_count(), 0);
    for (Vertex v = 0; v < n; ++v) class_mask[part.class_of(v)] |= bit(v);
    const Mask full = n == 64 ? ~Mask{0} : (bit(n) - 1);

    // Whether w may be placed right after the vertices of `placed`. Every
    // triple is decided once its middle vertex is placed: the later vertex
    // is then unplaced (weak) or the earlier one already placed (strong), so
    // the answer depends on the placed set only.
    auto can_place = [&](Mask placed, Vertex w) {
        const Mask unplaced_after = full & ~placed & ~bit(w);
        const Mask same_class = class_mask[part.class_of(w)];
        for (Mask rs = placed & same_class; rs != 0; rs &= rs - 1) {
            const int r = std::countr_zero(rs);
            if (nbr[r] & ~nbr[w] & unplaced_after) return false;
        }
        if (strong) {
            for (Mask ts = unplaced_after & same_class; ts != 0; ts &= ts - 1) {
                const int t = std::countr_zero(ts);
                if (nbr[t] & ~nbr[w] & placed) return false;
            }
        }
        return true;
    };

    std::unordered_set<Mask> dead;
    std::vector<Vertex> seq;
    std::function<bool(Mask)> extend = [&](Mask placed) {
        if (placed == full) return true;
        if (dead.contains(placed)) return false;
        for (Vertex w = 0; w < n; ++w) {
            if ((placed & bit(w)) || !can_place(placed, w)) continue;
            seq.push_back(w);
            if (extend(placed | bit(w))) return true;
            seq.pop_back();
        }
        dead.insert(placed);
        return false;
    };
    if (!extend(0)) return std::nullopt;

    Ordering ord(seq);
    if (!is_consistent(g, ord, part, strong ? ConsistencyMode::strong : ConsistencyMode::weak)) {
        throw std::logic_error("consistent_order_for_partition produced an invalid ordering");
    }
    return ord;
}

NonBetweennessInstance::NonBetweennessInstance(std::vector<std::string> ground_set,
                                               std::vector<Triple> triples)
    : ground_set_(std::move(ground_set)), triples_(std::move(triples)) {
    std::vector<std::string> sorted = ground_set_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InputError("ground set has repeated elements");
    }
    const int size = element_count();
    for (const Triple& t : triples_) {
        for (int e : t) {
            if (e < 0 || e >= size) throw InputError("triple element out of range");
        }
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
            throw InputError("triple has repeated elements");
        }
    }
}

NonBetweennessInstance NonBetweennessInstance::from_names(
    std::vector<std::string> ground_set, const std::vector<std::array<std::string, 3>>& triples) {
    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(ground_set.size()); ++i) index[ground_set[i]] = i;
    std::vector<Triple> resolved;
    for (const auto& t : triples) {
        Triple r{};
        for (int k = 0; k < 3; ++k) {
            auto it = index.find(t[k]);
            if (it == index.end()) throw InputError("unknown element '" + t[k] + "' in triple");
            r[k] = it->second;
        }
        resolved.push_back(r);
    }
    return NonBetweennessInstance(std::move(ground_set), std::move(resolved));
}

NonBetweennessReduction reduce_non_betweenness(const NonBetweennessInstance& inst) {
    const int a = inst.element_count();
    const int m = static_cast<int>(inst.triples().size());
    const int n = a + 3 * m;
    std::vector<int> class_of(n, 0);
    // copies[e] lists every vertex that stands for element e.
    std::vector<std::vector<Vertex>> copies(a);
    for (int e = 0; e < a; ++e) copies[e].push_back(e);
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        const auto& t = inst.triples()[i];
        const Vertex base = a + 3 * i;
        for (int k = 0; k < 3; ++k) {
            class_of[base + k] = i + 1;
            copies[t[k]].push_back(base + k);
        }
        edges.emplace_back(base, base + 2);
    }
    for (const auto& group : copies) {
        for (std::size_t i = 0; i < group.size(); ++i) {
            for (std::size_t j = i + 1; j < group.size(); ++j) edges.emplace_back(group[i], group[j]);
        }
    }
    return NonBetweennessReduction{Graph(n, edges), Partition(std::move(class_of))};
}

bool satisfies_non_betweenness(const NonBetweennessInstance& inst, const std::vector<int>& order) {
    std::vector<int> pos(inst.element_count(), -1);
    for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
    for (const auto& t : inst.triples()) {
        const int x = pos[t[0]], y = pos[t[1]], z = pos[t[2]];
        if ((x < y && y < z) || (z < y && y < x)) return false;
    }
    return true;
}

std::optional<std::vector<int>> solve_non_betweenness_bruteforce(const NonBetweennessInstance& inst,
                                                                 int max_elements) {
    if (inst.element_count() > max_elements) {
        throw SizeCapError("non-betweenness brute force limited to " +
                           std::to_string(max_elements) + " elements");
    }
    std::vector<int> order(inst.element_count());
    std::iota(order.begin(), order.end(), 0);
    do {
        if (satisfies_non_betweenness(inst, order)) return order;
    } while (std::next_permutation(order.begin(), order.end()));
    return std::nullopt;
}

}  // namespace thinkit
