#include "thinkit/families.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "thinkit/errors.hpp"

namespace thinkit {

namespace {

__extension__ using Wide = __int128;

std::vector<Edge> shifted_edges(const Graph& g, int offset) {
    std::vector<Edge> out;
    for (auto [u, v] : g.edges()) out.emplace_back(u + offset, v + offset);
    return out;
}

std::vector<Vertex> concat_orders(const Ordering& a, const Ordering& b) {
    std::vector<Vertex> seq = a.sequence();
    for (Vertex v : b.sequence()) seq.push_back(v + a.size());
    return seq;
}

void require_same_mode(const ThinRepresentation& a, const ThinRepresentation& b) {
    if (a.mode() != b.mode()) throw InputError("representations have different modes");
}

}  // namespace

bool operator==(const Rational& a, const Rational& b) {
    return Wide{a.num} * b.den == Wide{b.num} * a.den;
}

bool operator<(const Rational& a, const Rational& b) {
    return Wide{a.num} * b.den < Wide{b.num} * a.den;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    auto edges = shifted_edges(g1, 0);
    auto more = shifted_edges(g2, g1.vertex_count());
    edges.insert(edges.end(), more.begin(), more.end());
    return Graph(g1.vertex_count() + g2.vertex_count(), edges);
}

Graph join(const Graph& g1, const Graph& g2) {
    auto edges = shifted_edges(g1, 0);
    auto more = shifted_edges(g2, g1.vertex_count());
    edges.insert(edges.end(), more.begin(), more.end());
    for (Vertex u = 0; u < g1.vertex_count(); ++u) {
        for (Vertex w = 0; w < g2.vertex_count(); ++w) edges.emplace_back(u, g1.vertex_count() + w);
    }
    return Graph(g1.vertex_count() + g2.vertex_count(), edges);
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
    const int n2 = g2.vertex_count();
    std::vector<Edge> edges;
    for (auto [u, v] : g1.edges()) {
        for (Vertex w = 0; w < n2; ++w) edges.emplace_back(u * n2 + w, v * n2 + w);
    }
    for (Vertex v = 0; v < g1.vertex_count(); ++v) {
        for (auto [a, b] : g2.edges()) edges.emplace_back(v * n2 + a, v * n2 + b);
    }
    return Graph(g1.vertex_count() * n2, edges);
}

GraphWithRep union_with_rep(const Graph& g1, const ThinRepresentation& rep1, const Graph& g2,
                            const ThinRepresentation& rep2) {
    require_same_mode(rep1, rep2);
    Graph g = disjoint_union(g1, g2);
    std::vector<int> cls = rep1.partition().assignment();
    const auto& second = rep2.partition().assignment();
    cls.insert(cls.end(), second.begin(), second.end());
    ThinRepresentation rep(g, Ordering(concat_orders(rep1.ordering(), rep2.ordering())),
                           Partition(std::move(cls)), rep1.mode());
    return {std::move(g), std::move(rep)};
}

GraphWithRep join_with_rep(const Graph& g1, const ThinRepresentation& rep1, const Graph& g2,
                           const ThinRepresentation& rep2) {
    require_same_mode(rep1, rep2);
    Graph g = join(g1, g2);
    std::vector<int> cls = rep1.partition().assignment();
    const bool merge = rep1.mode() == ConsistencyMode::weak && g2.is_complete();
    for (int c : rep2.partition().assignment()) {
        cls.push_back(merge ? 0 : c + rep1.class_count());
    }
    ThinRepresentation rep(g, Ordering(concat_orders(rep1.ordering(), rep2.ordering())),
                           Partition(std::move(cls)), rep1.mode());
    return {std::move(g), std::move(rep)};
}

GraphWithRep cartesian_product_with_rep(const Graph& g1, const ThinRepresentation& rep1,
                                        const Graph& g2, int max_vertices) {
    const int n1 = g1.vertex_count();
    const int n2 = g2.vertex_count();
    if (static_cast<std::int64_t>(n1) * n2 > max_vertices) {
        throw SizeCapError("product has more than " + std::to_string(max_vertices) + " vertices");
    }
    Graph g = cartesian_product(g1, g2);
    std::vector<Vertex> seq;
    for (Vertex v : rep1.ordering().sequence()) {
        for (Vertex w = 0; w < n2; ++w) seq.push_back(v * n2 + w);
    }
    std::vector<int> cls(n1 * n2);
    for (Vertex v = 0; v < n1; ++v) {
        for (Vertex w = 0; w < n2; ++w) cls[v * n2 + w] = rep1.partition().class_of(v) * n2 + w;
    }
    ThinRepresentation rep(g, Ordering(std::move(seq)), Partition(std::move(cls)), rep1.mode());
    return {std::move(g), std::move(rep)};
}

Graph gen_path(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph gen_cycle(int n) {
    if (n < 3) throw InputError("a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph gen_complete(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return Graph(n, edges);
}

Graph gen_edgeless(int n) { return Graph(n, {}); }

Graph gen_complement_matching(int t) {
    if (t < 1) throw InputError("t must be at least 1");
    std::vector<Edge> edges;
    for (int u = 0; u < 2 * t; ++u) {
        for (int v = u + 1; v < 2 * t; ++v) {
            if (u / 2 != v / 2) edges.emplace_back(u, v);
        }
    }
    return Graph(2 * t, edges);
}

Graph gen_grid(int r) {
    if (r < 1) throw InputError("grid side must be at least 1");
    std::vector<Edge> edges;
    for (int x = 0; x < r; ++x) {
        for (int y = 0; y < r; ++y) {
            if (x + 1 < r) edges.emplace_back(x * r + y, (x + 1) * r + y);
            if (y + 1 < r) edges.emplace_back(x * r + y, x * r + y + 1);
        }
    }
    return Graph(r * r, edges);
}

Graph gen_mary_tree(int m, int h) {
    if (m < 1 || h < 0) throw InputError("m-ary tree needs m >= 1 and h >= 0");
    std::int64_t n = 1;
    std::int64_t level = 1;
    for (int d = 0; d < h; ++d) {
        level *= m;
        n += level;
        if (n > (1 << 20)) throw SizeCapError("m-ary tree too large");
    }
    std::vector<Edge> edges;
    for (std::int64_t v = 1; v < n; ++v) {
        edges.emplace_back(static_cast<int>((v - 1) / m), static_cast<int>(v));
    }
    return Graph(static_cast<int>(n), edges);
}

GraphWithRep gen_claw_h(int h, int max_vertices) {
    if (h < 1) throw InputError("claw_h needs h >= 1");
    std::int64_t n = 0;
    std::vector<int> level_start;
    for (std::int64_t d = 0, width = 1; d <= h; ++d, width *= 3) {
        level_start.push_back(static_cast<int>(n));
        n += width;
        if (n > max_vertices) {
            throw SizeCapError("claw_h has more than " + std::to_string(max_vertices) + " vertices");
        }
    }
    // Level-order ids: children of v are 3v+1, 3v+2, 3v+3.
    std::vector<int> depth(n, 0);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        depth[v] = depth[(v - 1) / 3] + 1;
        for (int a = (v - 1) / 3;; a = (a - 1) / 3) {
            edges.emplace_back(a, v);
            if (a == 0) break;
        }
    }
    Graph g(static_cast<int>(n), edges);
    std::vector<Vertex> post;
    std::function<void(int)> visit = [&](int v) {
        if (depth[v] < h) {
            for (int c = 1; c <= 3; ++c) visit(3 * v + c);
        }
        post.push_back(v);
    };
    visit(0);
    ThinRepresentation rep(g, Ordering(std::move(post)), Partition(depth), ConsistencyMode::strong);
    return {std::move(g), std::move(rep)};
}

GraphWithRep gen_Gk(int k) {
    if (k < 1) throw InputError("G_k needs k >= 1");
    const int n = 3 * k + 1;
    auto a = [](int i) { return i - 1; };
    auto b = [k](int i) { return k + i - 1; };
    auto w = [k](int j) { return 2 * k + j - 1; };
    std::vector<Edge> edges;
    for (int i = 1; i <= k + 1; ++i) {
        for (int j = i + 1; j <= k + 1; ++j) edges.emplace_back(w(i), w(j));
    }
    for (int i = 1; i <= k; ++i) {
        if (i > 1) {
            edges.emplace_back(a(i), a(i - 1));
            edges.emplace_back(b(i), b(i - 1));
        }
        for (int j = 1; j <= i; ++j) {
            edges.emplace_back(a(i), w(j));
            edges.emplace_back(b(i), w(j));
        }
    }
    Graph g(n, edges);
    std::vector<int> cls(n);
    for (int v = 0; v < n; ++v) cls[v] = v < k ? 0 : (v < 2 * k ? 1 : 2);
    ThinRepresentation rep(g, Ordering::identity(n), Partition(std::move(cls)),
                           ConsistencyMode::strong);
    return {std::move(g), std::move(rep)};
}

IntervalModel::IntervalModel(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
    if (intervals_.empty()) throw InputError("interval model is empty");
    for (auto& iv : intervals_) {
        for (Rational* x : {&iv.left, &iv.right}) {
            if (x->den == 0) throw InputError("interval endpoint has a zero denominator");
            if (x->den < 0) {
                x->num = -x->num;
                x->den = -x->den;
            }
        }
        if (iv.right < iv.left) throw InputError("interval with left > right");
    }
}

std::vector<std::pair<int, int>> IntervalModel::canonical() const {
    struct End {
        Rational value;
        int side;  // 0 = left, 1 = right
        Vertex v;
    };
    std::vector<End> ends;
    for (Vertex v = 0; v < size(); ++v) {
        ends.push_back({intervals_[v].left, 0, v});
        ends.push_back({intervals_[v].right, 1, v});
    }
    std::sort(ends.begin(), ends.end(), [](const End& x, const End& y) {
        if (x.value < y.value) return true;
        if (y.value < x.value) return false;
        if (x.side != y.side) return x.side < y.side;
        return x.v < y.v;
    });
    std::vector<std::pair<int, int>> out(size());
    for (int rank = 0; rank < static_cast<int>(ends.size()); ++rank) {
        auto& slot = out[ends[rank].v];
        (ends[rank].side == 0 ? slot.first : slot.second) = rank;
    }
    return out;
}

Graph interval_graph(const IntervalModel& model) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < model.size(); ++u) {
        for (Vertex v = u + 1; v < model.size(); ++v) {
            const Interval& a = model.at(u);
            const Interval& b = model.at(v);
            if (!(a.right < b.left) && !(b.right < a.left)) edges.emplace_back(u, v);
        }
    }
    return Graph(model.size(), edges);
}

IntervalModel claw_h_interval_model(int h) {
    const GraphWithRep claw = gen_claw_h(h);
    const int n = claw.graph.vertex_count();
    const std::int64_t spacing = 2 * h + 4;
    std::vector<Interval> iv(n);
    std::vector<int> depth(n, 0);
    for (int v = 1; v < n; ++v) depth[v] = depth[(v - 1) / 3] + 1;
    // Leaves get unit intervals left to right; an inner vertex at depth d
    // covers its subtree and sticks out by h - d on both sides.
    std::int64_t next_leaf = 0;
    std::function<std::pair<std::int64_t, std::int64_t>(int)> place = [&](int v) {
        std::int64_t lo = 0;
        std::int64_t hi = 0;
        if (depth[v] == h) {
            lo = spacing * next_leaf;
            hi = lo + 1;
            ++next_leaf;
        } else {
            lo = place(3 * v + 1).first;
            place(3 * v + 2);
            hi = place(3 * v + 3).second;
        }
        const std::int64_t pad = h - depth[v];
        iv[v] = {Rational{lo - pad, 1}, Rational{hi + pad, 1}};
        return std::pair{lo, hi};
    };
    place(0);
    return IntervalModel(std::move(iv));
}

namespace {

// depth_label[v] = 1 + max label over intervals strictly containing v
// (canonical endpoints), computed outermost first.
std::vector<int> nesting_labels(const IntervalModel& model) {
    const auto ends = model.canonical();
    const int n = model.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int la = ends[a].second - ends[a].first;
        const int lb = ends[b].second - ends[b].first;
        return la != lb ? la > lb : a < b;
    });
    std::vector<int> label(n, 1);
    for (int x = 0; x < n; ++x) {
        const int v = order[x];
        for (int y = 0; y < x; ++y) {
            const int u = order[y];
            if (ends[u].first < ends[v].first && ends[v].second < ends[u].second) {
                label[v] = std::max(label[v], label[u] + 1);
            }
        }
    }
    return label;
}

}  // namespace

int max_nesting_depth(const IntervalModel& model) {
    const auto label = nesting_labels(model);
    return *std::max_element(label.begin(), label.end());
}

ThinRepresentation interval_to_proper_thin(const IntervalModel& model, const Graph& g) {
    if (model.size() != g.vertex_count() || !(interval_graph(model) == g)) {
        throw InputError("graph is not the intersection graph of the interval model");
    }
    const auto ends = model.canonical();
    const auto label = nesting_labels(model);
    std::vector<Vertex> seq(model.size());
    std::iota(seq.begin(), seq.end(), 0);
    std::sort(seq.begin(), seq.end(),
              [&](Vertex a, Vertex b) { return ends[a].second < ends[b].second; });
    std::vector<int> cls(label.size());
    for (std::size_t v = 0; v < label.size(); ++v) cls[v] = label[v] - 1;
    return ThinRepresentation(g, Ordering(std::move(seq)), Partition(std::move(cls)),
                              ConsistencyMode::strong);
}

}  // namespace thinkit
