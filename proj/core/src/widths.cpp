#include "thinkit/widths.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "thinkit/errors.hpp"

namespace thinkit {

namespace {

using Mask = std::uint64_t;

void check_size(const Graph& g, int max_vertices, const char* what) {
    if (g.vertex_count() > max_vertices || g.vertex_count() > 30) {
        throw SizeCapError(std::string(what) + ": instance too large for exhaustive search (n=" +
                           std::to_string(g.vertex_count()) + ")");
    }
}

// conflict[a] = edges that cannot be in a matching together with edge a.
int max_matching_avoiding(const std::vector<Mask>& conflict, Mask allowed, int taken, int best) {
    if (allowed == 0) return std::max(best, taken);
    if (taken + std::popcount(allowed) <= best) return best;
    const int e = std::countr_zero(allowed);
    best = max_matching_avoiding(conflict, allowed & ~conflict[e] & ~(Mask{1} << e), taken + 1, best);
    return max_matching_avoiding(conflict, allowed & ~(Mask{1} << e), taken, best);
}

int induced_matching(const std::vector<Edge>& edges, auto&& linked) {
    if (edges.size() > 64) throw SizeCapError("induced matching: more than 64 candidate edges");
    const std::size_t m = edges.size();
    std::vector<Mask> conflict(m, 0);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            if (a == b) continue;
            const auto [x1, y1] = edges[a];
            const auto [x2, y2] = edges[b];
            const bool clash = x1 == x2 || x1 == y2 || y1 == x2 || y1 == y2 || linked(x1, x2) ||
                               linked(x1, y2) || linked(y1, x2) || linked(y1, y2);
            if (clash) conflict[a] |= Mask{1} << b;
        }
    }
    const Mask all = m == 64 ? ~Mask{0} : (Mask{1} << m) - 1;
    return max_matching_avoiding(conflict, all, 0, 0);
}

int cut_edges(const Graph& g, Mask side) {
    int count = 0;
    for (auto [u, v] : g.edges()) count += ((side >> u) & 1) != ((side >> v) & 1);
    return count;
}

// Minimum over layouts of the maximum of cut_value over the layout's
// prefixes, by DP over subsets.
WidthResult layout_dp(const Graph& g, auto&& cut_value) {
    const int n = g.vertex_count();
    const Mask full = (Mask{1} << n) - 1;
    std::vector<int> best(Mask{1} << n, std::numeric_limits<int>::max());
    std::vector<signed char> last(Mask{1} << n, -1);
    best[0] = 0;
    for (Mask s = 1; s <= full; ++s) {
        const int here = s == full ? 0 : cut_value(s);
        for (Mask rest = s; rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const int cand = std::max(here, best[s & ~(Mask{1} << v)]);
            if (cand < best[s]) {
                best[s] = cand;
                last[s] = static_cast<signed char>(v);
            }
        }
    }
    std::vector<Vertex> seq(n);
    Mask s = full;
    for (int pos = n - 1; pos >= 0; --pos) {
        seq[pos] = last[s];
        s &= ~(Mask{1} << last[s]);
    }
    return {best[full], Ordering(std::move(seq))};
}

}  // namespace

int cut_induced_matching(const Graph& g, Mask side) {
    std::vector<Edge> crossing;
    for (auto [u, v] : g.edges()) {
        if (((side >> u) & 1) != ((side >> v) & 1)) crossing.emplace_back(u, v);
    }
    // Only crossing edges belong to the cut graph.
    return induced_matching(crossing, [&](Vertex a, Vertex b) {
        return g.adjacent(a, b) && (((side >> a) & 1) != ((side >> b) & 1));
    });
}

int max_induced_matching(const Graph& g) {
    return induced_matching(g.edges(), [&](Vertex a, Vertex b) { return g.adjacent(a, b); });
}

WidthResult cutwidth_bruteforce(const Graph& g, int max_vertices) {
    check_size(g, max_vertices, "cutwidth");
    return layout_dp(g, [&](Mask s) { return cut_edges(g, s); });
}

WidthResult lmimw_bruteforce(const Graph& g, int max_vertices) {
    check_size(g, max_vertices, "linear MIM-width");
    return layout_dp(g, [&](Mask s) { return cut_induced_matching(g, s); });
}

int isoperimetric_peak(const Graph& g, int max_vertices) {
    check_size(g, max_vertices, "isoperimetric peak");
    const int n = g.vertex_count();
    std::vector<Mask> nbr(n, 0);
    for (auto [u, v] : g.edges()) {
        nbr[u] |= Mask{1} << v;
        nbr[v] |= Mask{1} << u;
    }
    std::vector<int> best(n + 1, std::numeric_limits<int>::max());
    for (Mask x = 1; x < (Mask{1} << n); ++x) {
        Mask boundary = 0;
        for (Mask rest = x; rest != 0; rest &= rest - 1) boundary |= nbr[std::countr_zero(rest)];
        const int size = std::popcount(x);
        best[size] = std::min(best[size], std::popcount(boundary & ~x));
    }
    return *std::max_element(best.begin() + 1, best.end());
}

int cutwidth_of(const Graph& g, const Ordering& layout) {
    int out = 0;
    Mask prefix = 0;
    for (int i = 0; i + 1 < layout.size(); ++i) {
        prefix |= Mask{1} << layout.at(i);
        out = std::max(out, cut_edges(g, prefix));
    }
    return out;
}

int lmimw_of(const Graph& g, const Ordering& layout) {
    if (g.vertex_count() > 64) throw SizeCapError("linear MIM-width: more than 64 vertices");
    int out = 0;
    Mask prefix = 0;
    for (int i = 0; i + 1 < layout.size(); ++i) {
        prefix |= Mask{1} << layout.at(i);
        out = std::max(out, cut_induced_matching(g, prefix));
    }
    return out;
}

}  // namespace thinkit
