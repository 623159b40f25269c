#pragma once

#include <cstdint>
#include <vector>

#include "thinkit/graph.hpp"

namespace thinkit {

struct GraphWithRep {
    Graph graph;
    ThinRepresentation rep;
};

/// Disjoint union; vertices of g2 are shifted by |V(g1)|.
Graph disjoint_union(const Graph& g1, const Graph& g2);
/// Disjoint union plus every edge between the two parts.
Graph join(const Graph& g1, const Graph& g2);
/// Vertex (v, w) gets id v * |V(g2)| + w.
Graph cartesian_product(const Graph& g1, const Graph& g2);

/// Ordering rep1 then rep2, class i of both parts merged. Throws InputError
/// when the modes differ.
GraphWithRep union_with_rep(const Graph& g1, const ThinRepresentation& rep1, const Graph& g2,
                            const ThinRepresentation& rep2);

/// Ordering rep1 then rep2 with k1 + k2 classes. In weak mode a complete g2
/// is merged into class 0 of rep1 instead.
GraphWithRep join_with_rep(const Graph& g1, const ThinRepresentation& rep1, const Graph& g2,
                           const ThinRepresentation& rep2);

/// Lexicographic ordering by (rep1 position, id in g2); vertex (v, w_j) of
/// class i in rep1 goes to class i * |V(g2)| + j. The mode of rep1 is kept.
GraphWithRep cartesian_product_with_rep(const Graph& g1, const ThinRepresentation& rep1,
                                        const Graph& g2, int max_vertices = 4096);

Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_complete(int n);
Graph gen_edgeless(int n);
/// Complement of t disjoint edges; vertices 2i and 2i+1 are the non-adjacent pair.
Graph gen_complement_matching(int t);
/// r x r grid, vertex (x, y) has id x * r + y.
Graph gen_grid(int r);
/// Complete m-ary tree of height h in level order (root 0).
Graph gen_mary_tree(int m, int h);

/// Complete ternary tree of height h plus all ancestor edges, in level
/// order. The representation orders vertices in postorder with one class
/// per depth (strongly consistent, h+1 classes).
GraphWithRep gen_claw_h(int h, int max_vertices = 1 << 12);

/// G_k with ids a_1..a_k = 0..k-1, b_1..b_k = k..2k-1, v_1..v_{k+1} = 2k..3k.
/// W is a clique, a_1 and b_1 see v_1, a_i sees a_{i-1} and v_1..v_i (same
/// for b). The representation uses the identity order and classes A, B, W.
GraphWithRep gen_Gk(int k);

/// Exact rational number num/den with den > 0.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator<(const Rational& a, const Rational& b);
};

struct Interval {
    Rational left;
    Rational right;
};

/// Closed intervals indexed by vertex id.
class IntervalModel {
public:
    /// Throws InputError on an empty model, a zero denominator or left > right.
    explicit IntervalModel(std::vector<Interval> intervals);

    int size() const { return static_cast<int>(intervals_.size()); }
    const Interval& at(Vertex v) const { return intervals_[v]; }

    /// Endpoints replaced by distinct ranks 0..2n-1. Equal values put left
    /// endpoints before right ones (closed intervals keep touching), then
    /// break ties by vertex id.
    std::vector<std::pair<int, int>> canonical() const;

private:
    std::vector<Interval> intervals_;
};

Graph interval_graph(const IntervalModel& model);

/// Interval model of claw_h (ids as in gen_claw_h): every vertex's interval
/// strictly contains its descendants' intervals, siblings are disjoint.
IntervalModel claw_h_interval_model(int h);

/// Length of the longest chain of strictly nested intervals.
int max_nesting_depth(const IntervalModel& model);

/// Strong representation of the interval graph of `model`: class = length
/// of the longest nested chain ending in the interval (minus one), order by
/// right endpoint. Throws InputError when `g` is not the model's graph.
ThinRepresentation interval_to_proper_thin(const IntervalModel& model, const Graph& g);

}  // namespace thinkit
