#pragma once

// Shared machinery of the two layered dynamic programs: the precomputed
// per-position counts, the backward state-digraph builder and the base
// (alpha, beta, weight-bound) transitions.

#include <cstdint>
#include <optional>
#include <vector>

#include "thinkit/graph.hpp"
#include "thinkit/problem_spec.hpp"
#include "thinkit/thin_dp.hpp"

namespace thinkit::detail {

using StateKey = std::vector<std::int64_t>;

struct StateKeyHash {
    std::size_t operator()(const StateKey& key) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ key.size();
        for (std::int64_t x : key) {
            h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

/// One admissible arc into a state: the label chosen for v_s, its weight
/// and the predecessor state (nullopt for the source x_0).
struct Predecessor {
    SetMask label;
    std::int64_t weight;
    std::optional<StateKey> state;
};

class LayeredModel {
public:
    virtual ~LayeredModel() = default;
    virtual StateKey sink() const = 0;
    /// Appends every admissible arc ending in `state` (a node of layer s).
    virtual void expand(int s, const StateKey& state, std::vector<Predecessor>& out) const = 0;
};

struct PathResult {
    std::int64_t value;
    /// labels[s] for positions s = 1..n (index 0 unused).
    std::vector<SetMask> labels;
};

std::optional<PathResult> run_layered_dp(int n, Sense sense, const LayeredModel& model,
                                         DpStats* stats, const DpOptions& options);

/// Position-indexed view of a graph with an ordered partition. Positions
/// are 1-based to match the layer numbering.
struct DpContext {
    DpContext(const Graph& g, const Ordering& ord, const Partition& part, const ProblemSpec& spec);

    int n;
    int k;
    int r;
    const ProblemSpec* spec;
    std::vector<Vertex> vertex;              // vertex[s]
    std::vector<int> cls;                    // cls[s]
    std::vector<std::vector<int>> in_class;  // in_class[i][s] = |V^i ∩ {v_1..v_s}|
    std::vector<std::vector<int>> nbr;       // nbr[s][i] = |N(v_s) ∩ V^i ∩ {v_1..v_{s-1}}|
    std::vector<std::vector<int>> non_nbr;   // same for non-neighbors
    std::vector<char> earlier_nbr;           // N(v_s) ∩ {v_1..v_{s-1}} nonempty

    std::int64_t arc_weight(int s, SetMask label) const;
    std::int64_t bounded(int i, int s) const { return spec->bounded_weights[i][vertex[s]]; }
    int idx(int cls_i, int set_j) const { return cls_i * r + set_j; }
};

/// Base state: remaining weight bounds plus the alpha/beta windows.
struct BaseState {
    std::vector<std::int64_t> cap_lower, cap_upper, cup_lower, cup_upper;
    std::vector<std::int64_t> alpha, beta;  // k*r, index cls*r + set

    void append_to(StateKey& key) const;
    /// Reads the fields back starting at `pos`, advancing it.
    static BaseState read(const DpContext& ctx, const StateKey& key, std::size_t& pos);
    static BaseState initial(const DpContext& ctx);
};

/// Conditions 1.1-1.5.
bool admissible_first(const DpContext& ctx, const BaseState& st, SetMask label);
/// Conditions s.1-s.4.
bool admissible_step(const DpContext& ctx, int s, const BaseState& st, SetMask label);

/// Sets j for which some j' in `label` has M[j][j'] == entry.
SetMask matrix_hits(const DpContext& ctx, SetMask label, MatrixEntry entry);

/// Rules s'.1-s'.6: `forbid_neighbors` selects the sets whose beta windows
/// absorb N(v_s), `require_neighbors` the sets whose alpha windows absorb
/// the non-neighbors of v_s.
BaseState base_predecessor(const DpContext& ctx, int s, const BaseState& st, SetMask label,
                           SetMask forbid_neighbors, SetMask require_neighbors);

}  // namespace thinkit::detail
