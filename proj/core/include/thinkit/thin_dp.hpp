#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "thinkit/graph.hpp"
#include "thinkit/problem_spec.hpp"

namespace thinkit {

struct DpOptions {
    /// Hard cap on materialized states; exceeding it throws SizeCapError.
    std::size_t max_states = 4'000'000;
};

struct DpStats {
    /// Materialized nodes including the source x_0 and the sink.
    std::size_t states = 0;
    std::size_t arcs = 0;
    /// layer_sizes[s] = |X_s|, s = 0..n.
    std::vector<std::size_t> layer_sizes;
};

/// Optimal solution of `spec` on `g` given a consistent ordering and
/// partition, or nullopt when infeasible.
///
/// The state digraph is generated backward from the sink: only states from
/// which the sink is reachable are created. Among equal-value optima the
/// trace with lexicographically smallest labels (checked from the last
/// vertex backward) is returned. Throws InputError when the spec is invalid
/// or the representation is not consistent for `g`.
std::optional<Solution> solve(const Graph& g, const ThinRepresentation& rep,
                              const ProblemSpec& spec, DpStats* stats = nullptr,
                              const DpOptions& options = {});

/// `spec` with 0 and 1 swapped in the adjacency matrix.
ProblemSpec swap_matrix(const ProblemSpec& spec);

/// Solves `spec` interpreted on the complement of `g`, using a
/// representation of `g` itself.
std::optional<Solution> solve_on_complement(const Graph& g, const ThinRepresentation& rep,
                                            const ProblemSpec& spec, DpStats* stats = nullptr,
                                            const DpOptions& options = {});

/// Natural log of n^{2kr+1} (n q)^{2^{r+2} p}, times n^{k^2 r + 2kr} when
/// `neighborhood` is set.
double state_count_bound_log(int n, int k, int r, int p, std::int64_t q, bool neighborhood);

/// Compares the state tuples of layers 1..n (stats.states minus the source)
/// with the bound above.
bool within_state_count_bound(const DpStats& stats, int n, int k, const ProblemSpec& spec,
                              bool neighborhood);

}  // namespace thinkit
