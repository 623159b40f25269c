#pragma once

#include <optional>

#include "thinkit/graph.hpp"
#include "thinkit/problem_spec.hpp"
#include "thinkit/thin_dp.hpp"

namespace thinkit {

/// True iff for every same-class pair v_s < v_r,
/// N[v_s] ∩ {v_1..v_s} contains N[v_r] ∩ {v_1..v_s}.
bool has_monotone_neighborhoods(const Graph& g, const Ordering& ord, const Partition& part);

/// Optimal solution of `spec` plus the neighborhood-count restrictions `nb`
/// on a graph with a strongly consistent representation, or nullopt when
/// infeasible.
///
/// Throws InputError when the representation is not strongly consistent for
/// `g`, the spec is invalid or `nb` has a different number of sets.
std::optional<Solution> solve_proper(const Graph& g, const ThinRepresentation& rep,
                                     const ProblemSpec& spec, const NeighborhoodBounds& nb,
                                     DpStats* stats = nullptr, const DpOptions& options = {});

}  // namespace thinkit
