#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thinkit/graph.hpp"
#include "thinkit/problem_spec.hpp"
#include "thinkit/thin_dp.hpp"

namespace thinkit {

enum class ProblemKind {
    max_weight_stable_set,
    capacitated_coloring,
    list_matrix_partition,
    domination,
};

enum class DominationVariant { plain, independent, total, efficient, perfect };

/// A named problem expressed as a solver instance. Problems with
/// neighborhood bounds need a strong representation.
struct ProblemEncoding {
    std::string name;
    ProblemKind kind;
    ProblemSpec spec;
    std::optional<NeighborhoodBounds> neighborhood;
    DominationVariant variant = DominationVariant::plain;
    /// Problem parameters, kept for the definitional oracle.
    std::vector<std::int64_t> weights;
    std::vector<std::int64_t> capacities;
    std::vector<std::vector<MatrixEntry>> matrix;
    std::vector<std::vector<int>> allowed;
    /// Set when the instance is infeasible before any search.
    std::optional<std::string> trivially_infeasible;
};

/// r = 1, M = [0], L(v) = {∅, {S_0}}, maximize w(S_0). Empty weights mean
/// unit weights.
ProblemEncoding encode_max_weight_stable_set(const Graph& g, std::vector<std::int64_t> weights = {});

/// One set per color, each stable and of size at most capacities[j]; every
/// vertex takes exactly one color.
ProblemEncoding encode_capacitated_coloring(const Graph& g,
                                            const std::vector<std::int64_t>& capacities);

/// Parts 0..r-1 with adjacency matrix `matrix`; allowed[v] lists the parts
/// vertex v may join (exactly one). Zero objective.
ProblemEncoding encode_list_matrix_partition(const Graph& g,
                                             std::vector<std::vector<MatrixEntry>> matrix,
                                             const std::vector<std::vector<int>>& allowed);

/// S_0 = chosen set, S_1 = the rest; minimize w(S_0).
ProblemEncoding encode_domination(const Graph& g, DominationVariant variant,
                                  std::vector<std::int64_t> weights = {});

const char* to_string(DominationVariant variant);
std::optional<DominationVariant> parse_domination_variant(const std::string& name);

/// Routes to solve (no neighborhood bounds) or solve_proper.
std::optional<Solution> solve_encoding(const Graph& g, const ThinRepresentation& rep,
                                       const ProblemEncoding& enc, DpStats* stats = nullptr,
                                       const DpOptions& options = {});

/// part[v] = the single set containing v, or -1.
std::vector<int> decode_partition(const Solution& sol);
/// Members of S_0.
std::vector<Vertex> decode_chosen(const Solution& sol);

/// Definition-level predicates, independent of the encodings.
bool is_stable_set(const Graph& g, const std::vector<Vertex>& set);
bool is_clique(const Graph& g, const std::vector<Vertex>& set);
bool is_dominating_variant(const Graph& g, const std::vector<Vertex>& set,
                           DominationVariant variant);

struct OracleAnswer {
    bool feasible = false;
    std::int64_t objective = 0;
};

/// Exhaustive search straight from the problem's definition. Bounds carried
/// by enc.spec (cap/cup) are evaluated literally too. Throws SizeCapError
/// when the number of candidate assignments exceeds `max_assignments`.
OracleAnswer brute_force_oracle(const Graph& g, const ProblemEncoding& enc,
                                std::uint64_t max_assignments = std::uint64_t{1} << 20);

struct CliqueResult {
    std::vector<Vertex> clique;
    std::int64_t weight;
};

/// Maximum-weight clique by enumerating maximal cliques (Bron-Kerbosch with
/// pivoting). Empty weights mean unit weights. Throws SizeCapError after
/// `max_cliques` maximal cliques.
CliqueResult max_weight_clique(const Graph& g, std::vector<std::int64_t> weights = {},
                               std::uint64_t max_cliques = 1'000'000);

std::uint64_t count_maximal_cliques(const Graph& g, std::uint64_t max_cliques = 1'000'000);

enum class RainbowRoute { product_representation, searched_representation, brute_force };

const char* to_string(RainbowRoute route);

struct RainbowResult {
    /// f[v] as a bitmask over colors 0..t-1.
    std::vector<SetMask> labels;
    std::int64_t weight;
    RainbowRoute route;
};

/// Minimum t-rainbow dominating function via minimum domination of G □ K_t.
/// Uses the proper DP with the product of `rep` when that is strongly
/// consistent, otherwise with an exact proper representation of the product
/// (at most `search_limit` vertices), otherwise exhaustive search.
RainbowResult t_rainbow_domination(const Graph& g, const ThinRepresentation& rep, int t,
                                   int search_limit = 10);

/// Literal check: every vertex with an empty label sees all t colors.
bool is_rainbow_dominating(const Graph& g, int t, const std::vector<SetMask>& labels);

/// Exhaustive minimum over all (2^t)^n labelings.
std::int64_t rainbow_domination_bruteforce(const Graph& g, int t,
                                           std::uint64_t max_assignments = std::uint64_t{1} << 20);

}  // namespace thinkit
