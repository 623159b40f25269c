#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "thinkit/graph.hpp"

namespace thinkit {

enum class Sense { minimize, maximize };

enum class MatrixEntry : std::uint8_t { zero, one, any };

/// Bit j set <=> set S_j (0-based) is part of the combination.
using SetMask = std::uint32_t;

inline constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();
inline constexpr int kMaxSets = 8;

/// l <= b_weight(op_{j in sets} S_j) <= u, op being intersection or union.
struct WeightBound {
    int weight = 0;
    SetMask sets = 0;
    std::int64_t lower = 0;
    std::int64_t upper = kUnbounded;

    friend bool operator==(const WeightBound&, const WeightBound&) = default;
};

/// Instance of the list matrix partition framework solved by the layered
/// dynamic programs.
struct ProblemSpec {
    int r = 1;
    Sense sense = Sense::maximize;
    /// objective_weights[i][v] = w_i(v); t rows of n entries.
    std::vector<std::vector<std::int64_t>> objective_weights;
    /// coefficients[i][j] = c_ij; t rows of r entries.
    std::vector<std::vector<std::int64_t>> coefficients;
    /// bounded_weights[i][v] = b_i(v) <= weight_cap; p rows of n entries.
    std::vector<std::vector<std::int64_t>> bounded_weights;
    std::int64_t weight_cap = 0;
    /// lists[v] = allowed combinations for v (may contain the empty one).
    std::vector<std::vector<SetMask>> lists;
    /// Symmetric r x r matrix.
    std::vector<std::vector<MatrixEntry>> matrix;
    std::vector<WeightBound> cap_bounds;
    std::vector<WeightBound> cup_bounds;

    int objective_count() const { return static_cast<int>(objective_weights.size()); }
    int bounded_count() const { return static_cast<int>(bounded_weights.size()); }

    /// r sets, all-`*` matrix, every vertex may take any combination, no
    /// weights and no bounds.
    static ProblemSpec unconstrained(int n, int r, Sense sense = Sense::maximize);

    friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// One neighborhood-count restriction: lower in {0, 1}, upper in {1, inf}.
struct NeighborhoodBound {
    int lower = 0;
    bool upper_is_one = false;

    bool active() const { return lower != 0 || upper_is_one; }
    friend bool operator==(const NeighborhoodBound&, const NeighborhoodBound&) = default;
};

/// Restrictions  l <= |S_counted ∩ N(v)| <= u  (open) and the closed-
/// neighborhood analogue, for every v in S_member.
class NeighborhoodBounds {
public:
    enum class Kind { open, closed };

    explicit NeighborhoodBounds(int r = 1);

    int set_count() const { return r_; }
    const NeighborhoodBound& get(Kind kind, int counted, int member) const;
    /// Throws InputError when lower/upper are outside their domains or the
    /// indices are out of range.
    void set(Kind kind, int counted, int member, int lower, std::optional<int> upper);
    bool empty() const;

    friend bool operator==(const NeighborhoodBounds&, const NeighborhoodBounds&) = default;

private:
    int r_;
    std::vector<NeighborhoodBound> open_;
    std::vector<NeighborhoodBound> closed_;
};

struct Solution {
    /// sets[j] = sorted members of S_j.
    std::vector<std::vector<Vertex>> sets;
    std::int64_t objective = 0;
    /// labels[v] = combination chosen for vertex v.
    std::vector<SetMask> labels;
};

/// Throws InputError naming the first violated requirement.
void validate_spec(const ProblemSpec& spec, const Graph& g);

/// Sorted 0-based indices of a combination.
std::vector<int> mask_indices(SetMask mask);
SetMask mask_from_indices(const std::vector<int>& indices);
/// Lexicographic order of the sorted index arrays; the empty combination
/// comes first.
bool label_less(SetMask a, SetMask b);

std::int64_t objective_value(const ProblemSpec& spec, const std::vector<SetMask>& labels);

/// Definition-level feasibility check of an assignment, independent of any
/// solver. Returns a description of the first violation, or nullopt.
std::optional<std::string> find_violation(const Graph& g, const ProblemSpec& spec,
                                          const NeighborhoodBounds* nb,
                                          const std::vector<SetMask>& labels);

Solution make_solution(const ProblemSpec& spec, std::vector<SetMask> labels);

/// Exhaustive search over every combination of list entries. Throws
/// SizeCapError when the number of assignments exceeds `max_assignments`.
std::optional<Solution> enumerate_spec(const Graph& g, const ProblemSpec& spec,
                                       const NeighborhoodBounds* nb = nullptr,
                                       std::uint64_t max_assignments = std::uint64_t{1} << 20);

}  // namespace thinkit
