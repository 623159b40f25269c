#include "thinkit/problem_spec.hpp"

#include <algorithm>
#include <bit>

#include "thinkit/errors.hpp"

namespace thinkit {

ProblemSpec ProblemSpec::unconstrained(int n, int r, Sense sense) {
    ProblemSpec spec;
    spec.r = r;
    spec.sense = sense;
    std::vector<SetMask> all;
    for (SetMask m = 0; m < (SetMask{1} << r); ++m) all.push_back(m);
    spec.lists.assign(n, all);
    spec.matrix.assign(r, std::vector<MatrixEntry>(r, MatrixEntry::any));
    return spec;
}

NeighborhoodBounds::NeighborhoodBounds(int r)
    : r_(r), open_(static_cast<std::size_t>(r) * r), closed_(static_cast<std::size_t>(r) * r) {
    if (r < 1 || r > kMaxSets) throw InputError("neighborhood bounds: r out of range");
}

const NeighborhoodBound& NeighborhoodBounds::get(Kind kind, int counted, int member) const {
    const auto& table = kind == Kind::open ? open_ : closed_;
    return table[static_cast<std::size_t>(counted) * r_ + member];
}

void NeighborhoodBounds::set(Kind kind, int counted, int member, int lower,
                             std::optional<int> upper) {
    if (counted < 0 || counted >= r_ || member < 0 || member >= r_) {
        throw InputError("neighborhood bound references a set out of range");
    }
    if (lower != 0 && lower != 1) throw InputError("neighborhood lower bound must be 0 or 1");
    if (upper && *upper != 1) throw InputError("neighborhood upper bound must be 1 or inf");
    auto& table = kind == Kind::open ? open_ : closed_;
    table[static_cast<std::size_t>(counted) * r_ + member] = NeighborhoodBound{lower, upper.has_value()};
}

bool NeighborhoodBounds::empty() const {
    auto inactive = [](const NeighborhoodBound& b) { return !b.active(); };
    return std::all_of(open_.begin(), open_.end(), inactive) &&
           std::all_of(closed_.begin(), closed_.end(), inactive);
}

namespace {

void check_bounds(const std::vector<WeightBound>& bounds, const ProblemSpec& spec, const char* kind) {
    for (const WeightBound& b : bounds) {
        const std::string where = std::string(kind) + " bound";
        if (b.weight < 0 || b.weight >= spec.bounded_count()) {
            throw InputError(where + " references bounded weight " + std::to_string(b.weight) +
                             " but p=" + std::to_string(spec.bounded_count()));
        }
        if (b.sets == 0) throw InputError(where + " has an empty family J");
        if (b.sets >> spec.r) throw InputError(where + " references a set index >= r");
        if (b.lower < 0) throw InputError(where + " has a negative lower bound");
        if (b.lower > b.upper) {
            throw InputError(where + " is inverted (l=" + std::to_string(b.lower) +
                             " > u=" + std::to_string(b.upper) + ")");
        }
    }
}

}  // namespace

void validate_spec(const ProblemSpec& spec, const Graph& g) {
    const int n = g.vertex_count();
    const int r = spec.r;
    if (r < 1 || r > kMaxSets) {
        throw InputError("r must be in 1.." + std::to_string(kMaxSets));
    }
    if (static_cast<int>(spec.lists.size()) != n) {
        throw InputError("lists must have one entry per vertex");
    }
    for (Vertex v = 0; v < n; ++v) {
        for (SetMask m : spec.lists[v]) {
            if (m >> r) {
                throw InputError("list of vertex " + std::to_string(v) +
                                 " references a set index >= r");
            }
        }
    }
    if (spec.coefficients.size() != spec.objective_weights.size()) {
        throw InputError("coefficient rows must match the number of objective weights");
    }
    for (std::size_t i = 0; i < spec.objective_weights.size(); ++i) {
        if (static_cast<int>(spec.objective_weights[i].size()) != n) {
            throw InputError("objective weight " + std::to_string(i) + " must have n entries");
        }
        for (auto w : spec.objective_weights[i]) {
            if (w < 0) throw InputError("negative objective weight");
        }
        if (static_cast<int>(spec.coefficients[i].size()) != r) {
            throw InputError("coefficient row " + std::to_string(i) + " must have r entries");
        }
        for (auto c : spec.coefficients[i]) {
            if (c < 0) throw InputError("negative coefficient");
        }
    }
    if (spec.weight_cap < 0) throw InputError("negative weight cap q");
    for (std::size_t i = 0; i < spec.bounded_weights.size(); ++i) {
        if (static_cast<int>(spec.bounded_weights[i].size()) != n) {
            throw InputError("bounded weight " + std::to_string(i) + " must have n entries");
        }
        for (auto b : spec.bounded_weights[i]) {
            if (b < 0) throw InputError("negative bounded weight");
            if (b > spec.weight_cap) {
                throw InputError("bounded weight " + std::to_string(b) + " exceeds q=" +
                                 std::to_string(spec.weight_cap));
            }
        }
    }
    if (static_cast<int>(spec.matrix.size()) != r) throw InputError("matrix must be r x r");
    for (const auto& row : spec.matrix) {
        if (static_cast<int>(row.size()) != r) throw InputError("matrix must be r x r");
    }
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            if (spec.matrix[i][j] != spec.matrix[j][i]) {
                throw InputError("matrix is asymmetric at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
            }
        }
    }
    check_bounds(spec.cap_bounds, spec, "intersection");
    check_bounds(spec.cup_bounds, spec, "union");
}

std::vector<int> mask_indices(SetMask mask) {
    std::vector<int> out;
    for (; mask != 0; mask &= mask - 1) out.push_back(std::countr_zero(mask));
    return out;
}

SetMask mask_from_indices(const std::vector<int>& indices) {
    SetMask m = 0;
    for (int j : indices) m |= SetMask{1} << j;
    return m;
}

bool label_less(SetMask a, SetMask b) {
    const auto ia = mask_indices(a);
    const auto ib = mask_indices(b);
    return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

std::int64_t objective_value(const ProblemSpec& spec, const std::vector<SetMask>& labels) {
    std::int64_t total = 0;
    for (int i = 0; i < spec.objective_count(); ++i) {
        for (std::size_t v = 0; v < labels.size(); ++v) {
            for (int j : mask_indices(labels[v])) {
                total += spec.coefficients[i][j] * spec.objective_weights[i][v];
            }
        }
    }
    return total;
}

std::optional<std::string> find_violation(const Graph& g, const ProblemSpec& spec,
                                          const NeighborhoodBounds* nb,
                                          const std::vector<SetMask>& labels) {
    const int n = g.vertex_count();
    if (static_cast<int>(labels.size()) != n) return "assignment size differs from n";
    for (Vertex v = 0; v < n; ++v) {
        const auto& list = spec.lists[v];
        if (std::find(list.begin(), list.end(), labels[v]) == list.end()) {
            return "vertex " + std::to_string(v) + " takes a combination outside its list";
        }
    }
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            for (int i : mask_indices(labels[u])) {
                for (int j : mask_indices(labels[v])) {
                    const MatrixEntry e = spec.matrix[i][j];
                    if (e == MatrixEntry::zero && g.adjacent(u, v)) {
                        return "edge " + std::to_string(u) + "-" + std::to_string(v) +
                               " between S" + std::to_string(i) + " and S" + std::to_string(j) +
                               " where M=0";
                    }
                    if (e == MatrixEntry::one && !g.adjacent(u, v)) {
                        return "non-edge " + std::to_string(u) + "-" + std::to_string(v) +
                               " between S" + std::to_string(i) + " and S" + std::to_string(j) +
                               " where M=1";
                    }
                }
            }
        }
    }
    auto check = [&](const std::vector<WeightBound>& bounds, bool intersection)
        -> std::optional<std::string> {
        for (const WeightBound& b : bounds) {
            std::int64_t total = 0;
            for (Vertex v = 0; v < n; ++v) {
                const bool in = intersection ? (labels[v] & b.sets) == b.sets
                                             : (labels[v] & b.sets) != 0;
                if (in) total += spec.bounded_weights[b.weight][v];
            }
            if (total < b.lower || total > b.upper) {
                return std::string(intersection ? "intersection" : "union") +
                       " weight bound violated (value " + std::to_string(total) + ")";
            }
        }
        return std::nullopt;
    };
    if (auto bad = check(spec.cap_bounds, true)) return bad;
    if (auto bad = check(spec.cup_bounds, false)) return bad;

    if (nb != nullptr) {
        const int r = spec.r;
        for (Vertex v = 0; v < n; ++v) {
            for (int member : mask_indices(labels[v])) {
                for (int counted = 0; counted < r; ++counted) {
                    int open = 0;
                    for (Vertex u : g.neighbors(v)) {
                        if (labels[u] >> counted & 1) ++open;
                    }
                    const int closed = open + static_cast<int>(labels[v] >> counted & 1);
                    for (auto [kind, count] : {std::pair{NeighborhoodBounds::Kind::open, open},
                                               std::pair{NeighborhoodBounds::Kind::closed, closed}}) {
                        const NeighborhoodBound& bound = nb->get(kind, counted, member);
                        if (count < bound.lower || (bound.upper_is_one && count > 1)) {
                            return "vertex " + std::to_string(v) + " in S" + std::to_string(member) +
                                   " has " + std::to_string(count) + " " +
                                   (kind == NeighborhoodBounds::Kind::open ? "open" : "closed") +
                                   "-neighbors in S" + std::to_string(counted);
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

Solution make_solution(const ProblemSpec& spec, std::vector<SetMask> labels) {
    Solution sol;
    sol.sets.assign(spec.r, {});
    for (std::size_t v = 0; v < labels.size(); ++v) {
        for (int j : mask_indices(labels[v])) sol.sets[j].push_back(static_cast<Vertex>(v));
    }
    sol.objective = objective_value(spec, labels);
    sol.labels = std::move(labels);
    return sol;
}

std::optional<Solution> enumerate_spec(const Graph& g, const ProblemSpec& spec,
                                       const NeighborhoodBounds* nb,
                                       std::uint64_t max_assignments) {
    validate_spec(spec, g);
    const int n = g.vertex_count();
    std::uint64_t total = 1;
    for (const auto& list : spec.lists) {
        if (list.empty()) return std::nullopt;
        total *= list.size();
        if (total > max_assignments) {
            throw SizeCapError("exhaustive enumeration exceeds " +
                               std::to_string(max_assignments) + " assignments");
        }
    }
    std::vector<std::size_t> choice(n, 0);
    std::vector<SetMask> labels(n);
    std::optional<Solution> best;
    while (true) {
        for (Vertex v = 0; v < n; ++v) labels[v] = spec.lists[v][choice[v]];
        if (!find_violation(g, spec, nb, labels)) {
            const std::int64_t value = objective_value(spec, labels);
            const bool better = !best || (spec.sense == Sense::maximize ? value > best->objective
                                                                        : value < best->objective);
            if (better) best = make_solution(spec, labels);
        }
        int v = 0;
        while (v < n && ++choice[v] == spec.lists[v].size()) choice[v++] = 0;
        if (v == n) break;
    }
    return best;
}

}  // namespace thinkit
