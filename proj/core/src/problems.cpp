#include "thinkit/problems.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "thinkit/errors.hpp"
#include "thinkit/families.hpp"
#include "thinkit/proper_dp.hpp"
#include "thinkit/representations.hpp"

namespace thinkit {

namespace {

std::vector<std::int64_t> unit_if_empty(std::vector<std::int64_t> weights, int n) {
    if (weights.empty()) weights.assign(n, 1);
    if (static_cast<int>(weights.size()) != n) throw InputError("weights must have n entries");
    for (auto w : weights) {
        if (w < 0) throw InputError("negative weight");
    }
    return weights;
}

std::vector<SetMask> singletons(const std::vector<int>& parts) {
    std::vector<SetMask> out;
    for (int j : parts) out.push_back(SetMask{1} << j);
    std::sort(out.begin(), out.end(), label_less);
    return out;
}

std::uint64_t checked_power(std::uint64_t base, int exponent, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (int i = 0; i < exponent; ++i) {
        total *= base;
        if (total > cap) {
            throw SizeCapError("exhaustive search exceeds " + std::to_string(cap) + " assignments");
        }
    }
    return total;
}

bool bounds_hold(const ProblemSpec& spec, const std::vector<SetMask>& labels) {
    auto holds = [&](const std::vector<WeightBound>& bounds, bool intersection) {
        for (const WeightBound& b : bounds) {
            std::int64_t total = 0;
            for (std::size_t v = 0; v < labels.size(); ++v) {
                const bool in = intersection ? (labels[v] & b.sets) == b.sets
                                             : (labels[v] & b.sets) != 0;
                if (in) total += spec.bounded_weights[b.weight][v];
            }
            if (total < b.lower || total > b.upper) return false;
        }
        return true;
    };
    return holds(spec.cap_bounds, true) && holds(spec.cup_bounds, false);
}

}  // namespace

ProblemEncoding encode_max_weight_stable_set(const Graph& g, std::vector<std::int64_t> weights) {
    const int n = g.vertex_count();
    ProblemEncoding enc;
    enc.name = "max-weight-stable-set";
    enc.kind = ProblemKind::max_weight_stable_set;
    enc.weights = unit_if_empty(std::move(weights), n);
    enc.spec.r = 1;
    enc.spec.sense = Sense::maximize;
    enc.spec.objective_weights = {enc.weights};
    enc.spec.coefficients = {{1}};
    enc.spec.lists.assign(n, {0, 1});
    enc.spec.matrix = {{MatrixEntry::zero}};
    return enc;
}

ProblemEncoding encode_capacitated_coloring(const Graph& g,
                                            const std::vector<std::int64_t>& capacities) {
    const int n = g.vertex_count();
    const int s = static_cast<int>(capacities.size());
    if (s < 1 || s > kMaxSets) {
        throw InputError("number of colors must be in 1.." + std::to_string(kMaxSets));
    }
    ProblemEncoding enc;
    enc.name = "capacitated-coloring";
    enc.kind = ProblemKind::capacitated_coloring;
    enc.capacities = capacities;
    enc.spec.r = s;
    enc.spec.sense = Sense::maximize;
    enc.spec.matrix.assign(s, std::vector<MatrixEntry>(s, MatrixEntry::any));
    std::vector<int> all(s);
    std::iota(all.begin(), all.end(), 0);
    enc.spec.lists.assign(n, singletons(all));
    enc.spec.bounded_weights = {std::vector<std::int64_t>(n, 1)};
    enc.spec.weight_cap = 1;
    std::int64_t total = 0;
    for (int j = 0; j < s; ++j) {
        enc.spec.matrix[j][j] = MatrixEntry::zero;
        if (capacities[j] < 0) throw InputError("negative capacity");
        enc.spec.cap_bounds.push_back({0, SetMask{1} << j, 0, capacities[j]});
        total += capacities[j];
    }
    if (total < n) {
        enc.trivially_infeasible = "total capacity " + std::to_string(total) + " is below n=" +
                                   std::to_string(n);
    }
    return enc;
}

ProblemEncoding encode_list_matrix_partition(const Graph& g,
                                             std::vector<std::vector<MatrixEntry>> matrix,
                                             const std::vector<std::vector<int>>& allowed) {
    const int n = g.vertex_count();
    const int r = static_cast<int>(matrix.size());
    if (static_cast<int>(allowed.size()) != n) {
        throw InputError("allowed parts must have one entry per vertex");
    }
    ProblemEncoding enc;
    enc.name = "list-matrix-partition";
    enc.kind = ProblemKind::list_matrix_partition;
    enc.matrix = matrix;
    enc.allowed = allowed;
    enc.spec.r = r;
    enc.spec.sense = Sense::maximize;
    enc.spec.matrix = std::move(matrix);
    for (Vertex v = 0; v < n; ++v) {
        for (int j : allowed[v]) {
            if (j < 0 || j >= r) throw InputError("allowed part out of range");
        }
        if (allowed[v].empty() && !enc.trivially_infeasible) {
            enc.trivially_infeasible = "vertex " + std::to_string(v) + " has an empty list";
        }
        enc.spec.lists.push_back(singletons(allowed[v]));
    }
    validate_spec(enc.spec, g);
    return enc;
}

ProblemEncoding encode_domination(const Graph& g, DominationVariant variant,
                                  std::vector<std::int64_t> weights) {
    const int n = g.vertex_count();
    ProblemEncoding enc;
    enc.name = std::string(to_string(variant)) + "-domination";
    enc.kind = ProblemKind::domination;
    enc.variant = variant;
    enc.weights = unit_if_empty(std::move(weights), n);
    enc.spec.r = 2;
    enc.spec.sense = Sense::minimize;
    enc.spec.objective_weights = {enc.weights};
    enc.spec.coefficients = {{1, 0}};
    enc.spec.lists.assign(n, {1, 2});
    enc.spec.matrix.assign(2, std::vector<MatrixEntry>(2, MatrixEntry::any));
    NeighborhoodBounds nb(2);
    using K = NeighborhoodBounds::Kind;
    switch (variant) {
        case DominationVariant::independent:
            enc.spec.matrix[0][0] = MatrixEntry::zero;
            [[fallthrough]];
        case DominationVariant::plain:
            nb.set(K::closed, 0, 1, 1, std::nullopt);
            break;
        case DominationVariant::total:
            nb.set(K::open, 0, 0, 1, std::nullopt);
            nb.set(K::open, 0, 1, 1, std::nullopt);
            break;
        case DominationVariant::efficient:
            nb.set(K::closed, 0, 0, 1, 1);
            nb.set(K::closed, 0, 1, 1, 1);
            break;
        case DominationVariant::perfect:
            nb.set(K::closed, 0, 1, 1, 1);
            break;
    }
    enc.neighborhood = nb;
    return enc;
}

const char* to_string(DominationVariant variant) {
    switch (variant) {
        case DominationVariant::plain: return "plain";
        case DominationVariant::independent: return "independent";
        case DominationVariant::total: return "total";
        case DominationVariant::efficient: return "efficient";
        case DominationVariant::perfect: return "perfect";
    }
    return "?";
}

std::optional<DominationVariant> parse_domination_variant(const std::string& name) {
    for (auto v : {DominationVariant::plain, DominationVariant::independent,
                   DominationVariant::total, DominationVariant::efficient,
                   DominationVariant::perfect}) {
        if (name == to_string(v)) return v;
    }
    return std::nullopt;
}

std::optional<Solution> solve_encoding(const Graph& g, const ThinRepresentation& rep,
                                       const ProblemEncoding& enc, DpStats* stats,
                                       const DpOptions& options) {
    if (enc.trivially_infeasible) return std::nullopt;
    if (enc.neighborhood) return solve_proper(g, rep, enc.spec, *enc.neighborhood, stats, options);
    return solve(g, rep, enc.spec, stats, options);
}

std::vector<int> decode_partition(const Solution& sol) {
    std::vector<int> part(sol.labels.size(), -1);
    for (std::size_t v = 0; v < sol.labels.size(); ++v) {
        if (std::popcount(sol.labels[v]) == 1) part[v] = std::countr_zero(sol.labels[v]);
    }
    return part;
}

std::vector<Vertex> decode_chosen(const Solution& sol) {
    return sol.sets.empty() ? std::vector<Vertex>{} : sol.sets[0];
}

bool is_stable_set(const Graph& g, const std::vector<Vertex>& set) {
    for (std::size_t a = 0; a < set.size(); ++a) {
        for (std::size_t b = a + 1; b < set.size(); ++b) {
            if (g.adjacent(set[a], set[b])) return false;
        }
    }
    return true;
}

bool is_clique(const Graph& g, const std::vector<Vertex>& set) {
    for (std::size_t a = 0; a < set.size(); ++a) {
        for (std::size_t b = a + 1; b < set.size(); ++b) {
            if (set[a] == set[b] || !g.adjacent(set[a], set[b])) return false;
        }
    }
    return true;
}

bool is_dominating_variant(const Graph& g, const std::vector<Vertex>& set,
                           DominationVariant variant) {
    const int n = g.vertex_count();
    std::vector<char> in(n, 0);
    for (Vertex v : set) in[v] = 1;
    if (variant == DominationVariant::independent && !is_stable_set(g, set)) return false;
    for (Vertex v = 0; v < n; ++v) {
        int open = 0;
        for (Vertex u : g.neighbors(v)) open += in[u];
        const int closed = open + in[v];
        switch (variant) {
            case DominationVariant::plain:
            case DominationVariant::independent:
                if (closed == 0) return false;
                break;
            case DominationVariant::total:
                if (open == 0) return false;
                break;
            case DominationVariant::efficient:
                if (closed != 1) return false;
                break;
            case DominationVariant::perfect:
                if (!in[v] && open != 1) return false;
                break;
        }
    }
    return true;
}

OracleAnswer brute_force_oracle(const Graph& g, const ProblemEncoding& enc,
                                std::uint64_t max_assignments) {
    const int n = g.vertex_count();
    OracleAnswer best;
    auto offer = [&](std::int64_t value, Sense sense) {
        if (!best.feasible || (sense == Sense::maximize ? value > best.objective
                                                        : value < best.objective)) {
            best.feasible = true;
            best.objective = value;
        }
    };

    if (enc.kind == ProblemKind::max_weight_stable_set || enc.kind == ProblemKind::domination) {
        checked_power(2, n, max_assignments);
        std::vector<Vertex> set;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            set.clear();
            std::int64_t weight = 0;
            for (Vertex v = 0; v < n; ++v) {
                if (mask >> v & 1) {
                    set.push_back(v);
                    weight += enc.weights[v];
                }
            }
            if (enc.kind == ProblemKind::max_weight_stable_set) {
                if (is_stable_set(g, set)) offer(weight, Sense::maximize);
            } else if (is_dominating_variant(g, set, enc.variant)) {
                offer(weight, Sense::minimize);
            }
        }
        return best;
    }

    // Partition problems: every vertex in exactly one part.
    const int r = enc.spec.r;
    std::vector<std::vector<int>> options(n);
    for (Vertex v = 0; v < n; ++v) {
        if (enc.kind == ProblemKind::capacitated_coloring) {
            options[v].resize(r);
            std::iota(options[v].begin(), options[v].end(), 0);
        } else {
            options[v] = enc.allowed[v];
        }
        if (options[v].empty()) return best;
    }
    checked_power(static_cast<std::uint64_t>(r), n, max_assignments);
    std::vector<std::size_t> choice(n, 0);
    std::vector<int> part(n);
    std::vector<SetMask> labels(n);
    while (true) {
        for (Vertex v = 0; v < n; ++v) {
            part[v] = options[v][choice[v]];
            labels[v] = SetMask{1} << part[v];
        }
        bool ok = true;
        if (enc.kind == ProblemKind::capacitated_coloring) {
            std::vector<std::int64_t> used(r, 0);
            for (Vertex v = 0; v < n; ++v) ++used[part[v]];
            for (int j = 0; j < r && ok; ++j) ok = used[j] <= enc.capacities[j];
            for (auto [u, v] : g.edges()) ok = ok && part[u] != part[v];
        } else {
            for (Vertex u = 0; u < n && ok; ++u) {
                for (Vertex v = u + 1; v < n && ok; ++v) {
                    const MatrixEntry e = enc.matrix[part[u]][part[v]];
                    if (e == MatrixEntry::zero) ok = !g.adjacent(u, v);
                    if (e == MatrixEntry::one) ok = g.adjacent(u, v);
                }
            }
        }
        if (ok && bounds_hold(enc.spec, labels)) {
            std::int64_t value = 0;
            for (int i = 0; i < enc.spec.objective_count(); ++i) {
                for (Vertex v = 0; v < n; ++v) {
                    value += enc.spec.coefficients[i][part[v]] * enc.spec.objective_weights[i][v];
                }
            }
            offer(value, enc.spec.sense);
        }
        int v = 0;
        while (v < n && ++choice[v] == options[v].size()) choice[v++] = 0;
        if (v == n) break;
    }
    return best;
}

namespace {

// Bron-Kerbosch with Tomita pivoting; calls `report` for every maximal clique.
class CliqueEnumerator {
public:
    CliqueEnumerator(const Graph& g, std::uint64_t cap) : g_(g), cap_(cap) {}

    void run(const std::function<void(const std::vector<Vertex>&)>& report) {
        std::vector<Vertex> p(g_.vertex_count());
        std::iota(p.begin(), p.end(), 0);
        std::vector<Vertex> r;
        expand(r, p, {}, report);
    }

private:
    const Graph& g_;
    std::uint64_t cap_;
    std::uint64_t found_ = 0;

    void expand(std::vector<Vertex>& r, std::vector<Vertex> p, std::vector<Vertex> x,
                const std::function<void(const std::vector<Vertex>&)>& report) {
        if (p.empty() && x.empty()) {
            if (++found_ > cap_) {
                throw SizeCapError("more than " + std::to_string(cap_) + " maximal cliques");
            }
            report(r);
            return;
        }
        Vertex pivot = -1;
        int best = -1;
        for (const auto* pool : {&p, &x}) {
            for (Vertex u : *pool) {
                int count = 0;
                for (Vertex v : p) count += g_.adjacent(u, v);
                if (count > best) {
                    best = count;
                    pivot = u;
                }
            }
        }
        std::vector<Vertex> candidates;
        for (Vertex v : p) {
            if (!g_.adjacent(pivot, v)) candidates.push_back(v);
        }
        for (Vertex v : candidates) {
            std::vector<Vertex> np, nx;
            for (Vertex u : p) {
                if (g_.adjacent(u, v)) np.push_back(u);
            }
            for (Vertex u : x) {
                if (g_.adjacent(u, v)) nx.push_back(u);
            }
            r.push_back(v);
            expand(r, std::move(np), std::move(nx), report);
            r.pop_back();
            p.erase(std::find(p.begin(), p.end(), v));
            x.push_back(v);
        }
    }
};

}  // namespace

CliqueResult max_weight_clique(const Graph& g, std::vector<std::int64_t> weights,
                               std::uint64_t max_cliques) {
    weights = unit_if_empty(std::move(weights), g.vertex_count());
    CliqueResult best{{}, -1};
    CliqueEnumerator(g, max_cliques).run([&](const std::vector<Vertex>& clique) {
        std::int64_t w = 0;
        for (Vertex v : clique) w += weights[v];
        std::vector<Vertex> sorted = clique;
        std::sort(sorted.begin(), sorted.end());
        if (w > best.weight || (w == best.weight && sorted < best.clique)) {
            best = {std::move(sorted), w};
        }
    });
    return best;
}

std::uint64_t count_maximal_cliques(const Graph& g, std::uint64_t max_cliques) {
    std::uint64_t count = 0;
    CliqueEnumerator(g, max_cliques).run([&](const std::vector<Vertex>&) { ++count; });
    return count;
}

const char* to_string(RainbowRoute route) {
    switch (route) {
        case RainbowRoute::product_representation: return "proper-dp/product-representation";
        case RainbowRoute::searched_representation: return "proper-dp/searched-representation";
        case RainbowRoute::brute_force: return "brute-force";
    }
    return "?";
}

bool is_rainbow_dominating(const Graph& g, int t, const std::vector<SetMask>& labels) {
    const SetMask all = (SetMask{1} << t) - 1;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (labels[v] != 0) continue;
        SetMask seen = 0;
        for (Vertex u : g.neighbors(v)) seen |= labels[u];
        if ((seen & all) != all) return false;
    }
    return true;
}

std::int64_t rainbow_domination_bruteforce(const Graph& g, int t, std::uint64_t max_assignments) {
    const int n = g.vertex_count();
    if (t < 1 || t > 16) throw InputError("t must be in 1..16");
    checked_power(std::uint64_t{1} << t, n, max_assignments);
    std::vector<SetMask> labels(n, 0);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    const SetMask top = SetMask{1} << t;
    while (true) {
        if (is_rainbow_dominating(g, t, labels)) {
            std::int64_t w = 0;
            for (SetMask f : labels) w += std::popcount(f);
            best = std::min(best, w);
        }
        int v = 0;
        while (v < n && ++labels[v] == top) labels[v++] = 0;
        if (v == n) break;
    }
    return best;
}

RainbowResult t_rainbow_domination(const Graph& g, const ThinRepresentation& rep, int t,
                                   int search_limit) {
    if (t < 1 || t > 16) throw InputError("t must be in 1..16");
    const int n = g.vertex_count();
    const Graph kt = gen_complete(t);
    GraphWithRep product = cartesian_product_with_rep(g, rep, kt);
    RainbowResult result{std::vector<SetMask>(n, 0), 0, RainbowRoute::brute_force};

    std::optional<ThinRepresentation> strong;
    if (is_strongly_consistent(product.graph, product.rep.ordering(), product.rep.partition())) {
        strong.emplace(product.graph, product.rep.ordering(), product.rep.partition(),
                       ConsistencyMode::strong);
        result.route = RainbowRoute::product_representation;
    } else if (product.graph.vertex_count() <= search_limit) {
        strong.emplace(proper_thinness_exact(product.graph, {search_limit}).representation);
        result.route = RainbowRoute::searched_representation;
    }

    if (strong) {
        const ProblemEncoding enc = encode_domination(product.graph, DominationVariant::plain);
        const auto sol = solve_encoding(product.graph, *strong, enc);
        if (!sol) throw std::logic_error("domination is always feasible");
        for (Vertex x : decode_chosen(*sol)) result.labels[x / t] |= SetMask{1} << (x % t);
        result.weight = sol->objective;
    } else {
        // Exhaustive search over labelings, tracking a witness.
        const SetMask top = SetMask{1} << t;
        checked_power(top, n, std::uint64_t{1} << 20);
        std::vector<SetMask> labels(n, 0);
        result.weight = std::numeric_limits<std::int64_t>::max();
        while (true) {
            if (is_rainbow_dominating(g, t, labels)) {
                std::int64_t w = 0;
                for (SetMask f : labels) w += std::popcount(f);
                if (w < result.weight) {
                    result.weight = w;
                    result.labels = labels;
                }
            }
            int v = 0;
            while (v < n && ++labels[v] == top) labels[v++] = 0;
            if (v == n) break;
        }
    }
    if (!is_rainbow_dominating(g, t, result.labels)) {
        throw std::logic_error("decoded labeling is not rainbow dominating");
    }
    return result;
}

}  // namespace thinkit
