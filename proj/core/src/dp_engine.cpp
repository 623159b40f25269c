#include <algorithm>
#include <unordered_map>

#include "dp_internal.hpp"
#include "thinkit/errors.hpp"

namespace thinkit::detail {

namespace {

struct Arc {
    int from;  // node id in the previous layer, -1 for x_0
    SetMask label;
    std::int64_t weight;
};

bool better_weight(Sense sense, std::int64_t a, std::int64_t b) {
    return sense == Sense::maximize ? a > b : a < b;
}

void add_arc(std::vector<Arc>& arcs, Sense sense, const Arc& arc) {
    for (Arc& existing : arcs) {
        if (existing.from != arc.from) continue;
        if (better_weight(sense, arc.weight, existing.weight) ||
            (arc.weight == existing.weight && label_less(arc.label, existing.label))) {
            existing = arc;
        }
        return;
    }
    arcs.push_back(arc);
}

}  // namespace

std::optional<PathResult> run_layered_dp(int n, Sense sense, const LayeredModel& model,
                                         DpStats* stats, const DpOptions& options) {
    // incoming[s][id] = arcs entering node id of layer s.
    std::vector<std::vector<std::vector<Arc>>> incoming(n + 1);
    std::vector<StateKey> current{model.sink()};
    incoming[n].resize(1);
    std::size_t total_states = 2;  // sink and x_0
    std::size_t total_arcs = 0;
    std::vector<std::size_t> layer_sizes(n + 1, 0);
    layer_sizes[0] = 1;
    layer_sizes[n] = 1;

    std::vector<Predecessor> preds;
    for (int s = n; s >= 1; --s) {
        std::unordered_map<StateKey, int, StateKeyHash> index;
        std::vector<StateKey> previous;
        for (int id = 0; id < static_cast<int>(current.size()); ++id) {
            preds.clear();
            model.expand(s, current[id], preds);
            for (Predecessor& p : preds) {
                int from = -1;
                if (s > 1) {
                    auto [it, inserted] =
                        index.try_emplace(*p.state, static_cast<int>(previous.size()));
                    if (inserted) {
                        previous.push_back(std::move(*p.state));
                        if (++total_states > options.max_states) {
                            throw SizeCapError("state digraph exceeds " +
                                               std::to_string(options.max_states) + " states");
                        }
                    }
                    from = it->second;
                }
                add_arc(incoming[s][id], sense, Arc{from, p.label, p.weight});
            }
            total_arcs += incoming[s][id].size();
        }
        if (s > 1) {
            layer_sizes[s - 1] = previous.size();
            incoming[s - 1].resize(previous.size());
            current = std::move(previous);
        }
    }
    if (stats != nullptr) {
        stats->states = total_states;
        stats->arcs = total_arcs;
        stats->layer_sizes = layer_sizes;
    }

    // Forward pass from x_0 in layer order.
    std::vector<std::vector<std::optional<std::int64_t>>> value(n + 1);
    std::vector<std::vector<int>> choice(n + 1);
    value[0] = {std::int64_t{0}};
    for (int s = 1; s <= n; ++s) {
        const auto& layer = incoming[s];
        value[s].assign(layer.size(), std::nullopt);
        choice[s].assign(layer.size(), -1);
        for (std::size_t id = 0; id < layer.size(); ++id) {
            for (int a = 0; a < static_cast<int>(layer[id].size()); ++a) {
                const Arc& arc = layer[id][a];
                const auto& base = arc.from < 0 ? value[0][0] : value[s - 1][arc.from];
                if (!base) continue;
                const std::int64_t cand = *base + arc.weight;
                auto& best = value[s][id];
                bool take = !best || better_weight(sense, cand, *best);
                if (!take && cand == *best) {
                    const Arc& cur = layer[id][choice[s][id]];
                    take = label_less(arc.label, cur.label) ||
                           (arc.label == cur.label && arc.from < cur.from);
                }
                if (take) {
                    best = cand;
                    choice[s][id] = a;
                }
            }
        }
    }
    if (!value[n][0]) return std::nullopt;

    PathResult result{*value[n][0], std::vector<SetMask>(n + 1, 0)};
    int id = 0;
    for (int s = n; s >= 1; --s) {
        const Arc& arc = incoming[s][id][choice[s][id]];
        result.labels[s] = arc.label;
        id = arc.from;
    }
    return result;
}

DpContext::DpContext(const Graph& g, const Ordering& ord, const Partition& part,
                     const ProblemSpec& problem)
    : n(g.vertex_count()), k(part.class_count()), r(problem.r), spec(&problem) {
    vertex.assign(n + 1, -1);
    cls.assign(n + 1, -1);
    for (int s = 1; s <= n; ++s) {
        vertex[s] = ord.at(s - 1);
        cls[s] = part.class_of(vertex[s]);
    }
    in_class.assign(k, std::vector<int>(n + 1, 0));
    for (int s = 1; s <= n; ++s) {
        for (int i = 0; i < k; ++i) in_class[i][s] = in_class[i][s - 1] + (cls[s] == i ? 1 : 0);
    }
    nbr.assign(n + 1, std::vector<int>(k, 0));
    non_nbr.assign(n + 1, std::vector<int>(k, 0));
    earlier_nbr.assign(n + 1, 0);
    for (int s = 1; s <= n; ++s) {
        for (int q = 1; q < s; ++q) {
            if (g.adjacent(vertex[s], vertex[q])) {
                ++nbr[s][cls[q]];
                earlier_nbr[s] = 1;
            } else {
                ++non_nbr[s][cls[q]];
            }
        }
    }
}

std::int64_t DpContext::arc_weight(int s, SetMask label) const {
    std::int64_t total = 0;
    for (int i = 0; i < spec->objective_count(); ++i) {
        for (int j : mask_indices(label)) {
            total += spec->coefficients[i][j] * spec->objective_weights[i][vertex[s]];
        }
    }
    return total;
}

void BaseState::append_to(StateKey& key) const {
    for (const auto* field : {&cap_lower, &cap_upper, &cup_lower, &cup_upper, &alpha, &beta}) {
        key.insert(key.end(), field->begin(), field->end());
    }
}

BaseState BaseState::read(const DpContext& ctx, const StateKey& key, std::size_t& pos) {
    BaseState st;
    auto take = [&](std::vector<std::int64_t>& field, std::size_t count) {
        field.assign(key.begin() + static_cast<std::ptrdiff_t>(pos),
                     key.begin() + static_cast<std::ptrdiff_t>(pos + count));
        pos += count;
    };
    const std::size_t caps = ctx.spec->cap_bounds.size();
    const std::size_t cups = ctx.spec->cup_bounds.size();
    const std::size_t windows = static_cast<std::size_t>(ctx.k) * ctx.r;
    take(st.cap_lower, caps);
    take(st.cap_upper, caps);
    take(st.cup_lower, cups);
    take(st.cup_upper, cups);
    take(st.alpha, windows);
    take(st.beta, windows);
    return st;
}

BaseState BaseState::initial(const DpContext& ctx) {
    BaseState st;
    for (const WeightBound& b : ctx.spec->cap_bounds) {
        st.cap_lower.push_back(b.lower);
        st.cap_upper.push_back(b.upper);
    }
    for (const WeightBound& b : ctx.spec->cup_bounds) {
        st.cup_lower.push_back(b.lower);
        st.cup_upper.push_back(b.upper);
    }
    st.alpha.assign(static_cast<std::size_t>(ctx.k) * ctx.r, 0);
    st.beta.assign(static_cast<std::size_t>(ctx.k) * ctx.r, 0);
    return st;
}

bool admissible_first(const DpContext& ctx, const BaseState& st, SetMask label) {
    const int l = ctx.cls[1];
    for (int j : mask_indices(label)) {
        if (st.beta[ctx.idx(l, j)] != 0 || st.alpha[ctx.idx(l, j)] != 0) return false;
    }
    const auto& caps = ctx.spec->cap_bounds;
    for (std::size_t c = 0; c < caps.size(); ++c) {
        const std::int64_t b = ctx.bounded(caps[c].weight, 1);
        if ((caps[c].sets & label) == caps[c].sets) {
            if (b < st.cap_lower[c] || b > st.cap_upper[c]) return false;
        } else if (st.cap_lower[c] != 0) {
            return false;
        }
    }
    const auto& cups = ctx.spec->cup_bounds;
    for (std::size_t c = 0; c < cups.size(); ++c) {
        const std::int64_t b = ctx.bounded(cups[c].weight, 1);
        if ((cups[c].sets & label) != 0) {
            if (b < st.cup_lower[c] || b > st.cup_upper[c]) return false;
        } else if (st.cup_lower[c] != 0) {
            return false;
        }
    }
    return true;
}

bool admissible_step(const DpContext& ctx, int s, const BaseState& st, SetMask label) {
    const int l = ctx.cls[s];
    for (int j : mask_indices(label)) {
        if (st.beta[ctx.idx(l, j)] != 0) return false;
        if (st.alpha[ctx.idx(l, j)] >= ctx.in_class[l][s]) return false;
    }
    const auto& caps = ctx.spec->cap_bounds;
    for (std::size_t c = 0; c < caps.size(); ++c) {
        if ((caps[c].sets & label) == caps[c].sets &&
            ctx.bounded(caps[c].weight, s) > st.cap_upper[c]) {
            return false;
        }
    }
    const auto& cups = ctx.spec->cup_bounds;
    for (std::size_t c = 0; c < cups.size(); ++c) {
        if ((cups[c].sets & label) != 0 && ctx.bounded(cups[c].weight, s) > st.cup_upper[c]) {
            return false;
        }
    }
    return true;
}

SetMask matrix_hits(const DpContext& ctx, SetMask label, MatrixEntry entry) {
    SetMask out = 0;
    for (int j = 0; j < ctx.r; ++j) {
        for (int jp : mask_indices(label)) {
            if (ctx.spec->matrix[j][jp] == entry) {
                out |= SetMask{1} << j;
                break;
            }
        }
    }
    return out;
}

namespace {

std::int64_t minus_bound(std::int64_t upper, std::int64_t b) {
    return upper == kUnbounded ? kUnbounded : upper - b;
}

}  // namespace

BaseState base_predecessor(const DpContext& ctx, int s, const BaseState& st, SetMask label,
                           SetMask forbid_neighbors, SetMask require_neighbors) {
    BaseState out = st;
    const int l = ctx.cls[s];
    for (int j = 0; j < ctx.r; ++j) {
        const bool forbid = forbid_neighbors >> j & 1;
        const bool require = require_neighbors >> j & 1;
        for (int i = 0; i < ctx.k; ++i) {
            const int x = ctx.idx(i, j);
            const std::int64_t size_before = ctx.in_class[i][s - 1];
            std::int64_t beta = st.beta[x];
            std::int64_t alpha = st.alpha[x];
            if (i == l) {
                beta = forbid ? std::max<std::int64_t>(beta - 1, ctx.nbr[s][i])
                              : std::max<std::int64_t>(0, beta - 1);
                alpha = std::min(size_before, alpha);
                if (require) alpha = std::max<std::int64_t>(alpha, ctx.non_nbr[s][i]);
            } else {
                if (forbid) beta = std::max<std::int64_t>(beta, ctx.nbr[s][i]);
                if (require) alpha = std::max<std::int64_t>(alpha, ctx.non_nbr[s][i]);
            }
            out.beta[x] = std::min(beta, size_before);
            out.alpha[x] = std::min(alpha, size_before);
        }
    }
    const auto& caps = ctx.spec->cap_bounds;
    for (std::size_t c = 0; c < caps.size(); ++c) {
        if ((caps[c].sets & label) != caps[c].sets) continue;
        const std::int64_t b = ctx.bounded(caps[c].weight, s);
        out.cap_lower[c] = std::max<std::int64_t>(0, st.cap_lower[c] - b);
        out.cap_upper[c] = minus_bound(st.cap_upper[c], b);
    }
    const auto& cups = ctx.spec->cup_bounds;
    for (std::size_t c = 0; c < cups.size(); ++c) {
        if ((cups[c].sets & label) == 0) continue;
        const std::int64_t b = ctx.bounded(cups[c].weight, s);
        out.cup_lower[c] = std::max<std::int64_t>(0, st.cup_lower[c] - b);
        out.cup_upper[c] = minus_bound(st.cup_upper[c], b);
    }
    return out;
}

}  // namespace thinkit::detail
