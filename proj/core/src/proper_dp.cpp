#include "thinkit/proper_dp.hpp"

#include <algorithm>

#include "dp_internal.hpp"
#include "thinkit/errors.hpp"

namespace thinkit {

namespace {

using detail::BaseState;
using detail::DpContext;
using detail::Predecessor;
using detail::StateKey;
using Kind = NeighborhoodBounds::Kind;

// Base fields plus gamma, gamma2 (k*r, index cls*r + set) and the two
// region families lambda ("at least one of S_j in the region") and mu ("at
// most one of S_j in the region"), both indexed ((c*r) + j)*k + i where i
// is the class of the region vertices, j the set and c the trigger class.
// The region families are kept dense here and serialized sparsely.
struct ProperState {
    BaseState base;
    std::vector<std::int64_t> gamma, gamma2, lambda, mu;
};

class ProperModel final : public detail::LayeredModel {
public:
    ProperModel(const DpContext& ctx, const NeighborhoodBounds& nb) : ctx_(ctx) {
        const int r = ctx.r;
        lower_open_.assign(r * r, 0);
        lower_closed_.assign(r * r, 0);
        upper_any_.assign(r * r, 0);
        upper_closed_.assign(r * r, 0);
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j) {
                const auto& open = nb.get(Kind::open, i, j);
                const auto& closed = nb.get(Kind::closed, i, j);
                lower_open_[i * r + j] = open.lower == 1;
                lower_closed_[i * r + j] = closed.lower == 1;
                upper_closed_[i * r + j] = closed.upper_is_one;
                upper_any_[i * r + j] = open.upper_is_one || closed.upper_is_one;
            }
        }
    }

    StateKey sink() const override {
        ProperState st;
        st.base = BaseState::initial(ctx_);
        const std::size_t kr = static_cast<std::size_t>(ctx_.k) * ctx_.r;
        st.gamma.assign(kr, 0);
        st.gamma2.assign(kr, 0);
        st.lambda.assign(kr * ctx_.k, 0);
        st.mu.assign(kr * ctx_.k, 0);
        return encode(st);
    }

    void expand(int s, const StateKey& key, std::vector<Predecessor>& out) const override {
        const ProperState st = decode(key);
        for (SetMask label : ctx_.spec->lists[ctx_.vertex[s]]) {
            const std::int64_t weight = ctx_.arc_weight(s, label);
            if (s == 1) {
                if (detail::admissible_first(ctx_, st.base, label) && admissible_first(st, label)) {
                    out.push_back({label, weight, {}});
                }
                continue;
            }
            if (!detail::admissible_step(ctx_, s, st.base, label) || !admissible_step(s, st, label)) {
                continue;
            }
            out.push_back({label, weight, encode(predecessor(s, st, label))});
        }
    }

private:
    const DpContext& ctx_;
    // [counted * r + member]
    std::vector<char> lower_open_, lower_closed_, upper_any_, upper_closed_;

    bool lo(int i, int j) const { return lower_open_[i * ctx_.r + j]; }
    bool lc(int i, int j) const { return lower_closed_[i * ctx_.r + j]; }
    bool ua(int i, int j) const { return upper_any_[i * ctx_.r + j]; }
    bool uc(int i, int j) const { return upper_closed_[i * ctx_.r + j]; }

    std::size_t region(int cls_i, int set_j, int trigger) const {
        return (static_cast<std::size_t>(trigger) * ctx_.r + set_j) * ctx_.k + cls_i;
    }

    StateKey encode(const ProperState& st) const {
        StateKey key;
        st.base.append_to(key);
        key.insert(key.end(), st.gamma.begin(), st.gamma.end());
        key.insert(key.end(), st.gamma2.begin(), st.gamma2.end());
        for (const auto* family : {&st.lambda, &st.mu}) {
            const std::size_t count_at = key.size();
            key.push_back(0);
            for (std::size_t x = 0; x < family->size(); ++x) {
                if ((*family)[x] == 0) continue;
                key.push_back(static_cast<std::int64_t>(x));
                key.push_back((*family)[x]);
                ++key[count_at];
            }
        }
        return key;
    }

    ProperState decode(const StateKey& key) const {
        ProperState st;
        std::size_t pos = 0;
        st.base = BaseState::read(ctx_, key, pos);
        const auto kr = static_cast<std::ptrdiff_t>(ctx_.k) * ctx_.r;
        const auto at = [&] { return key.begin() + static_cast<std::ptrdiff_t>(pos); };
        st.gamma.assign(at(), at() + kr);
        pos += kr;
        st.gamma2.assign(at(), at() + kr);
        pos += kr;
        for (auto* family : {&st.lambda, &st.mu}) {
            family->assign(static_cast<std::size_t>(kr) * ctx_.k, 0);
            const std::int64_t count = key[pos++];
            for (std::int64_t e = 0; e < count; ++e) {
                (*family)[key[pos]] = key[pos + 1];
                pos += 2;
            }
        }
        return st;
    }

    // Sets i whose lower bound for v_s must be met by an earlier neighbor:
    // no later neighbor in S_i and some j in the label with l_ij(N) = 1
    // (or l_ij[N] = 1 when v_s itself is not in S_i).
    SetMask needs_earlier_neighbor(const ProperState& st, int l, SetMask label) const {
        SetMask out = 0;
        const auto members = mask_indices(label);
        for (int i = 0; i < ctx_.r; ++i) {
            if (st.gamma[ctx_.idx(l, i)] != 0) continue;
            const bool self = label >> i & 1;
            for (int j : members) {
                if (lo(i, j) || (!self && lc(i, j))) {
                    out |= SetMask{1} << i;
                    break;
                }
            }
        }
        return out;
    }

    bool upper_bounds_ok(const ProperState& st, int l, SetMask label) const {
        const auto members = mask_indices(label);
        for (int i = 0; i < ctx_.r; ++i) {
            for (int j : members) {
                if (ua(i, j) && st.gamma2[ctx_.idx(l, i)] != 0) return false;
                if ((label >> i & 1) && uc(i, j) && st.gamma[ctx_.idx(l, i)] != 0) return false;
            }
        }
        return true;
    }

    bool admissible_first(const ProperState& st, SetMask label) const {
        const int l = ctx_.cls[1];
        if (needs_earlier_neighbor(st, l, label) != 0) return false;
        if (!upper_bounds_ok(st, l, label)) return false;
        for (int j = 0; j < ctx_.r; ++j) {
            if (label >> j & 1) continue;
            for (int c = 0; c < ctx_.k; ++c) {
                if (st.lambda[region(l, j, c)] != 0) return false;
            }
        }
        return true;
    }

    bool admissible_step(int s, const ProperState& st, SetMask label) const {
        const int l = ctx_.cls[s];
        if (!upper_bounds_ok(st, l, label)) return false;
        for (int j = 0; j < ctx_.r; ++j) {
            if (label >> j & 1) continue;
            for (int c = 0; c < ctx_.k; ++c) {
                if (st.lambda[region(l, j, c)] != 1) continue;
                bool elsewhere = false;
                for (int i = 0; i < ctx_.k && !elsewhere; ++i) {
                    elsewhere = i != l && st.lambda[region(i, j, c)] > 0;
                }
                if (!elsewhere) return false;
            }
        }
        return needs_earlier_neighbor(st, l, label) == 0 || ctx_.earlier_nbr[s] != 0;
    }

    ProperState predecessor(int s, const ProperState& st, SetMask label) const {
        const int l = ctx_.cls[s];
        const int k = ctx_.k;
        const int r = ctx_.r;
        const auto members = mask_indices(label);
        const auto& nbr = ctx_.nbr[s];

        SetMask forbid = 0;
        SetMask at_most_one = 0;
        for (int j = 0; j < r; ++j) {
            const bool self = label >> j & 1;
            bool hit = false;
            bool bounded = false;
            for (int jp : members) {
                hit = hit || ctx_.spec->matrix[j][jp] == MatrixEntry::zero ||
                      (ua(j, jp) && st.gamma[ctx_.idx(l, j)] > 0) || (self && uc(j, jp));
                bounded = bounded || ua(j, jp);
            }
            if (hit) {
                forbid |= SetMask{1} << j;
            } else if (bounded) {
                at_most_one |= SetMask{1} << j;
            }
        }

        ProperState out;
        out.base = detail::base_predecessor(ctx_, s, st.base, label, forbid,
                                            detail::matrix_hits(ctx_, label, MatrixEntry::one));
        out.gamma = st.gamma;
        out.gamma2 = st.gamma2;
        out.lambda = st.lambda;
        out.mu = st.mu;

        // mu: a member of S_j inside the region uses up its single slot, the
        // rest of the region becomes forbidden for S_j.
        for (int j = 0; j < r; ++j) {
            const bool self = label >> j & 1;
            for (int c = 0; c < k; ++c) {
                std::int64_t& own = out.mu[region(l, j, c)];
                if (self && own > 0) {
                    for (int i = 0; i < k; ++i) {
                        const std::int64_t reach = out.mu[region(i, j, c)] - (i == l ? 1 : 0);
                        auto& beta = out.base.beta[ctx_.idx(i, j)];
                        beta = std::max(beta, reach);
                        out.mu[region(i, j, c)] = 0;
                    }
                } else {
                    own = std::max<std::int64_t>(0, own - 1);
                }
            }
        }

        // lambda^0
        for (int j = 0; j < r; ++j) {
            const bool self = label >> j & 1;
            for (int c = 0; c < k; ++c) {
                std::int64_t& own = out.lambda[region(l, j, c)];
                if (self && own > 0) {
                    for (int i = 0; i < k; ++i) out.lambda[region(i, j, c)] = 0;
                } else {
                    own = std::max<std::int64_t>(0, own - 1);
                }
            }
        }

        // New "at least one" regions triggered by v_s; an existing region of
        // the same trigger class is contained in N(v_s) and already stronger.
        const SetMask need = needs_earlier_neighbor(st, l, label);
        for (int i : mask_indices(need)) {
            bool present = false;
            for (int c = 0; c < k && !present; ++c) present = out.lambda[region(c, i, l)] != 0;
            if (present) continue;
            for (int c = 0; c < k; ++c) out.lambda[region(c, i, l)] = nbr[c];
        }

        for (int j : mask_indices(at_most_one)) {
            for (int i = 0; i < k; ++i) {
                auto& m = out.mu[region(i, j, l)];
                m = std::max<std::int64_t>(m, nbr[i]);
            }
        }

        for (int j = 0; j < r; ++j) {
            const bool self = label >> j & 1;
            for (int i = 0; i < k; ++i) {
                const std::size_t x = ctx_.idx(i, j);
                const std::int64_t g = st.gamma[x];
                const std::int64_t g2 = st.gamma2[x];
                if (i == l) {
                    const std::int64_t shifted = std::max<std::int64_t>(0, g - 1);
                    if (self) {
                        out.gamma[x] = std::max<std::int64_t>(shifted, nbr[i]);
                        out.gamma2[x] = std::max<std::int64_t>(std::max<std::int64_t>(0, g2 - 1),
                                                               std::min<std::int64_t>(shifted, nbr[i]));
                    } else {
                        out.gamma[x] = shifted;
                        out.gamma2[x] = std::max<std::int64_t>(0, g2 - 1);
                    }
                } else if (self) {
                    out.gamma[x] = std::max<std::int64_t>(g, nbr[i]);
                    out.gamma2[x] = std::max<std::int64_t>(g2, std::min<std::int64_t>(g, nbr[i]));
                }
            }
        }

        for (int i = 0; i < k; ++i) {
            const std::int64_t size_before = ctx_.in_class[i][s - 1];
            for (int j = 0; j < r; ++j) {
                const std::size_t x = ctx_.idx(i, j);
                out.base.beta[x] = std::min(out.base.beta[x], size_before);
                out.gamma[x] = std::min(out.gamma[x], size_before);
                out.gamma2[x] = std::min(out.gamma2[x], size_before);
                if (out.gamma2[x] > out.gamma[x]) {
                    throw std::logic_error("proper DP: gamma2 exceeds gamma");
                }
                for (int c = 0; c < k; ++c) {
                    auto& lam = out.lambda[region(i, j, c)];
                    lam = std::min(lam, size_before);
                    auto& m = out.mu[region(i, j, c)];
                    m = std::min(m, size_before);
                }
            }
        }
        return out;
    }
};

}  // namespace

bool has_monotone_neighborhoods(const Graph& g, const Ordering& ord, const Partition& part) {
    const int n = g.vertex_count();
    for (int s = 0; s < n; ++s) {
        const Vertex vs = ord.at(s);
        for (int rr = s + 1; rr < n; ++rr) {
            const Vertex vr = ord.at(rr);
            if (part.class_of(vr) != part.class_of(vs)) continue;
            for (int q = 0; q <= s; ++q) {
                const Vertex x = ord.at(q);
                const bool in_r = x == vr || g.adjacent(vr, x);
                const bool in_s = x == vs || g.adjacent(vs, x);
                if (in_r && !in_s) return false;
            }
        }
    }
    return true;
}

std::optional<Solution> solve_proper(const Graph& g, const ThinRepresentation& rep,
                                     const ProblemSpec& spec, const NeighborhoodBounds& nb,
                                     DpStats* stats, const DpOptions& options) {
    validate_spec(spec, g);
    if (nb.set_count() != spec.r) {
        throw InputError("neighborhood bounds must use the same number of sets as the spec");
    }
    if (rep.vertex_count() != g.vertex_count() ||
        !is_strongly_consistent(g, rep.ordering(), rep.partition())) {
        throw InputError("representation is not strongly consistent with the graph");
    }
    if (!has_monotone_neighborhoods(g, rep.ordering(), rep.partition())) {
        throw InputError("representation lacks monotone closed neighborhoods within classes");
    }
    const DpContext ctx(g, rep.ordering(), rep.partition(), spec);
    const ProperModel model(ctx, nb);
    auto path = detail::run_layered_dp(ctx.n, spec.sense, model, stats, options);
    if (!path) return std::nullopt;
    std::vector<SetMask> labels(ctx.n, 0);
    for (int s = 1; s <= ctx.n; ++s) labels[ctx.vertex[s]] = path->labels[s];
    Solution sol = make_solution(spec, std::move(labels));
    if (sol.objective != path->value) {
        throw std::logic_error("proper DP: path weight differs from the solution objective");
    }
    if (auto bad = find_violation(g, spec, &nb, sol.labels)) {
        throw std::logic_error("proper DP returned an infeasible solution: " + *bad);
    }
    return sol;
}

}  // namespace thinkit
