#include "thinkit/thin_dp.hpp"

#include <cmath>

#include "dp_internal.hpp"
#include "thinkit/errors.hpp"

namespace thinkit {

namespace {

using detail::BaseState;
using detail::DpContext;
using detail::Predecessor;
using detail::StateKey;

class ThinModel final : public detail::LayeredModel {
public:
    explicit ThinModel(const DpContext& ctx) : ctx_(ctx) {}

    StateKey sink() const override {
        StateKey key;
        BaseState::initial(ctx_).append_to(key);
        return key;
    }

    void expand(int s, const StateKey& key, std::vector<Predecessor>& out) const override {
        std::size_t pos = 0;
        const BaseState st = BaseState::read(ctx_, key, pos);
        for (SetMask label : ctx_.spec->lists[ctx_.vertex[s]]) {
            const std::int64_t weight = ctx_.arc_weight(s, label);
            if (s == 1) {
                if (detail::admissible_first(ctx_, st, label)) out.push_back({label, weight, {}});
                continue;
            }
            if (!detail::admissible_step(ctx_, s, st, label)) continue;
            const BaseState pred = detail::base_predecessor(
                ctx_, s, st, label, detail::matrix_hits(ctx_, label, MatrixEntry::zero),
                detail::matrix_hits(ctx_, label, MatrixEntry::one));
            StateKey pred_key;
            pred.append_to(pred_key);
            out.push_back({label, weight, std::move(pred_key)});
        }
    }

private:
    const DpContext& ctx_;
};

}  // namespace

std::optional<Solution> solve(const Graph& g, const ThinRepresentation& rep,
                              const ProblemSpec& spec, DpStats* stats, const DpOptions& options) {
    validate_spec(spec, g);
    if (!rep.valid_for(g)) {
        throw InputError("representation is not consistent with the graph");
    }
    const DpContext ctx(g, rep.ordering(), rep.partition(), spec);
    const ThinModel model(ctx);
    auto path = detail::run_layered_dp(ctx.n, spec.sense, model, stats, options);
    if (!path) return std::nullopt;
    std::vector<SetMask> labels(ctx.n, 0);
    for (int s = 1; s <= ctx.n; ++s) labels[ctx.vertex[s]] = path->labels[s];
    Solution sol = make_solution(spec, std::move(labels));
    if (sol.objective != path->value) {
        throw std::logic_error("thin DP: path weight differs from the solution objective");
    }
    if (auto bad = find_violation(g, spec, nullptr, sol.labels)) {
        throw std::logic_error("thin DP returned an infeasible solution: " + *bad);
    }
    return sol;
}

ProblemSpec swap_matrix(const ProblemSpec& spec) {
    ProblemSpec out = spec;
    for (auto& row : out.matrix) {
        for (auto& e : row) {
            if (e == MatrixEntry::zero) {
                e = MatrixEntry::one;
            } else if (e == MatrixEntry::one) {
                e = MatrixEntry::zero;
            }
        }
    }
    return out;
}

std::optional<Solution> solve_on_complement(const Graph& g, const ThinRepresentation& rep,
                                            const ProblemSpec& spec, DpStats* stats,
                                            const DpOptions& options) {
    const ProblemSpec swapped = swap_matrix(spec);
    validate_spec(swapped, g);
    if (!rep.valid_for(g)) {
        throw InputError("representation is not consistent with the graph");
    }
    const DpContext ctx(g, rep.ordering(), rep.partition(), swapped);
    const ThinModel model(ctx);
    auto path = detail::run_layered_dp(ctx.n, spec.sense, model, stats, options);
    if (!path) return std::nullopt;
    std::vector<SetMask> labels(ctx.n, 0);
    for (int s = 1; s <= ctx.n; ++s) labels[ctx.vertex[s]] = path->labels[s];
    Solution sol = make_solution(spec, std::move(labels));
    if (auto bad = find_violation(complement(g), spec, nullptr, sol.labels)) {
        throw std::logic_error("complement DP returned an infeasible solution: " + *bad);
    }
    return sol;
}

double state_count_bound_log(int n, int k, int r, int p, std::int64_t q, bool neighborhood) {
    const double ln_n = std::log(static_cast<double>(n));
    double total = (2.0 * k * r + 1.0) * ln_n;
    if (p > 0) {
        const double nq = static_cast<double>(n) * static_cast<double>(q);
        // (nq)^0 = 1; with p > 0 and q = 0 every bound collapses to zero.
        total += nq > 0 ? std::ldexp(1.0, r + 2) * p * std::log(nq)
                        : -std::numeric_limits<double>::infinity();
    }
    if (neighborhood) total += (static_cast<double>(k) * k * r + 2.0 * k * r) * ln_n;
    return total;
}

bool within_state_count_bound(const DpStats& stats, int n, int k, const ProblemSpec& spec,
                              bool neighborhood) {
    const double bound = state_count_bound_log(n, k, spec.r, spec.bounded_count(), spec.weight_cap,
                                               neighborhood);
    // The source x_0 is not a state tuple (those live in layers 1..n).
    const std::size_t tuples = stats.states > 0 ? stats.states - 1 : 0;
    return tuples == 0 || std::log(static_cast<double>(tuples)) <= bound + 1e-9;
}

}  // namespace thinkit
