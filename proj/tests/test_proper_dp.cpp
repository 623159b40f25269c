#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "thinkit/errors.hpp"
#include "thinkit/families.hpp"
#include "thinkit/problems.hpp"
#include "thinkit/proper_dp.hpp"
#include "thinkit/representations.hpp"

using namespace thinkit;

namespace {

using Kind = NeighborhoodBounds::Kind;

ThinRepresentation strong_rep(const Graph& g) { return proper_thinness_exact(g).representation; }

std::optional<Solution> checked_domination(const Graph& g, const ThinRepresentation& rep,
                                           DominationVariant variant,
                                           const std::vector<std::int64_t>& weights = {}) {
    const ProblemEncoding enc = encode_domination(g, variant, weights);
    DpStats stats;
    auto sol = solve_proper(g, rep, enc.spec, *enc.neighborhood, &stats);
    EXPECT_TRUE(within_state_count_bound(stats, g.vertex_count(), rep.class_count(), enc.spec, true));
    if (sol) {
        std::uint64_t set = 0;
        for (Vertex v : decode_chosen(*sol)) set |= std::uint64_t{1} << v;
        EXPECT_TRUE(oracle::dominating(g, set, variant)) << to_string(variant);
        EXPECT_TRUE(oracle::feasible(g, enc.spec, &*enc.neighborhood, sol->labels));
    }
    return sol;
}

}  // namespace

TEST(ProperDp, DominationOnPath) {
    const Graph g = gen_path(5);
    const ThinRepresentation rep(g, Ordering::identity(5), Partition::single_class(5), ConsistencyMode::strong);
    const auto sol = checked_domination(g, rep, DominationVariant::plain);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(sol->objective, 2);
}

TEST(ProperDp, DominationOnComplete) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) edges.emplace_back(i, j);
    const Graph g = oracle::make_graph(5, edges);
    const auto sol = checked_domination(g, strong_rep(g), DominationVariant::plain);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(sol->objective, 1);
}

TEST(ProperDp, EfficientOnCycleIsInfeasible) {
    const Graph g = gen_cycle(4);
    EXPECT_FALSE(checked_domination(g, strong_rep(g), DominationVariant::efficient).has_value());
}

TEST(ProperDp, TotalOnPath) {
    const Graph g = gen_path(4);
    const ThinRepresentation rep(g, Ordering::identity(4), Partition::single_class(4), ConsistencyMode::strong);
    const auto sol = checked_domination(g, rep, DominationVariant::total);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(sol->objective, 2);
    EXPECT_EQ(decode_chosen(*sol), (std::vector<Vertex>{1, 2}));
}

TEST(ProperDp, EfficientNeedsTheAtMostOneRegion) {
    // Order a, c, b on the path a - b - c: both neighbors of b come first.
    const Graph g = oracle::make_graph(3, {{0, 1}, {1, 2}});
    const ThinRepresentation rep(g, Ordering(std::vector<Vertex>{0, 2, 1}),
                                 Partition(std::vector<int>{0, 1, 2}), ConsistencyMode::strong);
    for (auto variant : {DominationVariant::efficient, DominationVariant::perfect}) {
        const auto sol = checked_domination(g, rep, variant);
        ASSERT_TRUE(sol.has_value());
        EXPECT_EQ(sol->objective, *oracle::min_domination(g, variant));
    }
}

TEST(ProperDp, Preconditions) {
    const Graph g = gen_path(4);
    const ProblemEncoding enc = encode_domination(g, DominationVariant::plain);
    const ThinRepresentation weak(g, Ordering::identity(4), Partition::single_class(4), ConsistencyMode::weak);
    EXPECT_NO_THROW(solve_proper(g, weak, enc.spec, *enc.neighborhood));
    const Graph claw = oracle::make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    const ThinRepresentation weak_claw(claw, Ordering(std::vector<Vertex>{1, 2, 3, 0}),
                                       Partition::single_class(4), ConsistencyMode::weak);
    EXPECT_THROW(solve_proper(claw, weak_claw, enc.spec, *enc.neighborhood), InputError);
    EXPECT_THROW(solve_proper(g, weak, enc.spec, NeighborhoodBounds(3)), InputError);
}

TEST(ProperDp, MonotoneNeighborhoods) {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const Graph g = oracle::random_graph(rng, n, 0.5);
        const auto order = oracle::random_permutation(rng, n);
        const int k = 1 + static_cast<int>(rng() % n);
        std::vector<int> classes(n);
        for (int v = 0; v < n; ++v) classes[v] = v < k ? v : static_cast<int>(rng() % k);
        bool monotone = true;
        for (int s = 0; s < n; ++s)
            for (int r = s + 1; r < n; ++r) {
                if (classes[order[s]] != classes[order[r]]) continue;
                for (int x = 0; x <= s; ++x) {
                    const bool in_s = x == s || g.adjacent(order[x], order[s]);
                    const bool in_r = g.adjacent(order[x], order[r]);
                    if (in_r && !in_s) monotone = false;
                }
            }
        EXPECT_EQ(has_monotone_neighborhoods(g, Ordering(order), Partition(classes)), monotone);
        if (oracle::consistent(g, order, classes, true)) EXPECT_TRUE(monotone);
    }
}

TEST(ProperDpProperty, DominationVariantsMatchSubsetEnumeration) {
    std::mt19937_64 rng(83);
    const DominationVariant variants[] = {DominationVariant::plain, DominationVariant::independent,
                                          DominationVariant::total, DominationVariant::efficient,
                                          DominationVariant::perfect};
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const Graph g = oracle::random_graph(rng, n, 0.45);
        std::vector<std::int64_t> w;
        if (trial % 2) {
            w.resize(n);
            for (auto& x : w) x = 1 + static_cast<std::int64_t>(rng() % 5);
        }
        const ThinRepresentation rep = strong_rep(g);
        for (auto variant : variants) {
            const auto expected = oracle::min_domination(g, variant, w);
            const auto sol = checked_domination(g, rep, variant, w);
            ASSERT_EQ(sol.has_value(), expected.has_value()) << to_string(variant) << " trial " << trial;
            if (sol) EXPECT_EQ(sol->objective, *expected) << to_string(variant) << " trial " << trial;
        }
    }
}

TEST(ProperDpProperty, ArbitraryRepresentationsMatch) {
    // Any strongly consistent pair works, not only minimum ones.
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const Graph g = oracle::random_graph(rng, n, 0.5);
        const Ordering ord(oracle::random_permutation(rng, n));
        const ThinRepresentation rep(g, ord, min_consistent_partition(g, ord, true), ConsistencyMode::strong);
        for (auto variant : {DominationVariant::plain, DominationVariant::efficient, DominationVariant::total}) {
            const auto expected = oracle::min_domination(g, variant);
            const auto sol = checked_domination(g, rep, variant);
            ASSERT_EQ(sol.has_value(), expected.has_value());
            if (sol) EXPECT_EQ(sol->objective, *expected);
        }
    }
}

TEST(ProperDpProperty, RandomNeighborhoodSpecsMatch) {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const Graph g = oracle::random_graph(rng, n, 0.5);
        ProblemSpec spec = ProblemSpec::unconstrained(n, 2, trial % 2 ? Sense::maximize : Sense::minimize);
        const std::vector<SetMask> all = {0b00, 0b01, 0b10, 0b11};
        for (int v = 0; v < n; ++v) {
            spec.lists[v].clear();
            for (SetMask m : all)
                if (rng() % 3 != 0) spec.lists[v].push_back(m);
            if (spec.lists[v].empty()) spec.lists[v].push_back(all[rng() % 4]);
        }
        const MatrixEntry choices[] = {MatrixEntry::zero, MatrixEntry::one, MatrixEntry::any, MatrixEntry::any};
        for (int i = 0; i < 2; ++i)
            for (int j = i; j < 2; ++j) spec.matrix[i][j] = spec.matrix[j][i] = choices[rng() % 4];
        spec.objective_weights = {std::vector<std::int64_t>(n)};
        for (auto& x : spec.objective_weights[0]) x = static_cast<std::int64_t>(rng() % 4);
        spec.coefficients = {{1, 2}};
        NeighborhoodBounds nb(2);
        for (int b = 0; b < 2; ++b) {
            const Kind kind = rng() % 2 ? Kind::open : Kind::closed;
            const int lower = static_cast<int>(rng() % 2);
            const std::optional<int> upper = rng() % 2 ? std::optional<int>(1) : std::nullopt;
            nb.set(kind, static_cast<int>(rng() % 2), static_cast<int>(rng() % 2), lower, upper);
        }
        const ThinRepresentation rep = strong_rep(g);
        const auto expected = oracle::best(g, spec, &nb);
        DpStats stats;
        const auto sol = solve_proper(g, rep, spec, nb, &stats);
        EXPECT_TRUE(within_state_count_bound(stats, n, rep.class_count(), spec, true));
        ASSERT_EQ(sol.has_value(), expected.has_value()) << "trial " << trial;
        if (!sol) continue;
        EXPECT_EQ(sol->objective, *expected) << "trial " << trial;
        EXPECT_TRUE(oracle::feasible(g, spec, &nb, sol->labels));
    }
}
