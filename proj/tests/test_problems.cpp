#include <gtest/gtest.h>

#include <algorithm>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "thinkit/errors.hpp"
#include "thinkit/families.hpp"
#include "thinkit/problems.hpp"
#include "thinkit/representations.hpp"

using namespace thinkit;

namespace {

Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return oracle::make_graph(n, edges);
}

std::optional<Solution> run(const Graph& g, const ProblemEncoding& enc) {
    const ThinRepresentation rep =
        enc.neighborhood ? proper_thinness_exact(g).representation : thinness_exact(g).representation;
    DpStats stats;
    auto sol = solve_encoding(g, rep, enc, &stats);
    EXPECT_TRUE(within_state_count_bound(stats, g.vertex_count(), rep.class_count(), enc.spec,
                                         enc.neighborhood.has_value()));
    return sol;
}

constexpr MatrixEntry Z = MatrixEntry::zero;
constexpr MatrixEntry O = MatrixEntry::one;
constexpr MatrixEntry A = MatrixEntry::any;

// Literal check of an M-partition with lists.
bool is_list_m_partition(const Graph& g, const std::vector<std::vector<MatrixEntry>>& m,
                         const std::vector<std::vector<int>>& allowed, const std::vector<int>& part) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (part[v] < 0) return false;
        if (std::find(allowed[v].begin(), allowed[v].end(), part[v]) == allowed[v].end()) return false;
        for (Vertex u = 0; u < v; ++u) {
            const MatrixEntry e = m[part[u]][part[v]];
            if (e == Z && g.adjacent(u, v)) return false;
            if (e == O && !g.adjacent(u, v)) return false;
        }
    }
    return true;
}

}  // namespace

TEST(StableSet, Examples) {
    const auto c5 = run(gen_cycle(5), encode_max_weight_stable_set(gen_cycle(5)));
    ASSERT_TRUE(c5.has_value());
    EXPECT_EQ(c5->objective, 2);
    EXPECT_EQ(run(complete(4), encode_max_weight_stable_set(complete(4)))->objective, 1);
    EXPECT_EQ(run(gen_edgeless(5), encode_max_weight_stable_set(gen_edgeless(5)))->objective, 5);
}

TEST(StableSet, RejectsBadWeights) {
    EXPECT_THROW(encode_max_weight_stable_set(gen_path(3), {1, 2}), InputError);
    EXPECT_THROW(encode_max_weight_stable_set(gen_path(3), {1, -2, 1}), InputError);
}

TEST(MaxWeightClique, Examples) {
    EXPECT_EQ(max_weight_clique(gen_cycle(4)).weight, 2);
    const auto co3k2 = max_weight_clique(gen_complement_matching(3));
    EXPECT_EQ(co3k2.weight, 3);
    EXPECT_TRUE(is_clique(gen_complement_matching(3), co3k2.clique));
    EXPECT_EQ(max_weight_clique(complete(5), {1, 2, 3, 4, 5}).weight, 15);
}

TEST(MaxWeightClique, MatchesOracleAndCliqueCountBound) {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const Graph g = oracle::random_graph(rng, n, 0.5);
        std::vector<std::int64_t> w(n);
        for (auto& x : w) x = static_cast<std::int64_t>(rng() % 6);
        const auto r = max_weight_clique(g, w);
        EXPECT_EQ(r.weight, oracle::max_clique(g, w));
        EXPECT_TRUE(is_clique(g, r.clique));
        if (n <= 7) {
            const int k = thinness_exact(g).k;
            EXPECT_LE(static_cast<double>(count_maximal_cliques(g)), std::pow(n, 2.0 * k));
        }
    }
    EXPECT_THROW(count_maximal_cliques(gen_complement_matching(5), 10), SizeCapError);
}

TEST(CapacitatedColoring, Examples) {
    EXPECT_TRUE(run(gen_cycle(4), encode_capacitated_coloring(gen_cycle(4), {2, 2})).has_value());
    const auto k3 = encode_capacitated_coloring(complete(3), {3, 3});
    EXPECT_FALSE(run(complete(3), k3).has_value());
    const auto p3 = run(gen_path(3), encode_capacitated_coloring(gen_path(3), {1, 2}));
    ASSERT_TRUE(p3.has_value());
    const auto parts = decode_partition(*p3);
    EXPECT_EQ(parts[1], 0);
}

TEST(CapacitatedColoring, TooLittleCapacityIsReported) {
    const auto enc = encode_capacitated_coloring(gen_path(4), {1, 2});
    ASSERT_TRUE(enc.trivially_infeasible.has_value());
    EXPECT_FALSE(brute_force_oracle(gen_path(4), enc).feasible);
}

TEST(CapacitatedColoring, MatchesOracle) {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const Graph g = oracle::random_graph(rng, n, 0.4);
        const int s = 2 + static_cast<int>(rng() % 2);
        std::vector<std::int64_t> caps(s);
        for (auto& c : caps) c = 1 + static_cast<std::int64_t>(rng() % n);
        const auto enc = encode_capacitated_coloring(g, caps);
        const bool expected = oracle::colorable_with_caps(g, caps);
        EXPECT_EQ(brute_force_oracle(g, enc).feasible, expected);
        if (enc.trivially_infeasible) {
            EXPECT_FALSE(expected);
            continue;
        }
        const auto sol = run(g, enc);
        ASSERT_EQ(sol.has_value(), expected);
        if (sol) {
            const auto parts = decode_partition(*sol);
            std::vector<std::int64_t> used(s, 0);
            for (Vertex v = 0; v < n; ++v) {
                ASSERT_GE(parts[v], 0);
                ++used[parts[v]];
                for (Vertex u = 0; u < v; ++u)
                    if (g.adjacent(u, v)) EXPECT_NE(parts[u], parts[v]);
            }
            for (int j = 0; j < s; ++j) EXPECT_LE(used[j], caps[j]);
        }
    }
}

TEST(ListMatrixPartition, Examples) {
    const Graph c4 = gen_cycle(4);
    const std::vector<std::vector<int>> both(4, {0, 1});
    const auto split = encode_list_matrix_partition(c4, {{Z, A}, {A, O}}, both);
    EXPECT_EQ(run(c4, split).has_value(), brute_force_oracle(c4, split).feasible);
    // C4 is not a split graph.
    EXPECT_FALSE(brute_force_oracle(c4, split).feasible);

    const Graph c5 = gen_cycle(5);
    const auto hom = encode_list_matrix_partition(c5, {{Z, A}, {A, Z}}, std::vector<std::vector<int>>(5, {0, 1}));
    EXPECT_FALSE(run(c5, hom).has_value());

    const Graph e = gen_edgeless(4);
    const auto one = encode_list_matrix_partition(e, {{Z}}, std::vector<std::vector<int>>(4, {0}));
    EXPECT_TRUE(run(e, one).has_value());

    const auto empty = encode_list_matrix_partition(e, {{Z}}, {{0}, {}, {0}, {0}});
    EXPECT_TRUE(empty.trivially_infeasible.has_value());
}

TEST(ListMatrixPartition, MatchesOracle) {
    std::mt19937_64 rng(107);
    const MatrixEntry choices[] = {Z, O, A};
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const int r = 2 + static_cast<int>(rng() % 2);
        const Graph g = oracle::random_graph(rng, n, 0.5);
        std::vector<std::vector<MatrixEntry>> m(r, std::vector<MatrixEntry>(r));
        for (int i = 0; i < r; ++i)
            for (int j = i; j < r; ++j) m[i][j] = m[j][i] = choices[rng() % 3];
        std::vector<std::vector<int>> allowed(n);
        for (auto& list : allowed) {
            for (int j = 0; j < r; ++j)
                if (rng() % 3 != 0) list.push_back(j);
            if (list.empty()) list.push_back(static_cast<int>(rng() % r));
        }
        const auto enc = encode_list_matrix_partition(g, m, allowed);
        bool expected = false;
        std::vector<int> part(n, 0);
        while (!expected) {
            expected = is_list_m_partition(g, m, allowed, part);
            int v = 0;
            while (v < n && ++part[v] == r) part[v++] = 0;
            if (v == n) break;
        }
        EXPECT_EQ(brute_force_oracle(g, enc).feasible, expected);
        const auto sol = run(g, enc);
        ASSERT_EQ(sol.has_value(), expected);
        if (sol) EXPECT_TRUE(is_list_m_partition(g, m, allowed, decode_partition(*sol)));
    }
}

TEST(Domination, Examples) {
    EXPECT_EQ(run(gen_path(5), encode_domination(gen_path(5), DominationVariant::plain))->objective, 2);
    const auto ind = run(gen_cycle(4), encode_domination(gen_cycle(4), DominationVariant::independent));
    ASSERT_TRUE(ind.has_value());
    EXPECT_EQ(ind->objective, 2);
    EXPECT_TRUE(is_stable_set(gen_cycle(4), decode_chosen(*ind)));
    EXPECT_FALSE(run(gen_cycle(4), encode_domination(gen_cycle(4), DominationVariant::efficient)).has_value());
}

TEST(Domination, VariantNames) {
    for (auto v : {DominationVariant::plain, DominationVariant::independent, DominationVariant::total,
                   DominationVariant::efficient, DominationVariant::perfect}) {
        EXPECT_EQ(parse_domination_variant(to_string(v)), v);
    }
    EXPECT_FALSE(parse_domination_variant("roman").has_value());
}

TEST(Domination, PredicateMatchesOracle) {
    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const Graph g = oracle::random_graph(rng, n, 0.4);
        const std::uint64_t set = rng() % (std::uint64_t{1} << n);
        std::vector<Vertex> members;
        for (int v = 0; v < n; ++v)
            if (set >> v & 1) members.push_back(v);
        for (auto variant : {DominationVariant::plain, DominationVariant::independent, DominationVariant::total,
                             DominationVariant::efficient, DominationVariant::perfect}) {
            EXPECT_EQ(is_dominating_variant(g, members, variant), oracle::dominating(g, set, variant));
        }
    }
}

TEST(BruteForceOracle, Examples) {
    EXPECT_EQ(brute_force_oracle(gen_cycle(4), encode_max_weight_stable_set(gen_cycle(4))).objective, 2);
    const auto dom = brute_force_oracle(complete(3), encode_domination(complete(3), DominationVariant::plain));
    EXPECT_TRUE(dom.feasible);
    EXPECT_EQ(dom.objective, 1);
    EXPECT_FALSE(brute_force_oracle(complete(3), encode_capacitated_coloring(complete(3), {3, 3})).feasible);
    EXPECT_THROW(brute_force_oracle(gen_path(12), encode_max_weight_stable_set(gen_path(12)), 100), SizeCapError);
}

TEST(Rainbow, Examples) {
    const Graph k2 = complete(2);
    const auto r2 = t_rainbow_domination(k2, thinness_exact(k2).representation, 2);
    EXPECT_EQ(r2.weight, 2);
    EXPECT_TRUE(is_rainbow_dominating(k2, 2, r2.labels));

    const Graph k1 = gen_path(1);
    EXPECT_EQ(t_rainbow_domination(k1, thinness_exact(k1).representation, 2).weight, 1);

    const Graph p3 = gen_path(3);
    const auto r3 = t_rainbow_domination(p3, proper_thinness_exact(p3).representation, 2);
    EXPECT_EQ(r3.weight, 2);
    EXPECT_TRUE(is_rainbow_dominating(p3, 2, r3.labels));
}

TEST(Rainbow, MatchesProductDominationOnPathsAndCycles) {
    std::vector<Graph> graphs;
    for (int n = 1; n <= 5; ++n) graphs.push_back(gen_path(n));
    for (int n = 3; n <= 5; ++n) graphs.push_back(gen_cycle(n));
    for (const Graph& g : graphs) {
        const auto r = t_rainbow_domination(g, proper_thinness_exact(g).representation, 2);
        EXPECT_EQ(r.weight, oracle::domination_of_product_with_complete(g, 2));
        EXPECT_EQ(r.weight, oracle::rainbow(g, 2));
        EXPECT_EQ(r.weight, rainbow_domination_bruteforce(g, 2));
        EXPECT_TRUE(is_rainbow_dominating(g, 2, r.labels));
    }
}

TEST(Rainbow, RandomGraphsAllRoutes) {
    std::mt19937_64 rng(113);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const Graph g = oracle::random_graph(rng, n, 0.5);
        const int t = 1 + static_cast<int>(rng() % 2);
        const auto r = t_rainbow_domination(g, thinness_exact(g).representation, t);
        EXPECT_EQ(r.weight, oracle::rainbow(g, t)) << to_string(r.route);
        EXPECT_TRUE(is_rainbow_dominating(g, t, r.labels));
    }
}
