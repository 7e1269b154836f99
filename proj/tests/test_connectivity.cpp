#include <random>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace orient;
using namespace orient::testing;

TEST(Flow, CompleteGraphK4)
{
    auto g = graph_of("a b c d | a-b a-c a-d b-c b-d c-d");
    for (vertex_id s = 0; s < 4; ++s)
        for (vertex_id t = 0; t < 4; ++t)
            if (s != t) EXPECT_EQ(lambda_undirected(g, s, t).value, 3);
}

TEST(Flow, MinCutSideIsCertificate)
{
    auto g = pendant_cycle();
    auto r = lambda_undirected(g, g.id("a"), g.id("c"));
    EXPECT_EQ(r.value, 4);
    EXPECT_TRUE(r.side.contains(g.id("a")));
    EXPECT_FALSE(r.side.contains(g.id("c")));
    EXPECT_EQ(cut_size(g, r.side), 4);
}

TEST(Flow, DisconnectedPairIsZero)
{
    auto g = graph_of("a b c | a-b:3");
    EXPECT_EQ(lambda_undirected(g, 0, 2).value, 0);
}

TEST(Flow, LimitStopsEarly)
{
    auto g = graph_of("a b | a-b:100");
    lambda_solver solver(g);
    EXPECT_EQ(solver.value(0, 1, 5), 5);
    EXPECT_EQ(solver.value(0, 1), 100);
}

TEST(Flow, DirectedCounts)
{
    auto g = graph_of("a b c | a-b:2 b-c:2");
    orientation d(g, {2, 1});  // a->b twice; b->c once, c->b once
    EXPECT_EQ(lambda_directed(d, 0, 2).value, 1);
    EXPECT_EQ(lambda_directed(d, 2, 0).value, 0);
    EXPECT_EQ(lambda_directed(d, 2, 1).value, 1);
}

// Property: flow values equal exhaustive minimum cuts on random multigraphs.
TEST(Flow, AgreesWithBruteForceOnRandomGraphs)
{
    std::mt19937_64 rng(12345);
    for (int round = 0; round < 200; ++round) {
        std::size_t n = 2 + rng() % 7;
        graph_builder b;
        for (std::size_t v = 0; v < n; ++v) b.add_vertex("v" + std::to_string(v));
        for (vertex_id u = 0; u < n; ++u)
            for (vertex_id v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) b.add_edge(u, v, 1 + static_cast<count_t>(rng() % 3));
        auto g = b.build();
        for (vertex_id s = 0; s < n; ++s)
            for (vertex_id t = s + 1; t < n; ++t) EXPECT_EQ(lambda_undirected(g, s, t).value, brute_min_cut(g, s, t));
    }
}

TEST(Flow, DirectedAgreesWithBruteForce)
{
    std::mt19937_64 rng(99);
    for (int round = 0; round < 100; ++round) {
        std::size_t n = 2 + rng() % 5;
        graph_builder b;
        for (std::size_t v = 0; v < n; ++v) b.add_vertex("v" + std::to_string(v));
        for (vertex_id u = 0; u < n; ++u)
            for (vertex_id v = u + 1; v < n; ++v)
                if (rng() % 2) b.add_edge(u, v, 1 + static_cast<count_t>(rng() % 3));
        auto g = b.build();
        std::vector<count_t> fwd;
        for (const auto& e : g.edges()) fwd.push_back(static_cast<count_t>(rng() % (e.mult + 1)));
        orientation d(g, fwd);
        for (vertex_id s = 0; s < n; ++s)
            for (vertex_id t = 0; t < n; ++t) {
                if (s == t) continue;
                count_t best = -1;
                for (std::uint64_t m = 0; m < (1ULL << n); ++m) {
                    if (!(m >> s & 1) || (m >> t & 1)) continue;
                    auto c = out_cut(d, vertex_set::from_mask(n, m));
                    if (best < 0 || c < best) best = c;
                }
                EXPECT_EQ(lambda_directed(d, s, t).value, best);
            }
    }
}

TEST(RValue, Examples)
{
    auto path = graph_of("a b c | a-b b-c");
    EXPECT_EQ(r_value(path, set_of(path, "a")), 0);
    auto doubled = graph_of("a b c | a-b:2 b-c:2");
    EXPECT_EQ(r_value(doubled, set_of(doubled, "a")), 2);
    auto g = pendant_cycle();
    EXPECT_EQ(r_value(g, set_of(g, "a,b,p")), 4);
    EXPECT_EQ(r_value(g, set_of(g, "p")), 0);
    EXPECT_EQ(r_value(g, vertex_set(6)), 0);
    EXPECT_EQ(r_value(g, vertex_set::full(6)), 0);
}

TEST(RValue, WitnessIsFirstPairAttainingTheMaximum)
{
    auto g = pendant_cycle();
    auto w = r_value_witness(g, set_of(g, "a,b,p"));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->value, 4);
    EXPECT_EQ(g.label(w->source), "a");
    EXPECT_EQ(g.label(w->sink), "c");
}

// Property: the pruned evaluation equals the definition over all pairs.
TEST(RValue, PrunedEqualsDefinition)
{
    std::mt19937_64 rng(7);
    for (int round = 0; round < 60; ++round) {
        std::size_t n = 2 + rng() % 6;
        graph_builder b;
        for (std::size_t v = 0; v < n; ++v) b.add_vertex("v" + std::to_string(v));
        for (vertex_id u = 0; u < n; ++u)
            for (vertex_id v = u + 1; v < n; ++v)
                if (rng() % 2) b.add_edge(u, v, 1 + static_cast<count_t>(rng() % 4));
        auto g = b.build();
        auto lam = all_pairs_lambda(g);
        for (std::uint64_t m = 0; m < (1ULL << n); ++m) {
            auto x = vertex_set::from_mask(n, m);
            count_t best = 0;
            for (auto s : x.members())
                for (auto t : x.complement().members()) best = std::max(best, even_floor(brute_min_cut(g, s, t)));
            EXPECT_EQ(r_value(g, x), best);
            EXPECT_EQ(r_value(lam, x), best);
        }
    }
}

TEST(Balance, DetectsViolation)
{
    auto g = graph_of("a b | a-b:2");
    EXPECT_TRUE(is_well_balanced(g, orientation(g, {1})));
    auto bad = find_balance_violation(g, orientation(g, {2}));
    ASSERT_TRUE(bad);
    EXPECT_EQ(g.label(bad->source), "b");
    EXPECT_EQ(bad->directed, 0);
    EXPECT_EQ(bad->required, 1);
}

TEST(Balance, RejectsForeignOrientation)
{
    auto g = graph_of("a b | a-b:2");
    auto h = graph_of("a b | a-b:3");
    EXPECT_THROW(find_balance_violation(g, orientation(h, {1})), error);
}
