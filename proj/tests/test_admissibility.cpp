#include <gtest/gtest.h>

#include "support.hpp"

using namespace orient;
using namespace orient::testing;

// Expected values below were computed by tests/oracles/derive.py, which
// enumerates subsets and orientations directly.

TEST(Pairing, EnumerationCounts)
{
    EXPECT_EQ(enumerate_pairings(graph_of("a b c | a-b:2 b-c:2")).size(), 1u);  // eulerian: empty pairing
    EXPECT_EQ(enumerate_pairings(graph_of("a b c d | a-b a-c a-d b-c b-d c-d")).size(), 3u);
    EXPECT_EQ(enumerate_pairings(graph_of("a b c d e f | a-f b-f c-e d-e e-f")).size(), 15u);
}

TEST(Pairing, DefectsAreReported)
{
    auto g = graph_of("a b c | a-b b-c");
    EXPECT_TRUE(is_pairing(g, pairing_of(g, "a-c")));
    EXPECT_FALSE(is_pairing(g, pairing_of(g, "a-b")));
    EXPECT_FALSE(is_pairing(g, pairing_of(g, "")));
    EXPECT_THROW(decide_ca(g, pairing_of(g, "a-b")), error);
}

TEST(DecideCa, EulerianGraphEmptyPairing)
{
    auto g = graph_of("a b c d | a-b:2 b-c:2 c-d:2 a-d:2");
    EXPECT_FALSE(decide_ca(g, pairing_of(g, "")));
}

TEST(DecideCa, PathUniquePairing)
{
    auto g = graph_of("a b c | a-b b-c");
    EXPECT_FALSE(decide_ca(g, pairing_of(g, "a-c")));
}

TEST(DecideCa, PendantCycleOuterPairingIsAdmissible)
{
    auto g = pendant_cycle();
    EXPECT_FALSE(decide_ca(g, pairing_of(g, "a-p c-q")));
    EXPECT_FALSE(decide_oa(g, pairing_of(g, "a-p c-q")));
}

TEST(DecideCa, PendantCycleDiagonalPairingViolates)
{
    auto g = pendant_cycle();
    auto v = decide_ca(g, pairing_of(g, "a-c p-q"));
    ASSERT_TRUE(v);
    EXPECT_EQ(v->x, set_of(g, "a,p"));
    EXPECT_EQ(v->cut_g, 4);
    EXPECT_EQ(v->cut_f, 2);
    EXPECT_EQ(v->r, 4);
}

TEST(DecideCa, PendantCycleCrossingPairing)
{
    auto g = pendant_cycle();
    auto f = pairing_of(g, "a-q c-p");
    auto v = decide_ca(g, f);
    ASSERT_TRUE(v);
    EXPECT_EQ(v->x, set_of(g, "a,p"));
    auto at = check_cut_certificate(g, f, set_of(g, "a,b,p"));
    ASSERT_TRUE(at);
    EXPECT_EQ(at->margin(), 2);
    EXPECT_EQ(at->r, 4);
    EXPECT_TRUE(decide_oa(g, f));
}

TEST(DecideCa, SizeBoundIsRefused)
{
    auto g = pendant_cycle();
    search_limits tight;
    tight.ca_max_vertices = 5;
    EXPECT_THROW(decide_ca(g, pairing_of(g, "a-p c-q"), tight), size_bound_error);
    tight.oa_max_edges = 5;
    EXPECT_THROW(decide_oa(g, pairing_of(g, "a-p c-q"), tight), size_bound_error);
}

TEST(DecideOa, DoubledEdgeEmptyPairing)
{
    auto g = graph_of("a b | a-b:2");
    EXPECT_FALSE(decide_oa(g, pairing_of(g, "")));
}

TEST(DecideOa, CounterexampleIsGenuine)
{
    auto g = pendant_cycle();
    auto f = pairing_of(g, "a-c p-q");
    auto c = decide_oa(g, f);
    ASSERT_TRUE(c);
    EXPECT_TRUE(is_eulerian_orientation(orientation_sum(c->g_part, c->f_part)));
    EXPECT_FALSE(is_well_balanced(g, c->g_part));
    EXPECT_LT(c->directed, c->required);
    EXPECT_EQ(lambda_directed(c->g_part, c->source, c->sink).value, c->directed);
}

// A tree has every lambda at most 1, so every orientation is well-balanced,
// yet {a,b,f} has d_G = 1 < 3 = d_F.
TEST(DecideOa, DoubleStarIsOrientationButNotCutAdmissible)
{
    auto g = graph_of("a b c d e f | a-f b-f c-e d-e e-f");
    auto f = pairing_of(g, "a-c b-d e-f");
    EXPECT_FALSE(decide_oa(g, f));
    auto v = decide_ca(g, f);
    ASSERT_TRUE(v);
    EXPECT_EQ(v->x, set_of(g, "a,b,f"));
    EXPECT_EQ(v->cut_g, 1);
    EXPECT_EQ(v->cut_f, 3);
    EXPECT_EQ(v->r, 0);
}

TEST(Attack, PendantCycleCrossingPairing)
{
    auto g = pendant_cycle();
    auto f = pairing_of(g, "a-q c-p");
    auto c = attack_orientation(g, f, set_of(g, "a,b,p"));
    EXPECT_TRUE(is_eulerian_orientation(orientation_sum(c.g_part, c.f_part)));
    EXPECT_EQ(g.label(c.source), "a");
    EXPECT_EQ(g.label(c.sink), "c");
    EXPECT_LE(c.directed, 1);
    EXPECT_EQ(c.required, 2);
    EXPECT_EQ(lambda_directed(c.g_part, c.source, c.sink).value, c.directed);
    EXPECT_FALSE(is_well_balanced(g, c.g_part));
}

TEST(Attack, RejectsSatisfiedSet)
{
    auto g = pendant_cycle();
    EXPECT_THROW(attack_orientation(g, pairing_of(g, "a-p c-q"), set_of(g, "a,b,p")), error);
}

TEST(Attack, InfeasibleExtensionCarriesCertificate)
{
    auto g = graph_of("a b c d e f | a-f b-f c-e d-e e-f");
    auto f = pairing_of(g, "a-c b-d e-f");
    // {a,b,f} violates with R = 0; orienting its three F edges outward cannot be completed.
    try {
        attack_orientation(g, f, set_of(g, "a,b,f"));
        FAIL() << "expected extension_infeasible";
    } catch (const extension_infeasible& e) {
        EXPECT_FALSE(e.certificate().empty());
    }
}

// Property: cut-admissible implies orientation-admissible over every pairing
// of every graph in a small lattice.
TEST(Property, CutAdmissibleImpliesOrientationAdmissible)
{
    std::size_t pairs = 0;
    for (const auto& g : generate_corpus(4, 7))
        for_each_pairing(g, [&](const multigraph& f) {
            ++pairs;
            if (!decide_ca(g, f)) EXPECT_FALSE(decide_oa(g, f));
            return true;
        });
    EXPECT_GT(pairs, 100u);
}

// Property: decide_ca's answer matches a plain scan with check_cut_certificate.
TEST(Property, DecideCaMatchesCertificateScan)
{
    for (const auto& g : generate_corpus(5, 6))
        for_each_pairing(g, [&](const multigraph& f) {
            std::optional<vertex_set> first;
            for (std::uint64_t m = 1; m < (1ULL << g.vertex_count()) && !first; m += 2)
                if (check_cut_certificate(g, f, vertex_set::from_mask(g.vertex_count(), m))) first = vertex_set::from_mask(g.vertex_count(), m);
            auto v = decide_ca(g, f);
            EXPECT_EQ(v.has_value(), first.has_value());
            if (v && first) EXPECT_EQ(v->x, *first);
            return true;
        });
}
