#include <gtest/gtest.h>

#include "support.hpp"

using namespace orient;
using namespace orient::testing;

namespace {

multigraph triangle() { return graph_of("a b c | a-b a-c b-c"); }
multigraph dumbbell() { return graph_of("a b | a-b:6"); }

}  // namespace

TEST(MaxcutToAmaxcut, Triangle)
{
    auto pos = maxcut_to_amaxcut(triangle(), 1);
    EXPECT_EQ(pos.k, 2);
    EXPECT_EQ(pos.h.edge_count(), 6);
    EXPECT_GT(brute_maxcut(triangle()).value, 1);
    EXPECT_GT(brute_maxcut(pos.h).value, pos.k);
    auto neg = maxcut_to_amaxcut(triangle(), 2);
    EXPECT_EQ(neg.k, 4);
    EXPECT_FALSE(brute_maxcut(neg.h).value > neg.k);
}

TEST(MaxcutToAmaxcut, CutsDouble)
{
    auto h = pendant_cycle();
    auto am = maxcut_to_amaxcut(h, 3);
    for (std::uint64_t m = 0; m < 64; ++m) {
        auto x = vertex_set::from_mask(6, m);
        EXPECT_EQ(cut_size(am.h, x), 2 * cut_size(h, x));
    }
}

TEST(MaxcutToAmaxcut, TooFewEdges)
{
    EXPECT_THROW(maxcut_to_amaxcut(graph_of("a b c | a-b b-c"), 1), error);
}

TEST(Amaxcut, InstanceValidation)
{
    EXPECT_THROW(make_amaxcut(dumbbell(), 3), error);           // odd threshold
    EXPECT_THROW(make_amaxcut(graph_of("a b | a-b:4"), 2), error);  // fewer than 6 edges
    EXPECT_THROW(make_amaxcut(triangle(), 2), error);            // odd degrees
    EXPECT_NO_THROW(make_amaxcut(dumbbell(), 4));
}

TEST(G1, Dumbbell)
{
    auto g1 = build_g1(make_amaxcut(dumbbell(), 4));
    const auto& g = g1.graph;
    EXPECT_EQ(g1.constants.big_m, 8);
    EXPECT_EQ(g.vertex_count(), 5u);
    EXPECT_EQ(g.edge_count(), 32);
    EXPECT_EQ(g.degree(g1.q), 8);
    EXPECT_EQ(g.degree(g1.s), 8 + 12);
    EXPECT_EQ(g.degree(g1.t), 12);
    auto x = set_of(g, "q,s,a");
    EXPECT_EQ(cut_size(g, x), 12);
    EXPECT_EQ(g1_margin(g1, dumbbell(), x), 6);
}

TEST(G1, ReservedLabels)
{
    EXPECT_THROW(build_g1(make_amaxcut(graph_of("s b | s-b:6"), 4)), error);
}

TEST(G1, ThresholdTooLarge)
{
    EXPECT_THROW(build_g1(make_amaxcut(dumbbell(), 12)), error);
}

class CaInstanceTest : public ::testing::Test {
protected:
    static void SetUpTestSuite() { ca_ = new ca_instance(build_ca_instance(make_amaxcut(dumbbell(), 4))); }
    static void TearDownTestSuite() { delete ca_; }
    static ca_instance* ca_;
};
ca_instance* CaInstanceTest::ca_ = nullptr;

TEST_F(CaInstanceTest, Sizes)
{
    EXPECT_EQ(ca_->constants.big_m, 8);
    EXPECT_EQ(ca_->ws.alpha, 15);
    EXPECT_EQ(ca_->ws.beta, 10);
    EXPECT_EQ(ca_->ws.vertex_count(), 1200u);
    for (const auto& w : ca_->wv) {
        EXPECT_EQ(w.beta, 9);
        EXPECT_EQ(w.vertex_count(), 1080u);
    }
    for (const auto& b : ca_->b_set) EXPECT_EQ(b.size(), 6u);
    EXPECT_EQ(ca_->g2.vertex_count(), 1200u + 2 * 1080u + 2);
    EXPECT_EQ(ca_->f.edge_count(), 6);
}

TEST_F(CaInstanceTest, StructuralInvariants)
{
    EXPECT_TRUE(is_eulerian(graph_sum(ca_->g2, ca_->f)));
    EXPECT_EQ(ca_->g2.degree(ca_->q), 8);
    EXPECT_EQ(lambda_undirected(ca_->g2, ca_->q, ca_->t).value, 8);
    auto g1 = build_g1(ca_->seed);
    EXPECT_TRUE(same_labelled_graph(contract(ca_->g2, ca_->group), g1.graph));
}

TEST_F(CaInstanceTest, PairingRespectsSeedEdges)
{
    // Every F edge joins B_a to B_b, six times in total.
    auto a = ca_->seed.h.id("a");
    auto b = ca_->seed.h.id("b");
    for (const auto& e : ca_->f.edges()) {
        auto in = [&](vertex_id v, vertex_id h) {
            return std::find(ca_->b_set[h].begin(), ca_->b_set[h].end(), v) != ca_->b_set[h].end();
        };
        EXPECT_TRUE((in(e.u, a) && in(e.v, b)) || (in(e.u, b) && in(e.v, a)));
    }
}

TEST_F(CaInstanceTest, LiftedCuts)
{
    auto sa = lift_cut(*ca_, {"s", "a"});
    auto v = check_cut_certificate(ca_->g2, ca_->f, sa);
    ASSERT_TRUE(v);
    EXPECT_EQ(v->cut_g, 12);
    EXPECT_EQ(v->cut_f, 6);
    EXPECT_EQ(v->r, 8);

    auto s = lift_cut(*ca_, {"s"});
    EXPECT_FALSE(check_cut_certificate(ca_->g2, ca_->f, s));
    EXPECT_EQ(cut_size(ca_->g2, s) - cut_size(ca_->f, s), 12);

    auto q = lift_cut(*ca_, {});
    EXPECT_EQ(q.size(), 1u);
    EXPECT_EQ(r_value(ca_->g2, q), 8);
    EXPECT_FALSE(check_cut_certificate(ca_->g2, ca_->f, q));
    EXPECT_THROW(lift_cut(*ca_, {"t"}), error);
}

TEST_F(CaInstanceTest, RoundingRecoversSelection)
{
    auto x = lift_cut(*ca_, {"s", "a"});
    auto names = round_to_gadgets(*ca_, x);
    EXPECT_EQ(names, (std::vector<std::string>{"a", "s"}));
}

TEST_F(CaInstanceTest, AttackBreaksBalanceAtQt)
{
    auto x = lift_cut(*ca_, {"s", "a"});
    auto c = attack_orientation(ca_->g2, ca_->f, x);
    EXPECT_TRUE(is_eulerian_orientation(orientation_sum(c.g_part, c.f_part)));
    EXPECT_LE(lambda_directed(c.g_part, ca_->q, ca_->t).value, 3);
}

TEST_F(CaInstanceTest, NoOverloadedCut)
{
    auto rep = check_no_overloaded_cut(*ca_, 1, 16);
    EXPECT_EQ(rep.failures, 0u);
    EXPECT_GT(rep.sets, 3000u);
}

TEST(CaInstance, NegativeSeedHasNoLiftedViolation)
{
    auto ca = build_ca_instance(make_amaxcut(dumbbell(), 6));
    EXPECT_EQ(ca.constants.big_m, 6);
    EXPECT_EQ(ca.ws.alpha, 13);
    for (const auto& sel : std::vector<std::vector<std::string>>{{}, {"s"}, {"a"}, {"b"}, {"s", "a"}, {"s", "b"}, {"a", "b"}, {"s", "a", "b"}})
        EXPECT_FALSE(check_cut_certificate(ca.g2, ca.f, lift_cut(ca, sel)));
}

TEST(BwboToLaco, SingleEdge)
{
    bwbo_instance inst{graph_of("u v | u-v"), {1, 0}, {0, 0}};
    auto laco = bwbo_to_laco(inst);
    const auto& g = laco.g;
    EXPECT_EQ(g.vertex_count(), 4u);
    EXPECT_EQ(g.edge_count(), 5);
    auto r = [&](const char* a, const char* b) { return laco.r[g.id(a)][g.id(b)]; };
    EXPECT_EQ(r("x", "y"), 2);
    EXPECT_EQ(r("u", "y"), 2);
    EXPECT_EQ(r("x", "u"), 1);
    EXPECT_EQ(r("x", "v"), 1);
    EXPECT_EQ(r("v", "y"), 1);
    EXPECT_EQ(r("u", "v"), 0);
    EXPECT_EQ(r("v", "u"), 0);
}

TEST(BwboToLaco, WitnessesBothWays)
{
    bwbo_instance inst{graph_of("u v | u-v"), {1, 0}, {0, 0}};
    auto laco = bwbo_to_laco(inst);
    orientation uv(inst.g, {1});
    auto lifted = lift_bwbo_witness(inst, laco, uv);
    EXPECT_FALSE(find_requirement_violation(lifted, laco.r));
    const auto& g = laco.g;
    EXPECT_EQ(lifted.arcs(g.id("x"), g.id("u")), 1);
    EXPECT_EQ(lifted.arcs(g.id("v"), g.id("y")), 1);

    auto d = brute_laco(laco);
    ASSERT_TRUE(d);
    auto back = project_laco_witness(laco, *d);
    EXPECT_EQ(back, uv);
    EXPECT_THROW(lift_bwbo_witness(inst, laco, orientation(inst.g, {0})), error);
}

TEST(BwboToLaco, EmptyGraph)
{
    bwbo_instance inst{graph_of("u"), {0}, {0}};
    auto laco = bwbo_to_laco(inst);
    EXPECT_EQ(laco.g.edge_count(), 0);
    EXPECT_EQ(laco.r[laco.x][laco.y], 0);
    auto d = brute_laco(laco);
    ASSERT_TRUE(d);
    EXPECT_EQ(project_laco_witness(laco, *d).graph().edge_count(), 0);
}

TEST(BwboToLaco, EdgeCountIsFiveTimes)
{
    for (const auto& g : generate_corpus(4, 5)) {
        bwbo_instance inst{g, std::vector<count_t>(g.vertex_count()), std::vector<count_t>(g.vertex_count())};
        EXPECT_EQ(bwbo_to_laco(inst).g.edge_count(), 5 * g.edge_count());
    }
}

TEST(BwboToLaco, ProjectRejectsUnmetRequirement)
{
    bwbo_instance inst{graph_of("u v | u-v"), {1, 0}, {0, 0}};
    auto laco = bwbo_to_laco(inst);
    auto all = orientation::all_forward(laco.g);  // u -> x, so r(x,u) fails
    EXPECT_THROW(project_laco_witness(laco, all), error);
}
