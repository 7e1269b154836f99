#include <gtest/gtest.h>

#include "support.hpp"

using namespace orient;
using namespace orient::testing;

TEST(BruteMaxcut, SmallGraphs)
{
    EXPECT_EQ(brute_maxcut(graph_of("a b c | a-b a-c b-c")).value, 2);
    EXPECT_EQ(brute_maxcut(graph_of("a b | a-b")).value, 1);
    auto d = brute_maxcut(graph_of("a b | a-b:6"));
    EXPECT_EQ(d.value, 6);
    EXPECT_EQ(d.argmax.size(), 1u);
}

TEST(BruteMaxcut, SizeBound)
{
    search_limits tight;
    tight.maxcut_max_vertices = 2;
    EXPECT_THROW(brute_maxcut(graph_of("a b c | a-b b-c"), tight), size_bound_error);
}

TEST(BruteBwbo, Examples)
{
    auto edge = graph_of("u v | u-v");
    EXPECT_TRUE(brute_bwbo({edge, {0, 0}, {0, 0}}));
    EXPECT_FALSE(brute_bwbo({edge, {1, 1}, {0, 0}}));
    auto doubled = graph_of("u v | u-v:2");
    auto d = brute_bwbo({doubled, {1, 0}, {1, 0}});
    ASSERT_TRUE(d);
    EXPECT_EQ(d->forward(0), 1);
}

TEST(BruteBwbo, RejectsNegativeBounds)
{
    EXPECT_THROW(brute_bwbo({graph_of("u v | u-v"), {-1, 0}, {0, 0}}), error);
}

TEST(BruteLaco, Examples)
{
    auto edge = graph_of("u v | u-v");
    requirement_table zero(2, std::vector<count_t>(2, 0));
    EXPECT_TRUE(brute_laco(edge, zero));
    requirement_table both = zero;
    both[0][1] = both[1][0] = 1;
    EXPECT_FALSE(brute_laco(edge, both));
}

TEST(BruteLaco, ReducedExampleSolvesBwbo)
{
    bwbo_instance inst{graph_of("u v | u-v"), {1, 0}, {0, 0}};
    auto laco = bwbo_to_laco(inst);
    auto d = brute_laco(laco);
    ASSERT_TRUE(d);
    EXPECT_EQ(bwbo_defect(inst, project_laco_witness(laco, *d)), "");
    EXPECT_TRUE(brute_bwbo(inst));
}

TEST(BruteWbo, Examples)
{
    auto tree = graph_of("a b c d | a-b b-c b-d");
    auto d = brute_wbo_exists(tree);
    ASSERT_TRUE(d);
    auto tri = graph_of("a b c | a-b:2 a-c:2 b-c:2");
    auto t = brute_wbo_exists(tri);
    ASSERT_TRUE(t);
    EXPECT_TRUE(is_well_balanced(tri, *t));
}

TEST(BruteWbo, SizeBound)
{
    search_limits tight;
    tight.orientation_max_edges = 3;
    EXPECT_THROW(brute_wbo_exists(graph_of("a b c d | a-b b-c c-d a-d"), tight), size_bound_error);
}

TEST(BrutePairing, Examples)
{
    auto path = graph_of("a b c | a-b b-c");
    auto f = brute_cut_admissible_pairing(path);
    ASSERT_TRUE(f);
    EXPECT_EQ(f->edge_count(), 1);
    EXPECT_EQ(f->multiplicity(f->id("a"), f->id("c")), 1);
    EXPECT_TRUE(brute_cut_admissible_pairing(graph_of("a b c d | a-b a-c a-d b-c b-d c-d")));
    auto eul = brute_cut_admissible_pairing(graph_of("a b | a-b:2"));
    ASSERT_TRUE(eul);
    EXPECT_EQ(eul->edge_count(), 0);
}

TEST(ForEachOrientation, CountsAndBounds)
{
    auto g = graph_of("a b c | a-b:2 b-c");
    std::size_t all = 0;
    for_each_orientation(g, {0, 0, 0}, {0, 0, 0}, [&](const auto&) { return ++all, true; });
    EXPECT_EQ(all, 6u);
    std::size_t bounded = 0;
    for_each_orientation(g, {2, 0, 0}, {0, 0, 0}, [&](const auto& fwd) {
        EXPECT_EQ(fwd[0], 2);
        return ++bounded, true;
    });
    EXPECT_EQ(bounded, 2u);
}

TEST(Corpus, SizeAndChecksumAreStable)
{
    auto corpus = generate_corpus(5, 8);
    EXPECT_EQ(corpus.size(), 504u);
    EXPECT_EQ(checksum_hex(corpus_checksum(corpus)), "55379b8149e8661d");
    for (const auto& g : corpus) {
        EXPECT_TRUE(is_connected(g));
        EXPECT_LE(g.edge_count(), 8);
    }
}

// Small counts of connected multigraphs by vertices and total multiplicity:
// two vertices give one class per multiplicity; three vertices with up to
// three edges give the path, the path with one doubled edge and the triangle.
TEST(Corpus, SmallCounts)
{
    EXPECT_EQ(generate_corpus(2, 4).size(), 4u);
    std::size_t three = 0;
    for (const auto& g : generate_corpus(3, 3)) three += g.vertex_count() == 3;
    EXPECT_EQ(three, 3u);
    std::size_t any = 0;
    for (const auto& g : generate_corpus(3, 2, false)) any += g.vertex_count() == 3;
    EXPECT_EQ(any, 4u);  // empty, one edge, doubled edge, path
}

TEST(Corpus, FixtureMatchesGenerator)
{
    auto fixture = load_corpus(std::filesystem::path(ORIENT_FIXTURE_DIR) / corpus_file);
    auto generated = generate_corpus(corpus_max_vertices, corpus_max_edges);
    ASSERT_EQ(fixture.size(), generated.size());
    for (std::size_t i = 0; i < fixture.size(); ++i) EXPECT_TRUE(fixture[i] == generated[i]);
}
