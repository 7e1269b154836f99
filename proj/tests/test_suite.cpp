#include <gtest/gtest.h>

#include "support.hpp"

using namespace orient;
using namespace orient::testing;

TEST(Suite, PaddingMutationIsCaught)
{
    suite_options opt;
    opt.only = {6};
    EXPECT_TRUE(run_suite(opt).passed());
    opt.mutation = "grid-padding";
    auto rep = run_suite(opt);
    ASSERT_EQ(rep.checks.size(), 1u);
    EXPECT_FALSE(rep.checks[0].pass);
    EXPECT_NE(rep.checks[0].counterexample.find("degree"), std::string::npos);
}

TEST(Suite, MissingFixtureThrows)
{
    suite_options opt;
    opt.fixtures = "/nonexistent/fixtures";
    EXPECT_THROW(run_suite(opt), fixture_error);
}

TEST(Suite, CorruptCorpusIsRejected)
{
    auto dir = std::filesystem::temp_directory_path() / "orient-suite-test";
    std::filesystem::create_directories(dir);
    auto corpus = generate_corpus(3, 3);
    auto text = corpus_document(corpus, 3, 3);
    text.replace(text.find("\"checksum\": \"") + 13, 4, "0000");
    std::ofstream(dir / corpus_file) << text;
    EXPECT_THROW(load_corpus(dir / corpus_file), fixture_error);
    std::filesystem::remove_all(dir);
}

TEST(Suite, ReportIsIndependentOfThreadCount)
{
    suite_options opt;
    opt.only = {1, 2, 4, 10};
    opt.threads = 1;
    auto one = format_report(run_suite(opt), true);
    opt.threads = 4;
    auto four = format_report(run_suite(opt), true);
    EXPECT_EQ(one, four);
}

TEST(Suite, OaNotCaFixtureIsPinned)
{
    auto pinned = load_oa_not_ca_pin(ORIENT_FIXTURE_DIR);
    EXPECT_FALSE(decide_oa(pinned.g, pinned.f));
    EXPECT_TRUE(decide_ca(pinned.g, pinned.f));
    EXPECT_TRUE(check_cut_certificate(pinned.g, pinned.f, pinned.x));
}

TEST(Suite, SmallGraphLatticeHasNoIsolatedVertices)
{
    auto lattice = detail::small_graph_lattice(3);
    EXPECT_FALSE(lattice.empty());
    for (const auto& g : lattice) {
        EXPECT_LE(g.edge_count(), 3);
        for (vertex_id v = 0; v < g.vertex_count(); ++v) EXPECT_GT(g.degree(v), 0);
    }
}
