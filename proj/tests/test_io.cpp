#include <gtest/gtest.h>

#include "support.hpp"

using namespace orient;
using namespace orient::testing;

TEST(Io, RoundTripIsIdentityOnCorpus)
{
    for (const auto& g : generate_corpus(5, 8)) {
        auto text = write_instance(graph_document(g));
        auto doc = parse_instance(text);
        ASSERT_TRUE(doc.graph);
        EXPECT_TRUE(*doc.graph == g);
        EXPECT_EQ(write_instance(doc), text);
    }
}

TEST(Io, RoundTripAllMembers)
{
    auto g = pendant_cycle();
    instance_document doc = graph_document(g);
    doc.arcs = eulerian_orientation(graph_sum(g, pairing_of(g, "a-p c-q")));
    doc.pairing_arcs = orientation::all_forward(pairing_of(g, "a-p c-q"));
    requirement_table r(6, std::vector<count_t>(6, 0));
    r[0][2] = 3;
    doc.requirements = r;
    doc.bounds = std::pair{std::vector<count_t>{1, 0, 0, 0, 0, 2}, std::vector<count_t>{0, 0, 1, 0, 0, 0}};
    doc.threshold = 4;
    doc.set = std::vector<std::string>{"a", "p"};
    doc.provenance = {{"source", "test"}};
    doc.witness = {{"margin", 2}};
    auto text = write_instance(doc);
    auto back = parse_instance(text);
    EXPECT_EQ(write_instance(back), text);
    EXPECT_TRUE(*back.arcs == *doc.arcs);
    EXPECT_EQ((*back.requirements)[0][2], 3);
    EXPECT_EQ(back.bounds->first[5], 2);
    EXPECT_EQ(*back.threshold, 4);
}

TEST(Io, DuplicateEdgesMergeWithWarning)
{
    auto doc = parse_instance(R"({"version": 1, "vertices": ["a", "b"], "edges": [["a", "b", 2], ["b", "a", 3]]})");
    EXPECT_EQ(doc.graph->edge_count(), 5);
    ASSERT_EQ(doc.warnings.size(), 1u);
    EXPECT_NE(doc.warnings[0].find("edges[1]"), std::string::npos);
}

TEST(Io, NegativeMultiplicityIsAnError)
{
    try {
        parse_instance(R"({"version": 1, "vertices": ["a", "b"], "edges": [["a", "b", -1]]})", "in.json");
        FAIL() << "expected a parse error";
    } catch (const error& e) {
        std::string what = e.what();
        EXPECT_NE(what.find("in.json"), std::string::npos);
        EXPECT_NE(what.find("edges[0]"), std::string::npos);
    }
}

TEST(Io, SyntaxErrorIsPositioned)
{
    try {
        parse_instance("{\"version\": 1, \"vertices\": [\"a\",]}", "bad.json");
        FAIL() << "expected a parse error";
    } catch (const error& e) {
        EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos);
    }
}

TEST(Io, SemanticErrors)
{
    EXPECT_THROW(parse_instance(R"({"version": 2, "vertices": []})"), error);
    EXPECT_THROW(parse_instance(R"({"version": 1})"), error);
    EXPECT_THROW(parse_instance(R"({"version": 1, "vertices": ["a", "a"]})"), error);
    EXPECT_THROW(parse_instance(R"({"version": 1, "vertices": ["a"], "edges": [["a", "z", 1]]})"), error);
    EXPECT_THROW(parse_instance(R"({"version": 1, "vertices": ["a", "b"], "edges": [["a", "a", 1]]})"), error);
    EXPECT_THROW(parse_instance(R"({"version": 1, "vertices": ["a"], "bounds": [["a", -1, 0]]})"), error);
}

TEST(Io, WriterIsSorted)
{
    auto g = graph_of("c a b | c-a b-a:2");
    auto text = write_instance(graph_document(g));
    EXPECT_LT(text.find("[\"a\", \"b\", 2]"), text.find("[\"a\", \"c\", 1]"));
}

TEST(Io, SplitLabels)
{
    EXPECT_EQ(split_labels("a, b,c"), (std::vector<std::string>{"a", "b", "c"}));
    EXPECT_TRUE(split_labels("").empty());
}

TEST(Io, ReadsSampleData)
{
    auto doc = read_instance(std::filesystem::path(ORIENT_FIXTURE_DIR) / ".." / ".." / "data" / "pendant-cycle.json");
    EXPECT_TRUE(*doc.graph == pendant_cycle());
    EXPECT_THROW(read_instance("/nonexistent/file.json"), error);
}
