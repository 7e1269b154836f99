#include <gtest/gtest.h>

#include "support.hpp"

using namespace orient;
using namespace orient::testing;

namespace {

std::size_t count_degree(const multigraph& w, count_t d)
{
    std::size_t n = 0;
    for (vertex_id v = 0; v < w.vertex_count(); ++v) n += w.degree(v) == d;
    return n;
}

}  // namespace

TEST(Grid, ThreeByFour)
{
    auto [w, spec] = augmented_grid(3, 4);
    EXPECT_EQ(w.vertex_count(), 24u);
    EXPECT_EQ(spec.ports().size(), 8u);
    EXPECT_EQ(count_degree(w, 4), 16u);
    EXPECT_EQ(count_degree(w, 3), 8u);
    EXPECT_EQ(w.edge_count(), 44);
}

TEST(Grid, ThreeByTwo)
{
    auto [w, spec] = augmented_grid(3, 2);
    EXPECT_EQ(w.vertex_count(), 12u);
    EXPECT_EQ(spec.ports().size(), 4u);
    EXPECT_EQ(w.edge_count(), 22);
    EXPECT_EQ(w.label(spec.l[0]), "r3c1");
    EXPECT_EQ(w.label(spec.p[1]), "r6c2");
}

TEST(Grid, ParameterErrors)
{
    EXPECT_THROW(augmented_grid(4, 2), error);
    EXPECT_THROW(augmented_grid(1, 2), error);
    EXPECT_THROW(augmented_grid(3, 1), error);
}

TEST(Grid, DegreeProfileAndPaddingOverLattice)
{
    for (int alpha : {3, 5, 7})
        for (int beta : {2, 3, 4}) {
            auto [w, spec] = augmented_grid(alpha, beta);
            EXPECT_EQ(w.vertex_count(), static_cast<std::size_t>(alpha * beta * (alpha + 1) / 2));
            EXPECT_EQ(grid_degree_defect(w, spec), "") << alpha << "," << beta;
            for (const auto& [u, v] : spec.padding) {
                EXPECT_EQ(w.multiplicity(u, v), 2);
                EXPECT_FALSE(spec.is_port(u) || spec.is_port(v));
            }
        }
}

TEST(Grid, DegreeDefectDetected)
{
    auto [w, spec] = augmented_grid(3, 2);
    graph_builder b(w);
    b.add_edge(spec.at(1, 1), spec.at(1, 2));
    EXPECT_NE(grid_degree_defect(b.build(), spec), "");
}

TEST(ThreeConnectivity, ExhaustiveOnThreeByTwo)
{
    auto [w, spec] = augmented_grid(3, 2);
    auto rep = verify_three_edge_connected(w, spec);
    EXPECT_TRUE(rep.exhaustive);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.cuts_of_three, 8u);
    EXPECT_EQ(rep.min_lambda, 3);
}

TEST(ThreeConnectivity, FlowsOnThreeByThree)
{
    auto [w, spec] = augmented_grid(3, 3);
    auto rep = verify_three_edge_connected(w, spec);
    EXPECT_FALSE(rep.exhaustive);
    EXPECT_TRUE(rep.pairwise_ok);
    EXPECT_TRUE(rep.ok());
}

TEST(Separation, RowBlockOnThreeByTwo)
{
    auto [w, spec] = augmented_grid(3, 2);
    vertex_set x(w.vertex_count());
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 2; ++j) x.insert(spec.at(i, j));
    auto c = verify_separation_bound(w, spec, x);
    EXPECT_TRUE(c.hypothesis);
    EXPECT_EQ(c.cut, 4);  // 2 columns x (row 3-4 edge + wrap edge)
    EXPECT_TRUE(c.holds);
}

TEST(Separation, NonPortSingletonIsVacuous)
{
    auto [w, spec] = augmented_grid(3, 2);
    vertex_set x(w.vertex_count());
    x.insert(spec.at(1, 1));
    auto c = verify_separation_bound(w, spec, x);
    EXPECT_FALSE(c.hypothesis);
    EXPECT_TRUE(c.holds);
}

TEST(Separation, ExhaustiveOnThreeByTwo)
{
    auto [w, spec] = augmented_grid(3, 2);
    auto scan = separation_exhaustive(w, spec);
    EXPECT_EQ(scan.sets, 4096u);
    EXPECT_GT(scan.hypothesis, 0u);
    EXPECT_EQ(scan.failures, 0u);
    EXPECT_GT(scan.min_cut_under_hypothesis, 3);
}

TEST(Separation, StructuredFamilies)
{
    for (auto [alpha, beta] : {std::pair{5, 3}, std::pair{7, 2}}) {
        auto [w, spec] = augmented_grid(alpha, beta);
        auto scan = separation_structured(w, spec);
        EXPECT_GT(scan.hypothesis, 0u);
        EXPECT_TRUE(scan.ok());
    }
}
