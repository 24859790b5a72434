#include <bfall/corpus.hpp>
#include <bfall/graph.hpp>

#include <gtest/gtest.h>

using namespace bfall;

TEST(GraphBuilder, RejectsSelfLoopsAndOutOfRange)
{
    GraphBuilder b(3);
    EXPECT_THROW(b.add_edge(1, 1), input_error);
    EXPECT_THROW(b.add_edge(0, 3), input_error);
    EXPECT_THROW(b.set_labels({"a", "b"}), input_error);
}

TEST(GraphBuilder, DuplicateEdgesCollapse)
{
    Graph g = make_graph(3, {{0, 1}, {1, 0}, {0, 1}});
    EXPECT_EQ(g.size(), 1u);
    EXPECT_TRUE(g.adjacent(0, 1));
    EXPECT_TRUE(g.adjacent(1, 0));
}

TEST(Graph, AdjacencyIsSymmetricAndIrreflexive)
{
    corpus::Rng rng(1);
    for (int i = 0; i < 40; ++i) {
        Graph g = corpus::random_small_graph(rng, 1, 12);
        std::size_t degree_sum = 0;
        for (Vertex u = 0; u < g.order(); ++u) {
            EXPECT_FALSE(g.adjacent(u, u));
            degree_sum += g.degree(u);
            for (Vertex v = 0; v < g.order(); ++v)
                EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
        }
        EXPECT_EQ(degree_sum, 2 * g.size());
        EXPECT_EQ(g.edges().size(), g.size());
    }
}

TEST(Graph, NamedFamilies)
{
    EXPECT_EQ(complete(5).size(), 10u);
    EXPECT_TRUE(is_complete(complete(5)));
    EXPECT_TRUE(is_complete(complete(1)));
    EXPECT_TRUE(is_complete(Graph{}));
    EXPECT_EQ(cycle(5).size(), 5u);
    EXPECT_EQ(cycle(5).min_degree(), 2u);
    EXPECT_THROW(cycle(2), input_error);
    EXPECT_EQ(path(4).size(), 3u);
    EXPECT_EQ(path(1).size(), 0u);
    EXPECT_EQ(complete_bipartite(2, 3).size(), 6u);
    EXPECT_EQ(complete_bipartite(2, 3).order(), 5u);
}

TEST(Crown, IsRegularOfDegreeNMinusOne)
{
    for (std::size_t n = 2; n <= 8; ++n) {
        Graph g = crown(n);
        EXPECT_EQ(g.order(), 2 * n);
        EXPECT_EQ(g.size(), n * (n - 1));
        EXPECT_EQ(g.min_degree(), n - 1);
        EXPECT_EQ(g.max_degree(), n - 1);
        for (Vertex i = 0; i < n; ++i) {
            EXPECT_FALSE(g.adjacent(i, n + i));
            for (Vertex j = 0; j < n; ++j)
                EXPECT_FALSE(i != j && g.adjacent(i, j));
        }
    }
    EXPECT_EQ(crown(4).size(), 12u);
    EXPECT_EQ(crown(3).label(0), "a1");
    EXPECT_EQ(crown(3).label(5), "b3");
    EXPECT_THROW(crown(1), input_error);
}

TEST(Graph, IsolatedVertexAndDegrees)
{
    Graph g = make_graph(3, {{0, 1}});
    EXPECT_TRUE(g.has_isolated_vertex());
    EXPECT_EQ(g.min_degree(), 0u);
    EXPECT_FALSE(complete(2).has_isolated_vertex());
    Graph empty;
    EXPECT_EQ(empty.order(), 0u);
    EXPECT_FALSE(empty.has_isolated_vertex());
}

TEST(Graph, InducedSubgraphRenumbers)
{
    Graph g = cycle(5);
    Graph sub = g.induced({0, 1, 2});
    EXPECT_EQ(sub, path(3));
}

TEST(Graph, LabelsAndLookup)
{
    Graph g = crown(3);
    EXPECT_EQ(g.find_label("b2"), 4u);
    EXPECT_EQ(g.find_label("zz"), g.order());
    EXPECT_EQ(path(3).label(2), "2");
}

TEST(NonMonotonePair, HIsInducedSubgraphOfG)
{
    auto [g, h] = non_monotone_pair();
    EXPECT_EQ(g.order(), 8u);
    EXPECT_EQ(h, crown(3));
    EXPECT_EQ(g.induced({0, 1, 2, 3, 4, 5}), h);
    EXPECT_TRUE(g.adjacent(g.find_label("u"), g.find_label("v")));
}

TEST(Counterexample, ShapeAndDegrees)
{
    Graph g = kaul_mitillos_counterexample();
    EXPECT_EQ(g.order(), 61u);
    EXPECT_EQ(g.size(), 193u);
    EXPECT_EQ(g.min_degree(), 6u);
    for (const char * name : {"u", "v3", "v4", "u1", "u2"})
        EXPECT_EQ(g.degree(g.find_label(name)), 6u) << name;
    EXPECT_EQ(g.degree(g.find_label("z1")), 8u);
    EXPECT_TRUE(g.adjacent(g.find_label("v3"), g.find_label("v4")));
    EXPECT_TRUE(g.adjacent(g.find_label("z2"), g.find_label("v4")));
    EXPECT_FALSE(g.adjacent(g.find_label("x"), g.find_label("v3")));
}
