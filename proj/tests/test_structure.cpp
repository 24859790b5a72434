#include <bfall/corpus.hpp>
#include <bfall/product.hpp>
#include <bfall/structure.hpp>

#include <gtest/gtest.h>

using namespace bfall;

namespace {

// Every vertex subset checked for being a clique.
std::size_t brute_clique_number(const Graph & g)
{
    std::size_t best = 0;
    const std::size_t n = g.order();
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool clique = true;
        for (Vertex u = 0; u < n && clique; ++u)
            for (Vertex v = u + 1; v < n && clique; ++v)
                if ((s >> u & 1) && (s >> v & 1) && ! g.adjacent(u, v))
                    clique = false;
        if (clique)
            best = std::max<std::size_t>(best, std::popcount(s));
    }
    return best;
}

} // namespace

TEST(Chordality, KnownGraphs)
{
    EXPECT_TRUE(is_chordal(complete(5)).chordal);
    EXPECT_TRUE(is_chordal(path(6)).chordal);
    EXPECT_TRUE(is_chordal(Graph{}).chordal);
    EXPECT_FALSE(is_chordal(cycle(4)).chordal);
    EXPECT_FALSE(is_chordal(crown(3)).chordal);
    EXPECT_TRUE(is_chordal(kaul_mitillos_counterexample()).chordal);
}

TEST(Chordality, CertificatesVerify)
{
    corpus::Rng rng(7);
    int chordal = 0, not_chordal = 0;
    for (int i = 0; i < 150; ++i) {
        Graph g = corpus::random_small_graph(rng, 1, 10);
        auto r = is_chordal(g);
        if (r.chordal) {
            ++chordal;
            EXPECT_TRUE(is_perfect_elimination_ordering(g, r.ordering));
        }
        else {
            ++not_chordal;
            EXPECT_TRUE(is_chordless_cycle(g, r.witness_cycle));
        }
    }
    EXPECT_GT(chordal, 0);
    EXPECT_GT(not_chordal, 0);
}

TEST(Chordality, WitnessOnLongCycle)
{
    auto r = is_chordal(cycle(7));
    ASSERT_FALSE(r.chordal);
    EXPECT_EQ(r.witness_cycle.size(), 7u);
    EXPECT_TRUE(is_chordless_cycle(cycle(7), r.witness_cycle));
}

TEST(Chordality, PeoCheckerRejectsBadOrders)
{
    Graph g = path(3);
    EXPECT_FALSE(is_perfect_elimination_ordering(g, {1, 0, 2}));
    EXPECT_TRUE(is_perfect_elimination_ordering(g, {0, 1, 2}));
    EXPECT_FALSE(is_perfect_elimination_ordering(g, {0, 0, 2}));
    EXPECT_FALSE(is_perfect_elimination_ordering(g, {0, 1}));
}

TEST(Chordality, ChordlessCycleChecker)
{
    Graph g = cycle(5);
    EXPECT_TRUE(is_chordless_cycle(g, {0, 1, 2, 3, 4}));
    EXPECT_FALSE(is_chordless_cycle(g, {0, 1, 2}));
    EXPECT_FALSE(is_chordless_cycle(complete(4), {0, 1, 2, 3}));
}

TEST(Clique, MatchesBruteForce)
{
    corpus::Rng rng(3);
    for (int i = 0; i < 120; ++i) {
        Graph g = corpus::random_small_graph(rng, 1, 12);
        auto c = maximum_clique(g);
        EXPECT_EQ(c.size(), brute_clique_number(g));
        for (std::size_t a = 0; a < c.size(); ++a)
            for (std::size_t b = a + 1; b < c.size(); ++b)
                EXPECT_TRUE(g.adjacent(c[a], c[b]));
    }
}

TEST(Clique, KnownValues)
{
    EXPECT_EQ(clique_number(Graph{}), 0u);
    EXPECT_EQ(clique_number(complete(6)), 6u);
    EXPECT_EQ(clique_number(crown(5)), 2u);
    EXPECT_EQ(clique_number(cycle(5)), 2u);
    EXPECT_EQ(clique_number(kaul_mitillos_counterexample()), 7u);
    EXPECT_EQ(clique_number(product(complete(3), complete(4), products::cartesian())), 4u);
}

TEST(Simplicial, PendingCliqueVerticesAreSimplicial)
{
    Graph g = kaul_mitillos_counterexample();
    EXPECT_TRUE(is_simplicial(g, g.find_label("K(x).3")));
    EXPECT_FALSE(is_simplicial(g, g.find_label("x")));
    EXPECT_TRUE(is_simplicial(path(3), 0));
    EXPECT_FALSE(is_simplicial(path(3), 1));
}
