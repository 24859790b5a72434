#include <bfall/corpus.hpp>
#include <bfall/product.hpp>

#include <gtest/gtest.h>

#include <functional>

using namespace bfall;

namespace {

using Rule = std::function<bool(bool eq1, bool adj1, bool eq2, bool adj2)>;

// Adjacency rules written out as plain formulas, independent of the masks.
const std::vector<std::pair<ProductSpec, Rule>> & formulas()
{
    static const std::vector<std::pair<ProductSpec, Rule>> all = {
        {products::cartesian(), [](bool e1, bool a1, bool e2, bool a2) { return (e1 && a2) || (a1 && e2); }},
        {products::direct(), [](bool, bool a1, bool, bool a2) { return a1 && a2; }},
        {products::lexicographic(), [](bool e1, bool a1, bool, bool a2) { return a1 || (e1 && a2); }},
        {products::strong(),
            [](bool e1, bool a1, bool e2, bool a2) { return (e1 && a2) || (a1 && e2) || (a1 && a2); }},
        {products::conormal(), [](bool, bool a1, bool, bool a2) { return a1 || a2; }},
    };
    return all;
}

} // namespace

TEST(Product, MatchesLiteralFormulas)
{
    corpus::Rng rng(11);
    for (int i = 0; i < 25; ++i) {
        Graph g = corpus::random_small_graph(rng, 1, 5);
        Graph h = corpus::random_small_graph(rng, 1, 5);
        for (const auto & [spec, rule] : formulas()) {
            Graph p = product(g, h, spec);
            ASSERT_EQ(p.order(), g.order() * h.order());
            for (Vertex u = 0; u < g.order(); ++u)
                for (Vertex v = 0; v < h.order(); ++v)
                    for (Vertex u2 = 0; u2 < g.order(); ++u2)
                        for (Vertex v2 = 0; v2 < h.order(); ++v2) {
                            const bool same = u == u2 && v == v2;
                            const bool want = ! same && rule(u == u2, g.adjacent(u, u2), v == v2, h.adjacent(v, v2));
                            EXPECT_EQ(p.adjacent(product_index(u, v, h.order()), product_index(u2, v2, h.order())), want)
                                << spec.name();
                        }
        }
    }
}

TEST(Product, SymmetricProductsCommuteUnderCoordinateSwap)
{
    corpus::Rng rng(12);
    for (int i = 0; i < 20; ++i) {
        Graph g = corpus::random_small_graph(rng, 1, 5);
        Graph h = corpus::random_small_graph(rng, 1, 5);
        for (const auto & spec : products::named()) {
            if (spec == products::lexicographic())
                continue;
            Graph gh = product(g, h, spec), hg = product(h, g, spec);
            for (auto [a, b] : gh.edges()) {
                const Vertex sa = product_index(a % h.order(), a / h.order(), g.order());
                const Vertex sb = product_index(b % h.order(), b / h.order(), g.order());
                EXPECT_TRUE(hg.adjacent(sa, sb)) << spec.name();
            }
            EXPECT_EQ(gh.size(), hg.size()) << spec.name();
        }
    }
}

TEST(Product, LexicographicIsNotCommutative)
{
    Graph a = product(path(3), complete(2), products::lexicographic());
    Graph b = product(complete(2), path(3), products::lexicographic());
    EXPECT_NE(a.size(), b.size());
}

TEST(Product, CompleteFactorsGiveCompleteGraph)
{
    for (const auto & spec : {products::lexicographic(), products::strong(), products::conormal()})
        for (std::size_t p = 1; p <= 6; ++p)
            for (std::size_t q = 1; q <= 6; ++q) {
                Graph g = product(complete(p), complete(q), spec);
                EXPECT_EQ(g.order(), p * q);
                EXPECT_TRUE(is_complete(g)) << spec.name() << " " << p << "," << q;
            }
    EXPECT_FALSE(is_complete(product(complete(2), complete(2), products::cartesian())));
}

TEST(Product, StrongIsSpanningSubgraphOfLex)
{
    corpus::Rng rng(13);
    for (int i = 0; i < 30; ++i) {
        Graph g = corpus::random_small_graph(rng, 1, 6);
        Graph h = corpus::random_small_graph(rng, 1, 6);
        Graph s = product(g, h, products::strong()), l = product(g, h, products::lexicographic());
        for (auto [a, b] : s.edges())
            EXPECT_TRUE(l.adjacent(a, b));
    }
    Graph g = cycle(5);
    EXPECT_EQ(product(g, complete(3), products::strong()), product(g, complete(3), products::lexicographic()));
}

TEST(Product, KnownExamples)
{
    Graph d = product(complete(3), complete(4), products::direct());
    EXPECT_EQ(d.order(), 12u);
    EXPECT_EQ(d.min_degree(), 6u);
    Graph c = product(complete(2), complete(2), products::cartesian());
    EXPECT_EQ(c.size(), 4u);
    EXPECT_EQ(c.max_degree(), 2u);
    // K2 x K2 is two disjoint edges.
    EXPECT_EQ(product(complete(2), complete(2), products::direct()).size(), 2u);
}

TEST(Product, NaryFoldIsAssociative)
{
    corpus::Rng rng(14);
    for (int i = 0; i < 10; ++i) {
        Graph a = corpus::random_small_graph(rng, 1, 4);
        Graph b = corpus::random_small_graph(rng, 1, 4);
        Graph c = corpus::random_small_graph(rng, 1, 4);
        const std::vector<Graph> fs{a, b, c};
        for (const auto & spec : products::named())
            EXPECT_EQ(product(fs, spec), product(a, product(b, c, spec), spec)) << spec.name();
    }
    std::vector<Graph> none;
    EXPECT_THROW(product(none, products::direct()), input_error);
}

TEST(Product, LabelsAreCoordinatePairs)
{
    Graph g = product(crown(2), path(2), products::direct());
    EXPECT_EQ(g.label(product_index(3, 1, 2)), "(b2,1)");
}

TEST(Product, EmptyFactorThrows)
{
    EXPECT_THROW(product(Graph{}, complete(2), products::cartesian()), input_error);
    EXPECT_THROW(product(complete(2), Graph{}, products::cartesian()), input_error);
}

TEST(ProductSpec, MaskValidationAndCustomSpecs)
{
    EXPECT_THROW(ProductSpec(1), input_error);
    EXPECT_THROW(ProductSpec(0x200), input_error);
    EXPECT_TRUE(is_complete(product(path(3), path(2), ProductSpec(ProductSpec::full_mask))));
    EXPECT_EQ(product(path(3), path(2), ProductSpec(0)).size(), 0u);
    using enum CoordRelation;
    EXPECT_EQ(ProductSpec::bit(Equal, Adjacent), 1u << 1);
    EXPECT_EQ(ProductSpec::bit(Neither, Neither), 1u << 8);
    EXPECT_EQ(products::cartesian().mask(), (1u << 1) | (1u << 3));
}

TEST(ProductSpec, NamesAndAliases)
{
    for (const auto & spec : products::named())
        EXPECT_EQ(products::by_name(spec.name()), spec);
    EXPECT_EQ(products::by_name("tensor"), products::direct());
    EXPECT_EQ(products::by_name("co-normal"), products::conormal());
    EXPECT_FALSE(products::by_name("bogus").has_value());
}

TEST(Fiber, RowsAndColumns)
{
    Graph g = path(3), h = complete(4);
    EXPECT_EQ(fiber(g, h, 1, Side::first), (std::vector<Vertex>{4, 5, 6, 7}));
    EXPECT_EQ(fiber(g, h, 2, Side::second), (std::vector<Vertex>{2, 6, 10}));
    EXPECT_THROW(fiber(g, h, 3, Side::first), input_error);
    EXPECT_THROW(fiber(g, h, 4, Side::second), input_error);
    // Fibers of the cartesian product induce copies of the factors.
    Graph p = product(g, h, products::cartesian());
    EXPECT_EQ(p.induced(fiber(g, h, 0, Side::first)), h);
    EXPECT_EQ(p.induced(fiber(g, h, 3, Side::second)), g);
}
