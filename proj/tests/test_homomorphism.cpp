#include <bfall/corpus.hpp>
#include <bfall/homomorphism.hpp>
#include <bfall/io.hpp>
#include <bfall/spectra.hpp>

#include <gtest/gtest.h>

using namespace bfall;

TEST(VertexMap, ValidatesImages)
{
    EXPECT_THROW(VertexMap(path(3), complete(2), {0, 1}), input_error);
    EXPECT_THROW(VertexMap(path(3), complete(2), {0, 1, 2}), input_error);
    VertexMap m(path(3), complete(2), {0, 1, 0});
    EXPECT_EQ(m(1), 1u);
}

TEST(Checkers, IdentityIsEverything)
{
    corpus::Rng rng(51);
    for (int i = 0; i < 20; ++i) {
        Graph g = corpus::random_small_graph(rng, 1, 7);
        auto id = VertexMap::identity(g);
        EXPECT_TRUE(is_homomorphism(id));
        EXPECT_TRUE(is_b_homomorphism(id));
        EXPECT_TRUE(is_domatic(id));
        EXPECT_TRUE(is_type2(id));
        EXPECT_TRUE(is_surjective(id));
    }
}

TEST(Checkers, Examples)
{
    EXPECT_FALSE(is_homomorphism(VertexMap(complete(2), complete(1), {0, 0})));
    auto p3 = coloring_to_map(path(3), Coloring({0, 1, 2}));
    EXPECT_TRUE(is_homomorphism(p3));
    EXPECT_FALSE(is_b_homomorphism(p3));
    EXPECT_FALSE(is_domatic(p3));
    EXPECT_FALSE(is_type2(p3));
    auto cr = coloring_to_map(crown(3), Coloring({0, 1, 2, 0, 1, 2}));
    EXPECT_TRUE(is_domatic(cr));
    EXPECT_TRUE(is_type2(cr));
    EXPECT_TRUE(is_b_homomorphism(cr));
}

TEST(Checkers, DomaticNeedNotBeHomomorphism)
{
    VertexMap fold(path(4), complete(2), {0, 1, 0, 1});
    EXPECT_TRUE(is_type2(fold));
    // Adjacent pairs of C4 sent to the same end of an edge: the edge 01
    // collapses, yet every vertex still sees the other end.
    VertexMap m(cycle(4), make_graph(2, {{0, 1}}), {0, 0, 1, 1});
    EXPECT_FALSE(is_homomorphism(m));
    EXPECT_TRUE(is_domatic(m));
}

TEST(Bridge, ColoringsAreMapsToCompleteGraphs)
{
    corpus::Rng rng(52);
    for (int i = 0; i < 30; ++i) {
        Graph g = corpus::random_small_graph(rng, 1, 8);
        Coloring c = optimal_coloring(g);
        auto m = coloring_to_map(g, c);
        EXPECT_TRUE(is_homomorphism(m));
        EXPECT_EQ(map_to_coloring(m), c);
        EXPECT_EQ(is_type2(m) && is_surjective(m), is_fall_coloring(g, c));
        EXPECT_EQ(is_b_homomorphism(m), is_b_coloring(g, c));
    }
    EXPECT_THROW(coloring_to_map(path(2), Coloring({0, 0})), input_error);
    EXPECT_THROW(map_to_coloring(VertexMap(path(2), path(3), {0, 1})), input_error);
    EXPECT_THROW(map_to_coloring(VertexMap(path(2), complete(2), {0, 0})), input_error);
}

TEST(Lift, IdentityLiftsToIdentity)
{
    Graph g = cycle(4), h = path(3);
    for (const auto & spec : products::named())
        for (auto side : {LiftSide::left, LiftSide::right}) {
            auto l = lift(VertexMap::identity(h), g, spec, side);
            EXPECT_EQ(l.map, VertexMap::identity(l.source).map);
        }
}

TEST(Lift, PreservesClassOnCorpus)
{
    corpus::Rng rng(53);
    std::size_t maps = 0;
    for (int i = 0; i < 30; ++i) {
        Graph g = corpus::random_small_graph(rng, 1, 5);
        Graph h = corpus::random_small_graph(rng, 1, 5);
        Graph f = corpus::random_small_graph(rng, 1, 5);
        for (auto cls : {MapClass::hom, MapClass::b, MapClass::domatic, MapClass::type2}) {
            // The domatic lemma needs a surjective map; type2 inherits that.
            const bool surj = cls == MapClass::domatic || cls == MapClass::type2;
            auto m = find_map(h, f, cls, {.surjective = surj});
            if (! m)
                continue;
            ++maps;
            for (const auto & spec : products::named())
                for (auto side : {LiftSide::left, LiftSide::right})
                    EXPECT_TRUE(is_of_class(lift(*m, g, spec, side), cls)) << spec.name();
        }
    }
    EXPECT_GT(maps, 20u);
}

TEST(FindMap, Examples)
{
    EXPECT_TRUE(find_map(cycle(5), complete(3), MapClass::hom).has_value());
    EXPECT_FALSE(find_map(cycle(5), complete(2), MapClass::hom).has_value());
    auto t = find_map(crown(3), complete(3), MapClass::type2);
    ASSERT_TRUE(t.has_value());
    EXPECT_TRUE(is_type2(*t));
    EXPECT_FALSE(find_map(cycle(5), complete(3), MapClass::type2).has_value());
    EXPECT_THROW(find_map(cycle(13), complete(7), MapClass::hom), size_error);
    EXPECT_NO_THROW(find_map(cycle(13), complete(3), MapClass::hom));
}

TEST(FindMap, ResultsPassCheckers)
{
    corpus::Rng rng(54);
    for (int i = 0; i < 40; ++i) {
        Graph s = corpus::random_small_graph(rng, 1, 6);
        Graph t = corpus::random_small_graph(rng, 1, 4);
        for (auto cls : {MapClass::hom, MapClass::b, MapClass::domatic, MapClass::type2})
            for (bool surj : {false, true})
                if (auto m = find_map(s, t, cls, {.surjective = surj})) {
                    EXPECT_TRUE(is_of_class(*m, cls));
                    EXPECT_TRUE(! surj || is_surjective(*m));
                }
    }
}

TEST(FindMap, ExhaustiveAgreement)
{
    // Existence answers against trying every function.
    corpus::Rng rng(55);
    for (int i = 0; i < 30; ++i) {
        Graph s = corpus::random_small_graph(rng, 1, 5);
        Graph t = corpus::random_small_graph(rng, 1, 3);
        for (auto cls : {MapClass::hom, MapClass::b, MapClass::domatic, MapClass::type2}) {
            bool exists = false;
            std::vector<Vertex> a(s.order(), 0);
            for (;;) {
                VertexMap m(s, t, a);
                if (is_of_class(m, cls) && (cls != MapClass::domatic || is_surjective(m)))
                    exists = true;
                std::size_t j = 0;
                while (j < a.size() && ++a[j] == t.order())
                    a[j++] = 0;
                if (j == a.size() || exists)
                    break;
            }
            EXPECT_EQ(find_map(s, t, cls, {.surjective = cls == MapClass::domatic}).has_value(), exists);
        }
    }
}

TEST(Properties, TransitivityOfBAndType2)
{
    corpus::Rng rng(56);
    std::size_t chains = 0;
    for (int i = 0; i < 40; ++i) {
        Graph g = corpus::random_small_graph(rng, 2, 6);
        Graph h = corpus::random_small_graph(rng, 1, 4);
        Graph f = corpus::random_small_graph(rng, 1, 3);
        for (auto cls : {MapClass::b, MapClass::type2}) {
            auto gh = find_map(g, h, cls), hf = find_map(h, f, cls);
            if (gh && hf) {
                ++chains;
                EXPECT_TRUE(find_map(g, f, cls).has_value());
            }
        }
    }
    EXPECT_GT(chains, 0u);
}

TEST(Properties, SpectraViaMapsToCompleteGraphs)
{
    corpus::Rng rng(57);
    for (int i = 0; i < 30; ++i) {
        Graph g = corpus::random_small_graph(rng, 1, 8);
        SpectrumSolver s(g);
        const Spectrum b = s.b_spectrum(), f = s.fall_spectrum();
        for (std::size_t k = 1; k <= 5; ++k) {
            EXPECT_EQ(find_map(g, complete(k), MapClass::type2, {.surjective = true}).has_value(), f.count(k) == 1)
                << "k=" << k;
            EXPECT_EQ(find_map(g, complete(k), MapClass::b).has_value(), b.count(k) == 1) << "k=" << k;
        }
    }
}

namespace {

bool connected(const Graph & g)
{
    if (g.order() == 0)
        return true;
    VertexSet seen = g.empty_set();
    std::vector<Vertex> stack{0};
    seen.set(0);
    while (! stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbor_list(v))
            if (! seen.test(w)) {
                seen.set(w);
                stack.push_back(w);
            }
    }
    return seen.all();
}

} // namespace

TEST(Properties, DomaticIntoConnectedGraphWithoutIsolatedVerticesIsSurjective)
{
    corpus::Rng rng(58);
    std::size_t seen = 0;
    for (int i = 0; i < 80; ++i) {
        Graph s = corpus::random_small_graph(rng, 1, 6);
        Graph t = corpus::random_small_graph(rng, 2, 4);
        if (t.has_isolated_vertex() || ! connected(t))
            continue;
        if (auto m = find_map(s, t, MapClass::domatic)) {
            ++seen;
            EXPECT_TRUE(is_surjective(*m));
        }
    }
    EXPECT_GT(seen, 0u);
}

TEST(Properties, DomaticImageIsAUnionOfComponents)
{
    // Without connectivity the image can miss a whole component: K2 onto one
    // edge of 2K2 is a Type II map that is not surjective.
    Graph two_edges = make_graph(4, {{0, 1}, {2, 3}});
    VertexMap m(complete(2), two_edges, {0, 1});
    EXPECT_FALSE(two_edges.has_isolated_vertex());
    EXPECT_TRUE(is_type2(m));
    EXPECT_FALSE(is_surjective(m));
}

TEST(Json, RoundTrip)
{
    VertexMap m(path(3), complete(2), {0, 1, 0});
    auto j = to_json(m);
    EXPECT_EQ(j["source_n"], 3);
    EXPECT_EQ(vertex_map_from_json(j, path(3), complete(2)).map, m.map);
    EXPECT_THROW(vertex_map_from_json(j, path(4), complete(2)), input_error);
    EXPECT_THROW(vertex_map_from_json(nlohmann::json::object(), path(3), complete(2)), input_error);
}
