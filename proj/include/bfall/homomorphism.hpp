#pragma once

#include <bfall/coloring.hpp>
#include <bfall/product.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include <json.hpp>

namespace bfall {

/// A total function V(source) -> V(target).
struct VertexMap {
    Graph source;
    Graph target;
    std::vector<Vertex> map;

    VertexMap() = default;

    VertexMap(Graph src, Graph tgt, std::vector<Vertex> images) :
        source(std::move(src)), target(std::move(tgt)), map(std::move(images))
    {
        if (map.size() != source.order())
            throw input_error("vertex map has " + std::to_string(map.size()) + " images for "
                + std::to_string(source.order()) + " source vertices");
        for (Vertex t : map)
            if (t >= target.order())
                throw input_error("vertex map image " + std::to_string(t) + " outside the target");
    }

    static VertexMap identity(const Graph & g)
    {
        std::vector<Vertex> id(g.order());
        std::iota(id.begin(), id.end(), Vertex{0});
        return VertexMap(g, g, std::move(id));
    }

    Vertex operator()(Vertex v) const { return map[v]; }

    /// f(X) for X = N(v), as a target vertex set.
    [[nodiscard]] VertexSet image_of_neighbors(Vertex v) const
    {
        VertexSet s = target.empty_set();
        for (Vertex w : source.neighbor_list(v))
            s.set(map[w]);
        return s;
    }
};

enum class MapClass { hom, b, domatic, type2 };

inline bool is_homomorphism(const VertexMap & m)
{
    for (auto [u, v] : m.source.edges())
        if (! m.target.adjacent(m(u), m(v)))
            return false;
    return true;
}

inline bool is_surjective(const VertexMap & m)
{
    VertexSet hit = m.target.empty_set();
    for (Vertex t : m.map)
        hit.set(t);
    return hit.all();
}

/// Homomorphism where every target vertex u has a preimage u' with
/// f(N(u')) = N(u).
inline bool is_b_homomorphism(const VertexMap & m)
{
    if (! is_homomorphism(m))
        return false;
    std::vector<bool> witnessed(m.target.order(), false);
    for (Vertex v = 0; v < m.source.order(); ++v)
        if (! witnessed[m(v)] && m.image_of_neighbors(v) == m.target.neighbors(m(v)))
            witnessed[m(v)] = true;
    return std::all_of(witnessed.begin(), witnessed.end(), [](bool b) { return b; });
}

/// For every target edge u'v' and every u with f(u) = u', some neighbor of u
/// maps to v'. Equivalently f(N(u)) contains N(f(u)) for every source u.
/// Need not be a homomorphism.
inline bool is_domatic(const VertexMap & m)
{
    for (Vertex u = 0; u < m.source.order(); ++u) {
        const VertexSet & want = m.target.neighbors(m(u));
        if (! want.is_subset_of(m.image_of_neighbors(u)))
            return false;
    }
    return true;
}

inline bool is_type2(const VertexMap & m) { return is_homomorphism(m) && is_domatic(m); }

inline bool is_of_class(const VertexMap & m, MapClass cls)
{
    switch (cls) {
    case MapClass::hom: return is_homomorphism(m);
    case MapClass::b: return is_b_homomorphism(m);
    case MapClass::domatic: return is_domatic(m);
    case MapClass::type2: return is_type2(m);
    }
    return false;
}

enum class LiftSide { left, right };

/// Lifts m : H -> F through a product with G.
///  - left:  G.H -> G.F, (u, v) -> (u, m(v))
///  - right: H.G -> F.G, (v, u) -> (m(v), u)
inline VertexMap lift(const VertexMap & m, const Graph & g, const ProductSpec & spec, LiftSide side)
{
    const Graph & h = m.source;
    const Graph & f = m.target;
    std::vector<Vertex> images(g.order() * h.order());
    if (side == LiftSide::left) {
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = 0; v < h.order(); ++v)
                images[product_index(u, v, h.order())] = product_index(u, m(v), f.order());
        return VertexMap(product(g, h, spec), product(g, f, spec), std::move(images));
    }
    for (Vertex v = 0; v < h.order(); ++v)
        for (Vertex u = 0; u < g.order(); ++u)
            images[product_index(v, u, g.order())] = product_index(m(v), u, g.order());
    return VertexMap(product(h, g, spec), product(f, g, spec), std::move(images));
}

/// A proper coloring seen as a homomorphism into K_k.
inline VertexMap coloring_to_map(const Graph & g, const Coloring & c)
{
    if (! is_proper(g, c))
        throw input_error("only proper colorings are homomorphisms into a complete graph");
    std::vector<Vertex> images(c.colors().begin(), c.colors().end());
    return VertexMap(g, c.k() == 0 ? Graph{} : complete(c.k()), std::move(images));
}

/// Inverse of coloring_to_map, up to compaction of unused target vertices.
inline Coloring map_to_coloring(const VertexMap & m)
{
    if (! is_complete(m.target))
        throw input_error("target of a coloring map must be a complete graph");
    if (! is_homomorphism(m))
        throw input_error("map is not a homomorphism");
    return Coloring(std::vector<Color>(m.map.begin(), m.map.end()));
}

struct FindMapOptions {
    bool surjective = false;
};

namespace detail {

    class MapSearch {
    public:
        MapSearch(const Graph & src, const Graph & tgt, MapClass cls, FindMapOptions opts) :
            src_(src), tgt_(tgt), cls_(cls), opts_(opts), image_(src.order(), unset), hits_(tgt.order(), 0)
        {
            candidates_.resize(tgt.order());
            std::iota(candidates_.begin(), candidates_.end(), Vertex{0});
            std::stable_sort(candidates_.begin(), candidates_.end(),
                [&](Vertex a, Vertex b) { return tgt.degree(a) > tgt.degree(b); });

            // Source order: repeatedly the unplaced vertex with most placed
            // neighbors, ties by degree.
            std::vector<bool> placed(src.order(), false);
            std::vector<std::size_t> links(src.order(), 0);
            for (std::size_t step = 0; step < src.order(); ++step) {
                Vertex best = src.order();
                for (Vertex v = 0; v < src.order(); ++v)
                    if (! placed[v]
                        && (best == src.order() || links[v] > links[best]
                            || (links[v] == links[best] && src.degree(v) > src.degree(best))))
                        best = v;
                placed[best] = true;
                order_.push_back(best);
                for (Vertex w : src.neighbor_list(best))
                    ++links[w];
            }
        }

        std::optional<VertexMap> run()
        {
            if (src_.order() == 0) {
                VertexMap m(src_, tgt_, {});
                return accept(m) ? std::optional(m) : std::nullopt;
            }
            if (tgt_.order() == 0)
                return std::nullopt;
            if (extend(0))
                return VertexMap(src_, tgt_, image_);
            return std::nullopt;
        }

    private:
        static constexpr Vertex unset = static_cast<Vertex>(-1);

        [[nodiscard]] bool needs_surjective() const { return opts_.surjective || cls_ == MapClass::b; }
        [[nodiscard]] bool needs_hom() const { return cls_ != MapClass::domatic; }
        [[nodiscard]] bool needs_domatic() const { return cls_ == MapClass::domatic || cls_ == MapClass::type2; }

        [[nodiscard]] bool accept(const VertexMap & m) const
        {
            return is_of_class(m, cls_) && (! needs_surjective() || is_surjective(m));
        }

        // Placed vertex u can still see every target neighbor of its image.
        [[nodiscard]] bool domatic_open(Vertex u) const
        {
            VertexSet seen = tgt_.empty_set();
            std::size_t open = 0;
            for (Vertex w : src_.neighbor_list(u)) {
                if (image_[w] == unset)
                    ++open;
                else
                    seen.set(image_[w]);
            }
            VertexSet missing = tgt_.neighbors(image_[u]) - seen;
            return missing.count() <= open;
        }

        bool consistent(std::size_t depth, Vertex u) const
        {
            const Vertex t = image_[u];
            if (needs_hom())
                for (Vertex w : src_.neighbor_list(u))
                    if (image_[w] != unset && ! tgt_.adjacent(t, image_[w]))
                        return false;
            if (needs_domatic()) {
                if (! domatic_open(u))
                    return false;
                for (Vertex w : src_.neighbor_list(u))
                    if (image_[w] != unset && ! domatic_open(w))
                        return false;
            }
            if (needs_surjective()) {
                std::size_t missing = static_cast<std::size_t>(std::count(hits_.begin(), hits_.end(), 0));
                if (missing > src_.order() - depth - 1)
                    return false;
            }
            return true;
        }

        bool extend(std::size_t depth)
        {
            if (depth == order_.size())
                return accept(VertexMap(src_, tgt_, image_));
            const Vertex u = order_[depth];
            for (Vertex t : candidates_) {
                image_[u] = t;
                ++hits_[t];
                if (consistent(depth, u) && extend(depth + 1))
                    return true;
                --hits_[t];
                image_[u] = unset;
            }
            return false;
        }

        const Graph & src_;
        const Graph & tgt_;
        MapClass cls_;
        FindMapOptions opts_;
        std::vector<Vertex> order_;
        std::vector<Vertex> candidates_;
        std::vector<Vertex> image_;
        std::vector<std::size_t> hits_;
    };

} // namespace detail

/// Some map of the requested class from source to target, if one exists.
/// Refuses when both graphs are large (source > 12 and target > 6 vertices).
inline std::optional<VertexMap> find_map(
    const Graph & source, const Graph & target, MapClass cls, FindMapOptions opts = {})
{
    if (source.order() > 12 && target.order() > 6)
        throw size_error("map search limited to sources of at most 12 vertices or targets of at most 6");
    return detail::MapSearch(source, target, cls, opts).run();
}

inline nlohmann::json to_json(const VertexMap & m)
{
    return {{"source_n", m.source.order()}, {"target_n", m.target.order()}, {"map", m.map}};
}

/// Reads {"source_n", "target_n", "map"} against the given graphs.
inline VertexMap vertex_map_from_json(const nlohmann::json & j, const Graph & source, const Graph & target)
{
    if (! j.contains("map") || ! j["map"].is_array())
        throw input_error("vertex map JSON needs a \"map\" array");
    if (j.contains("source_n") && j["source_n"].get<std::size_t>() != source.order())
        throw input_error("vertex map source_n does not match the source graph");
    if (j.contains("target_n") && j["target_n"].get<std::size_t>() != target.order())
        throw input_error("vertex map target_n does not match the target graph");
    return VertexMap(source, target, j["map"].get<std::vector<Vertex>>());
}

} // namespace bfall
