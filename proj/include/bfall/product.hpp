#pragma once

#include <bfall/graph.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bfall {

/// How two coordinates in one factor relate. In a simple graph equality and
/// adjacency exclude each other, so these three cases are exhaustive.
enum class CoordRelation : std::uint8_t { Equal = 0, Adjacent = 1, Neither = 2 };

inline CoordRelation relation(const Graph & g, Vertex a, Vertex b)
{
    if (a == b)
        return CoordRelation::Equal;
    return g.adjacent(a, b) ? CoordRelation::Adjacent : CoordRelation::Neither;
}

/// An adjacency product, given as the set of (first, second) coordinate
/// relation pairs for which two product vertices are adjacent.
///
/// The set is a 9-bit mask with bit 3 * first + second, where Equal = 0,
/// Adjacent = 1 and Neither = 2. Read from bit 1 upwards, the bits are
/// (E,A), (E,N), (A,E), (A,A), (A,N), (N,E), (N,A), (N,N). Bit 0 is (E,E),
/// which relates a vertex to itself, and is always clear.
class ProductSpec {
public:
    static constexpr std::uint16_t full_mask = 0x1FE;

    ProductSpec() = default;

    explicit ProductSpec(std::uint16_t mask, std::string name = {}) : mask_(mask), name_(std::move(name))
    {
        if (mask & 1u)
            throw input_error("product mask may not contain the (Equal, Equal) pair");
        if (mask & ~0x1FFu)
            throw input_error("product mask has bits beyond the nine relation pairs");
    }

    static constexpr std::uint16_t bit(CoordRelation first, CoordRelation second)
    {
        return static_cast<std::uint16_t>(1u << (3 * static_cast<unsigned>(first) + static_cast<unsigned>(second)));
    }

    [[nodiscard]] bool allows(CoordRelation first, CoordRelation second) const { return mask_ & bit(first, second); }
    [[nodiscard]] std::uint16_t mask() const noexcept { return mask_; }
    [[nodiscard]] const std::string & name() const noexcept { return name_; }

    friend bool operator==(const ProductSpec & a, const ProductSpec & b) { return a.mask_ == b.mask_; }

private:
    std::uint16_t mask_ = 0;
    std::string name_;
};

namespace products {
    using enum CoordRelation;

    inline ProductSpec cartesian()
    {
        return ProductSpec(ProductSpec::bit(Equal, Adjacent) | ProductSpec::bit(Adjacent, Equal), "cartesian");
    }

    inline ProductSpec direct() { return ProductSpec(ProductSpec::bit(Adjacent, Adjacent), "direct"); }

    inline ProductSpec lexicographic()
    {
        return ProductSpec(ProductSpec::bit(Adjacent, Equal) | ProductSpec::bit(Adjacent, Adjacent)
                | ProductSpec::bit(Adjacent, Neither) | ProductSpec::bit(Equal, Adjacent),
            "lex");
    }

    inline ProductSpec strong()
    {
        return ProductSpec(ProductSpec::bit(Equal, Adjacent) | ProductSpec::bit(Adjacent, Equal)
                | ProductSpec::bit(Adjacent, Adjacent),
            "strong");
    }

    inline ProductSpec conormal()
    {
        return ProductSpec(ProductSpec::bit(Adjacent, Equal) | ProductSpec::bit(Adjacent, Adjacent)
                | ProductSpec::bit(Adjacent, Neither) | ProductSpec::bit(Equal, Adjacent)
                | ProductSpec::bit(Neither, Adjacent),
            "conormal");
    }

    inline std::array<ProductSpec, 5> named() { return {cartesian(), direct(), lexicographic(), strong(), conormal()}; }

    /// Accepts the names printed by ProductSpec::name() plus a few aliases.
    inline std::optional<ProductSpec> by_name(std::string_view name)
    {
        if (name == "cartesian" || name == "cart" || name == "box")
            return cartesian();
        if (name == "direct" || name == "tensor" || name == "categorical")
            return direct();
        if (name == "lex" || name == "lexicographic")
            return lexicographic();
        if (name == "strong")
            return strong();
        if (name == "conormal" || name == "co-normal" || name == "disjunctive")
            return conormal();
        return std::nullopt;
    }
} // namespace products

/// Row-major product vertex index.
constexpr Vertex product_index(Vertex u, Vertex v, std::size_t right_order) { return u * right_order + v; }

inline Graph product(const Graph & g, const Graph & h, const ProductSpec & spec)
{
    if (g.order() == 0 || h.order() == 0)
        throw input_error("product factors must be nonempty");
    const std::size_t m = h.order();
    GraphBuilder b(g.order() * m);
    std::vector<std::string> names;
    names.reserve(g.order() * m);
    for (Vertex ua = 0; ua < g.order(); ++ua)
        for (Vertex va = 0; va < m; ++va)
            names.push_back("(" + g.label(ua) + "," + h.label(va) + ")");

    for (Vertex ua = 0; ua < g.order(); ++ua)
        for (Vertex ub = ua; ub < g.order(); ++ub) {
            const CoordRelation r1 = relation(g, ua, ub);
            for (Vertex va = 0; va < m; ++va)
                for (Vertex vb = 0; vb < m; ++vb) {
                    if (ua == ub && vb <= va)
                        continue;
                    if (spec.allows(r1, relation(h, va, vb)))
                        b.add_edge(product_index(ua, va, m), product_index(ub, vb, m));
                }
        }
    b.set_labels(std::move(names));
    return b.build();
}

/// Left fold of the binary product: ((g0 . g1) . g2) ...
inline Graph product(std::span<const Graph> factors, const ProductSpec & spec)
{
    if (factors.empty())
        throw input_error("product of zero factors");
    Graph acc = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i)
        acc = product(acc, factors[i], spec);
    return acc;
}

enum class Side { first, second };

/// V(u, H) for side == first (anchor in G), V(v, G) for side == second.
inline std::vector<Vertex> fiber(const Graph & g, const Graph & h, Vertex anchor, Side side)
{
    std::vector<Vertex> out;
    if (side == Side::first) {
        if (anchor >= g.order())
            throw input_error("fiber anchor " + std::to_string(anchor) + " not in the first factor");
        for (Vertex v = 0; v < h.order(); ++v)
            out.push_back(product_index(anchor, v, h.order()));
    }
    else {
        if (anchor >= h.order())
            throw input_error("fiber anchor " + std::to_string(anchor) + " not in the second factor");
        for (Vertex u = 0; u < g.order(); ++u)
            out.push_back(product_index(u, anchor, h.order()));
    }
    return out;
}

} // namespace bfall
