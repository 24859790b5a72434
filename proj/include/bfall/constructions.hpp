#pragma once

#include <bfall/coloring.hpp>
#include <bfall/product.hpp>

namespace bfall {

struct ColoredGraph {
    Graph graph;
    Coloring coloring;
};

/// K_p box K_q colored with q colors: the fiber of u_i gets the cyclic shift
/// j -> (j + i) mod q, so distinct fibers disagree in every column. Needs
/// 1 <= p <= q.
inline ColoredGraph cartesian_complete_fall(std::size_t p, std::size_t q)
{
    if (p < 1 || p > q)
        throw input_error("cartesian_complete_fall needs 1 <= p <= q");
    Graph g = product(complete(p), complete(q), products::cartesian());
    std::vector<Color> c(p * q);
    for (Vertex i = 0; i < p; ++i)
        for (Vertex j = 0; j < q; ++j)
            c[product_index(i, j, q)] = static_cast<Color>((j + i) % q);
    return {std::move(g), Coloring(std::move(c))};
}

enum class Lines { row, column };

/// K_p x K_q with the column coloring (color j on the fiber of v_j, q
/// colors) or the row coloring (color i on the fiber of u_i, p colors).
inline ColoredGraph direct_complete_coloring(std::size_t p, std::size_t q, Lines which)
{
    if (p < 2 || q < 2)
        throw input_error("direct_complete_coloring needs p, q >= 2");
    Graph g = product(complete(p), complete(q), products::direct());
    std::vector<Color> c(p * q);
    for (Vertex i = 0; i < p; ++i)
        for (Vertex j = 0; j < q; ++j)
            c[product_index(i, j, q)] = static_cast<Color>(which == Lines::row ? i : j);
    return {std::move(g), Coloring(std::move(c))};
}

/// Fall-coloring of G box H from a fall-coloring f of G with k colors and
/// a proper coloring g of H with at most k colors: the copy of G at v uses
/// f rotated by g(v), i.e. (u, v) -> (f(u) + g(v)) mod k.
inline ColoredGraph cartesian_lift_fall(const Graph & g, const Coloring & fg, const Graph & h, const Coloring & gh)
{
    if (! is_fall_coloring(g, fg))
        throw input_error("cartesian_lift_fall: coloring of G is not a fall-coloring");
    if (! is_proper(h, gh))
        throw input_error("cartesian_lift_fall: coloring of H is not proper");
    const std::size_t k = fg.k();
    if (gh.k() > k)
        throw input_error("cartesian_lift_fall: H uses more colors than the fall-coloring of G");
    Graph prod = product(g, h, products::cartesian());
    std::vector<Color> c(prod.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < h.order(); ++v)
            c[product_index(u, v, h.order())] = static_cast<Color>((fg[u] + gh[v]) % static_cast<Color>(k));
    return {std::move(prod), Coloring(std::move(c))};
}

/// Fall-coloring of G x H pulled back from a fall-coloring f of G with
/// k >= 2 colors: (u, v) -> f(u). H must have no isolated vertex.
inline ColoredGraph direct_projection_fall(const Graph & g, const Coloring & fg, const Graph & h)
{
    if (! is_fall_coloring(g, fg))
        throw input_error("direct_projection_fall: coloring of G is not a fall-coloring");
    if (fg.k() < 2)
        throw input_error("direct_projection_fall: needs at least two colors");
    if (h.order() == 0 || h.has_isolated_vertex())
        throw input_error("direct_projection_fall: H has an isolated vertex");
    Graph prod = product(g, h, products::direct());
    std::vector<Color> c(prod.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < h.order(); ++v)
            c[product_index(u, v, h.order())] = fg[u];
    return {std::move(prod), Coloring(std::move(c))};
}

/// Fall-coloring of G.H with p * q colors for the lexicographic, strong and
/// co-normal products, from fall-colorings with p and q colors:
/// (u, v) -> f(u) * q + g(v).
inline ColoredGraph pair_product_fall(
    const Graph & g, const Coloring & fg, const Graph & h, const Coloring & fh, const ProductSpec & spec)
{
    if (! (spec == products::lexicographic() || spec == products::strong() || spec == products::conormal()))
        throw input_error("pair_product_fall: product must be lex, strong or conormal");
    if (! is_fall_coloring(g, fg) || ! is_fall_coloring(h, fh))
        throw input_error("pair_product_fall: factor colorings must be fall-colorings");
    const auto q = static_cast<Color>(fh.k());
    Graph prod = product(g, h, spec);
    std::vector<Color> c(prod.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < h.order(); ++v)
            c[product_index(u, v, h.order())] = fg[u] * q + fh[v];
    return {std::move(prod), Coloring(std::move(c))};
}

} // namespace bfall
