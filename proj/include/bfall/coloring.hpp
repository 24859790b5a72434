#pragma once

#include <bfall/graph.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace bfall {

using Color = int;

/// Total vertex coloring with colors 0..k-1, every class nonempty.
///
/// Construction compacts the labels it is given by rank, so {3, 7, 3} becomes
/// {0, 1, 0}. Already compacted input is kept as is.
class Coloring {
public:
    Coloring() = default;

    explicit Coloring(std::vector<Color> colors) : colors_(std::move(colors))
    {
        std::vector<Color> used = colors_;
        std::sort(used.begin(), used.end());
        used.erase(std::unique(used.begin(), used.end()), used.end());
        if (! used.empty() && used.front() < 0)
            throw input_error("colors must be nonnegative");
        for (Color & c : colors_)
            c = static_cast<Color>(std::lower_bound(used.begin(), used.end(), c) - used.begin());
        k_ = used.size();
    }

    [[nodiscard]] std::size_t k() const noexcept { return k_; }
    [[nodiscard]] std::size_t size() const noexcept { return colors_.size(); }
    [[nodiscard]] Color operator[](Vertex v) const { return colors_[v]; }
    [[nodiscard]] const std::vector<Color> & colors() const noexcept { return colors_; }

    [[nodiscard]] std::vector<std::vector<Vertex>> classes() const
    {
        std::vector<std::vector<Vertex>> out(k_);
        for (Vertex v = 0; v < colors_.size(); ++v)
            out[colors_[v]].push_back(v);
        return out;
    }

    friend bool operator==(const Coloring &, const Coloring &) = default;

private:
    std::vector<Color> colors_;
    std::size_t k_ = 0;
};

/// Same partition into classes, ignoring color names.
inline bool same_up_to_renaming(const Coloring & a, const Coloring & b)
{
    if (a.size() != b.size() || a.k() != b.k())
        return false;
    std::vector<Color> fwd(a.k(), -1), back(b.k(), -1);
    for (Vertex v = 0; v < a.size(); ++v) {
        Color x = a[v], y = b[v];
        if (fwd[x] == -1 && back[y] == -1) {
            fwd[x] = y;
            back[y] = x;
        }
        else if (fwd[x] != y || back[y] != x)
            return false;
    }
    return true;
}

namespace detail {
    inline void require_total(const Graph & g, const Coloring & c)
    {
        if (c.size() != g.order())
            throw input_error("coloring covers " + std::to_string(c.size()) + " vertices, graph has "
                + std::to_string(g.order()));
    }
} // namespace detail

inline bool is_proper(const Graph & g, const Coloring & c)
{
    detail::require_total(g, c);
    for (auto [u, v] : g.edges())
        if (c[u] == c[v])
            return false;
    return true;
}

namespace detail {
    inline void require_proper(const Graph & g, const Coloring & c)
    {
        if (! is_proper(g, c))
            throw input_error("coloring is not proper");
    }

    // Colors seen in N(v), as a bitmap over 0..k-1.
    inline std::vector<bool> neighbor_colors(const Graph & g, const Coloring & c, Vertex v)
    {
        std::vector<bool> seen(c.k(), false);
        for (Vertex w : g.neighbor_list(v))
            seen[c[w]] = true;
        return seen;
    }

    inline bool is_b_vertex_unchecked(const Graph & g, const Coloring & c, Vertex v)
    {
        auto seen = neighbor_colors(g, c, v);
        for (std::size_t j = 0; j < c.k(); ++j)
            if (static_cast<Color>(j) != c[v] && ! seen[j])
                return false;
        return true;
    }
} // namespace detail

inline bool is_b_vertex(const Graph & g, const Coloring & c, Vertex v)
{
    detail::require_proper(g, c);
    return detail::is_b_vertex_unchecked(g, c, v);
}

/// For each color, its b-vertices in ascending order.
inline std::vector<std::vector<Vertex>> b_vertices(const Graph & g, const Coloring & c)
{
    detail::require_proper(g, c);
    std::vector<std::vector<Vertex>> out(c.k());
    for (Vertex v = 0; v < g.order(); ++v)
        if (detail::is_b_vertex_unchecked(g, c, v))
            out[c[v]].push_back(v);
    return out;
}

inline bool is_b_coloring(const Graph & g, const Coloring & c)
{
    auto bv = b_vertices(g, c);
    return std::all_of(bv.begin(), bv.end(), [](const auto & s) { return ! s.empty(); });
}

/// Every closed neighborhood sees all k colors; the same as every vertex
/// being a b-vertex.
inline bool is_fall_coloring(const Graph & g, const Coloring & c)
{
    detail::require_proper(g, c);
    for (Vertex v = 0; v < g.order(); ++v) {
        auto seen = detail::neighbor_colors(g, c, v);
        seen[c[v]] = true;
        if (std::find(seen.begin(), seen.end(), false) != seen.end())
            return false;
    }
    return true;
}

/// Vertices that are not b-vertices, ascending.
inline std::vector<Vertex> non_b_vertices(const Graph & g, const Coloring & c)
{
    detail::require_proper(g, c);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (! detail::is_b_vertex_unchecked(g, c, v))
            out.push_back(v);
    return out;
}

/// Color-class elimination: while some class has no b-vertex, take the
/// lowest such color, move each of its vertices (ascending) to the smallest
/// color missing from its neighborhood, and compact.
inline Coloring reduce_to_b_coloring(const Graph & g, const Coloring & input)
{
    detail::require_proper(g, input);
    Coloring c = input;
    for (;;) {
        auto bv = b_vertices(g, c);
        auto empty = std::find_if(bv.begin(), bv.end(), [](const auto & s) { return s.empty(); });
        if (empty == bv.end())
            return c;
        const Color dead = static_cast<Color>(empty - bv.begin());
        std::vector<Color> next = c.colors();
        // The class is stable, so recoloring one member never changes what
        // another member sees.
        for (Vertex v = 0; v < g.order(); ++v) {
            if (next[v] != dead)
                continue;
            auto seen = detail::neighbor_colors(g, c, v);
            seen[dead] = true;
            next[v] = static_cast<Color>(std::find(seen.begin(), seen.end(), false) - seen.begin());
        }
        c = Coloring(std::move(next));
    }
}

} // namespace bfall
