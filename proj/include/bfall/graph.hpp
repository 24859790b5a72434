#pragma once

#include <bfall/errors.hpp>

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bfall {

using Vertex = std::size_t;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;
using Edge = std::pair<Vertex, Vertex>;

class GraphBuilder;

/// Finite simple undirected graph on the vertices 0..n-1.
///
/// Adjacency is stored twice: one bitset row per vertex for O(1) queries and a
/// sorted neighbor list for iteration. Instances are immutable once built; use
/// GraphBuilder or make_graph() to create them.
class Graph {
public:
    Graph() = default;

    [[nodiscard]] std::size_t order() const noexcept { return rows_.size(); }
    [[nodiscard]] std::size_t size() const noexcept { return edge_count_; }

    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
    [[nodiscard]] const VertexSet & neighbors(Vertex v) const { return rows_[v]; }
    [[nodiscard]] std::span<const Vertex> neighbor_list(Vertex v) const { return lists_[v]; }
    [[nodiscard]] std::size_t degree(Vertex v) const { return lists_[v].size(); }

    [[nodiscard]] std::size_t min_degree() const
    {
        std::size_t d = order() == 0 ? 0 : degree(0);
        for (Vertex v = 1; v < order(); ++v)
            d = std::min(d, degree(v));
        return d;
    }

    [[nodiscard]] std::size_t max_degree() const
    {
        std::size_t d = 0;
        for (Vertex v = 0; v < order(); ++v)
            d = std::max(d, degree(v));
        return d;
    }

    [[nodiscard]] bool has_isolated_vertex() const
    {
        for (Vertex v = 0; v < order(); ++v)
            if (degree(v) == 0)
                return true;
        return false;
    }

    [[nodiscard]] bool has_labels() const noexcept { return ! labels_.empty(); }
    [[nodiscard]] const std::vector<std::string> & labels() const noexcept { return labels_; }

    [[nodiscard]] std::string label(Vertex v) const
    {
        return has_labels() ? labels_[v] : std::to_string(v);
    }

    /// Index of the vertex carrying `name`, or order() when there is none.
    [[nodiscard]] Vertex find_label(const std::string & name) const
    {
        auto it = std::find(labels_.begin(), labels_.end(), name);
        return it == labels_.end() ? order() : static_cast<Vertex>(it - labels_.begin());
    }

    /// Every edge once, as (u, v) with u < v, in lexicographic order.
    [[nodiscard]] std::vector<Edge> edges() const
    {
        std::vector<Edge> result;
        result.reserve(edge_count_);
        for (Vertex u = 0; u < order(); ++u)
            for (Vertex v : lists_[u])
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    /// Empty set sized for this graph.
    [[nodiscard]] VertexSet empty_set() const { return VertexSet(order()); }

    [[nodiscard]] VertexSet closed_neighbors(Vertex v) const
    {
        VertexSet s = rows_[v];
        s.set(v);
        return s;
    }

    /// Subgraph induced by `keep`, vertices renumbered in ascending order.
    [[nodiscard]] Graph induced(const std::vector<Vertex> & keep) const;

    /// Same vertex count and adjacency; labels are ignored.
    friend bool operator==(const Graph & a, const Graph & b) { return a.rows_ == b.rows_; }

private:
    friend class GraphBuilder;

    std::vector<VertexSet> rows_;
    std::vector<std::vector<Vertex>> lists_;
    std::vector<std::string> labels_;
    std::size_t edge_count_ = 0;
};

/// Mutable staging area for a Graph. Duplicate edges collapse.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n) : rows_(n, VertexSet(n)) {}

    [[nodiscard]] std::size_t order() const noexcept { return rows_.size(); }

    GraphBuilder & add_edge(Vertex u, Vertex v)
    {
        if (u >= order() || v >= order())
            throw input_error("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside 0.."
                + std::to_string(order() == 0 ? 0 : order() - 1));
        if (u == v)
            throw input_error("self-loop at vertex " + std::to_string(u));
        rows_[u].set(v);
        rows_[v].set(u);
        return *this;
    }

    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }

    /// Makes every pair of `vs` adjacent.
    GraphBuilder & add_clique(std::span<const Vertex> vs)
    {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                add_edge(vs[i], vs[j]);
        return *this;
    }

    GraphBuilder & set_labels(std::vector<std::string> labels)
    {
        if (! labels.empty() && labels.size() != order())
            throw input_error("label count does not match vertex count");
        labels_ = std::move(labels);
        return *this;
    }

    [[nodiscard]] Graph build() const
    {
        Graph g;
        g.rows_ = rows_;
        g.labels_ = labels_;
        g.lists_.resize(order());
        std::size_t twice = 0;
        for (Vertex v = 0; v < order(); ++v) {
            for (auto w = rows_[v].find_first(); w != VertexSet::npos; w = rows_[v].find_next(w))
                g.lists_[v].push_back(w);
            twice += g.lists_[v].size();
        }
        g.edge_count_ = twice / 2;
        return g;
    }

private:
    std::vector<VertexSet> rows_;
    std::vector<std::string> labels_;
};

inline Graph Graph::induced(const std::vector<Vertex> & keep) const
{
    std::vector<Vertex> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    GraphBuilder b(sorted.size());
    std::vector<std::string> names;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] >= order())
            throw input_error("induced: vertex " + std::to_string(sorted[i]) + " out of range");
        if (has_labels())
            names.push_back(labels_[sorted[i]]);
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
            if (adjacent(sorted[i], sorted[j]))
                b.add_edge(i, j);
    }
    b.set_labels(std::move(names));
    return b.build();
}

inline Graph make_graph(std::size_t n, std::span<const Edge> edges)
{
    GraphBuilder b(n);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    return b.build();
}

inline Graph make_graph(std::size_t n, std::initializer_list<Edge> edges)
{
    return make_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline bool is_complete(const Graph & g)
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) + 1 != g.order())
            return false;
    return true;
}

// Named families ------------------------------------------------------------

inline Graph complete(std::size_t n)
{
    if (n < 1)
        throw input_error("complete graph needs at least one vertex");
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            b.add_edge(u, v);
    return b.build();
}

inline Graph cycle(std::size_t n)
{
    if (n < 3)
        throw input_error("cycle needs at least three vertices");
    GraphBuilder b(n);
    for (Vertex v = 0; v < n; ++v)
        b.add_edge(v, (v + 1) % n);
    return b.build();
}

inline Graph path(std::size_t n)
{
    if (n < 1)
        throw input_error("path needs at least one vertex");
    GraphBuilder b(n);
    for (Vertex v = 0; v + 1 < n; ++v)
        b.add_edge(v, v + 1);
    return b.build();
}

/// K_{a,b}: vertices 0..a-1 form one side, a..a+b-1 the other.
inline Graph complete_bipartite(std::size_t a, std::size_t b)
{
    if (a < 1 || b < 1)
        throw input_error("complete bipartite graph needs nonempty sides");
    GraphBuilder g(a + b);
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v)
            g.add_edge(u, a + v);
    return g.build();
}

/// K_{n,n} minus a perfect matching. a_i is vertex i, b_j is vertex n + j,
/// and a_i ~ b_j iff i != j.
inline Graph crown(std::size_t n)
{
    if (n < 2)
        throw input_error("crown graph needs parts of size at least two");
    GraphBuilder b(2 * n);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back("a" + std::to_string(i + 1));
    for (std::size_t i = 0; i < n; ++i)
        names.push_back("b" + std::to_string(i + 1));
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j)
            if (i != j)
                b.add_edge(i, n + j);
    b.set_labels(std::move(names));
    return b.build();
}

struct GraphPair {
    Graph g;
    Graph h;
};

/// H = crown(3) and G = H plus an edge uv with u complete to the a-part and
/// v complete to the b-part. H is the subgraph of G induced by 0..5, yet
/// b(G) = 2 < b(H) = 3.
inline GraphPair non_monotone_pair()
{
    Graph h = crown(3);
    GraphBuilder b(8);
    for (auto [x, y] : h.edges())
        b.add_edge(x, y);
    const Vertex u = 6, v = 7;
    b.add_edge(u, v);
    for (Vertex i = 0; i < 3; ++i) {
        b.add_edge(u, i);
        b.add_edge(v, 3 + i);
    }
    auto names = h.labels();
    names.push_back("u");
    names.push_back("v");
    b.set_labels(std::move(names));
    return {b.build(), h};
}

/// 61-vertex chordal graph with min degree 6 and clique number 7 that has no
/// fall-coloring. Two gadgets glued along an edge:
///
///  - path v1..v6, a vertex u adjacent to the whole path, and a pending K_6
///    on each of v1, v2, v5, v6;
///  - a clique u1..u4, vertices x, y with x ~ y and both adjacent to u1, u2,
///    z1 ~ {u1, u3}, z2 ~ {u2, u4}, and a pending K_6 on each of z1, z2, x, y;
///
/// with v3 identified with u3 and v4 with u4. A pending K_6 on w is six new
/// vertices forming a K_7 together with w. Vertices are labelled by role;
/// the glued ones carry the labels "v3" and "v4".
inline Graph kaul_mitillos_counterexample()
{
    constexpr std::size_t n = 61;
    GraphBuilder b(n);
    std::vector<std::string> names(n);
    Vertex next = 0;
    auto fresh = [&](std::string name) {
        names[next] = std::move(name);
        return next++;
    };

    std::vector<Vertex> p;
    for (int i = 1; i <= 6; ++i)
        p.push_back(fresh("v" + std::to_string(i)));
    const Vertex u = fresh("u");
    for (int i = 0; i < 6; ++i) {
        if (i + 1 < 6)
            b.add_edge(p[i], p[i + 1]);
        b.add_edge(u, p[i]);
    }

    const Vertex u1 = fresh("u1"), u2 = fresh("u2"), u3 = p[2], u4 = p[3];
    const Vertex x = fresh("x"), y = fresh("y"), z1 = fresh("z1"), z2 = fresh("z2");
    const std::vector<Vertex> c = {u1, u2, u3, u4};
    b.add_clique(c);
    b.add_edge(x, y).add_edge(x, u1).add_edge(x, u2).add_edge(y, u1).add_edge(y, u2);
    b.add_edge(z1, u1).add_edge(z1, u3).add_edge(z2, u2).add_edge(z2, u4);

    auto pend = [&](Vertex w) {
        std::vector<Vertex> k = {w};
        for (int i = 1; i <= 6; ++i)
            k.push_back(fresh("K(" + names[w] + ")." + std::to_string(i)));
        b.add_clique(k);
    };
    for (Vertex w : {p[0], p[1], p[4], p[5], z1, z2, x, y})
        pend(w);

    b.set_labels(std::move(names));
    return b.build();
}

} // namespace bfall
