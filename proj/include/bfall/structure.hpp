#pragma once

#include <bfall/graph.hpp>

#include <algorithm>
#include <deque>
#include <optional>
#include <vector>

namespace bfall {

struct ChordalityResult {
    bool chordal = false;
    /// Perfect elimination ordering (earliest eliminated first) when chordal.
    std::vector<Vertex> ordering;
    /// Chordless cycle of length >= 4 when not chordal, in cycle order.
    std::vector<Vertex> witness_cycle;
};

/// Maximum cardinality search. Returns vertices in visiting order; its
/// reverse is a perfect elimination ordering iff the graph is chordal.
inline std::vector<Vertex> maximum_cardinality_search(const Graph & g)
{
    const std::size_t n = g.order();
    std::vector<std::size_t> weight(n, 0);
    std::vector<bool> done(n, false);
    std::vector<Vertex> visit;
    visit.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex best = n;
        for (Vertex v = 0; v < n; ++v)
            if (! done[v] && (best == n || weight[v] > weight[best]))
                best = v;
        done[best] = true;
        visit.push_back(best);
        for (Vertex w : g.neighbor_list(best))
            if (! done[w])
                ++weight[w];
    }
    return visit;
}

/// True iff, for every vertex, its neighbors that come later in `order` are
/// pairwise adjacent.
inline bool is_perfect_elimination_ordering(const Graph & g, const std::vector<Vertex> & order)
{
    if (order.size() != g.order())
        return false;
    std::vector<std::size_t> pos(g.order(), g.order());
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i] >= g.order() || pos[order[i]] != g.order())
            return false;
        pos[order[i]] = i;
    }
    for (Vertex v : order) {
        std::vector<Vertex> later;
        for (Vertex w : g.neighbor_list(v))
            if (pos[w] > pos[v])
                later.push_back(w);
        for (std::size_t i = 0; i < later.size(); ++i)
            for (std::size_t j = i + 1; j < later.size(); ++j)
                if (! g.adjacent(later[i], later[j]))
                    return false;
    }
    return true;
}

/// True iff `cyc` is a cycle of length >= 4 in g with no chords.
inline bool is_chordless_cycle(const Graph & g, const std::vector<Vertex> & cyc)
{
    const std::size_t len = cyc.size();
    if (len < 4)
        return false;
    std::vector<Vertex> sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = i + 1; j < len; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
            if (g.adjacent(cyc[i], cyc[j]) != consecutive)
                return false;
        }
    return true;
}

namespace detail {

    // Shortest x-y path avoiding `blocked` (BFS), endpoints included.
    inline std::optional<std::vector<Vertex>> shortest_path_avoiding(
        const Graph & g, Vertex x, Vertex y, const VertexSet & blocked)
    {
        const std::size_t n = g.order();
        std::vector<Vertex> parent(n, n);
        std::deque<Vertex> queue{x};
        parent[x] = x;
        while (! queue.empty()) {
            Vertex a = queue.front();
            queue.pop_front();
            if (a == y)
                break;
            for (Vertex b : g.neighbor_list(a))
                if (parent[b] == n && ! blocked.test(b)) {
                    parent[b] = a;
                    queue.push_back(b);
                }
        }
        if (parent[y] == n)
            return std::nullopt;
        std::vector<Vertex> p;
        for (Vertex a = y; a != x; a = parent[a])
            p.push_back(a);
        p.push_back(x);
        std::reverse(p.begin(), p.end());
        return p;
    }

    // Some vertex v has non-adjacent neighbors x, y joined by a path outside
    // N[v]; v plus the shortest such path is a chordless cycle.
    inline std::vector<Vertex> find_chordless_cycle(const Graph & g)
    {
        for (Vertex v = 0; v < g.order(); ++v) {
            auto nbrs = g.neighbor_list(v);
            for (std::size_t i = 0; i < nbrs.size(); ++i)
                for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                    Vertex x = nbrs[i], y = nbrs[j];
                    if (g.adjacent(x, y))
                        continue;
                    VertexSet blocked = g.closed_neighbors(v);
                    blocked.reset(x);
                    blocked.reset(y);
                    if (auto p = shortest_path_avoiding(g, x, y, blocked)) {
                        p->push_back(v);
                        return *p;
                    }
                }
        }
        return {};
    }

} // namespace detail

inline ChordalityResult is_chordal(const Graph & g)
{
    ChordalityResult r;
    auto visit = maximum_cardinality_search(g);
    std::reverse(visit.begin(), visit.end());
    if (is_perfect_elimination_ordering(g, visit)) {
        r.chordal = true;
        r.ordering = std::move(visit);
    }
    else
        r.witness_cycle = detail::find_chordless_cycle(g);
    return r;
}

/// A maximum clique. Chordal graphs are read off the elimination ordering;
/// everything else goes through a color-bounded branch and bound.
inline std::vector<Vertex> maximum_clique(const Graph & g)
{
    const std::size_t n = g.order();
    if (n == 0)
        return {};

    auto chordality = is_chordal(g);
    if (chordality.chordal) {
        const auto & order = chordality.ordering;
        std::vector<std::size_t> pos(n);
        for (std::size_t i = 0; i < n; ++i)
            pos[order[i]] = i;
        std::vector<Vertex> best;
        for (Vertex v : order) {
            std::vector<Vertex> c{v};
            for (Vertex w : g.neighbor_list(v))
                if (pos[w] > pos[v])
                    c.push_back(w);
            if (c.size() > best.size())
                best = std::move(c);
        }
        std::sort(best.begin(), best.end());
        return best;
    }

    std::vector<Vertex> best, current;

    // Greedy coloring of `cand` gives, for each vertex in the returned order,
    // an upper bound on the clique extendable from it.
    auto color_sort = [&](const VertexSet & cand, std::vector<Vertex> & order, std::vector<std::size_t> & bound) {
        VertexSet uncolored = cand;
        std::size_t color = 0;
        while (uncolored.any()) {
            ++color;
            VertexSet q = uncolored;
            while (q.any()) {
                Vertex v = q.find_first();
                q.reset(v);
                q -= g.neighbors(v);
                uncolored.reset(v);
                order.push_back(v);
                bound.push_back(color);
            }
        }
    };

    auto expand = [&](auto & self, VertexSet cand) -> void {
        std::vector<Vertex> order;
        std::vector<std::size_t> bound;
        color_sort(cand, order, bound);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current.size() + bound[i] <= best.size())
                return;
            Vertex v = order[i];
            current.push_back(v);
            VertexSet next = cand & g.neighbors(v);
            if (next.none()) {
                if (current.size() > best.size())
                    best = current;
            }
            else
                self(self, next);
            current.pop_back();
            cand.reset(v);
        }
    };

    VertexSet all(n);
    all.set();
    expand(expand, all);
    std::sort(best.begin(), best.end());
    return best;
}

inline std::size_t clique_number(const Graph & g) { return maximum_clique(g).size(); }

/// True iff the closed neighborhood of v is a clique.
inline bool is_simplicial(const Graph & g, Vertex v)
{
    auto nbrs = g.neighbor_list(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j)
            if (! g.adjacent(nbrs[i], nbrs[j]))
                return false;
    return true;
}

} // namespace bfall
