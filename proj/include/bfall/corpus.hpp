#pragma once

#include <bfall/graph.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace bfall::corpus {

/// Reproducible random source. Reductions are done by hand rather than with
/// <random> distributions, whose output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish integer in [lo, hi].
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + engine_() % (hi - lo + 1); }

    /// True with probability num / den.
    bool chance(std::uint64_t num, std::uint64_t den) { return engine_() % den < num; }

private:
    std::mt19937_64 engine_;
};

/// G(n, p) with p = num / den.
inline Graph random_graph(Rng & rng, std::size_t n, std::uint64_t num, std::uint64_t den)
{
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.chance(num, den))
                b.add_edge(u, v);
    return b.build();
}

/// Random graph on between min_n and max_n vertices with a random density.
inline Graph random_small_graph(Rng & rng, std::size_t min_n, std::size_t max_n)
{
    const std::size_t n = rng.between(min_n, max_n);
    const std::uint64_t num = rng.between(2, 8);
    return random_graph(rng, n, num, 10);
}

/// Like random_small_graph but guaranteed to have at least one edge.
inline Graph random_graph_with_edge(Rng & rng, std::size_t min_n, std::size_t max_n)
{
    for (;;) {
        Graph g = random_small_graph(rng, std::max<std::size_t>(min_n, 2), max_n);
        if (g.size() > 0)
            return g;
    }
}

/// Named graphs of at most max_n vertices that appear throughout the tests.
inline std::vector<Graph> named_graphs(std::size_t max_n)
{
    std::vector<Graph> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        out.push_back(complete(n));
        out.push_back(path(n));
        if (n >= 3)
            out.push_back(cycle(n));
        if (n >= 4 && n % 2 == 0)
            out.push_back(crown(n / 2));
    }
    return out;
}

} // namespace bfall::corpus
