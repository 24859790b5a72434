#pragma once

#include <bfall/coloring.hpp>
#include <bfall/search.hpp>
#include <bfall/structure.hpp>

#include <chrono>
#include <cmath>
#include <optional>
#include <set>
#include <vector>

#include <json.hpp>

namespace bfall {

using Spectrum = std::set<std::size_t>;

struct SpectrumReport {
    std::optional<std::size_t> chi;
    Spectrum b_spectrum;
    Spectrum fall_spectrum;
    std::optional<std::size_t> b;
    std::optional<std::size_t> f1;
    std::optional<std::size_t> f2;
    std::optional<bool> b_continuous;
    /// Largest k covered; spectra say nothing about colors above it.
    std::optional<std::size_t> k_max;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
    bool complete = true;
};

/// Greedy DSATUR coloring; an upper bound for the chromatic number.
inline Coloring dsatur_coloring(const Graph & g)
{
    const std::size_t n = g.order();
    std::vector<int> color(n, -1);
    std::vector<std::vector<bool>> seen(n);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex best = n;
        std::size_t best_sat = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (color[v] != -1)
                continue;
            std::size_t sat = static_cast<std::size_t>(std::count(seen[v].begin(), seen[v].end(), true));
            if (best == n || sat > best_sat || (sat == best_sat && g.degree(v) > g.degree(best))) {
                best = v;
                best_sat = sat;
            }
        }
        int c = 0;
        while (static_cast<std::size_t>(c) < seen[best].size() && seen[best][c])
            ++c;
        color[best] = c;
        for (Vertex w : g.neighbor_list(best)) {
            if (seen[w].size() <= static_cast<std::size_t>(c))
                seen[w].resize(c + 1, false);
            seen[w][c] = true;
        }
    }
    return Coloring(std::move(color));
}

/// Runs the exact searches for one graph and keeps the accumulated cost.
/// After an interruption (deadline or cancellation) answers may be
/// incomplete; interrupted() says so.
class SpectrumSolver {
public:
    explicit SpectrumSolver(const Graph & g, SearchOptions options = {}) : graph_(g), options_(options) {}

    std::optional<Coloring> find(std::size_t k, ColoringKind kind)
    {
        ColoringSearch search(graph_, k, kind, options_);
        auto found = search.find_one();
        absorb(search.stats());
        return found;
    }

    template <typename Visit>
    void enumerate(std::size_t k, ColoringKind kind, Visit && visit)
    {
        ColoringSearch search(graph_, k, kind, options_);
        search.enumerate(std::forward<Visit>(visit));
        absorb(search.stats());
    }

    /// Optimal coloring: clique lower bound, DSATUR upper bound, exact
    /// search in between.
    Coloring optimal_coloring()
    {
        if (optimal_)
            return *optimal_;
        Coloring best = dsatur_coloring(graph_);
        for (std::size_t k = clique_number(graph_); k < best.k(); ++k)
            if (auto c = find(k, ColoringKind::proper)) {
                best = *c;
                break;
            }
        optimal_ = best;
        return best;
    }

    std::size_t chromatic_number() { return optimal_coloring().k(); }

    Spectrum b_spectrum()
    {
        Spectrum out;
        if (graph_.order() == 0)
            return {0};
        for (std::size_t k = chromatic_number(); k <= graph_.max_degree() + 1; ++k)
            if (find(k, ColoringKind::b))
                out.insert(k);
        return out;
    }

    Spectrum fall_spectrum()
    {
        Spectrum out;
        if (graph_.order() == 0)
            return {0};
        for (std::size_t k = chromatic_number(); k <= graph_.min_degree() + 1; ++k)
            if (find(k, ColoringKind::fall))
                out.insert(k);
        return out;
    }

    [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }
    [[nodiscard]] bool interrupted() const noexcept { return interrupted_; }

private:
    void absorb(const SearchStats & s)
    {
        nodes_ += s.nodes;
        interrupted_ = interrupted_ || s.interrupted;
    }

    Graph graph_;
    SearchOptions options_;
    std::optional<Coloring> optimal_;
    std::uint64_t nodes_ = 0;
    bool interrupted_ = false;
};

inline std::size_t chromatic_number(const Graph & g) { return SpectrumSolver(g).chromatic_number(); }
inline Coloring optimal_coloring(const Graph & g) { return SpectrumSolver(g).optimal_coloring(); }

inline std::optional<Coloring> has_fall_coloring(const Graph & g, std::size_t k)
{
    if (k < 1)
        throw input_error("color count must be at least 1");
    return SpectrumSolver(g).find(k, ColoringKind::fall);
}

inline std::optional<Coloring> has_b_coloring(const Graph & g, std::size_t k)
{
    if (k < 1)
        throw input_error("color count must be at least 1");
    return SpectrumSolver(g).find(k, ColoringKind::b);
}

inline Spectrum b_spectrum(const Graph & g) { return SpectrumSolver(g).b_spectrum(); }
inline Spectrum fall_spectrum(const Graph & g) { return SpectrumSolver(g).fall_spectrum(); }

inline bool is_continuous_from(const Spectrum & s, std::size_t low)
{
    if (s.empty())
        return true;
    return *s.rbegin() + 1 == low + s.size() && *s.begin() == low;
}

inline bool is_b_continuous(const Graph & g)
{
    SpectrumSolver solver(g);
    return is_continuous_from(solver.b_spectrum(), solver.chromatic_number());
}

enum class SpectrumWhat { chi, b, fall, all };

inline SpectrumReport spectrum_report(const Graph & g, SpectrumWhat what, SearchOptions options = {})
{
    const auto start = std::chrono::steady_clock::now();
    SpectrumSolver solver(g, options);
    SpectrumReport r;
    r.chi = solver.chromatic_number();
    if (what == SpectrumWhat::b || what == SpectrumWhat::all) {
        r.b_spectrum = solver.b_spectrum();
        if (! r.b_spectrum.empty())
            r.b = *r.b_spectrum.rbegin();
        r.b_continuous = is_continuous_from(r.b_spectrum, *r.chi);
    }
    if (what == SpectrumWhat::fall || what == SpectrumWhat::all) {
        r.fall_spectrum = solver.fall_spectrum();
        if (! r.fall_spectrum.empty()) {
            r.f1 = *r.fall_spectrum.begin();
            r.f2 = *r.fall_spectrum.rbegin();
        }
    }
    r.nodes = solver.nodes();
    r.complete = ! solver.interrupted();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

/// Brute force over every surjection V(G) -> {0..k-1}, k = 1..k_max.
/// Independent of ColoringSearch; used to cross-check it.
inline SpectrumReport oracle_spectra(const Graph & g, std::size_t k_max)
{
    constexpr double guard = 1e9;
    const std::size_t n = g.order();
    if (std::pow(static_cast<double>(k_max), static_cast<double>(n)) > guard)
        throw size_error("oracle would enumerate " + std::to_string(k_max) + "^" + std::to_string(n)
            + " assignments, above the 10^9 guard");

    const auto start = std::chrono::steady_clock::now();
    SpectrumReport r;
    r.k_max = k_max;
    const auto edges = g.edges();
    for (std::size_t k = 1; k <= k_max && n > 0; ++k) {
        std::vector<int> a(n, 0);
        std::vector<std::size_t> count(k, 0);
        count[0] = n;
        std::size_t used = 1;
        bool proper_seen = false, b_seen = false, fall_seen = false;
        for (;;) {
            ++r.nodes;
            if (used == k
                && std::none_of(edges.begin(), edges.end(), [&](const Edge & e) { return a[e.first] == a[e.second]; })) {
                Coloring c(a);
                proper_seen = true;
                if (! b_seen && is_b_coloring(g, c))
                    b_seen = true;
                if (! fall_seen && is_fall_coloring(g, c))
                    fall_seen = true;
                if (b_seen && fall_seen)
                    break;
            }
            // Odometer step, keeping per-color counts.
            std::size_t i = 0;
            for (; i < n; ++i) {
                if (--count[a[i]] == 0)
                    --used;
                a[i] = a[i] + 1 == static_cast<int>(k) ? 0 : a[i] + 1;
                if (count[a[i]]++ == 0)
                    ++used;
                if (a[i] != 0)
                    break;
            }
            if (i == n)
                break;
        }
        if (proper_seen && ! r.chi)
            r.chi = k;
        if (b_seen)
            r.b_spectrum.insert(k);
        if (fall_seen)
            r.fall_spectrum.insert(k);
    }
    if (n == 0) {
        r.chi = 0;
        r.b_spectrum = r.fall_spectrum = {0};
    }
    if (! r.b_spectrum.empty())
        r.b = *r.b_spectrum.rbegin();
    if (! r.fall_spectrum.empty()) {
        r.f1 = *r.fall_spectrum.begin();
        r.f2 = *r.fall_spectrum.rbegin();
    }
    if (r.chi)
        r.b_continuous = is_continuous_from(r.b_spectrum, *r.chi);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline nlohmann::json to_json(const SpectrumReport & r)
{
    nlohmann::json j;
    auto opt = [](const auto & o) { return o ? nlohmann::json(*o) : nlohmann::json(nullptr); };
    j["chi"] = opt(r.chi);
    j["b_spectrum"] = r.b_spectrum;
    j["fall_spectrum"] = r.fall_spectrum;
    j["b"] = opt(r.b);
    j["f1"] = opt(r.f1);
    j["f2"] = opt(r.f2);
    j["b_continuous"] = opt(r.b_continuous);
    if (r.k_max)
        j["k_max"] = *r.k_max;
    j["complete"] = r.complete;
    j["stats"] = {{"nodes", r.nodes}, {"seconds", r.seconds}};
    return j;
}

} // namespace bfall
