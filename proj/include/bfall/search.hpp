#pragma once

#include <bfall/coloring.hpp>
#include <bfall/structure.hpp>

#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace bfall {

enum class ColoringKind { proper, b, fall };

struct SearchOptions {
    std::optional<std::chrono::steady_clock::time_point> deadline;
    const std::atomic<bool> * cancel = nullptr;
    /// Off: fall mode relies on properness propagation and the leaf check
    /// alone. Used to cross-check the closed-neighborhood rules.
    bool fall_propagation = true;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t solutions = 0;
    bool interrupted = false;
};

/// Exact backtracking search for colorings of one kind using exactly k
/// colors.
///
/// Domains are 64-bit color masks, so k <= 64. Color symmetry is broken by
/// only ever opening the lowest unused color; every deduction the propagator
/// makes treats unused colors alike, so each partition into classes is
/// visited once.
///
/// Propagation:
///  - proper: an assigned color leaves its neighbors' domains; singletons
///    are assigned.
///  - fall: every closed neighborhood N[v] must show all k colors. With M
///    the colors still missing from N[v] and U its uncolored members,
///    |U| < |M| fails, |U| == |M| restricts U to M, and a missing color with a
///    single holder in U is forced. A vertex with |N[v]| == k therefore sees
///    N[v] rainbow.
///  - b: every color class needs a vertex that could still become its
///    b-vertex, given current domains.
///
/// In fall mode simplicial vertices are branched on last: their own
/// neighborhood is a clique, so their constraint holds for any proper
/// coloring and the contradiction, if any, lives elsewhere.
class ColoringSearch {
public:
    using Mask = std::uint64_t;

    ColoringSearch(const Graph & g, std::size_t k, ColoringKind kind, SearchOptions options = {}) :
        graph_(g), k_(k), kind_(kind), options_(options)
    {
        if (k > 64)
            throw size_error("color search supports at most 64 colors, asked for " + std::to_string(k));
        all_ = k == 64 ? ~Mask{0} : ((Mask{1} << k) - 1);
        const std::size_t n = g.order();
        simplicial_.resize(n, false);
        if (kind_ == ColoringKind::fall)
            for (Vertex v = 0; v < n; ++v)
                simplicial_[v] = is_simplicial(g, v);
    }

    /// Calls visit(const Coloring &) for each solution; visit returns false to
    /// stop early.
    template <typename Visit>
    void enumerate(Visit && visit)
    {
        stats_ = {};
        if (! feasible_at_root())
            return;
        State s;
        s.dom.assign(graph_.order(), all_);
        s.color.assign(graph_.order(), -1);
        s.uncolored = graph_.order();
        std::vector<std::pair<Vertex, int>> queue;
        if (! propagate(s, queue))
            return;
        search(s, visit);
    }

    std::optional<Coloring> find_one()
    {
        std::optional<Coloring> found;
        enumerate([&](const Coloring & c) {
            found = c;
            return false;
        });
        return found;
    }

    [[nodiscard]] const SearchStats & stats() const noexcept { return stats_; }

private:
    struct State {
        std::vector<Mask> dom;
        std::vector<int> color;
        Mask used = 0;
        std::size_t uncolored = 0;
    };

    static int single_color(Mask m) { return std::countr_zero(m); }
    static bool is_single(Mask m) { return m != 0 && (m & (m - 1)) == 0; }

    [[nodiscard]] bool feasible_at_root() const
    {
        const std::size_t n = graph_.order();
        if (n == 0)
            return k_ == 0;
        if (k_ == 0 || k_ > n)
            return false;
        if (kind_ == ColoringKind::fall)
            for (Vertex v = 0; v < n; ++v)
                if (graph_.degree(v) + 1 < k_)
                    return false;
        if (kind_ == ColoringKind::b) {
            std::size_t rich = 0;
            for (Vertex v = 0; v < n; ++v)
                if (graph_.degree(v) + 1 >= k_)
                    ++rich;
            if (rich < k_)
                return false;
        }
        return true;
    }

    bool assign(State & s, Vertex v, int c, std::vector<std::pair<Vertex, int>> & queue)
    {
        const Mask bit = Mask{1} << c;
        if (s.color[v] != -1)
            return s.color[v] == c;
        if (! (s.dom[v] & bit))
            return false;
        s.color[v] = c;
        s.dom[v] = bit;
        s.used |= bit;
        --s.uncolored;
        for (Vertex w : graph_.neighbor_list(v)) {
            if (s.color[w] == c)
                return false;
            if (s.color[w] == -1 && (s.dom[w] & bit)) {
                s.dom[w] &= ~bit;
                if (s.dom[w] == 0)
                    return false;
                if (is_single(s.dom[w]))
                    queue.emplace_back(w, single_color(s.dom[w]));
            }
        }
        return true;
    }

    bool drain(State & s, std::vector<std::pair<Vertex, int>> & queue)
    {
        while (! queue.empty()) {
            auto [v, c] = queue.back();
            queue.pop_back();
            if (! assign(s, v, c, queue))
                return false;
        }
        return true;
    }

    // One sweep of the closed-neighborhood rule. Sets `changed` when a
    // domain shrank or an assignment was queued.
    bool fall_sweep(State & s, std::vector<std::pair<Vertex, int>> & queue, bool & changed)
    {
        std::vector<Vertex> open;
        for (Vertex v = 0; v < graph_.order(); ++v) {
            Mask present = 0, reach = 0;
            open.clear();
            auto visit = [&](Vertex w) {
                if (s.color[w] != -1)
                    present |= Mask{1} << s.color[w];
                else {
                    open.push_back(w);
                    reach |= s.dom[w];
                }
            };
            visit(v);
            for (Vertex w : graph_.neighbor_list(v))
                visit(w);

            const Mask missing = all_ & ~present;
            if (missing == 0)
                continue;
            const auto need = static_cast<std::size_t>(std::popcount(missing));
            if (need > open.size() || (reach & missing) != missing)
                return false;
            if (need == open.size())
                for (Vertex w : open) {
                    Mask nd = s.dom[w] & missing;
                    if (nd != s.dom[w]) {
                        s.dom[w] = nd;
                        changed = true;
                        if (nd == 0)
                            return false;
                        if (is_single(nd))
                            queue.emplace_back(w, single_color(nd));
                    }
                }
            for (Mask rest = missing; rest; rest &= rest - 1) {
                const int c = single_color(rest);
                const Mask bit = Mask{1} << c;
                Vertex holder = graph_.order();
                std::size_t holders = 0;
                for (Vertex w : open)
                    if (s.dom[w] & bit) {
                        holder = w;
                        ++holders;
                    }
                if (holders == 0)
                    return false;
                if (holders == 1 && s.dom[holder] != bit) {
                    queue.emplace_back(holder, c);
                    changed = true;
                }
            }
        }
        return true;
    }

    // Could some vertex still end up a b-vertex of each color?
    [[nodiscard]] bool b_classes_alive(const State & s) const
    {
        Mask alive = 0;
        for (Vertex v = 0; v < graph_.order() && alive != all_; ++v) {
            if (graph_.degree(v) + 1 < k_)
                continue;
            Mask present = 0, reach = 0;
            std::size_t open = 0;
            for (Vertex w : graph_.neighbor_list(v)) {
                if (s.color[w] != -1)
                    present |= Mask{1} << s.color[w];
                else {
                    reach |= s.dom[w];
                    ++open;
                }
            }
            for (Mask cand = s.dom[v] & ~alive; cand; cand &= cand - 1) {
                const Mask bit = cand & (~cand + 1);
                const Mask need = all_ & ~bit & ~present;
                if ((reach & need) == need && static_cast<std::size_t>(std::popcount(need)) <= open)
                    alive |= bit;
            }
        }
        return alive == all_;
    }

    bool propagate(State & s, std::vector<std::pair<Vertex, int>> & queue)
    {
        for (;;) {
            if (! drain(s, queue))
                return false;
            if (kind_ != ColoringKind::fall || ! options_.fall_propagation)
                break;
            bool changed = false;
            if (! fall_sweep(s, queue, changed))
                return false;
            if (! changed && queue.empty())
                break;
        }
        if (kind_ == ColoringKind::b)
            return b_classes_alive(s);
        return true;
    }

    [[nodiscard]] Vertex choose(const State & s) const
    {
        Vertex best = graph_.order();
        for (Vertex v = 0; v < graph_.order(); ++v) {
            if (s.color[v] != -1)
                continue;
            if (best == graph_.order()) {
                best = v;
                continue;
            }
            if (simplicial_[v] != simplicial_[best]) {
                if (! simplicial_[v])
                    best = v;
                continue;
            }
            const int dv = std::popcount(s.dom[v]), db = std::popcount(s.dom[best]);
            if (dv < db || (dv == db && graph_.degree(v) > graph_.degree(best)))
                best = v;
        }
        return best;
    }

    bool out_of_time()
    {
        if (stats_.interrupted)
            return true;
        if ((stats_.nodes & 1023) == 0) {
            if (options_.cancel && options_.cancel->load(std::memory_order_relaxed))
                stats_.interrupted = true;
            if (options_.deadline && std::chrono::steady_clock::now() > *options_.deadline)
                stats_.interrupted = true;
        }
        return stats_.interrupted;
    }

    bool accept(const State & s) const
    {
        if (s.used != all_)
            return false;
        Coloring c(s.color);
        switch (kind_) {
        case ColoringKind::proper: return is_proper(graph_, c);
        case ColoringKind::b: return is_b_coloring(graph_, c);
        case ColoringKind::fall: return is_fall_coloring(graph_, c);
        }
        return false;
    }

    // Returns false once the visitor asked to stop or the search was interrupted.
    template <typename Visit>
    bool search(const State & s, Visit & visit)
    {
        ++stats_.nodes;
        if (out_of_time())
            return false;
        if (s.uncolored == 0) {
            if (! accept(s))
                return true;
            ++stats_.solutions;
            return visit(Coloring(s.color));
        }
        // Not enough vertices left to open the unused colors.
        if (static_cast<std::size_t>(std::popcount(all_ & ~s.used)) > s.uncolored)
            return true;

        const Vertex v = choose(s);
        Mask options = s.dom[v] & s.used;
        if (const Mask fresh = s.dom[v] & ~s.used)
            options |= fresh & (~fresh + 1);

        std::vector<std::pair<Vertex, int>> queue;
        for (; options; options &= options - 1) {
            State child = s;
            queue.clear();
            queue.emplace_back(v, single_color(options));
            if (! propagate(child, queue))
                continue;
            if (! search(child, visit))
                return false;
        }
        return true;
    }

    Graph graph_;
    std::size_t k_;
    ColoringKind kind_;
    SearchOptions options_;
    Mask all_ = 0;
    std::vector<bool> simplicial_;
    SearchStats stats_;
};

} // namespace bfall
