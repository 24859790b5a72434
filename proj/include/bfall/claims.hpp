#pragma once

#include <bfall/constructions.hpp>
#include <bfall/corpus.hpp>
#include <bfall/homomorphism.hpp>
#include <bfall/product.hpp>
#include <bfall/spectra.hpp>
#include <bfall/structure.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

namespace bfall::claims {

enum class Status { pass, fail, skipped };

inline const char * to_string(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
    }
    return "?";
}

struct ClaimResult {
    std::string id;
    Status status = Status::skipped;
    std::string details;
    double seconds = 0.0;
};

struct Context {
    std::uint64_t seed = 0;
};

struct Claim {
    std::string id;
    std::string summary;
    std::function<ClaimResult(const Context &)> run;
};

/// Counts checks and remembers the first few failures.
class Tally {
public:
    bool expect(bool ok, const std::string & what)
    {
        ++checks_;
        if (! ok) {
            ++failures_;
            if (messages_.size() < 5)
                messages_.push_back(what);
        }
        return ok;
    }

    void note(std::string s) { notes_.push_back(std::move(s)); }

    [[nodiscard]] ClaimResult result(std::string id) const
    {
        ClaimResult r;
        r.id = std::move(id);
        r.status = failures_ == 0 ? Status::pass : Status::fail;
        std::ostringstream out;
        out << checks_ << " checks";
        if (failures_)
            out << ", " << failures_ << " failed";
        for (const auto & n : notes_)
            out << "; " << n;
        for (const auto & m : messages_)
            out << "; FAIL " << m;
        r.details = out.str();
        return r;
    }

private:
    std::size_t checks_ = 0, failures_ = 0;
    std::vector<std::string> messages_, notes_;
};

inline std::string show(const Spectrum & s)
{
    std::string out = "{";
    for (auto it = s.begin(); it != s.end(); ++it)
        out += (it == s.begin() ? "" : ",") + std::to_string(*it);
    return out + "}";
}

inline std::string pq(std::size_t p, std::size_t q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

/// Largest k <= cap with k^n within the oracle guard.
inline std::size_t oracle_reach(std::size_t n, std::size_t cap)
{
    std::size_t k = cap;
    while (k > 1 && std::pow(static_cast<double>(k), static_cast<double>(n)) > 1e9)
        --k;
    return k;
}

inline Spectrum truncate(const Spectrum & s, std::size_t k_max)
{
    Spectrum out;
    for (auto k : s)
        if (k <= k_max)
            out.insert(k);
    return out;
}

// Individual claims ---------------------------------------------------------

inline ClaimResult prop_lex_complete(const Context &)
{
    Tally t;
    for (const auto & spec : {products::lexicographic(), products::strong(), products::conormal()})
        for (std::size_t p = 1; p <= 6; ++p)
            for (std::size_t q = 1; q <= 6; ++q) {
                Graph g = product(complete(p), complete(q), spec);
                t.expect(g.order() == p * q && is_complete(g), spec.name() + " K" + pq(p, q) + " is not K_pq");
            }
    return t.result("prop-lex-complete");
}

inline ClaimResult prop_cart_fall(const Context &)
{
    Tally t;
    std::size_t oracle_runs = 0;
    for (std::size_t p = 2; p <= 4; ++p)
        for (std::size_t q = 2; q <= 4; ++q) {
            Graph g = product(complete(p), complete(q), products::cartesian());
            Spectrum f = fall_spectrum(g);
            t.expect(f == Spectrum{std::max(p, q)}, "F(K_p box K_q) " + pq(p, q) + " = " + show(f));
            if (p * q <= 12) {
                const std::size_t reach = oracle_reach(g.order(), g.min_degree() + 1);
                auto o = oracle_spectra(g, reach);
                ++oracle_runs;
                t.expect(o.fall_spectrum == truncate(f, reach),
                    "oracle disagrees on " + pq(p, q) + " up to k=" + std::to_string(reach));
            }
        }
    for (std::size_t q = 1; q <= 6; ++q)
        for (std::size_t p = 1; p <= q; ++p) {
            auto [g, c] = cartesian_complete_fall(p, q);
            t.expect(c.k() == q && is_fall_coloring(g, c), "cyclic construction fails at " + pq(p, q));
        }
    t.note(std::to_string(oracle_runs) + " oracle cross-checks");
    return t.result("prop-cart-fall");
}

inline ClaimResult thm_crown(const Context &)
{
    Tally t;
    for (std::size_t n = 3; n <= 5; ++n) {
        Graph g = crown(n);
        SpectrumSolver s(g);
        auto b = s.b_spectrum();
        auto f = s.fall_spectrum();
        t.expect(b == Spectrum{2, n}, "S_b(crown " + std::to_string(n) + ") = " + show(b));
        t.expect(f == Spectrum{2, n}, "F(crown " + std::to_string(n) + ") = " + show(f));
    }
    return t.result("thm-crown");
}

inline ClaimResult thm_tensor(const Context &)
{
    Tally t;
    std::size_t enumerated = 0;
    for (std::size_t p = 2; p <= 4; ++p)
        for (std::size_t q = 2; q <= 4; ++q) {
            Graph g = product(complete(p), complete(q), products::direct());
            SpectrumSolver s(g);
            auto b = s.b_spectrum();
            auto f = s.fall_spectrum();
            t.expect(b == Spectrum{p, q}, "S_b(K_p x K_q) " + pq(p, q) + " = " + show(b));
            t.expect(f == Spectrum{p, q}, "F(K_p x K_q) " + pq(p, q) + " = " + show(f));

            const Coloring rows = direct_complete_coloring(p, q, Lines::row).coloring;
            const Coloring cols = direct_complete_coloring(p, q, Lines::column).coloring;
            for (std::size_t k : Spectrum{p, q}) {
                std::size_t found = 0;
                s.enumerate(k, ColoringKind::b, [&](const Coloring & c) {
                    ++found;
                    bool known = (k == p && same_up_to_renaming(c, rows)) || (k == q && same_up_to_renaming(c, cols));
                    t.expect(known, "b-coloring of K_p x K_q " + pq(p, q) + " with " + std::to_string(k)
                            + " colors is neither the row nor the column coloring");
                    return true;
                });
                // Row and column colorings coincide as partitions only if p == q
                // and they are still different partitions then.
                const std::size_t expected = p == q ? 2 : 1;
                t.expect(found == expected, "K_p x K_q " + pq(p, q) + " has " + std::to_string(found)
                        + " b-colorings with " + std::to_string(k) + " colors");
                enumerated += found;
            }
        }
    t.note(std::to_string(enumerated) + " b-colorings enumerated");
    return t.result("thm-tensor");
}

inline ClaimResult ternary_fall_6(const Context &)
{
    Tally t;
    const std::vector<Graph> factors{complete(2), complete(3), complete(4)};
    Graph g = product(factors, products::direct());
    t.expect(g.order() == 24, "K2 x K3 x K4 has " + std::to_string(g.order()) + " vertices");
    auto c = has_fall_coloring(g, 6);
    t.expect(c.has_value(), "no 6-color fall-coloring of K2 x K3 x K4 found");
    if (c)
        t.expect(c->k() == 6 && is_fall_coloring(g, *c), "returned coloring does not verify");
    return t.result("ternary-fall-6");
}

/// Triples (G, H, F) of random graphs with at most five vertices.
struct LiftTriple {
    Graph g, h, f;
};

inline std::vector<LiftTriple> lift_corpus(std::uint64_t seed, std::size_t count = 30)
{
    corpus::Rng rng(seed * 7919 + 11);
    std::vector<LiftTriple> out;
    for (std::size_t i = 0; i < count; ++i) {
        Graph g = corpus::random_small_graph(rng, 1, 5);
        Graph h = corpus::random_small_graph(rng, 1, 5);
        Graph f = corpus::random_small_graph(rng, 1, 5);
        out.push_back({std::move(g), std::move(h), std::move(f)});
    }
    return out;
}

inline ClaimResult lift_claim(const Context & ctx, MapClass cls, const std::string & id)
{
    Tally t;
    std::size_t maps = 0;
    const FindMapOptions opts{.surjective = cls == MapClass::domatic};
    for (const auto & [g, h, f] : lift_corpus(ctx.seed)) {
        const std::vector<Graph> targets{f, complete(chromatic_number(h))};
        for (const auto & target : targets) {
            auto m = find_map(h, target, cls, opts);
            if (! m)
                continue;
            ++maps;
            for (const auto & spec : products::named())
                for (auto side : {LiftSide::left, LiftSide::right}) {
                    VertexMap lifted = lift(*m, g, spec, side);
                    t.expect(is_of_class(lifted, cls),
                        "lift through " + spec.name() + (side == LiftSide::left ? " (left)" : " (right)")
                            + " loses the class");
                }
        }
    }
    t.expect(maps > 0, "corpus produced no maps of this class");
    t.note(std::to_string(maps) + " source maps lifted");
    return t.result(id);
}

/// Graphs with at most six vertices: the named families plus random ones.
inline std::vector<Graph> small_corpus(std::uint64_t seed, std::size_t random_count)
{
    auto out = corpus::named_graphs(6);
    corpus::Rng rng(seed * 104729 + 3);
    for (std::size_t i = 0; i < random_count; ++i)
        out.push_back(corpus::random_small_graph(rng, 1, 6));
    return out;
}

inline ClaimResult thm_cart_lift(const Context & ctx)
{
    Tally t;
    const auto gs = small_corpus(ctx.seed, 12);
    const auto hs = small_corpus(ctx.seed + 1, 6);
    std::size_t built = 0;
    for (const auto & g : gs) {
        SpectrumSolver sg(g);
        for (auto k : sg.fall_spectrum()) {
            auto fg = sg.find(k, ColoringKind::fall);
            if (! t.expect(fg.has_value(), "fall spectrum member without witness"))
                continue;
            for (const auto & h : hs) {
                Coloring gh = optimal_coloring(h);
                if (gh.k() > k)
                    continue;
                auto out = cartesian_lift_fall(g, *fg, h, gh);
                ++built;
                t.expect(out.coloring.k() == k && is_fall_coloring(out.graph, out.coloring),
                    "cartesian lift with k=" + std::to_string(k) + " fails on a " + std::to_string(g.order()) + "x"
                        + std::to_string(h.order()) + " instance");
            }
        }
    }
    {
        Graph g = crown(3);
        auto fg = has_fall_coloring(g, 3);
        Graph h = cycle(5);
        auto out = cartesian_lift_fall(g, *fg, h, optimal_coloring(h));
        t.expect(is_fall_coloring(out.graph, out.coloring) && out.coloring.k() == 3, "crown(3) box C5 lift fails");
        ++built;
    }
    t.note(std::to_string(built) + " lifts verified");
    return t.result("thm-cart-lift");
}

inline ClaimResult thm_direct_proj(const Context & ctx)
{
    Tally t;
    const auto gs = small_corpus(ctx.seed, 12);
    auto hs = small_corpus(ctx.seed + 2, 6);
    hs.push_back(make_graph(3, {{0, 1}}));
    std::size_t built = 0, rejected = 0;
    for (const auto & g : gs) {
        SpectrumSolver sg(g);
        for (auto k : sg.fall_spectrum()) {
            if (k < 2)
                continue;
            auto fg = sg.find(k, ColoringKind::fall);
            if (! t.expect(fg.has_value(), "fall spectrum member without witness"))
                continue;
            for (const auto & h : hs) {
                if (h.has_isolated_vertex()) {
                    bool threw = false;
                    try {
                        (void)direct_projection_fall(g, *fg, h);
                    }
                    catch (const input_error &) {
                        threw = true;
                    }
                    t.expect(threw, "projection accepted an H with an isolated vertex");
                    ++rejected;
                    continue;
                }
                auto out = direct_projection_fall(g, *fg, h);
                ++built;
                t.expect(out.coloring.k() == k && is_fall_coloring(out.graph, out.coloring),
                    "direct projection with k=" + std::to_string(k) + " fails");
            }
        }
    }
    t.expect(built > 0 && rejected > 0, "corpus did not exercise both branches");
    t.note(std::to_string(built) + " projections verified, " + std::to_string(rejected) + " rejections");
    return t.result("thm-direct-proj");
}

inline ClaimResult cor_direct_union(const Context & ctx)
{
    Tally t;
    corpus::Rng rng(ctx.seed * 31337 + 5);
    for (int i = 0; i < 30; ++i) {
        Graph g = corpus::random_graph_with_edge(rng, 2, 5);
        Graph h = corpus::random_graph_with_edge(rng, 2, 5);
        Graph prod = product(g, h, products::direct());
        SpectrumSolver sg(g), sh(h), sp(prod);
        Spectrum sb = sg.b_spectrum();
        sb.merge(sh.b_spectrum());
        for (auto k : sb) {
            auto c = sp.find(k, ColoringKind::b);
            t.expect(c && is_b_coloring(prod, *c), std::to_string(k) + " missing from S_b(G x H)");
        }
        Spectrum fg = sg.fall_spectrum(), fh = sh.fall_spectrum();
        if (fg.empty() || fh.empty())
            continue;
        fg.merge(fh);
        for (auto k : fg) {
            auto c = sp.find(k, ColoringKind::fall);
            t.expect(c && is_fall_coloring(prod, *c), std::to_string(k) + " missing from F(G x H)");
        }
    }
    return t.result("cor-direct-union");
}

inline ClaimResult prop_strong_sub_lex(const Context & ctx)
{
    Tally t;
    corpus::Rng rng(ctx.seed * 65537 + 9);
    for (int i = 0; i < 40; ++i) {
        Graph g = corpus::random_small_graph(rng, 1, 7);
        Graph h = i % 4 == 0 ? complete(rng.between(1, 4)) : corpus::random_small_graph(rng, 1, 7);
        Graph s = product(g, h, products::strong());
        Graph l = product(g, h, products::lexicographic());
        bool subset = true;
        for (auto [a, b] : s.edges())
            subset = subset && l.adjacent(a, b);
        t.expect(subset, "strong edge missing from the lexicographic product");
        if (is_complete(h))
            t.expect(s == l, "strong and lexicographic products differ with complete H");
    }
    return t.result("prop-strong-sub-lex");
}

inline ClaimResult counterexample(const Context &)
{
    Tally t;
    Graph g = kaul_mitillos_counterexample();
    t.expect(g.order() == 61, "vertex count " + std::to_string(g.order()));
    auto ch = is_chordal(g);
    t.expect(ch.chordal && is_perfect_elimination_ordering(g, ch.ordering), "not chordal");
    t.expect(g.min_degree() == 6, "min degree " + std::to_string(g.min_degree()));
    t.expect(clique_number(g) == 7, "clique number " + std::to_string(clique_number(g)));
    SpectrumSolver s(g);
    const std::size_t chi = s.chromatic_number();
    t.expect(chi == 7, "chromatic number " + std::to_string(chi));
    t.expect(! s.find(7, ColoringKind::fall).has_value(), "found a 7-color fall-coloring");
    auto f = s.fall_spectrum();
    t.expect(f.empty(), "fall spectrum " + show(f));
    t.note("n=61 delta=6 omega=7 chi=" + std::to_string(chi) + " F=" + show(f));
    return t.result("counterexample");
}

inline ClaimResult obs_c5_lex(const Context &)
{
    Tally t;
    Graph c5 = cycle(5);
    auto f = fall_spectrum(c5);
    t.expect(f.empty(), "F(C5) = " + show(f));
    Graph lex = product(c5, complete(2), products::lexicographic());
    auto fl = fall_spectrum(lex);
    t.expect(! fl.empty(), "F(C5[K2]) is empty");
    t.expect(lex == product(c5, complete(2), products::strong()), "C5[K2] differs from C5 strong K2");
    t.note("F(C5[K2]) = " + show(fl));
    return t.result("obs-c5-lex");
}

inline ClaimResult oracle_equivalence(const Context & ctx)
{
    Tally t;
    corpus::Rng rng(ctx.seed * 2654435761ULL + 1);
    constexpr std::size_t k_max = 4;
    for (int i = 0; i < 50; ++i) {
        Graph g = corpus::random_small_graph(rng, 1, 8);
        auto o = oracle_spectra(g, k_max);
        SpectrumSolver s(g);
        auto chi = s.chromatic_number();
        auto b = truncate(s.b_spectrum(), k_max);
        auto f = truncate(s.fall_spectrum(), k_max);
        const std::string tag = "graph #" + std::to_string(i) + " (n=" + std::to_string(g.order()) + ")";
        t.expect(o.b_spectrum == b, tag + ": S_b solver " + show(b) + " oracle " + show(o.b_spectrum));
        t.expect(o.fall_spectrum == f, tag + ": F solver " + show(f) + " oracle " + show(o.fall_spectrum));
        if (chi <= k_max)
            t.expect(o.chi == chi, tag + ": chromatic number disagrees");
        else
            t.expect(! o.chi.has_value(), tag + ": oracle colored with fewer colors than chi");
    }
    return t.result("oracle-equivalence");
}

inline ClaimResult thm_main_bounds(const Context & ctx)
{
    Tally t;
    corpus::Rng rng(ctx.seed * 97 + 13);
    std::size_t fall_pairs = 0;
    for (int i = 0; i < 40; ++i) {
        Graph g = corpus::random_graph_with_edge(rng, 2, 5);
        Graph h = corpus::random_graph_with_edge(rng, 2, 5);
        SpectrumSolver sg(g), sh(h);
        const Spectrum bg = sg.b_spectrum(), bh = sh.b_spectrum();
        const Spectrum fg = sg.fall_spectrum(), fh = sh.fall_spectrum();
        const std::size_t b_g = *bg.rbegin(), b_h = *bh.rbegin();
        const bool falls = ! fg.empty() && ! fh.empty();
        fall_pairs += falls;
        for (const auto & spec : products::named()) {
            Graph prod = product(g, h, spec);
            SpectrumSolver sp(prod);
            const bool multiplicative = spec == products::lexicographic() || spec == products::strong()
                || spec == products::conormal();
            const std::size_t b_need = multiplicative ? b_g * b_h : std::max(b_g, b_h);
            auto bc = sp.find(b_need, ColoringKind::b);
            t.expect(bc && is_b_coloring(prod, *bc),
                spec.name() + ": no b-coloring with " + std::to_string(b_need) + " colors (pair " + std::to_string(i) + ")");
            if (prod.order() <= 16) {
                auto full = sp.b_spectrum();
                t.expect(*full.rbegin() >= b_need, spec.name() + ": b(G.H) below bound");
            }
            if (! falls)
                continue;
            const std::size_t f1g = *fg.begin(), f2g = *fg.rbegin(), f1h = *fh.begin(), f2h = *fh.rbegin();
            std::size_t lo = 0, hi = 0;
            if (multiplicative) {
                lo = f1g * f1h;
                hi = f2g * f2h;
            }
            else if (spec == products::cartesian()) {
                lo = std::max(f1g, f1h);
                hi = std::max(f2g, f2h);
            }
            else {
                lo = std::min(f1g, f1h);
                hi = std::max(f2g, f2h);
            }
            // lo, hi in F(G.H) gives f1(G.H) <= lo <= hi <= f2(G.H).
            for (auto k : {lo, hi}) {
                auto fc = sp.find(k, ColoringKind::fall);
                t.expect(fc && is_fall_coloring(prod, *fc),
                    spec.name() + ": " + std::to_string(k) + " not in F(G.H) (pair " + std::to_string(i) + ")");
            }
        }
    }
    t.note(std::to_string(fall_pairs) + " pairs with both fall spectra nonempty");
    return t.result("thm-main-bounds");
}

// Registry ------------------------------------------------------------------

inline const std::vector<Claim> & registry()
{
    static const std::vector<Claim> all = {
        {"prop-lex-complete", "K_p.K_q is K_pq for lex, strong, co-normal (p, q <= 6)", prop_lex_complete},
        {"prop-cart-fall", "F(K_p box K_q) = {max(p,q)}; cyclic construction verifies", prop_cart_fall},
        {"thm-crown", "S_b = F = {2, n} for K_{n,n} minus a perfect matching, n = 3..5", thm_crown},
        {"thm-tensor", "S_b = F = {p, q} for K_p x K_q; only row/column b-colorings", thm_tensor},
        {"ternary-fall-6", "K2 x K3 x K4 has a 6-color fall-coloring", ternary_fall_6},
        {"lem-lift-hom", "homomorphisms lift through every product",
            [](const Context & c) { return lift_claim(c, MapClass::hom, "lem-lift-hom"); }},
        {"lem-lift-bhom", "b-homomorphisms lift through every product",
            [](const Context & c) { return lift_claim(c, MapClass::b, "lem-lift-bhom"); }},
        {"lem-lift-domatic", "surjective domatic maps lift through every product",
            [](const Context & c) { return lift_claim(c, MapClass::domatic, "lem-lift-domatic"); }},
        {"cor-direct-union", "S_b(G) u S_b(H) and F(G) u F(H) lie in the direct product's spectra", cor_direct_union},
        {"thm-cart-lift", "rotated copies give fall-colorings of G box H", thm_cart_lift},
        {"thm-direct-proj", "projection gives fall-colorings of G x H iff H has no isolated vertex", thm_direct_proj},
        {"prop-strong-sub-lex", "strong product is a spanning subgraph of the lexicographic one", prop_strong_sub_lex},
        {"counterexample", "chordal, delta 6, omega 7, chi 7, no fall-coloring", counterexample},
        {"obs-c5-lex", "F(C5) empty while F(C5[K2]) is not", obs_c5_lex},
        {"oracle-equivalence", "exact solver matches brute force on 50 random graphs", oracle_equivalence},
        {"thm-main-bounds", "b and fall bounds for the five products on random factors", thm_main_bounds},
    };
    return all;
}

inline const Claim * find_claim(const std::string & id)
{
    for (const auto & c : registry())
        if (c.id == id)
            return &c;
    return nullptr;
}

inline ClaimResult run_claim(const Claim & claim, const Context & ctx)
{
    const auto start = std::chrono::steady_clock::now();
    ClaimResult r;
    try {
        r = claim.run(ctx);
    }
    catch (const std::exception & e) {
        r.id = claim.id;
        r.status = Status::fail;
        r.details = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

struct CheckReport {
    std::vector<ClaimResult> entries;

    [[nodiscard]] bool ok() const
    {
        return std::all_of(entries.begin(), entries.end(), [](const auto & e) { return e.status != Status::fail; });
    }

    [[nodiscard]] nlohmann::json to_json() const
    {
        nlohmann::json claims = nlohmann::json::array();
        for (const auto & e : entries)
            claims.push_back({{"id", e.id}, {"status", to_string(e.status)}, {"details", e.details},
                {"elapsed", e.seconds}});
        return {{"ok", ok()}, {"claims", claims}};
    }

    void print_table(std::ostream & out) const
    {
        for (const auto & e : entries)
            out << std::left << std::setw(20) << e.id << ' ' << std::setw(7) << to_string(e.status) << ' '
                << std::right << std::fixed << std::setprecision(2) << std::setw(8) << e.seconds << "s  " << e.details
                << '\n';
        out << (ok() ? "all claims pass" : "some claims FAILED") << '\n';
    }
};

/// Runs the named claims (all when `ids` is empty) on up to `jobs` threads.
/// Entries come back in the order requested.
inline CheckReport run_claims(const std::vector<std::string> & ids, const Context & ctx, std::size_t jobs = 1)
{
    std::vector<const Claim *> todo;
    if (ids.empty() || (ids.size() == 1 && ids[0] == "all"))
        for (const auto & c : registry())
            todo.push_back(&c);
    else
        for (const auto & id : ids) {
            const Claim * c = find_claim(id);
            if (! c)
                throw input_error("unknown claim id `" + id + "`");
            todo.push_back(c);
        }

    CheckReport report;
    report.entries.resize(todo.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < todo.size();)
            report.entries[i] = run_claim(*todo[i], ctx);
    };
    jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(todo.size(), 1));
    std::vector<std::thread> pool;
    for (std::size_t j = 1; j < jobs; ++j)
        pool.emplace_back(worker);
    worker();
    for (auto & th : pool)
        th.join();
    return report;
}

} // namespace bfall::claims
