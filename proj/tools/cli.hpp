#pragma once

#include <bfall/bfall.hpp>

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace bfall::cli {

// Exit codes.
constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_refused = 2;
constexpr int exit_failed = 3;

struct Globals {
    bool json = false;
    std::uint64_t seed = 0;
    std::size_t jobs = 1;
    double timeout = 0.0;

    [[nodiscard]] SearchOptions search_options() const
    {
        SearchOptions o;
        if (timeout > 0)
            o.deadline = std::chrono::steady_clock::now()
                + std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(timeout));
        return o;
    }
};

inline std::optional<std::size_t> number_after(std::string_view s, std::string_view prefix)
{
    if (s.substr(0, prefix.size()) != prefix || s.size() == prefix.size())
        return std::nullopt;
    std::size_t n = 0;
    auto rest = s.substr(prefix.size());
    auto [end, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
    if (ec != std::errc{} || end != rest.data() + rest.size())
        return std::nullopt;
    return n;
}

/// A graph file, or one of the names kN, cN, pN, crownN, kaul-mitillos.
inline Graph resolve_graph(const std::string & arg)
{
    if (std::filesystem::is_regular_file(arg))
        return io::load_graph(arg);
    if (arg == "kaul-mitillos")
        return kaul_mitillos_counterexample();
    if (auto n = number_after(arg, "crown"))
        return crown(*n);
    if (auto n = number_after(arg, "k"))
        return complete(*n);
    if (auto n = number_after(arg, "c"))
        return cycle(*n);
    if (auto n = number_after(arg, "p"))
        return path(*n);
    throw input_error("`" + arg + "` is neither a graph file nor a known name (kN, cN, pN, crownN, kaul-mitillos)");
}

inline ProductSpec resolve_product(const std::string & name, std::optional<unsigned> mask)
{
    if (mask) {
        if (! name.empty())
            throw input_error("give either --product or --spec, not both");
        return ProductSpec(static_cast<std::uint16_t>(*mask), "custom");
    }
    if (auto spec = products::by_name(name))
        return *spec;
    throw input_error("unknown product `" + name + "` (cartesian, direct, lex, strong, conormal)");
}

inline void emit_graph(const Graph & g, const std::string & path, std::ostream & out)
{
    if (path.empty() || path == "-")
        io::write_dimacs(out, g);
    else
        io::save_graph(path, g);
}

inline MapClass parse_class(const std::string & s)
{
    if (s == "hom")
        return MapClass::hom;
    if (s == "b")
        return MapClass::b;
    if (s == "domatic")
        return MapClass::domatic;
    if (s == "type2")
        return MapClass::type2;
    throw input_error("unknown map class `" + s + "` (hom, b, domatic, type2)");
}

inline std::string join(const std::vector<Vertex> & vs, const Graph & g)
{
    std::string s;
    for (Vertex v : vs)
        s += (s.empty() ? "" : " ") + (g.has_labels() ? g.label(v) : std::to_string(v + 1));
    return s;
}

// Subcommand bodies -----------------------------------------------------------

struct BuildArgs {
    std::string kind;
    std::vector<std::size_t> params;
    std::string left, right, product_name, part = "G", output;
    std::optional<unsigned> mask;
};

inline int cmd_build(const BuildArgs & a, std::ostream & out)
{
    auto need = [&](std::size_t count) {
        if (a.params.size() != count)
            throw input_error("build " + a.kind + " takes " + std::to_string(count) + " size parameter(s)");
    };
    Graph g;
    if (a.kind == "complete") {
        need(1);
        g = complete(a.params[0]);
    }
    else if (a.kind == "cycle") {
        need(1);
        g = cycle(a.params[0]);
    }
    else if (a.kind == "path") {
        need(1);
        g = path(a.params[0]);
    }
    else if (a.kind == "bipartite") {
        need(2);
        g = complete_bipartite(a.params[0], a.params[1]);
    }
    else if (a.kind == "crown") {
        need(1);
        g = crown(a.params[0]);
    }
    else if (a.kind == "kaul-mitillos") {
        need(0);
        g = kaul_mitillos_counterexample();
    }
    else if (a.kind == "non-monotone") {
        need(0);
        auto pair = non_monotone_pair();
        if (a.part != "G" && a.part != "H")
            throw input_error("--part must be G or H");
        g = a.part == "G" ? pair.g : pair.h;
    }
    else if (a.kind == "product") {
        need(0);
        if (a.left.empty() || a.right.empty())
            throw input_error("build product needs --left and --right");
        g = product(resolve_graph(a.left), resolve_graph(a.right), resolve_product(a.product_name, a.mask));
    }
    else
        throw input_error("unknown graph kind `" + a.kind + "`");
    emit_graph(g, a.output, out);
    return exit_ok;
}

inline int cmd_verify(const Globals & gl, const std::string & graph_arg, const std::string & coloring_file,
    std::ostream & out)
{
    Graph g = resolve_graph(graph_arg);
    Coloring c = io::coloring_from_json(io::read_json_file(coloring_file));
    if (c.size() != g.order())
        throw input_error("coloring has " + std::to_string(c.size()) + " entries for " + std::to_string(g.order())
            + " vertices");
    const bool proper = is_proper(g, c);
    const bool b = proper && is_b_coloring(g, c);
    const bool fall = proper && is_fall_coloring(g, c);
    const auto missing = proper ? non_b_vertices(g, c) : std::vector<Vertex>{};
    if (gl.json) {
        nlohmann::json j{{"k", c.k()}, {"proper", proper}, {"b", b}, {"fall", fall}};
        j["non_b_vertices"] = missing;
        out << j.dump(2) << '\n';
        return exit_ok;
    }
    out << "k = " << c.k() << '\n';
    out << "proper: " << (proper ? "yes" : "no") << '\n';
    out << "b-coloring: " << (b ? "yes" : "no") << '\n';
    out << "fall-coloring: " << (fall ? "yes" : "no") << '\n';
    if (proper && ! fall)
        out << "non-b-vertices: " << join(missing, g) << '\n';
    return exit_ok;
}

struct SpectrumArgs {
    std::string what = "all", graph;
    bool oracle = false;
    std::optional<std::size_t> k_max;
};

inline int cmd_spectrum(const Globals & gl, const SpectrumArgs & a, std::ostream & out)
{
    Graph g = resolve_graph(a.graph);
    SpectrumReport r;
    if (a.oracle) {
        r = oracle_spectra(g, a.k_max.value_or(g.max_degree() + 1));
    }
    else {
        SpectrumWhat what = SpectrumWhat::all;
        if (a.what == "chi")
            what = SpectrumWhat::chi;
        else if (a.what == "b")
            what = SpectrumWhat::b;
        else if (a.what == "fall")
            what = SpectrumWhat::fall;
        else if (a.what != "all")
            throw input_error("--what must be chi, b, fall or all");
        r = spectrum_report(g, what, gl.search_options());
    }
    out << to_json(r).dump(2) << '\n';
    return exit_ok;
}

struct HomArgs {
    std::string source, target, map_file, cls = "hom", output;
    bool surjective = false;
};

inline int cmd_hom_check(const Globals & gl, const HomArgs & a, std::ostream & out)
{
    Graph src = resolve_graph(a.source), tgt = resolve_graph(a.target);
    VertexMap m = vertex_map_from_json(io::read_json_file(a.map_file), src, tgt);
    nlohmann::json j{{"hom", is_homomorphism(m)}, {"b", is_b_homomorphism(m)}, {"domatic", is_domatic(m)},
        {"type2", is_type2(m)}, {"surjective", is_surjective(m)}};
    if (gl.json)
        out << j.dump(2) << '\n';
    else
        for (const auto & [k, v] : j.items())
            out << k << ": " << (v.get<bool>() ? "yes" : "no") << '\n';
    return exit_ok;
}

inline int cmd_hom_find(const HomArgs & a, std::ostream & out)
{
    Graph src = resolve_graph(a.source), tgt = resolve_graph(a.target);
    auto m = find_map(src, tgt, parse_class(a.cls), {.surjective = a.surjective});
    nlohmann::json j = m ? to_json(*m) : nlohmann::json{{"found", false}};
    if (m)
        j["found"] = true;
    if (! a.output.empty() && m)
        io::write_json_file(a.output, to_json(*m));
    out << j.dump(2) << '\n';
    return exit_ok;
}

struct ConstructArgs {
    std::string which, graph, coloring, graph2, coloring2, product_name = "lex", output;
    std::size_t p = 0, q = 0;
    std::optional<std::size_t> k;
};

inline Coloring fall_coloring_for(const Globals & gl, const Graph & g, const std::string & file, std::optional<std::size_t> k)
{
    if (! file.empty())
        return io::coloring_from_json(io::read_json_file(file));
    SpectrumSolver s(g, gl.search_options());
    if (k) {
        if (auto c = s.find(*k, ColoringKind::fall))
            return *c;
        throw input_error("graph has no fall-coloring with " + std::to_string(*k) + " colors");
    }
    auto f = s.fall_spectrum();
    if (f.empty())
        throw input_error("graph has no fall-coloring");
    return *s.find(*f.begin(), ColoringKind::fall);
}

inline int cmd_construct(const Globals & gl, const ConstructArgs & a, std::ostream & out)
{
    ColoredGraph cg;
    auto need_graphs = [&] {
        if (a.graph.empty() || a.graph2.empty())
            throw input_error("construct " + a.which + " needs --graph and --graph2");
    };
    if (a.which == "cart-fall")
        cg = cartesian_complete_fall(a.p, a.q);
    else if (a.which == "direct-row" || a.which == "direct-col")
        cg = direct_complete_coloring(a.p, a.q, a.which == "direct-row" ? Lines::row : Lines::column);
    else if (a.which == "cart-lift") {
        need_graphs();
        Graph g = resolve_graph(a.graph), h = resolve_graph(a.graph2);
        Coloring gh = a.coloring2.empty() ? optimal_coloring(h) : io::coloring_from_json(io::read_json_file(a.coloring2));
        cg = cartesian_lift_fall(g, fall_coloring_for(gl, g, a.coloring, a.k), h, gh);
    }
    else if (a.which == "direct-proj") {
        need_graphs();
        Graph g = resolve_graph(a.graph), h = resolve_graph(a.graph2);
        cg = direct_projection_fall(g, fall_coloring_for(gl, g, a.coloring, a.k), h);
    }
    else if (a.which == "pair") {
        need_graphs();
        Graph g = resolve_graph(a.graph), h = resolve_graph(a.graph2);
        cg = pair_product_fall(g, fall_coloring_for(gl, g, a.coloring, std::nullopt), h,
            fall_coloring_for(gl, h, a.coloring2, std::nullopt), resolve_product(a.product_name, std::nullopt));
    }
    else
        throw input_error("unknown construction `" + a.which + "`");

    io::save_graph(a.output + ".col", cg.graph);
    io::write_json_file(a.output + ".coloring.json", io::to_json(cg.coloring));
    out << "wrote " << a.output << ".col (" << cg.graph.order() << " vertices) and " << a.output
        << ".coloring.json (k = " << cg.coloring.k() << ")\n";
    return exit_ok;
}

inline int cmd_check_paper(const Globals & gl, const std::vector<std::string> & ids, std::ostream & out)
{
    auto report = claims::run_claims(ids, {.seed = gl.seed}, gl.jobs);
    if (gl.json)
        out << report.to_json().dump(2) << '\n';
    else
        report.print_table(out);
    return report.ok() ? exit_ok : exit_failed;
}

struct ProbeResult {
    std::size_t p = 0, q = 0;
    std::optional<std::size_t> best;
    std::optional<Coloring> witness;
    std::vector<std::size_t> refuted, undecided;
    bool exhausted = false;
};

/// Largest k with a b-coloring of K_p box K_q found within the budget,
/// trying k from Delta + 1 downwards with an even share of what is left.
inline ProbeResult probe_question1(std::size_t p, std::size_t q, double budget)
{
    if (p < 1 || q < 1 || p > 8 || q > 8)
        throw input_error("probe-q1 needs 1 <= p, q <= 8");
    ProbeResult r{p, q};
    Graph g = product(complete(p), complete(q), products::cartesian());
    const std::size_t low = std::max(p, q);
    const auto start = std::chrono::steady_clock::now();
    const auto end = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(budget));
    for (std::size_t k = g.max_degree() + 1; k >= low; --k) {
        const auto now = std::chrono::steady_clock::now();
        const std::size_t left = k - low + 1;
        SearchOptions o;
        o.deadline = now + (end - now) / static_cast<long>(left);
        ColoringSearch search(g, k, ColoringKind::b, o);
        auto c = search.find_one();
        if (c) {
            r.best = k;
            r.witness = c;
            break;
        }
        if (search.stats().interrupted) {
            r.exhausted = true;
            r.undecided.push_back(k);
        }
        else
            r.refuted.push_back(k);
    }
    return r;
}

inline int cmd_probe_q1(const Globals & gl, std::size_t p, std::size_t q, double budget, std::ostream & out)
{
    ProbeResult r = probe_question1(p, q, budget);
    nlohmann::json j{{"p", r.p}, {"q", r.q}, {"label", "lower-bound evidence, not an answer"},
        {"budget_exhausted", r.exhausted}, {"refuted", r.refuted}, {"undecided", r.undecided}};
    j["best_k"] = r.best ? nlohmann::json(*r.best) : nlohmann::json(nullptr);
    j["witness"] = r.witness ? io::to_json(*r.witness) : nlohmann::json(nullptr);
    if (gl.json) {
        out << j.dump(2) << '\n';
        return exit_ok;
    }
    out << "K_" << p << " box K_" << q << ": lower-bound evidence, not an answer\n";
    if (r.best)
        out << "b >= " << *r.best << " (witness found)\n";
    else
        out << "no b-coloring found\n";
    if (! r.refuted.empty()) {
        out << "refuted k:";
        for (auto k : r.refuted)
            out << ' ' << k;
        out << '\n';
    }
    if (r.exhausted) {
        out << "budget ran out at k:";
        for (auto k : r.undecided)
            out << ' ' << k;
        out << '\n';
    }
    return exit_ok;
}

// Entry point -----------------------------------------------------------------

inline int run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err)
{
    CLI::App app{"b-colorings and fall-colorings of graph products"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals gl;
    app.add_flag("--json", gl.json, "JSON output where supported");
    app.add_option("--seed", gl.seed, "seed for randomized corpora")->capture_default_str();
    app.add_option("--jobs", gl.jobs, "parallel claims")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--timeout", gl.timeout, "search time limit in seconds (0 = none)")->check(CLI::NonNegativeNumber);

    BuildArgs build;
    auto * b = app.add_subcommand("build", "write a graph as DIMACS");
    b->add_option("kind", build.kind,
         "complete|cycle|path|bipartite|crown|kaul-mitillos|non-monotone|product")->required();
    b->add_option("params", build.params, "size parameters");
    b->add_option("--left", build.left, "left factor (file or name)");
    b->add_option("--right", build.right, "right factor (file or name)");
    b->add_option("--product", build.product_name, "cartesian|direct|lex|strong|conormal");
    b->add_option("--spec", build.mask, "9-bit mask, bit 3*r1+r2 with E=0 A=1 N=2; bit 0 forbidden");
    b->add_option("--part", build.part, "G or H of the non-monotone pair")->capture_default_str();
    b->add_option("-o,--output", build.output, "output file (default stdout)");

    std::string verify_graph, verify_coloring;
    auto * v = app.add_subcommand("verify", "check a coloring against the proper, b and fall predicates");
    v->add_option("--graph", verify_graph)->required();
    v->add_option("--coloring", verify_coloring)->required();

    SpectrumArgs spec_args;
    auto * s = app.add_subcommand("spectrum", "chromatic number, b-spectrum, fall spectrum");
    s->add_option("--what", spec_args.what, "chi|b|fall|all")->capture_default_str();
    s->add_option("--graph", spec_args.graph)->required();
    s->add_flag("--oracle", spec_args.oracle, "brute force instead of the solver");
    s->add_option("--k-max", spec_args.k_max, "largest k for the oracle (default Delta+1)");

    HomArgs hom;
    auto * h = app.add_subcommand("hom", "vertex maps between graphs");
    h->require_subcommand(1);
    auto * hc = h->add_subcommand("check", "classify a map");
    hc->add_option("--source", hom.source)->required();
    hc->add_option("--target", hom.target)->required();
    hc->add_option("--map", hom.map_file)->required();
    auto * hf = h->add_subcommand("find", "search for a map of a class");
    hf->add_option("--source", hom.source)->required();
    hf->add_option("--target", hom.target)->required();
    hf->add_option("--class", hom.cls, "hom|b|domatic|type2")->capture_default_str();
    hf->add_flag("--surjective", hom.surjective);
    hf->add_option("-o,--output", hom.output, "write the map JSON here");

    ConstructArgs con;
    auto * c = app.add_subcommand("construct", "build a product together with a coloring");
    c->add_option("--which", con.which, "cart-fall|direct-row|direct-col|cart-lift|direct-proj|pair")->required();
    c->add_option("--p", con.p);
    c->add_option("--q", con.q);
    c->add_option("--graph", con.graph, "G (file or name)");
    c->add_option("--coloring", con.coloring, "coloring of G (default: solver)");
    c->add_option("--graph2", con.graph2, "H (file or name)");
    c->add_option("--coloring2", con.coloring2, "coloring of H (default: solver)");
    c->add_option("--k", con.k, "colors for G's fall-coloring when computed");
    c->add_option("--product", con.product_name, "lex|strong|conormal for pair")->capture_default_str();
    c->add_option("-o,--output", con.output, "output prefix; writes <prefix>.col and <prefix>.coloring.json")
        ->required();

    std::vector<std::string> claim_ids;
    auto * cp = app.add_subcommand("check-paper", "run the reproduction claims");
    cp->add_option("ids", claim_ids, "claim ids (default all)");

    std::size_t probe_p = 0, probe_q = 0;
    double probe_budget = 10.0;
    auto * pq = app.add_subcommand("probe-q1", "search for large b-colorings of K_p box K_q");
    pq->add_option("--p", probe_p)->required();
    pq->add_option("--q", probe_q)->required();
    pq->add_option("--budget", probe_budget, "seconds")->capture_default_str();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e, out, err);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e, out, err);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (b->parsed())
            return cmd_build(build, out);
        if (v->parsed())
            return cmd_verify(gl, verify_graph, verify_coloring, out);
        if (s->parsed())
            return cmd_spectrum(gl, spec_args, out);
        if (hc->parsed())
            return cmd_hom_check(gl, hom, out);
        if (hf->parsed())
            return cmd_hom_find(hom, out);
        if (c->parsed())
            return cmd_construct(gl, con, out);
        if (cp->parsed())
            return cmd_check_paper(gl, claim_ids, out);
        if (pq->parsed())
            return cmd_probe_q1(gl, probe_p, probe_q, probe_budget, out);
    }
    catch (const size_error & e) {
        err << "refused: " << e.what() << '\n';
        return exit_refused;
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace bfall::cli
