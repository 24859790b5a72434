#pragma once

#include <bfall/coloring.hpp>
#include <bfall/graph.hpp>

#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace bfall::io {

/// DIMACS edge format: `c` comments, one `p edge n m` header, `e u v` lines
/// with 1-based vertices. Duplicate edges collapse; a mismatched m is
/// tolerated.
inline Graph read_dimacs(std::istream & in)
{
    std::optional<GraphBuilder> builder;
    std::string line;
    for (std::size_t ln = 1; std::getline(in, line); ++ln) {
        std::istringstream iss(line);
        std::string tag;
        if (! (iss >> tag) || tag == "c")
            continue;
        auto fail = [&](const std::string & why) {
            return input_error("DIMACS line " + std::to_string(ln) + ": " + why);
        };
        if (tag == "p") {
            std::string fmt;
            long long n = -1, m = -1;
            if (builder)
                throw fail("second problem line");
            if (! (iss >> fmt >> n >> m) || (fmt != "edge" && fmt != "edges" && fmt != "col") || n < 0 || m < 0)
                throw fail("expected `p edge <n> <m>`");
            builder.emplace(static_cast<std::size_t>(n));
        }
        else if (tag == "e") {
            long long u = 0, v = 0;
            if (! builder)
                throw fail("edge before the problem line");
            if (! (iss >> u >> v))
                throw fail("expected `e <u> <v>`");
            if (u < 1 || v < 1 || static_cast<std::size_t>(u) > builder->order()
                || static_cast<std::size_t>(v) > builder->order())
                throw fail("vertex out of range 1.." + std::to_string(builder->order()));
            if (u == v)
                throw fail("self-loop");
            builder->add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        }
        else
            throw fail("unknown line type `" + tag + "`");
    }
    if (! builder)
        throw input_error("DIMACS input has no problem line");
    return builder->build();
}

inline void write_dimacs(std::ostream & out, const Graph & g)
{
    out << "p edge " << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

/// Label sidecar: a JSON object from 1-based vertex number to label.
inline nlohmann::json labels_to_json(const Graph & g)
{
    nlohmann::json j = nlohmann::json::object();
    for (Vertex v = 0; v < g.order(); ++v)
        j[std::to_string(v + 1)] = g.label(v);
    return j;
}

inline std::vector<std::string> labels_from_json(const nlohmann::json & j, std::size_t n)
{
    if (! j.is_object())
        throw input_error("label sidecar must be a JSON object");
    std::vector<std::string> out(n);
    for (Vertex v = 0; v < n; ++v) {
        auto key = std::to_string(v + 1);
        if (! j.contains(key) || ! j[key].is_string())
            throw input_error("label sidecar misses vertex " + key);
        out[v] = j[key].get<std::string>();
    }
    if (j.size() != n)
        throw input_error("label sidecar has entries for vertices the graph lacks");
    return out;
}

inline std::filesystem::path sidecar_path(const std::filesystem::path & graph_file)
{
    return std::filesystem::path(graph_file.string() + ".labels.json");
}

/// Writes `<path>` and, when the graph is labelled, `<path>.labels.json`.
inline void save_graph(const std::filesystem::path & path, const Graph & g)
{
    std::ofstream out(path);
    if (! out)
        throw input_error("cannot write " + path.string());
    write_dimacs(out, g);
    if (g.has_labels()) {
        std::ofstream side(sidecar_path(path));
        side << labels_to_json(g).dump(2) << '\n';
    }
}

/// Reads a DIMACS file, picking up a label sidecar next to it when present.
inline Graph load_graph(const std::filesystem::path & path)
{
    std::ifstream in(path);
    if (! in)
        throw input_error("cannot read " + path.string());
    Graph g = read_dimacs(in);
    if (auto side = sidecar_path(path); std::filesystem::exists(side)) {
        std::ifstream sin(side);
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(sin);
        }
        catch (const nlohmann::json::exception & e) {
            throw input_error("bad label sidecar " + side.string() + ": " + e.what());
        }
        GraphBuilder b(g.order());
        for (auto [u, v] : g.edges())
            b.add_edge(u, v);
        b.set_labels(labels_from_json(j, g.order()));
        g = b.build();
    }
    return g;
}

inline nlohmann::json to_json(const Coloring & c) { return {{"k", c.k()}, {"colors", c.colors()}}; }

/// {"k": int, "colors": [0-based color per vertex]}; colors must already be
/// compact, with exactly k distinct values 0..k-1.
inline Coloring coloring_from_json(const nlohmann::json & j)
{
    if (! j.is_object() || ! j.contains("colors") || ! j["colors"].is_array())
        throw input_error("coloring JSON needs a \"colors\" array");
    std::vector<Color> colors;
    try {
        colors = j["colors"].get<std::vector<Color>>();
    }
    catch (const nlohmann::json::exception &) {
        throw input_error("coloring JSON colors must be integers");
    }
    Coloring c(colors);
    if (c.colors() != colors)
        throw input_error("coloring JSON colors are not compact 0..k-1");
    if (j.contains("k") && j["k"].get<std::size_t>() != c.k())
        throw input_error("coloring JSON k disagrees with the colors used");
    return c;
}

inline nlohmann::json read_json_file(const std::filesystem::path & path)
{
    std::ifstream in(path);
    if (! in)
        throw input_error("cannot read " + path.string());
    try {
        return nlohmann::json::parse(in);
    }
    catch (const nlohmann::json::exception & e) {
        throw input_error(path.string() + ": " + e.what());
    }
}

inline void write_json_file(const std::filesystem::path & path, const nlohmann::json & j)
{
    std::ofstream out(path);
    if (! out)
        throw input_error("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

} // namespace bfall::io
