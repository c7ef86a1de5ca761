#ifndef MEDIANFORGE_IO_HPP
#define MEDIANFORGE_IO_HPP

#include "medianforge/cuts.hpp"
#include "medianforge/dual.hpp"
#include "medianforge/geometry.hpp"
#include "medianforge/graph.hpp"
#include "medianforge/pocset.hpp"
#include "medianforge/treeify.hpp"

#include "json.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace medianforge {

using Json = nlohmann::ordered_json;

inline constexpr const char* schema_version = "medianforge/1";

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), Errc::IoError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), Errc::IoError, "cannot write '" + path + "'");
    out << text;
}

inline FiniteGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

inline Json to_json(const FiniteGraph& g) {
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back({g.name(e.u), g.name(e.v)});
    return {{"vertices", g.names()}, {"edges", std::move(edges)}};
}

inline Json side_json(const FiniteGraph& g, const VertexSet& s) { return g.names_of(s); }

/// Non-trivial members in member order; the trivial pair is implicit.
inline Json to_json(const Pocset& p) {
    Json sides = Json::array();
    for (std::size_t i = 1; i + 1 < p.size(); ++i) sides.push_back(side_json(p.graph(), p.side(i)));
    return {{"pairs", p.pair_count()}, {"sides", std::move(sides)}};
}

/// Reads {"sides": [[names...], ...]} against g and validates it as a pocset.
inline Pocset pocset_from_json(const FiniteGraph& g, const Json& j, bool require_cuts) {
    require(j.is_object() && j.contains("sides") && j["sides"].is_array(), Errc::ParseError,
            "pocset JSON needs a 'sides' array");
    std::vector<VertexSet> family{g.empty_set(), g.all_vertices()};
    for (const auto& side : j["sides"]) {
        require(side.is_array(), Errc::ParseError, "each side must be an array of vertex names");
        auto s = g.empty_set();
        for (const auto& name : side) {
            require(name.is_string(), Errc::ParseError, "vertex names must be strings");
            s.insert(g.vertex(name.get<std::string>()));
        }
        family.push_back(std::move(s));
    }
    return pocset_from_family(g, std::move(family), require_cuts);
}

inline Json to_json(const DualMedianGraph& d) {
    const auto& p = d.origin;
    Json vertices = Json::array();
    for (const auto& u : d.vertices) {
        Json key = Json::array();
        for (auto i : u.key()) key.push_back(side_json(p.graph(), p.side(i)));
        vertices.push_back(std::move(key));
    }
    Json edges = Json::array();
    for (const auto& e : d.graph.edges()) edges.push_back({e.u, e.v});
    return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

inline Json to_json(const FiniteGraph& g, const std::vector<Hyperplane>& hps) {
    Json out = Json::array();
    for (const auto& hp : hps) {
        Json edges = Json::array();
        for (auto e : hp.edges) edges.push_back({g.name(g.edges()[e].u), g.name(g.edges()[e].v)});
        out.push_back({{"edges", std::move(edges)},
                       {"side_a", side_json(g, hp.side_a)},
                       {"side_b", side_json(g, hp.side_b)}});
    }
    return out;
}

inline Json to_json(const ColourClasses& c) {
    return {{"colours", c.colour_count()}, {"classes", c.classes}, {"colour_of", c.colour_of}};
}

inline Json to_json(const SpanningTree& t) {
    const auto& g = t.graph;
    Json edges = Json::array();
    for (const auto& te : t.edges) {
        const auto e = g.edges()[te.edge];
        edges.push_back({{"u", g.name(e.u)}, {"v", g.name(e.v)}, {"stage", te.stage}});
    }
    return {{"edges", std::move(edges)}, {"stage_sizes", t.stage_sizes()}};
}

inline Json to_json(const FiniteGraph& g, const MedianCertificate& c) {
    Json out{{"median", c.verdict}};
    if (c.counterexample) {
        Json triple = Json::array();
        for (auto v : *c.counterexample) triple.push_back(g.name(v));
        Json hits = Json::array();
        for (auto v : c.intersection) hits.push_back(g.name(v));
        out["counterexample"] = std::move(triple);
        out["intersection"] = std::move(hits);
    }
    return out;
}

inline Json to_json(const DensityReport& r) {
    return {{"max_block_size", r.max_block_size},
            {"max_successor_count", r.max_successor_count},
            {"block_sizes", r.block_sizes},
            {"successor_counts", r.successor_counts}};
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// DOT

namespace detail {
inline std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

inline constexpr std::array<const char*, 8> palette{"red",    "blue",  "darkgreen", "orange",
                                                    "purple", "brown", "magenta",   "cyan"};
} // namespace detail

inline std::string to_dot(const FiniteGraph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (const auto& name : g.names()) out << "  " << detail::quoted(name) << ";\n";
    for (const auto& e : g.edges())
        out << "  " << detail::quoted(g.name(e.u)) << " -- " << detail::quoted(g.name(e.v)) << ";\n";
    out << "}\n";
    return out.str();
}

inline std::string to_dot(const DualMedianGraph& d) {
    const auto& p = d.origin;
    std::ostringstream out;
    out << "graph dual {\n";
    for (std::size_t i = 0; i < d.vertices.size(); ++i) {
        std::string label;
        for (auto m : d.vertices[i].key()) label += describe(p.graph(), p.side(m));
        out << "  " << detail::quoted(d.graph.name(static_cast<Vertex>(i)))
            << " [label=" << detail::quoted(label.empty() ? "-" : label) << "];\n";
    }
    for (const auto& e : d.graph.edges())
        out << "  " << detail::quoted(d.graph.name(e.u)) << " -- " << detail::quoted(d.graph.name(e.v)) << ";\n";
    out << "}\n";
    return out.str();
}

inline std::string to_dot(const FiniteGraph& g, const std::vector<Hyperplane>& hps) {
    std::vector<std::size_t> cls(g.size(), 0);
    for (std::size_t h = 0; h < hps.size(); ++h)
        for (auto e : hps[h].edges) cls[e] = h;
    std::ostringstream out;
    out << "graph hyperplanes {\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto e = g.edges()[i];
        out << "  " << detail::quoted(g.name(e.u)) << " -- " << detail::quoted(g.name(e.v)) << " [color="
            << detail::palette[cls[i] % detail::palette.size()] << ", label=\"h" << cls[i] << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

inline std::string to_dot(const SpanningTree& t) {
    const auto& g = t.graph;
    std::vector<int> stage(g.size(), -1);
    for (const auto& te : t.edges) stage[te.edge] = static_cast<int>(te.stage);
    std::ostringstream out;
    out << "graph tree {\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto e = g.edges()[i];
        out << "  " << detail::quoted(g.name(e.u)) << " -- " << detail::quoted(g.name(e.v));
        if (stage[i] < 0)
            out << " [style=dashed, color=gray];\n";
        else
            out << " [penwidth=3, label=\"" << stage[i] << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace medianforge

#endif
