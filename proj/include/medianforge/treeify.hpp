#ifndef MEDIANFORGE_TREEIFY_HPP
#define MEDIANFORGE_TREEIFY_HPP

#include "medianforge/cuts.hpp"
#include "medianforge/geometry.hpp"
#include "medianforge/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace medianforge {

/// Hyperplanes as nodes, adjacent when their vertex boundaries meet.
struct IntersectionGraph {
    FiniteGraph graph;
    std::vector<Hyperplane> nodes;
    std::vector<std::vector<std::size_t>> adjacency;

    std::size_t edge_count() const {
        std::size_t total = 0;
        for (const auto& a : adjacency) total += a.size();
        return total / 2;
    }
};

inline IntersectionGraph hyperplane_intersection_graph(const FiniteGraph& g) {
    IntersectionGraph ig;
    ig.graph = g;
    ig.nodes = hyperplanes(g);
    const auto k = ig.nodes.size();
    std::vector<VertexSet> boundary;
    for (const auto& hp : ig.nodes) boundary.push_back(vertex_boundary(g, hp.side_a));
    ig.adjacency.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            if (boundary[i].intersects(boundary[j])) {
                ig.adjacency[i].push_back(j);
                ig.adjacency[j].push_back(i);
            }
        }
    }
    return ig;
}

/// Partition of the hyperplanes (complement pairs) into nested classes.
struct ColourClasses {
    std::vector<Hyperplane> pairs;
    std::vector<std::vector<std::size_t>> classes;
    std::vector<std::size_t> colour_of;

    std::size_t colour_count() const { return classes.size(); }
};

/// First-fit colouring in `order` (default: node order, i.e. by least edge
/// index). Each class is checked to be nested.
inline ColourClasses greedy_colouring(const IntersectionGraph& ig, std::optional<std::vector<std::size_t>> order = {}) {
    const auto k = ig.nodes.size();
    std::vector<std::size_t> seq(k);
    if (order) {
        seq = *order;
        auto check = seq;
        std::sort(check.begin(), check.end());
        std::vector<std::size_t> expect(k);
        std::iota(expect.begin(), expect.end(), 0);
        require(check == expect, Errc::BadParams, "colouring order is not a permutation of the hyperplanes");
    } else {
        std::iota(seq.begin(), seq.end(), 0);
    }
    constexpr auto unset = static_cast<std::size_t>(-1);
    ColourClasses out;
    out.pairs = ig.nodes;
    out.colour_of.assign(k, unset);
    for (auto i : seq) {
        std::vector<bool> used(k + 1, false);
        for (auto j : ig.adjacency[i])
            if (out.colour_of[j] != unset) used[out.colour_of[j]] = true;
        std::size_t c = 0;
        while (used[c]) ++c;
        out.colour_of[i] = c;
        if (c >= out.classes.size()) out.classes.resize(c + 1);
        out.classes[c].push_back(i);
    }
    for (auto& cls : out.classes) {
        std::sort(cls.begin(), cls.end());
        for (std::size_t a = 0; a < cls.size(); ++a)
            for (std::size_t b = a + 1; b < cls.size(); ++b)
                require(sides_nested(out.pairs[cls[a]].side_a, out.pairs[cls[b]].side_a),
                        Errc::NestednessViolation, "colour class contains two non-nested half-spaces");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Spanning tree

struct TreeEdge {
    std::size_t edge;    // index into graph.edges()
    std::uint32_t stage; // colour at which the edge was added
};

struct SpanningTree {
    FiniteGraph graph;
    ColourClasses colouring;
    /// Sorted by stage, then edge index.
    std::vector<TreeEdge> edges;

    std::vector<std::size_t> stage_sizes() const {
        std::vector<std::size_t> out(colouring.colour_count(), 0);
        for (const auto& e : edges) ++out.at(e.stage);
        return out;
    }
};

/// Block labels for K_n = union of colour classes >= n, for n = 0..colours.
/// Labels are numbered by least vertex.
inline std::vector<std::vector<std::uint32_t>> k_blocks(const FiniteGraph& g, const ColourClasses& c) {
    const auto n = g.order();
    const auto colours = c.colour_count();
    std::vector<std::vector<std::uint32_t>> out(colours + 1, std::vector<std::uint32_t>(n, 0));
    for (std::size_t level = colours; level-- > 0;) {
        std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
        for (Vertex v = 0; v < n; ++v) {
            std::vector<std::uint32_t> sig{out[level + 1][v]};
            for (auto h : c.classes[level]) sig.push_back(c.pairs[h].side_a.contains(v) ? 1 : 0);
            auto [it, fresh] = ids.emplace(std::move(sig), static_cast<std::uint32_t>(ids.size()));
            out[level][v] = it->second;
        }
    }
    return out;
}

namespace detail {
inline std::vector<std::uint32_t> forest_components(std::size_t n, const std::vector<Edge>& edges) {
    UnionFind uf(n);
    for (const auto& e : edges) uf.unite(e.u, e.v);
    std::vector<std::uint32_t> label(n);
    std::map<std::size_t, std::uint32_t> ids;
    for (std::size_t v = 0; v < n; ++v)
        label[v] = ids.emplace(uf.find(v), static_cast<std::uint32_t>(ids.size())).first->second;
    return label;
}
} // namespace detail

inline SpanningTree canonical_spanning_tree(const FiniteGraph& g, const ColourClasses& colouring) {
    detail::require_median(g);
    SpanningTree t;
    t.graph = g;
    t.colouring = colouring;
    const auto blocks = k_blocks(g, colouring);
    const auto& edges = g.edges();
    for (std::size_t n = 0; n < colouring.colour_count(); ++n) {
        const auto& inner = blocks[n];
        const auto& outer = blocks[n + 1];
        std::size_t inner_count = *std::max_element(inner.begin(), inner.end()) + 1;
        detail::UnionFind joined(inner_count);
        std::vector<std::size_t> picked;
        for (auto h : colouring.classes[n]) {
            // (outer block) -> (pick, inner pair it connects)
            std::map<std::uint32_t, std::pair<std::size_t, std::pair<std::uint32_t, std::uint32_t>>> per_block;
            for (auto e : colouring.pairs[h].edges) {
                const auto [u, v] = edges[e];
                require(outer[u] == outer[v], Errc::InvariantViolation, "hyperplane edge leaves its K-block");
                auto link = std::minmax(inner[u], inner[v]);
                auto [it, fresh] = per_block.emplace(outer[u], std::pair{e, std::pair{link.first, link.second}});
                require(fresh || it->second.second == std::pair{link.first, link.second}, Errc::InvariantViolation,
                        "hyperplane connects more than one block pair inside a K-block");
            }
            for (const auto& [block, pick] : per_block) {
                const auto [a, b] = pick.second;
                require(joined.find(a) != joined.find(b), Errc::InvariantViolation, "block quotient is not a tree");
                joined.unite(a, b);
                picked.push_back(pick.first);
            }
        }
        std::sort(picked.begin(), picked.end());
        for (auto e : picked) t.edges.push_back({e, static_cast<std::uint32_t>(n)});
    }
    return t;
}

inline SpanningTree canonical_spanning_tree(const FiniteGraph& g) {
    return canonical_spanning_tree(g, greedy_colouring(hyperplane_intersection_graph(g)));
}

struct TreeReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Spanning-tree checks plus the stage invariant: edges of stage < n span
/// exactly the K_n-blocks.
inline TreeReport verify_spanning_tree(const FiniteGraph& g, const SpanningTree& t) {
    TreeReport r;
    const auto n = g.order();
    std::vector<Edge> es;
    for (const auto& te : t.edges) {
        if (te.edge >= g.size()) {
            r.violations.push_back("edge index " + std::to_string(te.edge) + " not in graph");
            continue;
        }
        es.push_back(g.edges()[te.edge]);
    }
    auto sorted = es;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) r.violations.push_back("repeated edge");
    detail::UnionFind uf(n);
    bool cycle = false;
    for (const auto& e : es) {
        if (uf.find(e.u) == uf.find(e.v)) cycle = true;
        uf.unite(e.u, e.v);
    }
    if (cycle) r.violations.push_back("cycle");
    std::size_t comps = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (uf.find(v) == v) ++comps;
    if (comps != 1) r.violations.push_back(std::to_string(comps) + " components");
    if (es.size() + 1 != n)
        r.violations.push_back("edge count " + std::to_string(es.size()) + ", expected " + std::to_string(n - 1));
    if (!r.ok()) return r;

    const auto blocks = k_blocks(g, t.colouring);
    for (std::size_t stage = 0; stage <= t.colouring.colour_count(); ++stage) {
        std::vector<Edge> below;
        for (const auto& te : t.edges)
            if (te.stage < stage) below.push_back(g.edges()[te.edge]);
        if (detail::forest_components(n, below) != blocks[stage])
            r.violations.push_back("stage " + std::to_string(stage) + ": forest components differ from K-blocks");
    }
    return r;
}

} // namespace medianforge

#endif
