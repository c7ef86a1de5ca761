#ifndef MEDIANFORGE_GRAPH_HPP
#define MEDIANFORGE_GRAPH_HPP

#include "medianforge/error.hpp"
#include "medianforge/index_set.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace medianforge {

using Vertex = std::uint32_t;

/// Undirected edge, normalized so that u < v in vertex order.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Ordered pair; in boundary results `from` lies outside the set and `to` inside.
struct DirectedEdge {
    Vertex from = 0;
    Vertex to = 0;
    friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
    friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

/// Outcome of the exhaustive median-triple check.
struct MedianCertificate {
    bool verdict = true;
    std::optional<std::array<Vertex, 3>> counterexample;
    /// Triple interval intersection of the counterexample (empty or size >= 2).
    std::vector<Vertex> intersection;
};

enum class EdgeOrder { Input, Lex };

/// Simple connected undirected graph with a fixed vertex order. Immutable
/// after construction; copies share storage and caches.
class FiniteGraph {
public:
    static constexpr std::size_t eager_distance_limit = 5000;

    FiniteGraph() = default;

    /// Builds and validates. Edge order is kept as given (after normalizing
    /// endpoints); vertex order is the order of `names`.
    static FiniteGraph from_edges(std::vector<std::string> names, std::vector<Edge> edges) {
        auto data = std::make_shared<Data>();
        data->names = std::move(names);
        const auto n = data->names.size();
        require(n > 0, Errc::EmptyInput, "graph has no vertices");
        for (std::size_t i = 0; i < n; ++i) {
            auto [it, fresh] = data->index.emplace(data->names[i], static_cast<Vertex>(i));
            require(fresh, Errc::NotSimple, "duplicate vertex name '" + data->names[i] + "'");
        }
        data->adjacency.resize(n);
        for (auto e : edges) {
            require(e.u < n && e.v < n, Errc::UnknownVertex, "edge endpoint out of range");
            require(e.u != e.v, Errc::NotSimple, "loop at '" + data->names[e.u] + "'");
            if (e.u > e.v) std::swap(e.u, e.v);
            auto [it, fresh] = data->edge_index.emplace(key(e.u, e.v), data->edges.size());
            require(fresh, Errc::NotSimple,
                    "duplicate edge " + data->names[e.u] + " " + data->names[e.v]);
            data->edges.push_back(e);
            data->adjacency[e.u].push_back(e.v);
            data->adjacency[e.v].push_back(e.u);
        }
        for (auto& nbrs : data->adjacency) std::sort(nbrs.begin(), nbrs.end());
        FiniteGraph g(std::move(data));
        require(g.is_connected(VertexSet::full(n)), Errc::Disconnected, "graph is not connected");
        g.data_->init_distances();
        return g;
    }

    std::size_t order() const { return data_->names.size(); }
    std::size_t size() const { return data_->edges.size(); }

    const std::string& name(Vertex v) const { return data_->names.at(v); }
    const std::vector<std::string>& names() const { return data_->names; }

    Vertex vertex(std::string_view name) const {
        auto it = data_->index.find(std::string(name));
        require(it != data_->index.end(), Errc::UnknownVertex, "unknown vertex '" + std::string(name) + "'");
        return it->second;
    }

    std::span<const Vertex> neighbors(Vertex v) const { return data_->adjacency.at(v); }
    std::size_t degree(Vertex v) const { return data_->adjacency.at(v).size(); }

    const std::vector<Edge>& edges() const { return data_->edges; }

    bool adjacent(Vertex a, Vertex b) const {
        if (a > b) std::swap(a, b);
        return data_->edge_index.contains(key(a, b));
    }

    /// Position of edge {a,b} in the edge order.
    std::optional<std::size_t> edge_index(Vertex a, Vertex b) const {
        if (a > b) std::swap(a, b);
        auto it = data_->edge_index.find(key(a, b));
        if (it == data_->edge_index.end()) return std::nullopt;
        return it->second;
    }

    void check_vertex(Vertex v) const {
        require(v < order(), Errc::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
    }

    std::uint32_t distance(Vertex x, Vertex y) const {
        check_vertex(x);
        check_vertex(y);
        return data_->distance(x, y);
    }

    VertexSet empty_set() const { return VertexSet(order()); }
    VertexSet all_vertices() const { return VertexSet::full(order()); }

    /// Connectivity of the induced subgraph G[A]; the empty set counts as connected.
    bool is_connected(const VertexSet& a) const {
        auto start = a.first();
        if (start >= a.universe()) return true;
        return reach(a, start).size() == a.size();
    }

    /// Vertices of A reachable from `start` inside G[A].
    VertexSet reach(const VertexSet& a, Vertex start) const {
        VertexSet seen(order());
        std::vector<Vertex> stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : neighbors(v)) {
                if (a.contains(w) && !seen.contains(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
            }
        }
        return seen;
    }

    /// Connected components of G[A], ordered by least vertex.
    std::vector<VertexSet> components(const VertexSet& a) const {
        std::vector<VertexSet> out;
        VertexSet rest = a;
        while (!rest.empty()) {
            auto c = reach(a, static_cast<Vertex>(rest.first()));
            rest -= c;
            out.push_back(std::move(c));
        }
        return out;
    }

    FiniteGraph with_edge_order(EdgeOrder order_kind) const {
        if (order_kind == EdgeOrder::Input) return *this;
        auto sorted = edges();
        std::sort(sorted.begin(), sorted.end());
        return from_edges(names(), std::move(sorted));
    }

    /// Cached median certificate slot; computed by geometry::check_median.
    template <typename F>
    const MedianCertificate& median_certificate(F&& compute) const {
        std::call_once(data_->median_once, [&] { data_->median = compute(*this); });
        return *data_->median;
    }

    bool same_as(const FiniteGraph& other) const {
        if (data_ == other.data_) return true;
        return data_ && other.data_ && data_->names == other.data_->names &&
               data_->edges == other.data_->edges;
    }

    VertexSet set_of(std::initializer_list<std::string_view> vertex_names) const {
        VertexSet s(order());
        for (auto nm : vertex_names) s.insert(vertex(nm));
        return s;
    }

    std::vector<std::string> names_of(const VertexSet& s) const {
        std::vector<std::string> out;
        s.for_each([&](std::size_t i) { out.push_back(data_->names[i]); });
        return out;
    }

private:
    static std::uint64_t key(Vertex a, Vertex b) {
        return (static_cast<std::uint64_t>(a) << 32) | b;
    }

    struct Data {
        std::vector<std::string> names;
        std::unordered_map<std::string, Vertex> index;
        std::vector<std::vector<Vertex>> adjacency;
        std::vector<Edge> edges;
        std::unordered_map<std::uint64_t, std::size_t> edge_index;

        // Eager all-pairs table for small graphs, memoized BFS rows otherwise.
        std::vector<std::uint16_t> table;
        mutable std::mutex row_mutex;
        mutable std::vector<std::shared_ptr<const std::vector<std::uint32_t>>> rows;

        std::once_flag median_once;
        std::optional<MedianCertificate> median;

        std::vector<std::uint32_t> bfs(Vertex s) const {
            std::vector<std::uint32_t> dist(names.size(), std::numeric_limits<std::uint32_t>::max());
            std::deque<Vertex> queue{s};
            dist[s] = 0;
            while (!queue.empty()) {
                auto v = queue.front();
                queue.pop_front();
                for (auto w : adjacency[v]) {
                    if (dist[w] == std::numeric_limits<std::uint32_t>::max()) {
                        dist[w] = dist[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
            return dist;
        }

        void init_distances() {
            const auto n = names.size();
            if (n <= eager_distance_limit) {
                table.resize(n * n);
                for (Vertex s = 0; s < n; ++s) {
                    auto row = bfs(s);
                    for (std::size_t t = 0; t < n; ++t) table[s * n + t] = static_cast<std::uint16_t>(row[t]);
                }
            } else {
                rows.resize(n);
            }
        }

        std::uint32_t distance(Vertex x, Vertex y) const {
            const auto n = names.size();
            if (!table.empty()) return table[static_cast<std::size_t>(x) * n + y];
            std::shared_ptr<const std::vector<std::uint32_t>> row;
            {
                std::lock_guard lock(row_mutex);
                row = rows[x];
            }
            if (!row) {
                auto fresh = std::make_shared<const std::vector<std::uint32_t>>(bfs(x));
                std::lock_guard lock(row_mutex);
                if (!rows[x]) rows[x] = fresh;
                row = rows[x];
            }
            return (*row)[y];
        }
    };

    explicit FiniteGraph(std::shared_ptr<Data> data) : data_(std::move(data)) {}

    std::shared_ptr<Data> data_;
};

// ---------------------------------------------------------------------------
// Parsing

namespace detail {
inline bool valid_token(std::string_view t) {
    if (t.empty()) return false;
    return std::all_of(t.begin(), t.end(), [](char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
               c == '_' || c == '.' || c == '-';
    });
}
} // namespace detail

/// Parses the edge-list format: one "u v" per line, '#' starts a comment,
/// blank lines ignored. Vertex order is first appearance.
inline FiniteGraph parse_graph(std::string_view text) {
    std::vector<std::string> names;
    std::unordered_map<std::string, Vertex> index;
    std::vector<Edge> edges;
    auto intern = [&](const std::string& token) {
        auto [it, fresh] = index.emplace(token, static_cast<Vertex>(names.size()));
        if (fresh) names.push_back(token);
        return it->second;
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::istringstream in{std::string(line)};
        std::vector<std::string> tokens;
        for (std::string tok; in >> tok;) tokens.push_back(tok);
        if (tokens.empty()) continue;
        require(tokens.size() == 2, Errc::ParseError,
                "line " + std::to_string(line_no) + ": expected two vertex tokens");
        for (const auto& tok : tokens) {
            require(detail::valid_token(tok), Errc::ParseError,
                    "line " + std::to_string(line_no) + ": bad vertex token '" + tok + "'");
        }
        require(tokens[0] != tokens[1], Errc::NotSimple,
                "line " + std::to_string(line_no) + ": loop at '" + tokens[0] + "'");
        auto a = intern(tokens[0]);
        auto b = intern(tokens[1]);
        edges.push_back(Edge{a, b});
    }
    require(!names.empty(), Errc::ParseError, "no edges in input");
    return FiniteGraph::from_edges(std::move(names), std::move(edges));
}

// ---------------------------------------------------------------------------
// Metric operations

inline std::uint32_t distance(const FiniteGraph& g, Vertex x, Vertex y) { return g.distance(x, y); }

/// Closed ball B_r(A).
inline VertexSet ball(const FiniteGraph& g, const VertexSet& a, std::uint32_t r) {
    require(!a.empty(), Errc::EmptyInput, "ball of an empty set");
    VertexSet out = a;
    std::vector<Vertex> frontier;
    a.for_each([&](std::size_t v) { frontier.push_back(static_cast<Vertex>(v)); });
    for (std::uint32_t step = 0; step < r && !frontier.empty(); ++step) {
        std::vector<Vertex> next;
        for (auto v : frontier) {
            for (auto w : g.neighbors(v)) {
                if (!out.contains(w)) {
                    out.insert(w);
                    next.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

inline VertexSet ball(const FiniteGraph& g, Vertex x, std::uint32_t r) {
    VertexSet a(g.order());
    a.insert(x);
    return ball(g, a, r);
}

/// Max pairwise ambient distance; 0 for sets with fewer than two vertices.
inline std::uint32_t diameter(const FiniteGraph& g, const VertexSet& a) {
    std::uint32_t best = 0;
    auto items = a.items();
    for (std::size_t i = 0; i < items.size(); ++i)
        for (std::size_t j = i + 1; j < items.size(); ++j)
            best = std::max(best, g.distance(static_cast<Vertex>(items[i]), static_cast<Vertex>(items[j])));
    return best;
}

/// min over a in A, b in B of d(a,b).
inline std::uint32_t set_distance(const FiniteGraph& g, const VertexSet& a, const VertexSet& b) {
    require(!a.empty() && !b.empty(), Errc::EmptyInput, "distance between empty sets");
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    a.for_each([&](std::size_t x) {
        b.for_each([&](std::size_t y) {
            best = std::min(best, g.distance(static_cast<Vertex>(x), static_cast<Vertex>(y)));
        });
    });
    return best;
}

// ---------------------------------------------------------------------------
// Boundaries

enum class BoundaryKind { InnerVertex, OuterVertex, InwardEdge, OutwardEdge, Vertex };

/// Vertices of A with a neighbour outside A.
inline VertexSet inner_vertex_boundary(const FiniteGraph& g, const VertexSet& a) {
    VertexSet out(g.order());
    a.for_each([&](std::size_t v) {
        for (auto w : g.neighbors(static_cast<Vertex>(v))) {
            if (!a.contains(w)) {
                out.insert(v);
                break;
            }
        }
    });
    return out;
}

inline VertexSet outer_vertex_boundary(const FiniteGraph& g, const VertexSet& a) {
    return inner_vertex_boundary(g, a.complement());
}

inline VertexSet vertex_boundary(const FiniteGraph& g, const VertexSet& a) {
    return inner_vertex_boundary(g, a) | outer_vertex_boundary(g, a);
}

/// Edges entering A: (outside vertex, inside vertex), sorted.
inline std::vector<DirectedEdge> inward_edge_boundary(const FiniteGraph& g, const VertexSet& a) {
    std::vector<DirectedEdge> out;
    for (const auto& e : g.edges()) {
        bool in_u = a.contains(e.u), in_v = a.contains(e.v);
        if (in_u && !in_v) out.push_back({e.v, e.u});
        else if (in_v && !in_u) out.push_back({e.u, e.v});
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<DirectedEdge> outward_edge_boundary(const FiniteGraph& g, const VertexSet& a) {
    return inward_edge_boundary(g, a.complement());
}

inline VertexSet boundary_vertices(const FiniteGraph& g, const VertexSet& a, BoundaryKind kind) {
    switch (kind) {
        case BoundaryKind::InnerVertex: return inner_vertex_boundary(g, a);
        case BoundaryKind::OuterVertex: return outer_vertex_boundary(g, a);
        case BoundaryKind::Vertex: return vertex_boundary(g, a);
        default: fail(Errc::BadParams, "edge boundary kind requested as vertex set");
    }
}

inline std::vector<DirectedEdge> boundary_edges(const FiniteGraph& g, const VertexSet& a, BoundaryKind kind) {
    switch (kind) {
        case BoundaryKind::InwardEdge: return inward_edge_boundary(g, a);
        case BoundaryKind::OutwardEdge: return outward_edge_boundary(g, a);
        default: fail(Errc::BadParams, "vertex boundary kind requested as edge set");
    }
}

// ---------------------------------------------------------------------------
// Intervals, convexity, cones

/// Betweenness x - z - y.
inline bool between(const FiniteGraph& g, Vertex x, Vertex z, Vertex y) {
    return g.distance(x, z) + g.distance(z, y) == g.distance(x, y);
}

inline VertexSet interval(const FiniteGraph& g, Vertex x, Vertex y) {
    g.check_vertex(x);
    g.check_vertex(y);
    VertexSet out(g.order());
    const auto dxy = g.distance(x, y);
    for (Vertex z = 0; z < g.order(); ++z)
        if (g.distance(x, z) + g.distance(z, y) == dxy) out.insert(z);
    return out;
}

inline bool is_convex(const FiniteGraph& g, const VertexSet& a) {
    auto items = a.items();
    for (std::size_t i = 0; i < items.size(); ++i)
        for (std::size_t j = i + 1; j < items.size(); ++j)
            if (!interval(g, static_cast<Vertex>(items[i]), static_cast<Vertex>(items[j])).is_subset_of(a))
                return false;
    return true;
}

/// Least convex superset: fixpoint of interval closure.
inline VertexSet convex_hull(const FiniteGraph& g, const VertexSet& a) {
    require(!a.empty(), Errc::EmptyInput, "convex hull of an empty set");
    VertexSet hull = a;
    for (bool grew = true; grew;) {
        grew = false;
        auto items = hull.items();
        for (std::size_t i = 0; i < items.size(); ++i) {
            for (std::size_t j = i + 1; j < items.size(); ++j) {
                auto iv = interval(g, static_cast<Vertex>(items[i]), static_cast<Vertex>(items[j]));
                if (!iv.is_subset_of(hull)) {
                    hull |= iv;
                    grew = true;
                }
            }
        }
    }
    return hull;
}

/// cone_x(y) = { z : x - y - z }.
inline VertexSet cone(const FiniteGraph& g, Vertex x, Vertex y) {
    g.check_vertex(x);
    g.check_vertex(y);
    require(x != y, Errc::EqualVertices, "cone needs distinct vertices");
    VertexSet out(g.order());
    for (Vertex z = 0; z < g.order(); ++z)
        if (between(g, x, y, z)) out.insert(z);
    return out;
}

} // namespace medianforge

#endif
