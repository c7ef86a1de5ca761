#ifndef MEDIANFORGE_ENDS_HPP
#define MEDIANFORGE_ENDS_HPP

#include "medianforge/cuts.hpp"
#include "medianforge/graph.hpp"
#include "medianforge/pocset.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace medianforge {

using Coord = std::vector<std::int64_t>;

/// Locally finite graph given by a neighbour oracle, explored from `root`.
struct GraphGenerator {
    std::string name;
    std::vector<std::int64_t> params;
    Coord root;
    std::function<std::vector<Coord>(const Coord&)> neighbors;

    std::string spec() const {
        std::string out = name;
        for (auto p : params) out += ":" + std::to_string(p);
        return out;
    }
};

inline std::string coord_name(const Coord& c) {
    std::string out = "v";
    for (auto x : c) out += "_" + std::to_string(x);
    return out;
}

inline GraphGenerator line_generator() {
    return {"line", {}, {0}, [](const Coord& c) { return std::vector<Coord>{{c[0] - 1}, {c[0] + 1}}; }};
}

inline GraphGenerator ladder_generator() {
    return {"ladder", {}, {0, 0}, [](const Coord& c) {
                return std::vector<Coord>{{c[0] - 1, c[1]}, {c[0] + 1, c[1]}, {c[0], 1 - c[1]}};
            }};
}

inline GraphGenerator grid2d_generator() {
    return {"grid2d", {}, {0, 0}, [](const Coord& c) {
                return std::vector<Coord>{
                    {c[0] - 1, c[1]}, {c[0] + 1, c[1]}, {c[0], c[1] - 1}, {c[0], c[1] + 1}};
            }};
}

namespace detail {
/// Words over child labels; the root has k children, every other vertex k - 1.
inline std::vector<Coord> tree_neighbors(const Coord& w, std::int64_t k) {
    std::vector<Coord> out;
    if (!w.empty()) out.emplace_back(w.begin(), w.end() - 1);
    const auto children = w.empty() ? k : k - 1;
    for (std::int64_t c = 0; c < children; ++c) {
        auto child = w;
        child.push_back(c);
        out.push_back(std::move(child));
    }
    return out;
}
} // namespace detail

inline GraphGenerator regular_tree_generator(std::int64_t k) {
    require(k >= 2, Errc::BadParams, "regular_tree needs degree >= 2");
    return {"regular_tree", {k}, {}, [k](const Coord& w) { return detail::tree_neighbors(w, k); }};
}

/// Tree vertex w is (0, w...); its glued cycle is (j, w...) for j < cycle_len.
inline GraphGenerator decorated_tree_generator(std::int64_t k, std::int64_t cycle_len) {
    require(k >= 2, Errc::BadParams, "decorated_tree needs degree >= 2");
    require(cycle_len >= 3, Errc::BadParams, "decorated_tree needs cycle length >= 3");
    return {"decorated_tree", {k, cycle_len}, {0}, [k, cycle_len](const Coord& c) {
                const Coord w(c.begin() + 1, c.end());
                const auto j = c[0];
                std::vector<Coord> out;
                if (j == 0) {
                    for (auto& t : detail::tree_neighbors(w, k)) {
                        Coord v{0};
                        v.insert(v.end(), t.begin(), t.end());
                        out.push_back(std::move(v));
                    }
                }
                for (auto step : {cycle_len - 1, std::int64_t{1}}) {
                    Coord v{(j + step) % cycle_len};
                    v.insert(v.end(), w.begin(), w.end());
                    out.push_back(std::move(v));
                }
                return out;
            }};
}

/// Parses "line", "ladder", "grid2d", "regular_tree:K", "decorated_tree:K:L".
inline GraphGenerator make_generator(std::string_view spec) {
    std::vector<std::string_view> parts;
    for (std::size_t start = 0;;) {
        auto colon = spec.find(':', start);
        parts.push_back(spec.substr(start, colon == std::string_view::npos ? spec.npos : colon - start));
        if (colon == std::string_view::npos) break;
        start = colon + 1;
    }
    std::vector<std::int64_t> nums;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(parts[i].data(), parts[i].data() + parts[i].size(), v);
        require(ec == std::errc{} && ptr == parts[i].data() + parts[i].size(), Errc::BadParams,
                "bad generator parameter '" + std::string(parts[i]) + "'");
        nums.push_back(v);
    }
    const auto name = parts[0];
    auto arity = [&](std::size_t n) {
        require(nums.size() == n, Errc::BadParams,
                std::string(name) + " takes " + std::to_string(n) + " parameter(s)");
    };
    if (name == "line") return arity(0), line_generator();
    if (name == "ladder") return arity(0), ladder_generator();
    if (name == "grid2d") return arity(0), grid2d_generator();
    if (name == "regular_tree") return arity(1), regular_tree_generator(nums[0]);
    if (name == "decorated_tree") return arity(2), decorated_tree_generator(nums[0], nums[1]);
    fail(Errc::BadParams, "unknown generator '" + std::string(spec) + "'");
}

// ---------------------------------------------------------------------------
// Truncation

struct BallTruncation {
    std::string spec;
    std::uint32_t radius = 0;
    FiniteGraph graph;
    std::vector<Coord> coords;
    VertexSet frontier;
    Vertex root = 0;

    std::optional<Vertex> find(const Coord& c) const {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), std::pair<Coord, Vertex>{c, 0});
        if (it == sorted.end() || it->first != c) return std::nullopt;
        return it->second;
    }

    std::vector<std::pair<Coord, Vertex>> sorted;
};

struct TruncateOptions {
    std::uint64_t budget = 1'000'000;
};

/// Induced subgraph on B_R(root), vertices in BFS discovery order.
inline BallTruncation truncate_ball(const GraphGenerator& gen, std::uint32_t radius, const TruncateOptions& opts = {}) {
    std::map<Coord, Vertex> index;
    std::vector<Coord> coords;
    std::vector<std::uint32_t> depth;
    index.emplace(gen.root, 0);
    coords.push_back(gen.root);
    depth.push_back(0);
    for (std::size_t head = 0; head < coords.size(); ++head) {
        if (depth[head] == radius) continue;
        for (auto& n : gen.neighbors(coords[head])) {
            if (index.count(n)) continue;
            require(coords.size() < opts.budget, Errc::BudgetExceeded,
                    "truncation exceeds " + std::to_string(opts.budget) + " vertices");
            index.emplace(n, static_cast<Vertex>(coords.size()));
            coords.push_back(std::move(n));
            depth.push_back(depth[head] + 1);
        }
    }
    std::vector<std::string> names;
    std::vector<Edge> edges;
    for (Vertex v = 0; v < coords.size(); ++v) {
        names.push_back(coord_name(coords[v]));
        for (auto& n : gen.neighbors(coords[v])) {
            auto it = index.find(n);
            if (it != index.end() && it->second > v) edges.push_back({v, it->second});
        }
    }
    BallTruncation t;
    t.spec = gen.spec();
    t.radius = radius;
    t.graph = FiniteGraph::from_edges(std::move(names), std::move(edges));
    t.frontier = t.graph.empty_set();
    for (Vertex v = 0; v < coords.size(); ++v)
        if (depth[v] == radius) t.frontier.insert(v);
    t.coords = std::move(coords);
    for (auto& [c, v] : index) t.sorted.emplace_back(c, v);
    return t;
}

inline BallTruncation truncate_ball(std::string_view spec, std::uint32_t radius, const TruncateOptions& opts = {}) {
    return truncate_ball(make_generator(spec), radius, opts);
}

/// Edge list plus a frontier annotation line, readable by parse_graph.
inline std::string export_truncation(const BallTruncation& t) {
    std::ostringstream out;
    out << "# " << t.spec << " R=" << t.radius << "\n";
    for (const auto& e : t.graph.edges()) out << t.graph.name(e.u) << " " << t.graph.name(e.v) << "\n";
    out << "#frontier";
    t.frontier.for_each([&](std::size_t v) { out << " " << t.graph.name(static_cast<Vertex>(v)); });
    out << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Ends

/// Components of { v : d(root, v) >= r } that meet the frontier.
inline std::vector<VertexSet> end_components(const BallTruncation& t, std::uint32_t r) {
    require(r < t.radius, Errc::RadiusOrder, "end estimate needs r < R");
    const auto& g = t.graph;
    auto outside = g.empty_set();
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.distance(t.root, v) >= r) outside.insert(v);
    std::vector<VertexSet> out;
    for (auto& c : g.components(outside))
        if (c.intersects(t.frontier)) out.push_back(std::move(c));
    return out;
}

inline std::size_t end_estimate(const BallTruncation& t, std::uint32_t r) { return end_components(t, r).size(); }

/// Geodesic inside A from its least frontier-reaching vertex to the frontier.
inline std::vector<Vertex> ray_prefix(const BallTruncation& t, const VertexSet& a) {
    const auto& g = t.graph;
    require(a.universe() == g.order(), Errc::GraphMismatch, "set over a different vertex universe");
    constexpr auto inf = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> to_frontier(g.order(), inf);
    std::deque<Vertex> queue;
    (a & t.frontier).for_each([&](std::size_t v) {
        to_frontier[v] = 0;
        queue.push_back(static_cast<Vertex>(v));
    });
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto w : g.neighbors(v)) {
            if (a.contains(w) && to_frontier[w] == inf) {
                to_frontier[w] = to_frontier[v] + 1;
                queue.push_back(w);
            }
        }
    }
    std::optional<Vertex> start;
    a.for_each([&](std::size_t v) {
        if (!start && to_frontier[v] != inf) start = static_cast<Vertex>(v);
    });
    require(start.has_value(), Errc::NoRay, "no component of the set reaches the frontier");
    std::vector<Vertex> path{*start};
    while (to_frontier[path.back()] != 0) {
        for (auto w : g.neighbors(path.back())) {
            if (a.contains(w) && to_frontier[w] + 1 == to_frontier[path.back()]) {
                path.push_back(w);
                break;
            }
        }
    }
    return path;
}

// ---------------------------------------------------------------------------
// Shrink and quasi-maps

/// A' = ~B_D(~A), so that B_D(A') lies inside A.
inline VertexSet shrink(const FiniteGraph& g, const VertexSet& a, std::uint32_t d) {
    require(a.universe() == g.order(), Errc::GraphMismatch, "set over a different vertex universe");
    const auto outside = a.complement();
    if (outside.empty() || d == 0) return a;
    auto out = ball(g, outside, d).complement();
    if (!out.empty())
        require(ball(g, out, d).is_subset_of(a), Errc::InvariantViolation, "ball of the shrunk set leaves A");
    return out;
}

/// Vertex maps between two truncations, with measured stretch S and
/// displacement D of backward after forward.
struct QuasiMap {
    std::string name;
    BallTruncation source;
    BallTruncation target;
    std::vector<Vertex> forward;
    std::vector<Vertex> backward;
    std::uint32_t stretch = 0;
    std::uint32_t displacement = 0;
};

inline QuasiMap make_quasi_map(std::string name, BallTruncation source, BallTruncation target,
                               const std::function<Coord(const Coord&)>& f,
                               const std::function<Coord(const Coord&)>& g) {
    QuasiMap q;
    q.name = std::move(name);
    for (const auto& c : source.coords) {
        auto v = target.find(f(c));
        require(v.has_value(), Errc::MapDomain, "forward image of " + coord_name(c) + " outside the target ball");
        q.forward.push_back(*v);
    }
    for (const auto& c : target.coords) {
        auto v = source.find(g(c));
        require(v.has_value(), Errc::MapDomain, "backward image of " + coord_name(c) + " outside the source ball");
        q.backward.push_back(*v);
    }
    for (const auto& e : source.graph.edges())
        q.stretch = std::max(q.stretch, target.graph.distance(q.forward[e.u], q.forward[e.v]));
    for (Vertex x = 0; x < source.graph.order(); ++x)
        q.displacement = std::max(q.displacement, source.graph.distance(x, q.backward[q.forward[x]]));
    q.source = std::move(source);
    q.target = std::move(target);
    return q;
}

inline QuasiMap identity_map(const BallTruncation& t) {
    auto id = [](const Coord& c) { return c; };
    return make_quasi_map("identity", t, t, id, id);
}

/// Collapses the two rails of the ladder onto the line.
inline QuasiMap ladder_to_line(std::uint32_t radius) {
    return make_quasi_map(
        "ladder_to_line", truncate_ball(ladder_generator(), radius), truncate_ball(line_generator(), radius),
        [](const Coord& c) { return Coord{c[0]}; }, [](const Coord& c) { return Coord{c[0], 0}; });
}

/// Collapses each glued cycle onto its tree vertex.
inline QuasiMap decorated_tree_to_tree(std::int64_t k, std::int64_t cycle_len, std::uint32_t radius) {
    return make_quasi_map(
        "decorated_tree_to_tree", truncate_ball(decorated_tree_generator(k, cycle_len), radius),
        truncate_ball(regular_tree_generator(k), radius), [](const Coord& c) { return Coord(c.begin() + 1, c.end()); },
        [](const Coord& w) {
            Coord c{0};
            c.insert(c.end(), w.begin(), w.end());
            return c;
        });
}

struct PullbackReport {
    VertexSet preimage;
    std::uint32_t preimage_boundary_diameter = 0;
    std::uint32_t boundary_diameter = 0;
    std::uint32_t image_boundary_diameter = 0;
    std::uint32_t bound = 0;
};

/// f^{-1}(H), with diam f(boundary of the preimage) <= diam(boundary of H) + 2S checked.
inline PullbackReport pullback_cut(const QuasiMap& q, const VertexSet& h) {
    const auto& x = q.source.graph;
    const auto& y = q.target.graph;
    require(h.universe() == y.order(), Errc::MapDomain, "half-space is not on the target ball");
    PullbackReport r;
    r.preimage = x.empty_set();
    for (Vertex v = 0; v < x.order(); ++v)
        if (h.contains(q.forward[v])) r.preimage.insert(v);
    const auto pb = vertex_boundary(x, r.preimage);
    auto image = y.empty_set();
    pb.for_each([&](std::size_t v) { image.insert(q.forward[v]); });
    r.preimage_boundary_diameter = diameter(x, pb);
    r.boundary_diameter = diameter(y, vertex_boundary(y, h));
    r.image_boundary_diameter = diameter(y, image);
    r.bound = r.boundary_diameter + 2 * q.stretch;
    require(r.image_boundary_diameter <= r.bound, Errc::InvariantViolation,
            "pulled-back boundary image exceeds diam + 2S");
    return r;
}

struct QuasiTreeCuts {
    Pocset pocset;
    /// Per member: boundary avoids the frontier.
    std::vector<bool> trusted;

    std::vector<VertexSet> trusted_sides() const {
        std::vector<VertexSet> out;
        for (std::size_t i = 1; i + 1 < pocset.size(); ++i)
            if (trusted[i]) out.push_back(pocset.side(i));
        return out;
    }
};

/// Pulls back both sides of every tree edge cut, connectedizes, and keeps
/// sides with diam(boundary) <= bound.
inline QuasiTreeCuts quasi_tree_cut_family(const BallTruncation& t, const QuasiMap& q, std::uint32_t bound) {
    require(q.source.graph.same_as(t.graph), Errc::MapDomain, "quasi-map is not defined on this truncation");
    const auto& tree = q.target.graph;
    require(tree.size() + 1 == tree.order(), Errc::BadParams, "quasi-map target is not a tree");
    const auto& g = t.graph;
    std::vector<VertexSet> kept;
    auto tree_cuts = tree_edge_cuts(tree);
    for (std::size_t i = 1; i + 1 < tree_cuts.size(); ++i) {
        auto pre = pullback_cut(q, tree_cuts.side(i)).preimage;
        if (pre.empty() || pre.is_full()) continue;
        for (auto& c : connectedize(g, pre))
            if (!c.empty() && !c.is_full() && diameter(g, vertex_boundary(g, c)) <= bound) kept.push_back(std::move(c));
    }
    QuasiTreeCuts out;
    out.pocset = Pocset::close(g, std::move(kept));
    for (std::size_t i = 0; i < out.pocset.size(); ++i)
        out.trusted.push_back(!vertex_boundary(g, out.pocset.side(i)).intersects(t.frontier));
    return out;
}

} // namespace medianforge

#endif
