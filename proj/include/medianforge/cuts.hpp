#ifndef MEDIANFORGE_CUTS_HPP
#define MEDIANFORGE_CUTS_HPP

#include "medianforge/graph.hpp"
#include "medianforge/pocset.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace medianforge {

// ---------------------------------------------------------------------------
// Cut enumeration

enum class CutStrategy { Auto, Exhaustive, Anchored };

struct CutOptions {
    std::uint64_t budget = 1'000'000;
    CutStrategy strategy = CutStrategy::Auto;
};

/// Largest vertex count for which the bitmask enumeration is available.
inline constexpr std::size_t exhaustive_limit = 22;

/// Connected, co-connected, non-trivial, and diam(vertex boundary) <= radius.
inline bool is_bounded_cut(const FiniteGraph& g, const VertexSet& h, std::uint32_t radius) {
    if (h.empty() || h.is_full()) return false;
    if (!g.is_connected(h) || !g.is_connected(h.complement())) return false;
    return diameter(g, vertex_boundary(g, h)) <= radius;
}

namespace detail {

inline std::uint64_t saturating_pow2(std::size_t k) {
    return k >= 63 ? std::numeric_limits<std::uint64_t>::max() : (std::uint64_t{1} << k);
}

inline std::uint64_t anchored_cost(const FiniteGraph& g, std::uint32_t radius) {
    std::uint64_t total = 0;
    for (Vertex x = 0; x < g.order(); ++x) {
        auto c = saturating_pow2(ball(g, x, radius).size() - 1);
        total = (total > std::numeric_limits<std::uint64_t>::max() - c) ? std::numeric_limits<std::uint64_t>::max()
                                                                        : total + c;
    }
    return total;
}

inline std::vector<VertexSet> exhaustive_cuts(const FiniteGraph& g, std::uint32_t radius) {
    const auto n = g.order();
    using Mask = std::uint32_t;
    std::vector<Mask> adj(n, 0), reach_r(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        for (auto w : g.neighbors(v)) adj[v] |= Mask{1} << w;
        for (Vertex w = 0; w < n; ++w)
            if (g.distance(v, w) <= radius) reach_r[v] |= Mask{1} << w;
    }
    const Mask full = n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
    auto neighbourhood = [&](Mask s) {
        Mask out = 0;
        for (Mask t = s; t; t &= t - 1) out |= adj[std::countr_zero(t)];
        return out;
    };
    auto connected = [&](Mask s) {
        Mask seen = s & (~s + 1);
        for (;;) {
            Mask grown = (seen | neighbourhood(seen)) & s;
            if (grown == seen) return seen == s;
            seen = grown;
        }
    };

    std::vector<VertexSet> out;
    auto to_set = [&](Mask m) {
        VertexSet s(n);
        for (Mask t = m; t; t &= t - 1) s.insert(static_cast<std::size_t>(std::countr_zero(t)));
        return s;
    };
    // Every candidate contains vertex 0; complements are added alongside.
    for (Mask m = 1; m < full; m += 2) {
        const Mask rest = full & ~m;
        if (!connected(m) || !connected(rest)) continue;
        const Mask bd = (m & neighbourhood(rest)) | (rest & neighbourhood(m));
        bool ok = true;
        for (Mask t = bd; t && ok; t &= t - 1)
            if (bd & ~reach_r[std::countr_zero(t)]) ok = false;
        if (!ok) continue;
        out.push_back(to_set(m));
        out.push_back(to_set(rest));
    }
    return out;
}

inline std::vector<VertexSet> anchored_cuts(const FiniteGraph& g, std::uint32_t radius) {
    const auto n = g.order();
    std::unordered_set<VertexSet> found;
    for (Vertex x = 0; x < n; ++x) {
        const auto b = ball(g, x, radius);
        std::vector<Vertex> others;
        b.for_each([&](std::size_t v) {
            if (v != x) others.push_back(static_cast<Vertex>(v));
        });
        // Outside the ball no vertex is on the boundary, so each component of
        // G - B sits wholly on the side of the ball vertices it touches.
        const auto outside = g.components(b.complement());
        std::vector<std::vector<Vertex>> attach(outside.size());
        for (std::size_t c = 0; c < outside.size(); ++c) {
            VertexSet touch(n);
            outside[c].for_each([&](std::size_t v) {
                for (auto w : g.neighbors(static_cast<Vertex>(v)))
                    if (b.contains(w)) touch.insert(w);
            });
            touch.for_each([&](std::size_t v) { attach[c].push_back(static_cast<Vertex>(v)); });
        }
        const std::uint64_t labelings = saturating_pow2(others.size());
        for (std::uint64_t mask = 0; mask < labelings; ++mask) {
            VertexSet h(n);
            h.insert(x);
            for (std::size_t i = 0; i < others.size(); ++i)
                if (mask >> i & 1) h.insert(others[i]);
            bool consistent = true;
            for (std::size_t c = 0; c < outside.size() && consistent; ++c) {
                if (attach[c].empty()) continue;
                const bool side = h.contains(attach[c].front());
                for (auto a : attach[c])
                    if (h.contains(a) != side) consistent = false;
                if (consistent && side) h |= outside[c];
            }
            if (!consistent || h.is_full()) continue;
            if (found.contains(h)) continue;
            if (!is_bounded_cut(g, h, radius)) continue;
            found.insert(h.complement());
            found.insert(std::move(h));
        }
    }
    return {found.begin(), found.end()};
}

} // namespace detail

/// All cuts H (H and ~H connected) with diam(boundary) <= radius, plus the
/// trivial pair, in canonical member order.
inline Pocset enumerate_cuts(const FiniteGraph& g, std::uint32_t radius, const CutOptions& opts = {}) {
    const auto n = g.order();
    const bool exhaustive_ok = n <= exhaustive_limit;
    const std::uint64_t exhaustive_cost = exhaustive_ok ? detail::saturating_pow2(n - 1)
                                                        : std::numeric_limits<std::uint64_t>::max();
    auto strategy = opts.strategy;
    std::uint64_t anchored_cost = 0;
    if (strategy != CutStrategy::Exhaustive) anchored_cost = detail::anchored_cost(g, radius);
    if (strategy == CutStrategy::Auto)
        strategy = exhaustive_ok && exhaustive_cost <= anchored_cost ? CutStrategy::Exhaustive : CutStrategy::Anchored;
    if (strategy == CutStrategy::Exhaustive)
        require(exhaustive_ok, Errc::BadParams, "exhaustive enumeration needs at most 22 vertices");

    const auto cost = strategy == CutStrategy::Exhaustive ? exhaustive_cost : anchored_cost;
    require(cost <= opts.budget, Errc::BudgetExceeded,
            "cut enumeration needs " + std::to_string(cost) + " candidate subsets, budget is " +
                std::to_string(opts.budget));

    auto sides = strategy == CutStrategy::Exhaustive ? detail::exhaustive_cuts(g, radius)
                                                     : detail::anchored_cuts(g, radius);
    return Pocset::close(g, std::move(sides));
}

/// All edge cuts of a tree: for every edge, the two components of T - e.
inline Pocset tree_edge_cuts(const FiniteGraph& tree) {
    require(tree.size() + 1 == tree.order(), Errc::BadParams, "graph is not a tree");
    std::vector<VertexSet> sides;
    for (const auto& e : tree.edges()) {
        // Side of e.u with the edge removed: BFS avoiding the edge.
        VertexSet seen(tree.order());
        std::vector<Vertex> stack{e.u};
        seen.insert(e.u);
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : tree.neighbors(v)) {
                if ((v == e.u && w == e.v) || seen.contains(w)) continue;
                seen.insert(w);
                stack.push_back(w);
            }
        }
        sides.push_back(std::move(seen));
    }
    return Pocset::close(tree, std::move(sides));
}

// ---------------------------------------------------------------------------
// Nestedness

inline bool sides_nested(const VertexSet& h, const VertexSet& k) {
    const auto nh = h.complement(), nk = k.complement();
    return !h.intersects(k) || !h.intersects(nk) || !nh.intersects(k) || !nh.intersects(nk);
}

inline bool is_nested(const HalfSpace& h, const HalfSpace& k) {
    require(h.graph.same_as(k.graph), Errc::GraphMismatch, "half-spaces over different graphs");
    return sides_nested(h.side, k.side);
}

/// Members not nested with member i, in member order.
inline std::vector<std::size_t> non_nested_members(const Pocset& p, std::size_t i) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < p.size(); ++j)
        if (j != i && !sides_nested(p.side(i), p.side(j))) out.push_back(j);
    return out;
}

inline std::vector<HalfSpace> non_nested_neighbors(const Pocset& p, const HalfSpace& h) {
    std::vector<HalfSpace> out;
    for (auto j : non_nested_members(p, p.index_of(h))) out.push_back(p.member(j));
    return out;
}

inline bool is_nested_family(std::span<const VertexSet> sides) {
    for (std::size_t i = 0; i < sides.size(); ++i)
        for (std::size_t j = i + 1; j < sides.size(); ++j)
            if (!sides_nested(sides[i], sides[j])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Separation profile

struct SeparationProfile {
    std::size_t vertex_count = 0;
    /// Row-major: separators[x * n + y] = |{H : x in H, y not in H}|.
    std::vector<std::uint32_t> separators;
    std::vector<std::uint32_t> boundary_incidence;
    std::uint32_t max_separators = 0;
    std::uint32_t max_incidence = 0;

    std::uint32_t count(Vertex x, Vertex y) const { return separators.at(x * vertex_count + y); }
};

inline SeparationProfile separation_profile(const Pocset& p) {
    const auto& g = p.graph();
    const auto n = g.order();
    SeparationProfile out;
    out.vertex_count = n;
    out.separators.assign(n * n, 0);
    out.boundary_incidence.assign(n, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& h = p.side(i);
        if (p.is_trivial(i)) continue;
        h.for_each([&](std::size_t x) {
            for (std::size_t y = 0; y < n; ++y)
                if (!h.contains(y)) ++out.separators[x * n + y];
        });
        vertex_boundary(g, h).for_each([&](std::size_t v) { ++out.boundary_incidence[v]; });
    }
    for (auto c : out.separators) out.max_separators = std::max(out.max_separators, c);
    for (auto c : out.boundary_incidence) out.max_incidence = std::max(out.max_incidence, c);
    return out;
}

// ---------------------------------------------------------------------------
// Blocks, successors, density

struct BlockPartition {
    /// Blocks ordered by least vertex.
    std::vector<VertexSet> blocks;
    std::vector<std::size_t> block_of;

    std::size_t max_block_size() const {
        std::size_t best = 0;
        for (const auto& b : blocks) best = std::max(best, b.size());
        return best;
    }
};

/// Partition of the vertices by membership signature over `sides`.
inline BlockPartition partition_by(const FiniteGraph& g, std::span<const VertexSet> sides) {
    const auto n = g.order();
    std::map<std::vector<bool>, std::size_t> index;
    BlockPartition out;
    out.block_of.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        std::vector<bool> signature(sides.size());
        for (std::size_t i = 0; i < sides.size(); ++i) signature[i] = sides[i].contains(v);
        auto [it, fresh] = index.emplace(std::move(signature), out.blocks.size());
        if (fresh) out.blocks.emplace_back(n);
        out.blocks[it->second].insert(v);
        out.block_of[v] = it->second;
    }
    return out;
}

inline BlockPartition h_blocks(const Pocset& p) { return partition_by(p.graph(), p.sides()); }

/// Immediate non-trivial successors of member i, in member order.
inline std::vector<std::size_t> successor_members(const Pocset& p, std::size_t i) {
    require(i < p.size(), Errc::NotMember, "member index out of range");
    require(!p.is_trivial(i), Errc::TrivialInput, "successors of a trivial member");
    auto above = p.supersets(i);
    above.erase(i);
    above.erase(p.full_member());
    std::vector<std::size_t> out;
    above.for_each([&](std::size_t k) {
        auto strictly_between = above & p.subsets(k);
        strictly_between.erase(k);
        if (strictly_between.empty()) out.push_back(k);
    });
    return out;
}

inline std::vector<HalfSpace> successors(const Pocset& p, const HalfSpace& h) {
    std::vector<HalfSpace> out;
    for (auto k : successor_members(p, p.index_of(h))) out.push_back(p.member(k));
    return out;
}

struct DensityReport {
    std::size_t max_block_size = 0;
    std::size_t max_successor_count = 0;
    std::vector<std::size_t> block_sizes;
    /// Indexed by member; trivial members report 0.
    std::vector<std::size_t> successor_counts;
};

inline DensityReport density_criterion(const Pocset& p) {
    DensityReport out;
    for (const auto& b : h_blocks(p).blocks) {
        out.block_sizes.push_back(b.size());
        out.max_block_size = std::max(out.max_block_size, b.size());
    }
    out.successor_counts.assign(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.is_trivial(i)) continue;
        out.successor_counts[i] = successor_members(p, i).size();
        out.max_successor_count = std::max(out.max_successor_count, out.successor_counts[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Connected witnesses

/// For each component H0 of H and each component C of ~H0, the half-space
/// ~C. Results are connected, co-connected, deduplicated, in discovery order.
inline std::vector<VertexSet> connectedize(const FiniteGraph& g, const VertexSet& h) {
    require(!h.empty() && !h.is_full(), Errc::TrivialInput, "connectedize of a trivial half-space");
    std::vector<VertexSet> out;
    std::unordered_set<VertexSet> seen;
    for (const auto& h0 : g.components(h)) {
        for (const auto& c : g.components(h0.complement())) {
            auto result = c.complement();
            if (seen.insert(result).second) out.push_back(std::move(result));
        }
    }
    return out;
}

inline std::vector<HalfSpace> connectedize(const HalfSpace& h) {
    std::vector<HalfSpace> out;
    for (auto& s : connectedize(h.graph, h.side)) out.push_back({h.graph, std::move(s)});
    return out;
}

// ---------------------------------------------------------------------------
// Validation

enum class ViolationKind { WrongUniverse, MissingComplement, MissingTrivial, DisconnectedSide };

struct Violation {
    ViolationKind kind;
    std::string detail;
};

inline std::string describe(const FiniteGraph& g, const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](std::size_t v) {
        if (!first) out += ",";
        out += g.name(static_cast<Vertex>(v));
        first = false;
    });
    return out + "}";
}

/// Checks a raw family for complement closure, the trivial pair, and (when
/// asked) connectivity of both sides of every non-trivial member.
inline std::vector<Violation> validate_pocset(const FiniteGraph& g, std::span<const VertexSet> family,
                                              bool require_cuts) {
    std::vector<Violation> out;
    std::unordered_set<VertexSet> members;
    for (const auto& s : family) {
        if (s.universe() != g.order()) {
            out.push_back({ViolationKind::WrongUniverse, "member over a different vertex universe"});
            return out;
        }
        members.insert(s);
    }
    if (!members.contains(g.empty_set()) || !members.contains(g.all_vertices()))
        out.push_back({ViolationKind::MissingTrivial, "trivial pair (empty set, all vertices) missing"});
    std::unordered_set<VertexSet> reported;
    for (const auto& s : family) {
        auto c = s.complement();
        if (!members.contains(c) && reported.insert(c).second)
            out.push_back({ViolationKind::MissingComplement, "complement " + describe(g, c) + " of " +
                                                                 describe(g, s) + " missing"});
        if (require_cuts && !s.empty() && !s.is_full()) {
            if (!g.is_connected(s))
                out.push_back({ViolationKind::DisconnectedSide, describe(g, s) + " is disconnected"});
        }
    }
    return out;
}

inline std::vector<Violation> validate_pocset(const Pocset& p, bool require_cuts) {
    return validate_pocset(p.graph(), p.sides(), require_cuts);
}

/// Builds a pocset from a family that must already be valid.
inline Pocset pocset_from_family(const FiniteGraph& g, std::vector<VertexSet> family, bool require_cuts) {
    auto violations = validate_pocset(g, family, require_cuts);
    if (!violations.empty()) {
        std::string msg;
        for (const auto& v : violations) msg += (msg.empty() ? "" : "; ") + v.detail;
        fail(Errc::InvalidPocset, msg);
    }
    return Pocset::close(g, std::move(family));
}

} // namespace medianforge

#endif
