#ifndef MEDIANFORGE_DUAL_HPP
#define MEDIANFORGE_DUAL_HPP

#include "medianforge/cuts.hpp"
#include "medianforge/graph.hpp"
#include "medianforge/pocset.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace medianforge {

/// An upward-closed choice of exactly one member from every complement pair.
/// Every orientation of a finite pocset is clopen, so no topology is modelled.
class Orientation {
public:
    Orientation() = default;
    Orientation(Pocset pocset, MemberSet chosen) : pocset_(std::move(pocset)), chosen_(std::move(chosen)) {}

    const Pocset& pocset() const { return pocset_; }
    const MemberSet& chosen() const { return chosen_; }
    bool contains(std::size_t member) const { return chosen_.contains(member); }

    /// Minimal non-trivial chosen members, in member order. This is the
    /// canonical key: its upward closure regenerates the orientation.
    std::vector<std::size_t> key() const {
        std::vector<std::size_t> out;
        chosen_.for_each([&](std::size_t i) {
            if (pocset_.is_trivial(i)) return;
            auto below = pocset_.subsets(i) & chosen_;
            below.erase(i);
            if (below.empty()) out.push_back(i);
        });
        return out;
    }

    friend bool operator==(const Orientation& a, const Orientation& b) {
        return a.pocset_.same_as(b.pocset_) && a.chosen_ == b.chosen_;
    }

private:
    Pocset pocset_;
    MemberSet chosen_;
};

/// Exactly one of each pair, whole set chosen, upward closed.
inline bool is_orientation(const Pocset& p, const MemberSet& chosen) {
    if (chosen.universe() != p.size()) return false;
    if (!chosen.contains(p.full_member()) || chosen.contains(p.empty_member())) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (chosen.contains(i) == chosen.contains(p.complement(i))) return false;
        if (chosen.contains(i) && !p.supersets(i).is_subset_of(chosen)) return false;
    }
    return true;
}

inline void check_orientation(const Orientation& u) {
    require(is_orientation(u.pocset(), u.chosen()), Errc::InvalidOrientation, "not an orientation of its pocset");
}

inline Orientation principal_orientation(const Pocset& p, Vertex x) {
    p.graph().check_vertex(x);
    MemberSet chosen(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.side(i).contains(x)) chosen.insert(i);
    return {p, std::move(chosen)};
}

inline std::vector<HalfSpace> minimal_elements(const Orientation& u) {
    std::vector<HalfSpace> out;
    for (auto i : u.key()) out.push_back(u.pocset().member(i));
    return out;
}

/// Rebuilds the orientation whose minimal set is `antichain` (member indices).
inline Orientation decode_antichain(const Pocset& p, const std::vector<std::size_t>& antichain) {
    for (auto a : antichain) {
        require(a < p.size(), Errc::NotMember, "member index out of range");
        require(!p.is_trivial(a), Errc::NotAntichain, "antichain contains a trivial member");
    }
    for (std::size_t i = 0; i < antichain.size(); ++i)
        for (std::size_t j = 0; j < antichain.size(); ++j)
            if (i != j && p.supersets(antichain[i]).contains(antichain[j]))
                fail(Errc::NotAntichain, "members " + describe(p.graph(), p.side(antichain[i])) + " and " +
                                             describe(p.graph(), p.side(antichain[j])) + " are comparable");
    MemberSet chosen(p.size());
    chosen.insert(p.full_member());
    for (auto a : antichain) chosen |= p.supersets(a);
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto c = p.complement(i);
        if (chosen.contains(i) && chosen.contains(c))
            fail(Errc::Inconsistent, "both " + describe(p.graph(), p.side(i)) + " and its complement are implied");
        if (!chosen.contains(i) && !chosen.contains(c))
            fail(Errc::Incomplete, "neither side of " + describe(p.graph(), p.side(i)) + " is implied");
    }
    return {p, std::move(chosen)};
}

inline Orientation decode_antichain(const Pocset& p, const std::vector<HalfSpace>& antichain) {
    std::vector<std::size_t> idx;
    for (const auto& h : antichain) idx.push_back(p.index_of(h));
    return decode_antichain(p, idx);
}

/// U with the pair {H, ~H} swapped, for H chosen.
inline Orientation flip(const Orientation& u, std::size_t member) {
    auto chosen = u.chosen();
    chosen.erase(member);
    chosen.insert(u.pocset().complement(member));
    return {u.pocset(), std::move(chosen)};
}

/// One neighbour per minimal non-trivial chosen member, in member order.
inline std::vector<Orientation> orientation_neighbors(const Orientation& u) {
    check_orientation(u);
    std::vector<Orientation> out;
    for (auto h : u.key()) {
        auto v = flip(u, h);
        require(is_orientation(v.pocset(), v.chosen()), Errc::InvariantViolation,
                "flipping a minimal member broke upward closure");
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end(), [](const Orientation& a, const Orientation& b) { return a.key() < b.key(); });
    return out;
}

inline std::uint32_t dual_distance(const Orientation& u, const Orientation& v) {
    require(u.pocset().same_as(v.pocset()), Errc::PocsetMismatch, "orientations of different pocsets");
    return static_cast<std::uint32_t>((u.chosen() ^ v.chosen()).size() / 2);
}

/// Member-wise majority vote.
inline Orientation dual_median(const Orientation& u, const Orientation& v, const Orientation& w) {
    require(u.pocset().same_as(v.pocset()) && u.pocset().same_as(w.pocset()), Errc::PocsetMismatch,
            "orientations of different pocsets");
    auto chosen = (u.chosen() & v.chosen()) | (v.chosen() & w.chosen()) | (u.chosen() & w.chosen());
    return {u.pocset(), std::move(chosen)};
}

// ---------------------------------------------------------------------------
// Dual graph

struct DualOptions {
    std::uint64_t budget = 100'000;
};

/// Graph on orientations with single-flip edges. Vertices are sorted by
/// canonical key; `graph` names them o0, o1, ... in that order.
struct DualMedianGraph {
    Pocset origin;
    std::vector<Orientation> vertices;
    FiniteGraph graph;

    std::optional<std::size_t> find(const Orientation& u) const {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i].chosen() == u.chosen()) return i;
        return std::nullopt;
    }
};

inline DualMedianGraph build_dual(const Pocset& p, const DualOptions& opts = {}) {
    std::unordered_map<MemberSet, std::size_t> seen;
    std::vector<Orientation> found;
    std::deque<std::size_t> queue;
    auto visit = [&](Orientation u) {
        auto [it, fresh] = seen.emplace(u.chosen(), found.size());
        if (!fresh) return;
        require(found.size() < opts.budget, Errc::BudgetExceeded,
                "dual graph exceeds " + std::to_string(opts.budget) + " orientations");
        queue.push_back(found.size());
        found.push_back(std::move(u));
    };
    for (Vertex x = 0; x < p.graph().order(); ++x) visit(principal_orientation(p, x));
    std::vector<std::pair<std::size_t, std::size_t>> raw_edges;
    while (!queue.empty()) {
        auto i = queue.front();
        queue.pop_front();
        for (auto& v : orientation_neighbors(found[i])) {
            auto key = v.chosen();
            visit(std::move(v));
            raw_edges.emplace_back(i, seen.at(key));
        }
    }

    std::vector<std::vector<std::size_t>> keys(found.size());
    for (std::size_t i = 0; i < found.size(); ++i) keys[i] = found[i].key();
    std::vector<std::size_t> order(found.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return keys[a] < keys[b]; });
    std::vector<std::size_t> rank(found.size());
    for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;

    DualMedianGraph out;
    out.origin = p;
    std::vector<std::string> names;
    for (std::size_t r = 0; r < order.size(); ++r) {
        out.vertices.push_back(found[order[r]]);
        names.push_back("o" + std::to_string(r));
    }
    std::vector<Edge> edges;
    for (auto [a, b] : raw_edges) {
        auto ra = static_cast<Vertex>(rank[a]), rb = static_cast<Vertex>(rank[b]);
        edges.push_back(Edge{std::min(ra, rb), std::max(ra, rb)});
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    out.graph = FiniteGraph::from_edges(std::move(names), std::move(edges));
    return out;
}

/// The member flipped along a dual edge, taken from the side held by `from`.
inline std::size_t edge_flip(const DualMedianGraph& d, Vertex from, Vertex to) {
    auto diff = d.vertices.at(from).chosen() - d.vertices.at(to).chosen();
    require(diff.size() == 1, Errc::InvariantViolation, "dual edge does not flip exactly one pair");
    return diff.first();
}

} // namespace medianforge

#endif
