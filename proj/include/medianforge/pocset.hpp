#ifndef MEDIANFORGE_POCSET_HPP
#define MEDIANFORGE_POCSET_HPP

#include "medianforge/graph.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace medianforge {

/// A vertex subset of a fixed graph, read as a half-space with partner ~side.
struct HalfSpace {
    FiniteGraph graph;
    VertexSet side;

    bool is_trivial() const { return side.empty() || side.is_full(); }
    HalfSpace complement() const { return {graph, side.complement()}; }
};

/// Complement-closed family of vertex subsets containing the trivial pair,
/// ordered by inclusion. Members are stored in canonical order
/// (cardinality, then lex), so member 0 is the empty set and the last
/// member is the whole vertex set.
class Pocset {
public:
    Pocset() = default;

    /// Closes `sides` under complement, adds the trivial pair, deduplicates
    /// and sorts.
    static Pocset close(const FiniteGraph& g, std::vector<VertexSet> sides) {
        const auto n = g.order();
        std::vector<VertexSet> all;
        all.reserve(2 * sides.size() + 2);
        all.push_back(g.empty_set());
        all.push_back(g.all_vertices());
        for (auto& s : sides) {
            require(s.universe() == n, Errc::GraphMismatch, "side over a different vertex universe");
            all.push_back(s.complement());
            all.push_back(std::move(s));
        }
        std::sort(all.begin(), all.end(), size_lex_less<VertexTag>);
        all.erase(std::unique(all.begin(), all.end()), all.end());
        return Pocset(g, std::move(all));
    }

    const FiniteGraph& graph() const { return data_->graph; }

    /// Number of members, trivial pair included.
    std::size_t size() const { return data_->sides.size(); }
    std::size_t empty_member() const { return 0; }
    std::size_t full_member() const { return size() - 1; }
    bool is_trivial(std::size_t i) const { return i == empty_member() || i == full_member(); }

    /// Number of non-trivial complement pairs.
    std::size_t pair_count() const { return (size() - 2) / 2; }

    const VertexSet& side(std::size_t i) const { return data_->sides.at(i); }
    const std::vector<VertexSet>& sides() const { return data_->sides; }
    HalfSpace member(std::size_t i) const { return {graph(), side(i)}; }
    std::size_t complement(std::size_t i) const { return data_->complement.at(i); }

    /// Members K with side(i) a subset of side(K); includes i.
    const MemberSet& supersets(std::size_t i) const { return data_->up.at(i); }
    /// Members K with side(K) a subset of side(i); includes i.
    const MemberSet& subsets(std::size_t i) const { return data_->down.at(i); }

    std::optional<std::size_t> find(const VertexSet& side) const {
        auto it = data_->lookup.find(side);
        if (it == data_->lookup.end()) return std::nullopt;
        return it->second;
    }

    std::size_t index_of(const HalfSpace& h) const {
        require(h.graph.same_as(graph()), Errc::GraphMismatch, "half-space over a different graph");
        auto i = find(h.side);
        require(i.has_value(), Errc::NotMember, "half-space is not a member of the pocset");
        return *i;
    }

    /// One representative (the lower index) per non-trivial complement pair,
    /// in member order.
    std::vector<std::size_t> pair_representatives() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 1; i + 1 < size(); ++i)
            if (i < complement(i)) out.push_back(i);
        return out;
    }

    MemberSet member_set() const { return MemberSet(size()); }

    bool same_as(const Pocset& other) const {
        if (data_ == other.data_) return true;
        return data_ && other.data_ && graph().same_as(other.graph()) && sides() == other.sides();
    }

    /// Sides as vertex-name lists, non-trivial members only.
    std::vector<std::vector<std::string>> named_sides() const {
        std::vector<std::vector<std::string>> out;
        for (std::size_t i = 1; i + 1 < size(); ++i) out.push_back(graph().names_of(side(i)));
        return out;
    }

private:
    struct Data {
        FiniteGraph graph;
        std::vector<VertexSet> sides;
        std::vector<std::size_t> complement;
        std::vector<MemberSet> up;
        std::vector<MemberSet> down;
        std::unordered_map<VertexSet, std::size_t> lookup;
    };

    Pocset(const FiniteGraph& g, std::vector<VertexSet> sorted) {
        auto owned = std::make_shared<Data>();
        auto& d = *owned;
        d.graph = g;
        d.sides = std::move(sorted);
        const auto m = d.sides.size();
        for (std::size_t i = 0; i < m; ++i) d.lookup.emplace(d.sides[i], i);
        d.complement.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            auto it = d.lookup.find(d.sides[i].complement());
            require(it != d.lookup.end(), Errc::InvariantViolation, "pocset not complement-closed");
            d.complement[i] = it->second;
        }
        d.up.assign(m, MemberSet(m));
        d.down.assign(m, MemberSet(m));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i; j < m; ++j) {
                // Canonical order is size-monotone, so only j >= i can contain i.
                if (d.sides[i].is_subset_of(d.sides[j])) {
                    d.up[i].insert(j);
                    d.down[j].insert(i);
                }
            }
        }
        data_ = std::move(owned);
    }

    std::shared_ptr<const Data> data_;
};

} // namespace medianforge

#endif
