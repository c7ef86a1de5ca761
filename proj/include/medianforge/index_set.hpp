#ifndef MEDIANFORGE_INDEX_SET_HPP
#define MEDIANFORGE_INDEX_SET_HPP

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace medianforge {

/// Fixed-universe subset of {0, ..., universe-1}. The tag keeps sets over
/// different universes (graph vertices, pocset members) from mixing.
template <typename Tag>
class IndexSet {
public:
    using Bits = boost::dynamic_bitset<std::uint64_t>;

    IndexSet() = default;
    explicit IndexSet(std::size_t universe) : bits_(universe) {}
    IndexSet(std::size_t universe, std::initializer_list<std::size_t> items) : bits_(universe) {
        for (auto i : items) bits_.set(i);
    }
    IndexSet(std::size_t universe, const std::vector<std::size_t>& items) : bits_(universe) {
        for (auto i : items) bits_.set(i);
    }

    static IndexSet full(std::size_t universe) {
        IndexSet s(universe);
        s.bits_.set();
        return s;
    }

    std::size_t universe() const { return bits_.size(); }
    std::size_t size() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }
    bool is_full() const { return bits_.all(); }

    bool contains(std::size_t i) const { return bits_.test(i); }
    void insert(std::size_t i) { bits_.set(i); }
    void erase(std::size_t i) { bits_.reset(i); }

    bool is_subset_of(const IndexSet& other) const { return bits_.is_subset_of(other.bits_); }
    bool is_proper_subset_of(const IndexSet& other) const {
        return bits_.is_proper_subset_of(other.bits_);
    }
    bool intersects(const IndexSet& other) const { return bits_.intersects(other.bits_); }

    IndexSet complement() const {
        IndexSet s;
        s.bits_ = ~bits_;
        return s;
    }

    IndexSet& operator&=(const IndexSet& o) { bits_ &= o.bits_; return *this; }
    IndexSet& operator|=(const IndexSet& o) { bits_ |= o.bits_; return *this; }
    IndexSet& operator^=(const IndexSet& o) { bits_ ^= o.bits_; return *this; }
    IndexSet& operator-=(const IndexSet& o) { bits_ -= o.bits_; return *this; }

    friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
    friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
    friend IndexSet operator^(IndexSet a, const IndexSet& b) { return a ^= b; }
    friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }
    friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.bits_ == b.bits_; }

    /// Least element, or universe() when empty.
    std::size_t first() const {
        auto i = bits_.find_first();
        return i == Bits::npos ? universe() : i;
    }
    std::size_t next(std::size_t i) const {
        auto j = bits_.find_next(i);
        return j == Bits::npos ? universe() : j;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) f(i);
    }

    std::vector<std::size_t> items() const {
        std::vector<std::size_t> out;
        out.reserve(size());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    const Bits& bits() const { return bits_; }

private:
    Bits bits_;
};

/// Canonical member order: by cardinality, then lexicographically by the
/// sorted element list.
template <typename Tag>
bool size_lex_less(const IndexSet<Tag>& a, const IndexSet<Tag>& b) {
    auto na = a.size(), nb = b.size();
    if (na != nb) return na < nb;
    auto i = a.first(), j = b.first();
    while (i < a.universe() && j < b.universe()) {
        if (i != j) return i < j;
        i = a.next(i);
        j = b.next(j);
    }
    return false;
}

struct VertexTag {};
struct MemberTag {};

using VertexSet = IndexSet<VertexTag>;
using MemberSet = IndexSet<MemberTag>;

} // namespace medianforge

template <typename Tag>
struct std::hash<medianforge::IndexSet<Tag>> {
    std::size_t operator()(const medianforge::IndexSet<Tag>& s) const {
        return std::hash<typename medianforge::IndexSet<Tag>::Bits>{}(s.bits());
    }
};

#endif
