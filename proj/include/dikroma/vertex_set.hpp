#ifndef DIKROMA_VERTEX_SET_HPP
#define DIKROMA_VERTEX_SET_HPP

#include <bit>
#include <cassert>
#include <cstdint>

namespace dikroma {

// Subset of the vertices 0..63, one bit per vertex.
struct VertexSet {
    std::uint64_t bits = 0;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t raw) : bits(raw) {}

    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    // {0, 1, ..., n-1}
    static constexpr VertexSet first_n(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr bool contains(int v) const { return (bits >> v) & 1; }
    constexpr bool empty() const { return bits == 0; }
    constexpr int count() const { return std::popcount(bits); }
    constexpr int lowest() const { return std::countr_zero(bits); }

    constexpr VertexSet with(int v) const { return VertexSet(bits | (std::uint64_t{1} << v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits & ~(std::uint64_t{1} << v)); }

    constexpr bool is_subset_of(VertexSet other) const { return (bits & ~other.bits) == 0; }

    constexpr friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits & b.bits); }
    constexpr friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits | b.bits); }
    constexpr friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits & ~b.bits); }
    constexpr friend bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }

    // Iterates over set bits in ascending order.
    struct iterator {
        std::uint64_t rest;
        int operator*() const { return std::countr_zero(rest); }
        iterator& operator++() {
            rest &= rest - 1;
            return *this;
        }
        friend bool operator!=(iterator a, iterator b) { return a.rest != b.rest; }
    };
    iterator begin() const { return {bits}; }
    iterator end() const { return {0}; }
};

} // namespace dikroma

#endif
