#ifndef DIKROMA_ENUMERATION_HPP
#define DIKROMA_ENUMERATION_HPP

#include <cstdint>

#include "dikroma/digraph.hpp"
#include "dikroma/errors.hpp"

namespace dikroma {

// splitmix64 step; used to derive independent per-sample seeds.
std::uint64_t splitmix64(std::uint64_t x);

// Every labeled loop-free digraph on n vertices, addressable by index.
//
// Each of the C(n,2) unordered pairs, listed lexicographically as
// (0,1), (0,2), ..., (0,n-1), (1,2), ..., independently takes one of
// four states: 0 no arc, 1 u->v, 2 v->u, 3 digon. Pair t is digit t of
// the index in base 4 (least significant first), so the stream has
// 4^C(n,2) members and index ranges are reproducible.
class DigraphEnumerator {
public:
    static constexpr int kMaxExhaustiveN = 5;

    explicit DigraphEnumerator(int n);

    std::uint64_t size() const { return size_; }
    Digraph at(std::uint64_t index) const;

    // Index of the complement: every pair state s maps to 3-s, so the
    // complement of member i is member size()-1-i.
    std::uint64_t complement_index(std::uint64_t index) const { return size_ - 1 - index; }

private:
    int n_;
    int pair_count_;
    std::uint64_t size_;
};

// Each of the n(n-1) ordered pairs (u,v), u != v, visited in row-major
// order, gets an arc independently with probability p. Draws come from
// std::mt19937_64 seeded with `seed`: arc iff the top 53 bits of the
// raw draw are below round(p * 2^53), so results are identical across
// platforms.
Digraph random_digraph(int n, double p, std::uint64_t seed);

} // namespace dikroma

#endif
