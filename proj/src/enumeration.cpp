#include "dikroma/enumeration.hpp"

#include <cassert>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace dikroma {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

DigraphEnumerator::DigraphEnumerator(int n) : n_(n) {
    if (n < 1)
        throw CapError("exhaustive enumeration needs n >= 1");
    if (n > kMaxExhaustiveN)
        throw CapError("exhaustive enumeration is capped at n = " +
                       std::to_string(kMaxExhaustiveN) + " (4^C(n,2) digraphs); got n = " +
                       std::to_string(n));
    pair_count_ = n * (n - 1) / 2;
    size_ = std::uint64_t{1} << (2 * pair_count_);
}

Digraph DigraphEnumerator::at(std::uint64_t index) const {
    assert(index < size_);
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_), 0);
    int t = 0;
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v, ++t) {
            const auto state = (index >> (2 * t)) & 3;
            if (state & 1)
                rows[u] |= std::uint64_t{1} << v;
            if (state & 2)
                rows[v] |= std::uint64_t{1} << u;
        }
    }
    return Digraph::from_out_rows(n_, std::move(rows));
}

Digraph random_digraph(int n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("arc probability must be in [0, 1], got " +
                                    std::to_string(p));
    constexpr double kTwo53 = 9007199254740992.0; // 2^53
    const auto threshold = static_cast<std::uint64_t>(std::llround(p * kTwo53));
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v)
                continue;
            if ((rng() >> 11) < threshold)
                rows[u] |= std::uint64_t{1} << v;
        }
    return Digraph::from_out_rows(n, std::move(rows));
}

} // namespace dikroma
