#include "dikroma/digraph.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dikroma {

VertexOrdering identity_ordering(int n) {
    VertexOrdering phi(static_cast<std::size_t>(n));
    std::iota(phi.begin(), phi.end(), 0);
    return phi;
}

bool is_permutation(const VertexOrdering& phi, int n) {
    if (static_cast<int>(phi.size()) != n)
        return false;
    std::uint64_t seen = 0;
    for (int v : phi) {
        if (v < 0 || v >= n || (seen >> v & 1))
            return false;
        seen |= std::uint64_t{1} << v;
    }
    return true;
}

Digraph::Digraph(int n) : n_(n), out_(n, 0), in_(n, 0) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("vertex count must be in [1, 64], got " + std::to_string(n));
}

Digraph::Digraph(int n, const std::vector<Arc>& arcs) : Digraph(n) {
    for (auto [u, v] : arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("arc endpoint out of range");
        if (u == v)
            throw std::invalid_argument("loop arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (has_arc(u, v))
            throw std::invalid_argument("duplicate arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
        out_[u] |= std::uint64_t{1} << v;
        in_[v] |= std::uint64_t{1} << u;
    }
}

Digraph Digraph::from_out_rows(int n, std::vector<std::uint64_t> rows) {
    Digraph d(n);
    assert(static_cast<int>(rows.size()) == n);
    const std::uint64_t valid = VertexSet::first_n(n).bits;
    for (int u = 0; u < n; ++u) {
        assert((rows[u] & ~valid) == 0 && !(rows[u] >> u & 1));
        (void)valid;
        d.out_[u] = rows[u];
        for (int v : VertexSet(rows[u]))
            d.in_[v] |= std::uint64_t{1} << u;
    }
    return d;
}

int Digraph::arc_count() const {
    int m = 0;
    for (auto row : out_)
        m += std::popcount(row);
    return m;
}

DegreeSummary Digraph::degrees() const {
    DegreeSummary s;
    s.out.resize(n_);
    s.in.resize(n_);
    for (int v = 0; v < n_; ++v) {
        s.out[v] = out_degree(v);
        s.in[v] = in_degree(v);
        s.max_out = std::max(s.max_out, s.out[v]);
        s.max_in = std::max(s.max_in, s.in[v]);
    }
    return s;
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> result;
    result.reserve(arc_count());
    for (int u = 0; u < n_; ++u)
        for (int v : out_neighbors(u))
            result.emplace_back(u, v);
    return result;
}

Digraph Digraph::complement() const {
    std::vector<std::uint64_t> rows(n_);
    const std::uint64_t all = vertices().bits;
    for (int u = 0; u < n_; ++u)
        rows[u] = all & ~out_[u] & ~(std::uint64_t{1} << u);
    return from_out_rows(n_, rows);
}

bool Digraph::is_acyclic(VertexSet s) const {
    assert(s.is_subset_of(vertices()));
    std::uint64_t remaining = s.bits;
    bool stripped = true;
    while (remaining && stripped) {
        stripped = false;
        for (std::uint64_t scan = remaining; scan;) {
            const int v = std::countr_zero(scan);
            scan &= scan - 1;
            if ((in_[v] & remaining) == 0) {
                remaining &= ~(std::uint64_t{1} << v);
                stripped = true;
            }
        }
    }
    return remaining == 0;
}

bool Digraph::has_cycle_through(VertexSet s, int v) const {
    assert(!s.contains(v));
    assert(is_acyclic(s));
    // Bit-parallel forward reachability from v's out-neighbors inside s;
    // a cycle through v exists iff an in-neighbor of v is reached.
    const std::uint64_t target = in_[v] & s.bits;
    std::uint64_t reach = out_[v] & s.bits;
    std::uint64_t frontier = reach;
    while (frontier) {
        if (reach & target)
            return true;
        std::uint64_t next = 0;
        while (frontier) {
            const int u = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= out_[u];
        }
        frontier = next & s.bits & ~reach;
        reach |= frontier;
    }
    return (reach & target) != 0;
}

} // namespace dikroma
