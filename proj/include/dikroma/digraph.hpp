#ifndef DIKROMA_DIGRAPH_HPP
#define DIKROMA_DIGRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "dikroma/vertex_set.hpp"

namespace dikroma {

using Arc = std::pair<int, int>; // (u,v) means u -> v

// A permutation of 0..n-1; drives greedy and parsimonious runs.
using VertexOrdering = std::vector<int>;

VertexOrdering identity_ordering(int n);
bool is_permutation(const VertexOrdering& phi, int n);

struct DegreeSummary {
    std::vector<int> out;
    std::vector<int> in;
    int max_out = 0; // Delta^+
    int max_in = 0;  // Delta^-
};

// Loop-free labeled digraph on vertices 0..n-1, digons permitted.
// Adjacency is kept as one out-neighbor bit row and one in-neighbor bit
// row per vertex; n <= 64 so a row is a single word. Values are
// immutable after construction.
class Digraph {
public:
    static constexpr int kMaxVertices = 64;

    explicit Digraph(int n);
    Digraph(int n, const std::vector<Arc>& arcs);

    // Rows give out-neighbor masks; in-rows are derived. Bits at or
    // above n and diagonal bits must be clear.
    static Digraph from_out_rows(int n, std::vector<std::uint64_t> rows);

    int order() const { return n_; }
    int arc_count() const;
    bool has_arc(int u, int v) const { return (out_[u] >> v) & 1; }
    VertexSet out_neighbors(int u) const { return VertexSet(out_[u]); }
    VertexSet in_neighbors(int v) const { return VertexSet(in_[v]); }
    VertexSet vertices() const { return VertexSet::first_n(n_); }

    int out_degree(int u) const { return std::popcount(out_[u]); }
    int in_degree(int v) const { return std::popcount(in_[v]); }
    DegreeSummary degrees() const;

    std::vector<Arc> arcs() const;

    // Arc (u,v) present iff u != v and this digraph lacks it.
    Digraph complement() const;

    // True iff the subdigraph induced by s has no directed cycle; a
    // digon counts as a directed cycle of length 2. Iterative
    // topological elimination: repeatedly strip vertices with no
    // in-neighbor inside the remaining set.
    bool is_acyclic(VertexSet s) const;

    // True iff the subdigraph induced by s + v has a directed cycle.
    // Requires v not in s and s acyclic (asserted in debug builds);
    // any such cycle passes through v.
    bool has_cycle_through(VertexSet s, int v) const;

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.n_ == b.n_ && a.out_ == b.out_;
    }

private:
    int n_;
    std::vector<std::uint64_t> out_;
    std::vector<std::uint64_t> in_;
};

} // namespace dikroma

#endif
