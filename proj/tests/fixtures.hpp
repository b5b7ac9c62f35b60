#ifndef DIKROMA_TESTS_FIXTURES_HPP
#define DIKROMA_TESTS_FIXTURES_HPP

#include "dikroma/digraph.hpp"

namespace dikroma::fixtures {

// Directed triangle 0 -> 1 -> 2 -> 0.
inline Digraph directed_triangle() {
    return Digraph(3, {{0, 1}, {1, 2}, {2, 0}});
}

// Directed path 0 -> 1 -> 2.
inline Digraph directed_path3() {
    return Digraph(3, {{0, 1}, {1, 2}});
}

// All six arcs on three vertices (every pair a digon).
inline Digraph complete_digon3() {
    return Digraph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}});
}

// Digon per edge of the path 0 - 1 - 2 - 3.
inline Digraph symmetric_path4() {
    return Digraph(4, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}});
}

// Two mutual arcs on two vertices.
inline Digraph digon2() {
    return Digraph(2, {{0, 1}, {1, 0}});
}

// Digons 0-1, 1-3, 2-3: the smallest instance where forced reuse needs a
// non-greedy choice (vertex 2 must skip class 1 or vertex 3 opens a third).
inline Digraph branching_example() {
    return Digraph(4, {{0, 1}, {1, 0}, {1, 3}, {3, 1}, {2, 3}, {3, 2}});
}

// Every pair a digon.
inline Digraph complete_digon(int n) {
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) arcs.emplace_back(u, v);
    return Digraph(n, arcs);
}

} // namespace dikroma::fixtures

#endif
