#ifndef DIKROMA_GREEDY_HPP
#define DIKROMA_GREEDY_HPP

#include <vector>

#include "dikroma/coloring.hpp"
#include "dikroma/digraph.hpp"

namespace dikroma {

// Record of one ordering-driven coloring run: the color chosen at each
// step, parallel to the ordering. Legal runs obey forced reuse — a new
// color (always the next unused integer) is opened only when no existing
// class admits the vertex acyclically.
struct ParsimoniousRun {
    VertexOrdering ordering;
    std::vector<int> trace;
    int colors_used = 0;
};

// First-Fit: process vertices in phi-order; each vertex takes the smallest
// color whose class stays acyclic with it, else opens the next color.
Coloring greedy_color(const Digraph& d, const VertexOrdering& phi);

// Minimum total color count over ALL legal runs on phi (reuse is mandatory
// when possible, but WHICH admissible color to reuse is a free choice made
// with full knowledge of the rest of the ordering). The returned run
// attains that minimum; among optimal runs its trace is lexicographically
// smallest. Exhaustive memoized search — exact, no heuristics.
ParsimoniousRun parsimonious_min_colors(const Digraph& d, const VertexOrdering& phi);

// Executes a run step by step, enforcing legality: reused classes must stay
// acyclic, and a new color may open only when no class admits the vertex.
// Throws ReplayError naming the offending step otherwise.
Coloring replay_run(const Digraph& d, const ParsimoniousRun& run);

} // namespace dikroma

#endif
