#ifndef DIKROMA_COLORING_HPP
#define DIKROMA_COLORING_HPP

#include <string>
#include <vector>

#include "dikroma/digraph.hpp"
#include "dikroma/vertex_set.hpp"

namespace dikroma {

enum class PairMode {
    ordered,   // every ordered pair (i,j), i != j, needs an arc from class i to class j
    unordered, // every unordered pair {i,j} needs an arc in at least one direction
};

std::string pair_mode_name(PairMode mode);

// Surjective vertex -> {1..k} map, read as an ordered partition into chromatic
// classes V_1..V_k.
struct Coloring {
    std::vector<int> colors; // colors[v] in 1..k
    int k = 0;

    Coloring() = default;
    Coloring(std::vector<int> colors, int k);

    int order() const { return static_cast<int>(colors.size()); }
    int color_of(int v) const { return colors[static_cast<std::size_t>(v)]; }
    VertexSet class_of(int color) const;
    std::vector<VertexSet> classes() const;

    bool operator==(const Coloring& other) const = default;
};

// Relabeling applied by normalize(): old color -> new color for every color
// that had at least one vertex.
struct NormalizationReport {
    bool changed = false;
    std::vector<std::pair<int, int>> relabeling;
};

// Repairs a raw assignment whose colors may be non-contiguous: used colors are
// relabeled, preserving their numeric order, onto 1..k. Vertices must already
// have positive colors.
Coloring normalize(const std::vector<int>& raw, NormalizationReport* report = nullptr);

// True iff every chromatic class induces an acyclic subdigraph (a digon is a
// directed 2-cycle, so no class may contain both ends of one).
bool is_acyclic_coloring(const Digraph& d, const Coloring& c);

// True iff every pair of distinct classes is joined per `mode`. k = 1 is
// vacuously complete.
bool is_complete_coloring(const Digraph& d, const Coloring& c, PairMode mode = PairMode::ordered);

// True iff c is acyclic and every vertex v with color j certifies all lower
// colors: for each i < j, V_i together with v contains a directed cycle.
// Exactly the colorings some greedy run can produce.
bool is_digrundy_coloring(const Digraph& d, const Coloring& c);

// k x k arc-coverage matrix as bit rows: bit j of row i says some arc runs
// from class i+1 to class j+1. Diagonal bits report intra-class arcs.
std::vector<std::uint64_t> coverage_matrix(const Digraph& d, const Coloring& c);

// Text format: first line "k", then one "vertex color" line per vertex.
Coloring parse_coloring(const std::string& text, int expected_n);
std::string serialize_coloring(const Coloring& c);

} // namespace dikroma

#endif
