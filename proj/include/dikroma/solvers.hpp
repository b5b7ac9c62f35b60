#ifndef DIKROMA_SOLVERS_HPP
#define DIKROMA_SOLVERS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dikroma/coloring.hpp"
#include "dikroma/digraph.hpp"

namespace dikroma {

// Exact-search guard rails. max_n bounds the backtracking solvers;
// time_budget_ms (0 = unlimited) aborts a solver run with CapError when
// exceeded. from_env() honors DIKROMA_TIME_BUDGET_MS.
struct SolverLimits {
    int max_n = 16;
    long long time_budget_ms = 0;

    static SolverLimits from_env();
};

struct WitnessedCount {
    int value = 0;
    Coloring witness;
};

// Minimum colors over acyclic colorings. Witness is the lexicographically
// least optimal assignment. Iterative deepening on the color count.
WitnessedCount dichromatic_number(const Digraph& d, const SolverLimits& limits = {});

// Maximum colors over colorings that are both acyclic and complete for
// `mode`. Witness is the lexicographically least optimal assignment.
WitnessedCount diachromatic_number(const Digraph& d, PairMode mode = PairMode::ordered,
                                   const SolverLimits& limits = {});

// Maximum colors over greedy-achievable colorings, searched directly over
// ordered partitions via the cycle-closure characterization (no ordering
// enumeration): class i must be a maximal acyclic subset of the vertices
// of color >= i — listing an ordered partition with that property
// class-by-class is a vertex ordering on which greedy reproduces it, and
// conversely greedy classes always have it.
WitnessedCount digrundy_number(const Digraph& d, const SolverLimits& limits = {});

// Independent oracle: maximize greedy_color colors over all n! orderings.
int digrundy_by_orderings(const Digraph& d); // n <= 8

// Maximum over all n! orderings of the parsimonious minimum color count.
int diochromatic_number(const Digraph& d); // n <= 7

// An ordering on which greedy uses exactly dichromatic_number(d) colors:
// an optimal acyclic coloring listed class-by-class (greedy then gives
// every vertex of class j a color <= j).
VertexOrdering ordering_achieving_dc(const Digraph& d, const SolverLimits& limits = {});

// One validated witness per color count in [lo, hi]; counts without a
// witness land in `missing` (expected never — finding one is a defect or
// a genuine counterexample).
struct InterpolationResult {
    int lo = 0;
    int hi = 0;
    std::map<int, Coloring> witnesses;
    std::vector<int> missing;
};

// Greedy-achievable coloring for every k in [dc, dG].
InterpolationResult greedy_interpolation_witnesses(const Digraph& d,
                                                   const SolverLimits& limits = {});

// Acyclic + complete coloring for every k in [dc, dac].
InterpolationResult complete_interpolation_witnesses(const Digraph& d,
                                                     PairMode mode = PairMode::ordered,
                                                     const SolverLimits& limits = {});

struct ReportOptions {
    PairMode mode = PairMode::ordered;
    bool with_dco = false;
    SolverLimits limits;
};

struct ParameterReport {
    int n = 0;
    int m = 0;
    WitnessedCount dc;
    WitnessedCount dac;
    WitnessedCount dg;
    std::optional<int> dco;
    int delta_out = 0;
    int delta_in = 0;
    PairMode mode = PairMode::ordered;
};

// Computes every requested parameter, re-validating each witness with the
// coloring predicates before returning (a failure is an internal defect
// and throws logic_error).
ParameterReport parameter_report(const Digraph& d, const ReportOptions& opts = {});

std::string to_json(const ParameterReport& report);

} // namespace dikroma

#endif
