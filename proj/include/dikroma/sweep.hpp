#ifndef DIKROMA_SWEEP_HPP
#define DIKROMA_SWEEP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dikroma/bounds.hpp"
#include "dikroma/solvers.hpp"

namespace dikroma {

// A digraph family the sweep walks: either every labeled digraph on n
// vertices (n <= 5), or seeded samples drawn per arc probability. Either
// way a family member is addressed by a stable index, so reports are
// reproducible and work splits cleanly across workers.
struct FamilySpec {
    enum class Kind { exhaustive, sampled };

    Kind kind = Kind::exhaustive;
    int n = 1;
    std::vector<double> ps;
    int samples_per_p = 0;
    std::uint64_t seed = 0;

    static FamilySpec exhaustive(int n);
    static FamilySpec sampled(int n, std::vector<double> ps, int samples_per_p,
                              std::uint64_t seed);

    std::uint64_t size() const;
    // Member at a family index; for sampled families the draw depends only
    // on (seed, n, index), never on visit order.
    Digraph member(std::uint64_t index) const;
};

struct SweepOptions {
    PairMode mode = PairMode::ordered;
    int workers = 1;
    // dco and interpolation checks cost n!-ish per digraph, so above n = 4
    // they run on this many seeded family indices instead of all of them.
    int heavy_check_samples = 1000;
    // Exhaustive families pair each index with its complement index and
    // compute parameters once per pair; reports are identical either way.
    bool complement_pairing = true;
    bool collect_rows = false;
    SolverLimits limits;
};

struct CheckStats {
    CheckId check{};
    std::optional<int> bound; // ng-* only: the bound value at this n
    std::uint64_t evaluated = 0;
    std::uint64_t passed = 0;
};

struct Violation {
    std::uint64_t index = 0;
    std::string digraph6;
    CheckId check{};
    std::string detail;
};

// Running maximum of an ng-* pair sum, with the first family index that
// attained it.
struct ExtremalRecord {
    CheckId check{};
    int bound = 0;
    int max_sum = 0;
    std::uint64_t index = 0;
    std::string digraph6;
};

// One family member, fully measured (collect_rows only).
struct RowRecord {
    std::uint64_t index = 0;
    std::string digraph6;
    int n = 0;
    int m = 0;
    int dc = 0, dc_c = 0;
    int dac = 0, dac_c = 0;
    int dg = 0, dg_c = 0;
    std::optional<int> dco;
    int checks_passed = 0;
    std::string violated_checks; // semicolon-joined names, empty if none
};

struct SweepReport {
    FamilySpec family;
    PairMode mode = PairMode::ordered;
    std::vector<CheckStats> checks;
    std::vector<Violation> violations; // empty iff every evaluation passed
    std::vector<ExtremalRecord> extremal;
    std::vector<RowRecord> rows;
    std::uint64_t digraphs = 0;
    double wall_ms = 0; // informational; everything else is deterministic
};

// Walks the family, evaluates every requested check on each member (pair
// checks compare the member/complement sum to the bound), and aggregates.
// Deterministic given the family parameters and options, whatever the worker
// count. Infeasible combinations (exhaustive n > 5, dco checks above the
// n = 7 cap, ...) are refused before any work starts.
SweepReport run_sweep(const FamilySpec& family, const std::vector<CheckId>& checks,
                      const SweepOptions& options = {});

struct ExtremalOptions {
    int max_witnesses = 4;
    // n > 5 has no exhaustive scan; search over seeded samples instead.
    std::vector<double> ps = {0.1, 0.3, 0.5, 0.7, 0.9};
    int samples_per_p = 1000;
    std::uint64_t seed = 0;
    PairMode mode = PairMode::ordered;
    SolverLimits limits;
};

struct ExtremalWitness {
    std::uint64_t index = 0;
    std::string digraph6;
    int sum = 0;
    ParameterReport report;
    ParameterReport complement_report;
};

// Digraphs maximizing the pair sum of an ng-* check: exhaustive for
// n <= 5, best-of-samples above. Returns the first max_witnesses
// attainers by family index, each with full parameter reports.
std::vector<ExtremalWitness> find_extremal(int n, CheckId check,
                                           const ExtremalOptions& options = {});

std::string to_json(const SweepReport& report);
std::string to_csv(const SweepReport& report); // needs collect_rows
std::string to_json(const std::vector<ExtremalWitness>& witnesses);

} // namespace dikroma

#endif
