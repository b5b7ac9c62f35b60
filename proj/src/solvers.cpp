#include "dikroma/solvers.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <chrono>
#include <cstdlib>
#include <stdexcept>

#include "json.hpp"

#include "dikroma/errors.hpp"
#include "dikroma/greedy.hpp"

namespace dikroma {

SolverLimits SolverLimits::from_env() {
    SolverLimits limits;
    if (const char* env = std::getenv("DIKROMA_TIME_BUDGET_MS"))
        limits.time_budget_ms = std::strtoll(env, nullptr, 10);
    return limits;
}

namespace {

struct Deadline {
    std::chrono::steady_clock::time_point end{};
    bool enabled = false;
    std::uint64_t ticks = 0;

    explicit Deadline(const SolverLimits& limits) {
        if (limits.time_budget_ms > 0) {
            enabled = true;
            end = std::chrono::steady_clock::now() +
                  std::chrono::milliseconds(limits.time_budget_ms);
        }
    }

    void check() {
        if (enabled && (++ticks & 0xfff) == 0 && std::chrono::steady_clock::now() > end)
            throw CapError("time budget exceeded");
    }
};

void require_order(const Digraph& d, int cap, const char* what) {
    if (d.order() > cap)
        throw CapError(std::string(what) + " is capped at n = " + std::to_string(cap) +
                       ", got n = " + std::to_string(d.order()));
}

// Can the vertices v.. be colored with colors 1..k, first-use form (a new
// color is always the next unused one)? Colors are tried ascending, so the
// first full assignment found is the lexicographically least one in
// first-use form — which is also least overall, since renaming any valid
// assignment into first-use form never increases it lexicographically.
bool dc_dfs(const Digraph& d, int k, int v, std::vector<VertexSet>& classes, int used,
            std::vector<int>& colors, Deadline& dl) {
    dl.check();
    if (v == d.order())
        return true;
    const int cap = std::min(k, used + 1);
    for (int c = 1; c <= cap; ++c) {
        VertexSet& cls = classes[static_cast<std::size_t>(c) - 1];
        if (d.has_cycle_through(cls, v))
            continue;
        cls = cls.with(v);
        colors[static_cast<std::size_t>(v)] = c;
        if (dc_dfs(d, k, v + 1, classes, std::max(used, c), colors, dl))
            return true;
        cls = cls.without(v);
    }
    return false;
}

// Largest vertex set with no arcs among its members in either direction.
int max_arc_free(const Digraph& d) {
    const int n = d.order();
    int best = 1; // singletons are arc-free (no loops)
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
        if (std::popcount(s) <= best)
            continue;
        bool arc_free = true;
        for (int u : VertexSet(s))
            if (d.out_neighbors(u).bits & s) {
                arc_free = false;
                break;
            }
        if (arc_free)
            best = std::popcount(s);
    }
    return best;
}

// Exact-k search for an acyclic coloring that is complete for `mode`,
// first-use form, colors ascending (first hit = lexicographically least).
struct CompleteSearch {
    const Digraph& d;
    PairMode mode;
    int k;
    Deadline& dl;

    std::vector<VertexSet> classes;
    std::vector<int> colors;
    std::uint64_t colored = 0;
    std::array<std::uint32_t, 16> cov{}; // bit j of cov[i]: class i+1 -> class j+1 seen
    int uncovered = 0;                   // class pairs still needing an arc
    int potential = 0;                   // arcs with at least one uncolored endpoint

    CompleteSearch(const Digraph& dd, PairMode mm, int kk, Deadline& dll)
        : d(dd), mode(mm), k(kk), dl(dll),
          classes(static_cast<std::size_t>(kk)),
          colors(static_cast<std::size_t>(dd.order()), 0) {
        uncovered = mode == PairMode::ordered ? k * (k - 1) : k * (k - 1) / 2;
        potential = d.arc_count();
    }

    bool covered(int i, int j) const { return (cov[static_cast<std::size_t>(i)] >> j) & 1; }

    bool dfs(int v, int used) {
        dl.check();
        if (v == d.order())
            return uncovered == 0;
        if (k - used > d.order() - v) // not enough vertices left to open every color
            return false;
        // Each uncovered class pair needs its own not-yet-fully-colored arc
        // (an arc covers at most one pair), so:
        if (uncovered > potential)
            return false;
        const int cap = std::min(k, used + 1);
        for (int c = 1; c <= cap; ++c) {
            if (d.has_cycle_through(classes[static_cast<std::size_t>(c) - 1], v))
                continue;
            std::array<std::pair<int, int>, 128> journal;
            int journal_len = 0;
            const int ci = c - 1;
            auto record = [&](int i, int j) {
                if (mode == PairMode::unordered && i > j)
                    std::swap(i, j);
                if (i != j && !covered(i, j)) {
                    cov[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;
                    --uncovered;
                    journal[static_cast<std::size_t>(journal_len++)] = {i, j};
                }
            };
            for (int u : VertexSet(d.out_neighbors(v).bits & colored))
                record(ci, colors[static_cast<std::size_t>(u)] - 1);
            for (int u : VertexSet(d.in_neighbors(v).bits & colored))
                record(colors[static_cast<std::size_t>(u)] - 1, ci);
            const int finished_arcs =
                std::popcount(d.out_neighbors(v).bits & colored) +
                std::popcount(d.in_neighbors(v).bits & colored);
            potential -= finished_arcs;
            colored |= std::uint64_t{1} << v;
            classes[static_cast<std::size_t>(ci)] = classes[static_cast<std::size_t>(ci)].with(v);
            colors[static_cast<std::size_t>(v)] = c;

            if (dfs(v + 1, std::max(used, c)))
                return true;

            colors[static_cast<std::size_t>(v)] = 0;
            classes[static_cast<std::size_t>(ci)] =
                classes[static_cast<std::size_t>(ci)].without(v);
            colored &= ~(std::uint64_t{1} << v);
            potential += finished_arcs;
            for (int idx = 0; idx < journal_len; ++idx) {
                auto [i, j] = journal[static_cast<std::size_t>(idx)];
                cov[static_cast<std::size_t>(i)] &= ~(std::uint32_t{1} << j);
                ++uncovered;
            }
        }
        return false;
    }
};

std::optional<Coloring> acyclic_complete_with(const Digraph& d, int k, PairMode mode,
                                              Deadline& dl) {
    CompleteSearch search(d, mode, k, dl);
    if (!search.dfs(0, 0))
        return std::nullopt;
    return Coloring(std::move(search.colors), k);
}

// Enumerates every maximal acyclic subset of `cand` exactly once
// (include/exclude branching on the lowest candidate vertex; acyclicity is
// hereditary, so a vertex that cannot join the current set individually
// can never join any superset and is dropped for good). The yield callback
// returns false to stop early. Returns false iff stopped.
template <class F>
bool for_each_maximal_acyclic(const Digraph& d, std::uint64_t s, std::uint64_t cand,
                              std::uint64_t excluded, Deadline& dl, F&& yield) {
    dl.check();
    if (!cand) {
        for (int x : VertexSet(excluded))
            if (!d.has_cycle_through(VertexSet(s), x))
                return true; // s extends by x, so it is not maximal; skip
        return yield(s);
    }
    const int v = std::countr_zero(cand);
    const std::uint64_t bit = std::uint64_t{1} << v;
    std::uint64_t s2 = s | bit;
    std::uint64_t cand2 = 0;
    std::uint64_t ex2 = 0;
    for (int u : VertexSet(cand ^ bit))
        if (!d.has_cycle_through(VertexSet(s2), u))
            cand2 |= std::uint64_t{1} << u;
    for (int x : VertexSet(excluded))
        if (!d.has_cycle_through(VertexSet(s2), x))
            ex2 |= std::uint64_t{1} << x;
    if (!for_each_maximal_acyclic(d, s2, cand2, ex2, dl, yield))
        return false;
    return for_each_maximal_acyclic(d, s, cand ^ bit, excluded | bit, dl, yield);
}

// Achievable greedy color counts per induced vertex set, computed from the
// order-free characterization: the classes of a greedy-achievable coloring
// are, in color order, maximal acyclic subsets of the not-yet-colored
// rest. (Listing such a partition class-by-class gives an ordering whose
// greedy run reproduces it; conversely greedy classes are maximal this
// way, since a later vertex only skips color i when V_i plus it has a
// cycle.) Entry = bitset of achievable counts; bit 31 marks "computed".
struct GrundySearch {
    static constexpr std::uint32_t kDone = std::uint32_t{1} << 31;

    const Digraph& d;
    Deadline& dl;
    std::vector<std::uint32_t> table;

    GrundySearch(const Digraph& dd, Deadline& dll)
        : d(dd), dl(dll), table(std::size_t{1} << dd.order(), 0) {}

    std::uint32_t achievable(std::uint64_t mask) {
        std::uint32_t& slot = table[mask];
        if (slot & kDone)
            return slot & ~kDone;
        std::uint32_t acc = 0;
        if (!mask) {
            acc = 1; // zero colors color the empty set
        } else {
            for_each_maximal_acyclic(d, 0, mask, 0, dl, [&](std::uint64_t cls) {
                acc |= achievable(mask & ~cls) << 1;
                return true;
            });
        }
        slot = acc | kDone;
        return acc;
    }

    // First (in enumeration order) partition of `mask` into exactly k
    // classes with the maximality property; writes colors next_color..
    void build_witness(std::uint64_t mask, int kk, int next_color, std::vector<int>& colors) {
        if (!mask) {
            assert(kk == 0);
            return;
        }
        std::uint64_t pick = 0;
        for_each_maximal_acyclic(d, 0, mask, 0, dl, [&](std::uint64_t cls) {
            if ((achievable(mask & ~cls) >> (kk - 1)) & 1) {
                pick = cls;
                return false;
            }
            return true;
        });
        assert(pick && "achievable() said this count is reachable");
        for (int v : VertexSet(pick))
            colors[static_cast<std::size_t>(v)] = next_color;
        build_witness(mask & ~pick, kk - 1, next_color + 1, colors);
    }
};

// GrundySearch keeps a 2^n entry table.
constexpr int kGrundyTableCap = 24;

} // namespace

WitnessedCount dichromatic_number(const Digraph& d, const SolverLimits& limits) {
    require_order(d, limits.max_n, "exact dichromatic search");
    Deadline dl(limits);
    for (int k = 1;; ++k) {
        // Iterative deepening: levels below k all failed, so any full
        // assignment found here uses exactly k colors.
        std::vector<VertexSet> classes(static_cast<std::size_t>(k));
        std::vector<int> colors(static_cast<std::size_t>(d.order()), 0);
        if (dc_dfs(d, k, 0, classes, 0, colors, dl))
            return {k, Coloring(std::move(colors), k)};
        assert(k < d.order() && "rainbow coloring is always acyclic");
    }
}

WitnessedCount diachromatic_number(const Digraph& d, PairMode mode, const SolverLimits& limits) {
    require_order(d, limits.max_n, "exact diachromatic search");
    Deadline dl(limits);
    const int n = d.order();
    const int m = d.arc_count();
    // Arc-count bound: an arc u->v whose endpoints have distinct colors
    // (i,j) covers exactly the one ordered pair (i,j); intra-class arcs
    // cover none. A complete coloring needs all k(k-1) ordered pairs
    // covered, each by a distinct arc, so k(k-1) <= m. In unordered mode
    // an arc covers at most one of the k(k-1)/2 pairs, so k(k-1) <= 2m.
    const int m_eff = mode == PairMode::ordered ? m : 2 * m;
    int k_arcs = 1;
    while ((k_arcs + 1) * k_arcs <= m_eff)
        ++k_arcs;
    // Arc-free bound: two classes inside an arc-free vertex set would have
    // no arc between them in either direction, so at most one class fits
    // entirely inside it; the other k-1 classes each need a vertex outside.
    const int k_free = n - max_arc_free(d) + 1;
    for (int k = std::min({n, k_arcs, k_free}); k >= 1; --k)
        if (auto witness = acyclic_complete_with(d, k, mode, dl))
            return {k, std::move(*witness)};
    throw std::logic_error("no complete acyclic coloring found; minimal acyclic "
                           "colorings are complete, so this cannot happen");
}

WitnessedCount digrundy_number(const Digraph& d, const SolverLimits& limits) {
    require_order(d, std::min(limits.max_n, kGrundyTableCap), "exact digrundy search");
    Deadline dl(limits);
    GrundySearch search(d, dl);
    const std::uint64_t full = d.vertices().bits;
    const int k = std::bit_width(search.achievable(full)) - 1;
    std::vector<int> colors(static_cast<std::size_t>(d.order()), 0);
    search.build_witness(full, k, 1, colors);
    return {k, Coloring(std::move(colors), k)};
}

int digrundy_by_orderings(const Digraph& d) {
    require_order(d, 8, "digrundy by ordering enumeration");
    VertexOrdering phi = identity_ordering(d.order());
    int best = 0;
    do
        best = std::max(best, greedy_color(d, phi).k);
    while (std::next_permutation(phi.begin(), phi.end()));
    return best;
}

int diochromatic_number(const Digraph& d) {
    require_order(d, 7, "diochromatic search (n! orderings)");
    VertexOrdering phi = identity_ordering(d.order());
    int best = 0;
    do
        best = std::max(best, parsimonious_min_colors(d, phi).colors_used);
    while (std::next_permutation(phi.begin(), phi.end()));
    return best;
}

VertexOrdering ordering_achieving_dc(const Digraph& d, const SolverLimits& limits) {
    const WitnessedCount dc = dichromatic_number(d, limits);
    // Class-by-class listing of an optimal coloring: greedy then gives
    // every vertex of class j a color <= j, because the greedy class j
    // holds only same-class predecessors when the vertex is reached.
    VertexOrdering phi;
    phi.reserve(static_cast<std::size_t>(d.order()));
    for (int c = 1; c <= dc.value; ++c)
        for (int v = 0; v < d.order(); ++v)
            if (dc.witness.color_of(v) == c)
                phi.push_back(v);
    return phi;
}

InterpolationResult greedy_interpolation_witnesses(const Digraph& d, const SolverLimits& limits) {
    require_order(d, std::min(limits.max_n, kGrundyTableCap), "greedy interpolation search");
    Deadline dl(limits);
    InterpolationResult result;
    result.lo = dichromatic_number(d, limits).value;
    GrundySearch search(d, dl);
    const std::uint64_t full = d.vertices().bits;
    const std::uint32_t counts = search.achievable(full);
    result.hi = std::bit_width(counts) - 1;
    for (int k = result.lo; k <= result.hi; ++k) {
        if ((counts >> k) & 1) {
            std::vector<int> colors(static_cast<std::size_t>(d.order()), 0);
            search.build_witness(full, k, 1, colors);
            result.witnesses.emplace(k, Coloring(std::move(colors), k));
        } else {
            result.missing.push_back(k);
        }
    }
    return result;
}

InterpolationResult complete_interpolation_witnesses(const Digraph& d, PairMode mode,
                                                     const SolverLimits& limits) {
    require_order(d, limits.max_n, "complete interpolation search");
    Deadline dl(limits);
    InterpolationResult result;
    result.lo = dichromatic_number(d, limits).value;
    result.hi = diachromatic_number(d, mode, limits).value;
    for (int k = result.lo; k <= result.hi; ++k) {
        if (auto witness = acyclic_complete_with(d, k, mode, dl))
            result.witnesses.emplace(k, std::move(*witness));
        else
            result.missing.push_back(k);
    }
    return result;
}

ParameterReport parameter_report(const Digraph& d, const ReportOptions& opts) {
    ParameterReport r;
    r.n = d.order();
    r.m = d.arc_count();
    const DegreeSummary deg = d.degrees();
    r.delta_out = deg.max_out;
    r.delta_in = deg.max_in;
    r.mode = opts.mode;
    r.dc = dichromatic_number(d, opts.limits);
    r.dac = diachromatic_number(d, opts.mode, opts.limits);
    r.dg = digrundy_number(d, opts.limits);
    if (opts.with_dco)
        r.dco = diochromatic_number(d);

    const auto defect = [](const std::string& what) {
        throw std::logic_error("parameter report failed validation: " + what);
    };
    if (r.dc.witness.k != r.dc.value || !is_acyclic_coloring(d, r.dc.witness))
        defect("dc witness");
    if (r.dac.witness.k != r.dac.value || !is_acyclic_coloring(d, r.dac.witness) ||
        !is_complete_coloring(d, r.dac.witness, opts.mode))
        defect("dac witness");
    if (r.dg.witness.k != r.dg.value || !is_digrundy_coloring(d, r.dg.witness))
        defect("dg witness");
    if (!(r.dc.value <= r.dg.value && r.dg.value <= r.dac.value))
        defect("parameter chain dc <= dg <= dac");
    return r;
}

std::string to_json(const ParameterReport& r) {
    const auto coloring_json = [](const Coloring& c) {
        nlohmann::json j;
        j["k"] = c.k;
        j["colors"] = c.colors;
        return j;
    };
    nlohmann::json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["dc"] = r.dc.value;
    j["dac"] = r.dac.value;
    j["dg"] = r.dg.value;
    if (r.dco)
        j["dco"] = *r.dco;
    j["delta_in"] = r.delta_in;
    j["delta_out"] = r.delta_out;
    j["pair_mode"] = pair_mode_name(r.mode);
    j["witnesses"]["dc"] = coloring_json(r.dc.witness);
    j["witnesses"]["dac"] = coloring_json(r.dac.witness);
    j["witnesses"]["dg"] = coloring_json(r.dg.witness);
    return j.dump(2);
}

} // namespace dikroma
