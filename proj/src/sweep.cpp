#include "dikroma/sweep.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "json.hpp"

#include "dikroma/enumeration.hpp"
#include "dikroma/errors.hpp"
#include "dikroma/formats.hpp"

namespace dikroma {

FamilySpec FamilySpec::exhaustive(int n) {
    FamilySpec family;
    family.kind = Kind::exhaustive;
    family.n = n;
    return family;
}

FamilySpec FamilySpec::sampled(int n, std::vector<double> ps, int samples_per_p,
                               std::uint64_t seed) {
    FamilySpec family;
    family.kind = Kind::sampled;
    family.n = n;
    family.ps = std::move(ps);
    family.samples_per_p = samples_per_p;
    family.seed = seed;
    return family;
}

std::uint64_t FamilySpec::size() const {
    if (kind == Kind::exhaustive)
        return DigraphEnumerator(n).size();
    return ps.size() * static_cast<std::uint64_t>(samples_per_p);
}

Digraph FamilySpec::member(std::uint64_t index) const {
    assert(index < size());
    if (kind == Kind::exhaustive)
        return DigraphEnumerator(n).at(index);
    const auto p_idx = index / static_cast<std::uint64_t>(samples_per_p);
    const auto j = index % static_cast<std::uint64_t>(samples_per_p);
    std::uint64_t h = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(n)));
    h = splitmix64(h ^ splitmix64(p_idx + 1));
    h = splitmix64(h ^ splitmix64(j + 1));
    return random_digraph(n, ps[p_idx], h);
}

namespace {

struct NeedSet {
    bool dc = false;
    bool dg = false;
    bool dac = false;

    NeedSet& operator|=(const NeedSet& o) {
        dc |= o.dc;
        dg |= o.dg;
        dac |= o.dac;
        return *this;
    }
};

struct CheckNeeds {
    NeedSet self;  // on the indexed digraph
    NeedSet other; // on its complement
    bool any_heavy = false;
};

bool is_heavy(CheckId check) {
    return check == CheckId::dg_equals_dco || check == CheckId::greedy_interpolation ||
           check == CheckId::complete_interpolation;
}

CheckNeeds needs_for(const std::vector<CheckId>& checks, bool rows) {
    CheckNeeds nd;
    for (CheckId check : checks) {
        switch (check) {
        case CheckId::chain:
            nd.self.dc = nd.self.dg = nd.self.dac = true;
            break;
        case CheckId::degree_bound:
            nd.self.dg = true;
            break;
        case CheckId::ng_dc:
            nd.self.dc = nd.other.dc = true;
            break;
        case CheckId::ng_dac:
            nd.self.dac = nd.other.dac = true;
            break;
        case CheckId::ng_dg:
            nd.self.dg = nd.other.dg = true;
            break;
        case CheckId::dg_equals_dco:
            nd.self.dg = true;
            break;
        case CheckId::greedy_interpolation:
        case CheckId::complete_interpolation:
            break; // the witness searches recompute their own endpoints
        }
        nd.any_heavy |= is_heavy(check);
    }
    if (rows) {
        nd.self = {true, true, true};
        nd.other = {true, true, true};
    }
    return nd;
}

struct SideParams {
    int dc = -1;
    int dg = -1;
    int dac = -1;
};

SideParams measure(const Digraph& d, const NeedSet& need, PairMode mode,
                   const SolverLimits& limits) {
    SideParams p;
    if (need.dc)
        p.dc = dichromatic_number(d, limits).value;
    if (need.dg)
        p.dg = digrundy_number(d, limits).value;
    if (need.dac)
        p.dac = diachromatic_number(d, mode, limits).value;
    return p;
}

// Which family indices get the n!-ish checks (dco, interpolations): every
// index at n <= 4, a seeded subsample above that.
struct HeavySelect {
    bool all = false;
    std::vector<std::uint64_t> indices;

    bool contains(std::uint64_t index) const {
        return all || std::binary_search(indices.begin(), indices.end(), index);
    }
};

HeavySelect pick_heavy(const FamilySpec& family, const SweepOptions& options, bool any_heavy) {
    HeavySelect sel;
    if (!any_heavy)
        return sel;
    const std::uint64_t size = family.size();
    if (family.n <= 4 || static_cast<std::uint64_t>(options.heavy_check_samples) >= size) {
        sel.all = true;
        return sel;
    }
    std::unordered_set<std::uint64_t> chosen;
    std::uint64_t x = splitmix64(family.seed ^ 0xd1c05a4d93f2b6c1ULL);
    while (chosen.size() < static_cast<std::size_t>(options.heavy_check_samples)) {
        x = splitmix64(x);
        chosen.insert(x % size);
    }
    sel.indices.assign(chosen.begin(), chosen.end());
    std::sort(sel.indices.begin(), sel.indices.end());
    return sel;
}

struct Ctx {
    const FamilySpec& family;
    const std::vector<CheckId>& checks;
    const SweepOptions& options;
    CheckNeeds needs;
    NeedSet measure_self;
    NeedSet measure_other;
    HeavySelect heavy;
    std::uint64_t size = 0;
    bool paired = false;
    bool only_heavy = false; // every check is subsampled and rows are off
};

// When only the subsampled checks are requested, indices outside the
// sample need no solver work at all.
bool wants_params(const Ctx& ctx, std::uint64_t index) {
    return !ctx.only_heavy || ctx.heavy.contains(index);
}

struct Partial {
    std::vector<CheckStats> stats;
    std::vector<Violation> violations;
    std::vector<ExtremalRecord> extremal; // max_sum = -1 until first evaluation
    std::vector<RowRecord> rows;
    std::uint64_t digraphs = 0;
};

Partial empty_partial(const Ctx& ctx) {
    Partial part;
    for (CheckId check : ctx.checks)
        part.stats.push_back({check, check_bound(check, ctx.family.n), 0, 0});
    for (CheckId check : ctx.checks)
        if (is_pair_check(check))
            part.extremal.push_back({check, *check_bound(check, ctx.family.n), -1, 0, ""});
    return part;
}

std::string sum_detail(const char* name, int a, int b, int bound) {
    return std::string(name) + "(D)=" + std::to_string(a) + ", " + name +
           "(complement)=" + std::to_string(b) + ", sum=" + std::to_string(a + b) +
           " > bound=" + std::to_string(bound);
}

bool witnesses_ok(const Digraph& d, const InterpolationResult& r, bool digrundy, PairMode mode,
                  std::string& detail) {
    if (!r.missing.empty()) {
        detail = "no witness for k=" + std::to_string(r.missing.front()) + " in [" +
                 std::to_string(r.lo) + ", " + std::to_string(r.hi) + "]";
        return false;
    }
    for (const auto& [k, coloring] : r.witnesses) {
        const bool valid = coloring.k == k &&
                           (digrundy ? is_digrundy_coloring(d, coloring)
                                     : is_acyclic_coloring(d, coloring) &&
                                           is_complete_coloring(d, coloring, mode));
        if (!valid) {
            detail = "invalid witness for k=" + std::to_string(k);
            return false;
        }
    }
    return true;
}

// One family index: run every requested check on (d, its complement
// params), fold into the partial report.
void evaluate_index(const Ctx& ctx, std::uint64_t index, const Digraph& d, const SideParams& p,
                    const SideParams& q, Partial& out) {
    const int n = ctx.family.n;
    const bool heavy_here = ctx.heavy.contains(index);
    std::string d6; // filled lazily; needed by violations, extremal, rows
    const auto graph6 = [&]() -> const std::string& {
        if (d6.empty())
            d6 = serialize_digraph6(d);
        return d6;
    };

    ++out.digraphs;
    int passed_here = 0;
    int evaluated_here = 0;
    std::string violated_names;
    std::optional<int> dco_value;

    std::size_t extremal_slot = 0;
    for (std::size_t ci = 0; ci < ctx.checks.size(); ++ci) {
        const CheckId check = ctx.checks[ci];
        if (is_heavy(check) && !heavy_here) {
            if (is_pair_check(check))
                ++extremal_slot; // keep slots aligned (not reachable today)
            continue;
        }
        bool ok = true;
        std::string detail;
        switch (check) {
        case CheckId::chain:
            ok = p.dc <= p.dg && p.dg <= p.dac;
            if (!ok)
                detail = "dc=" + std::to_string(p.dc) + ", dg=" + std::to_string(p.dg) +
                         ", dac=" + std::to_string(p.dac);
            break;
        case CheckId::degree_bound: {
            const DegreeSummary deg = d.degrees();
            const int cap = std::min(deg.max_out, deg.max_in) + 1;
            ok = p.dg <= cap;
            if (!ok)
                detail = "dg=" + std::to_string(p.dg) + " > min(delta_out=" +
                         std::to_string(deg.max_out) + ", delta_in=" +
                         std::to_string(deg.max_in) + ") + 1";
            break;
        }
        case CheckId::ng_dc:
            ok = p.dc + q.dc <= ng_bound_dc(n);
            if (!ok)
                detail = sum_detail("dc", p.dc, q.dc, ng_bound_dc(n));
            break;
        case CheckId::ng_dac:
            ok = p.dac + q.dac <= ng_bound_dac(n);
            if (!ok)
                detail = sum_detail("dac", p.dac, q.dac, ng_bound_dac(n));
            break;
        case CheckId::ng_dg:
            ok = p.dg + q.dg <= ng_bound_dg(n);
            if (!ok)
                detail = sum_detail("dg", p.dg, q.dg, ng_bound_dg(n));
            break;
        case CheckId::dg_equals_dco: {
            dco_value = diochromatic_number(d);
            ok = *dco_value == p.dg;
            if (!ok)
                detail = "dg=" + std::to_string(p.dg) + ", dco=" + std::to_string(*dco_value);
            break;
        }
        case CheckId::greedy_interpolation:
            ok = witnesses_ok(d, greedy_interpolation_witnesses(d, ctx.options.limits), true,
                              ctx.options.mode, detail);
            break;
        case CheckId::complete_interpolation:
            ok = witnesses_ok(
                d, complete_interpolation_witnesses(d, ctx.options.mode, ctx.options.limits),
                false, ctx.options.mode, detail);
            break;
        }

        ++out.stats[ci].evaluated;
        ++evaluated_here;
        if (ok) {
            ++out.stats[ci].passed;
            ++passed_here;
        } else {
            out.violations.push_back({index, graph6(), check, detail});
            if (!violated_names.empty())
                violated_names += ';';
            violated_names += check_name(check);
        }

        if (is_pair_check(check)) {
            const int sum = check == CheckId::ng_dc    ? p.dc + q.dc
                            : check == CheckId::ng_dac ? p.dac + q.dac
                                                       : p.dg + q.dg;
            ExtremalRecord& rec = out.extremal[extremal_slot++];
            if (sum > rec.max_sum || (sum == rec.max_sum && index < rec.index)) {
                rec.max_sum = sum;
                rec.index = index;
                rec.digraph6 = graph6();
            }
        }
    }

    if (ctx.options.collect_rows) {
        RowRecord row;
        row.index = index;
        row.digraph6 = graph6();
        row.n = n;
        row.m = d.arc_count();
        row.dc = p.dc;
        row.dc_c = q.dc;
        row.dac = p.dac;
        row.dac_c = q.dac;
        row.dg = p.dg;
        row.dg_c = q.dg;
        row.dco = dco_value;
        row.checks_passed = passed_here;
        row.violated_checks = violated_names;
        out.rows.push_back(std::move(row));
    }
    (void)evaluated_here;
}

Partial run_range(const Ctx& ctx, std::uint64_t begin, std::uint64_t end) {
    Partial part = empty_partial(ctx);
    for (std::uint64_t slot = begin; slot < end; ++slot) {
        if (ctx.paired) {
            const std::uint64_t i = slot;
            const std::uint64_t ic = ctx.size - 1 - slot;
            const Digraph d = ctx.family.member(i);
            const Digraph c = d.complement();
            const bool want = wants_params(ctx, i) || wants_params(ctx, ic);
            const SideParams p = want ? measure(d, ctx.measure_self, ctx.options.mode,
                                                ctx.options.limits)
                                      : SideParams{};
            const SideParams q = want ? measure(c, ctx.measure_self, ctx.options.mode,
                                                ctx.options.limits)
                                      : SideParams{};
            evaluate_index(ctx, i, d, p, q, part);
            if (ic != i) // the enumeration maps index size-1-i to the complement
                evaluate_index(ctx, ic, c, q, p, part);
        } else {
            const Digraph d = ctx.family.member(slot);
            const Digraph c = d.complement();
            const bool want = wants_params(ctx, slot);
            const SideParams p = want ? measure(d, ctx.measure_self, ctx.options.mode,
                                                ctx.options.limits)
                                      : SideParams{};
            const SideParams q = want ? measure(c, ctx.measure_other, ctx.options.mode,
                                                ctx.options.limits)
                                      : SideParams{};
            evaluate_index(ctx, slot, d, p, q, part);
        }
    }
    return part;
}

void merge_into(Partial& acc, Partial&& part) {
    for (std::size_t i = 0; i < acc.stats.size(); ++i) {
        acc.stats[i].evaluated += part.stats[i].evaluated;
        acc.stats[i].passed += part.stats[i].passed;
    }
    acc.violations.insert(acc.violations.end(),
                          std::make_move_iterator(part.violations.begin()),
                          std::make_move_iterator(part.violations.end()));
    for (std::size_t i = 0; i < acc.extremal.size(); ++i) {
        const ExtremalRecord& in = part.extremal[i];
        ExtremalRecord& out = acc.extremal[i];
        if (in.max_sum > out.max_sum ||
            (in.max_sum == out.max_sum && in.max_sum >= 0 && in.index < out.index))
            out = in;
    }
    acc.rows.insert(acc.rows.end(), std::make_move_iterator(part.rows.begin()),
                    std::make_move_iterator(part.rows.end()));
    acc.digraphs += part.digraphs;
}

void validate_sweep(const FamilySpec& family, const std::vector<CheckId>& checks,
                    const SweepOptions& options) {
    if (family.n < 1)
        throw std::invalid_argument("family needs n >= 1");
    if (family.kind == FamilySpec::Kind::exhaustive) {
        if (family.n > DigraphEnumerator::kMaxExhaustiveN)
            throw CapError("exhaustive sweeps are capped at n = " +
                           std::to_string(DigraphEnumerator::kMaxExhaustiveN) + ", got n = " +
                           std::to_string(family.n));
    } else {
        if (family.ps.empty())
            throw std::invalid_argument("sampled family needs at least one arc probability");
        for (double p : family.ps)
            if (!(p >= 0.0 && p <= 1.0))
                throw std::invalid_argument("arc probability must be in [0, 1]");
        if (family.samples_per_p < 1)
            throw std::invalid_argument("sampled family needs samples_per_p >= 1");
        if (family.n > options.limits.max_n)
            throw CapError("sampled sweeps are capped at n = " +
                           std::to_string(options.limits.max_n) + ", got n = " +
                           std::to_string(family.n));
    }
    if (checks.empty())
        throw std::invalid_argument("no checks selected");
    for (std::size_t i = 0; i < checks.size(); ++i)
        for (std::size_t j = i + 1; j < checks.size(); ++j)
            if (checks[i] == checks[j])
                throw std::invalid_argument("duplicate check " + check_name(checks[i]));
    if (options.workers < 1)
        throw std::invalid_argument("workers must be >= 1");
    if (options.heavy_check_samples < 0)
        throw std::invalid_argument("heavy_check_samples must be >= 0");
    if (family.n > 7 &&
        std::find(checks.begin(), checks.end(), CheckId::dg_equals_dco) != checks.end())
        throw CapError("dg-equals-dco needs n <= 7 (n! orderings), got n = " +
                       std::to_string(family.n));
}

} // namespace

SweepReport run_sweep(const FamilySpec& family, const std::vector<CheckId>& checks,
                      const SweepOptions& options) {
    validate_sweep(family, checks, options);
    const auto start = std::chrono::steady_clock::now();

    Ctx ctx{family, checks, options, needs_for(checks, options.collect_rows),
            {},     {},     {},      family.size(),
            options.complement_pairing && family.kind == FamilySpec::Kind::exhaustive};
    ctx.heavy = pick_heavy(family, options, ctx.needs.any_heavy);
    ctx.only_heavy = !options.collect_rows &&
                     std::all_of(checks.begin(), checks.end(), [](CheckId c) { return is_heavy(c); });
    if (ctx.paired) {
        // both sides of a pair serve as "self" for one index each
        ctx.measure_self = ctx.needs.self;
        ctx.measure_self |= ctx.needs.other;
        ctx.measure_other = ctx.measure_self;
    } else {
        ctx.measure_self = ctx.needs.self;
        ctx.measure_other = ctx.needs.other;
    }

    const std::uint64_t slots = ctx.paired ? (ctx.size + 1) / 2 : ctx.size;
    const int workers =
        static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(options.workers),
                                                 std::max<std::uint64_t>(slots, 1)));

    Partial total = empty_partial(ctx);
    if (workers <= 1) {
        merge_into(total, run_range(ctx, 0, slots));
    } else {
        std::vector<Partial> parts(static_cast<std::size_t>(workers));
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
        std::vector<std::thread> threads;
        const std::uint64_t chunk = slots / static_cast<std::uint64_t>(workers);
        const std::uint64_t rem = slots % static_cast<std::uint64_t>(workers);
        std::uint64_t begin = 0;
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t end =
                begin + chunk + (static_cast<std::uint64_t>(w) < rem ? 1 : 0);
            threads.emplace_back([&, w, begin, end] {
                try {
                    parts[static_cast<std::size_t>(w)] = run_range(ctx, begin, end);
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
            begin = end;
        }
        for (auto& t : threads)
            t.join();
        for (const auto& err : errors)
            if (err)
                std::rethrow_exception(err);
        for (auto& part : parts)
            merge_into(total, std::move(part));
    }

    // canonical order whatever the worker split or pairing produced
    std::sort(total.violations.begin(), total.violations.end(),
              [](const Violation& a, const Violation& b) {
                  return a.index != b.index ? a.index < b.index
                                            : static_cast<int>(a.check) < static_cast<int>(b.check);
              });
    std::sort(total.rows.begin(), total.rows.end(),
              [](const RowRecord& a, const RowRecord& b) { return a.index < b.index; });

    SweepReport report;
    report.family = family;
    report.mode = options.mode;
    report.checks = std::move(total.stats);
    report.violations = std::move(total.violations);
    report.extremal = std::move(total.extremal);
    report.rows = std::move(total.rows);
    report.digraphs = total.digraphs;
    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                               start)
                         .count();
    return report;
}

std::vector<ExtremalWitness> find_extremal(int n, CheckId check, const ExtremalOptions& options) {
    if (!is_pair_check(check))
        throw std::invalid_argument("extremal search is defined for the ng-* checks, got " +
                                    check_name(check));
    if (n < 1)
        throw std::invalid_argument("extremal search needs n >= 1");
    if (options.max_witnesses < 1)
        throw std::invalid_argument("max_witnesses must be >= 1");

    const bool exhaustive = n <= DigraphEnumerator::kMaxExhaustiveN;
    const FamilySpec family =
        exhaustive ? FamilySpec::exhaustive(n)
                   : FamilySpec::sampled(n, options.ps, options.samples_per_p, options.seed);
    const std::uint64_t size = family.size();

    NeedSet need;
    need.dc = check == CheckId::ng_dc;
    need.dg = check == CheckId::ng_dg;
    need.dac = check == CheckId::ng_dac;
    const auto value_of = [&](const SideParams& p) {
        return check == CheckId::ng_dc ? p.dc : check == CheckId::ng_dg ? p.dg : p.dac;
    };

    int best = -1;
    std::vector<std::uint64_t> attainers; // sorted, capped
    const auto consider = [&](std::uint64_t index, int sum) {
        if (sum > best) {
            best = sum;
            attainers.assign(1, index);
        } else if (sum == best) {
            const auto at = std::lower_bound(attainers.begin(), attainers.end(), index);
            if (at == attainers.end() || *at != index) {
                attainers.insert(at, index);
                if (attainers.size() > static_cast<std::size_t>(options.max_witnesses))
                    attainers.pop_back();
            }
        }
    };

    if (exhaustive) {
        for (std::uint64_t slot = 0; slot < (size + 1) / 2; ++slot) {
            const std::uint64_t i = slot;
            const std::uint64_t ic = size - 1 - slot;
            const Digraph d = family.member(i);
            const Digraph c = d.complement();
            const int sum = value_of(measure(d, need, options.mode, options.limits)) +
                            value_of(measure(c, need, options.mode, options.limits));
            consider(i, sum);
            if (ic != i)
                consider(ic, sum);
        }
    } else {
        for (std::uint64_t index = 0; index < size; ++index) {
            const Digraph d = family.member(index);
            const Digraph c = d.complement();
            const int sum = value_of(measure(d, need, options.mode, options.limits)) +
                            value_of(measure(c, need, options.mode, options.limits));
            consider(index, sum);
        }
    }

    std::vector<ExtremalWitness> out;
    for (std::uint64_t index : attainers) {
        const Digraph d = family.member(index);
        ReportOptions ropts;
        ropts.mode = options.mode;
        ropts.with_dco = n <= 5;
        ropts.limits = options.limits;
        ExtremalWitness w;
        w.index = index;
        w.digraph6 = serialize_digraph6(d);
        w.sum = best;
        w.report = parameter_report(d, ropts);
        w.complement_report = parameter_report(d.complement(), ropts);
        out.push_back(std::move(w));
    }
    return out;
}

namespace {

nlohmann::json family_json(const FamilySpec& family) {
    nlohmann::json j;
    j["kind"] = family.kind == FamilySpec::Kind::exhaustive ? "exhaustive" : "sampled";
    j["n"] = family.n;
    j["count"] = family.size();
    if (family.kind == FamilySpec::Kind::sampled) {
        j["ps"] = family.ps;
        j["samples_per_p"] = family.samples_per_p;
        j["seed"] = family.seed;
    }
    return j;
}

} // namespace

std::string to_json(const SweepReport& report) {
    nlohmann::json j;
    j["family"] = family_json(report.family);
    j["pair_mode"] = pair_mode_name(report.mode);
    j["digraphs"] = report.digraphs;
    j["wall_ms"] = report.wall_ms;
    j["checks"] = nlohmann::json::array();
    for (const CheckStats& s : report.checks) {
        nlohmann::json cj;
        cj["check"] = check_name(s.check);
        cj["evaluated"] = s.evaluated;
        cj["passed"] = s.passed;
        if (s.bound)
            cj["bound"] = *s.bound;
        j["checks"].push_back(std::move(cj));
    }
    j["violations"] = nlohmann::json::array();
    for (const Violation& v : report.violations)
        j["violations"].push_back({{"index", v.index},
                                   {"digraph6", v.digraph6},
                                   {"check", check_name(v.check)},
                                   {"detail", v.detail}});
    j["extremal"] = nlohmann::json::array();
    for (const ExtremalRecord& e : report.extremal)
        j["extremal"].push_back({{"check", check_name(e.check)},
                                 {"bound", e.bound},
                                 {"max_sum", e.max_sum},
                                 {"index", e.index},
                                 {"digraph6", e.digraph6}});
    return j.dump(2);
}

std::string to_csv(const SweepReport& report) {
    std::string out =
        "digraph6,n,m,dc,dc_c,dac,dac_c,dg,dg_c,dco,checks_passed,violated_checks\n";
    for (const RowRecord& r : report.rows) {
        out += r.digraph6;
        out += ',' + std::to_string(r.n) + ',' + std::to_string(r.m);
        out += ',' + std::to_string(r.dc) + ',' + std::to_string(r.dc_c);
        out += ',' + std::to_string(r.dac) + ',' + std::to_string(r.dac_c);
        out += ',' + std::to_string(r.dg) + ',' + std::to_string(r.dg_c);
        out += ',';
        if (r.dco)
            out += std::to_string(*r.dco);
        out += ',' + std::to_string(r.checks_passed) + ',' + r.violated_checks + '\n';
    }
    return out;
}

std::string to_json(const std::vector<ExtremalWitness>& witnesses) {
    nlohmann::json j = nlohmann::json::array();
    for (const ExtremalWitness& w : witnesses) {
        nlohmann::json wj;
        wj["index"] = w.index;
        wj["digraph6"] = w.digraph6;
        wj["sum"] = w.sum;
        wj["report"] = nlohmann::json::parse(to_json(w.report));
        wj["complement_report"] = nlohmann::json::parse(to_json(w.complement_report));
        j.push_back(std::move(wj));
    }
    return j.dump(2);
}

} // namespace dikroma
