#include "dikroma/greedy.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <string>

#include "dikroma/errors.hpp"

namespace dikroma {

namespace {

void require_ordering(const VertexOrdering& phi, int n) {
    if (!is_permutation(phi, n))
        throw std::invalid_argument("ordering is not a permutation of the vertex set");
}

} // namespace

Coloring greedy_color(const Digraph& d, const VertexOrdering& phi) {
    require_ordering(phi, d.order());
    std::vector<int> colors(static_cast<std::size_t>(d.order()), 0);
    std::vector<VertexSet> classes;
    for (int v : phi) {
        int chosen = 0;
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (!d.has_cycle_through(classes[i], v)) {
                chosen = static_cast<int>(i) + 1;
                break;
            }
        if (!chosen) {
            classes.emplace_back();
            chosen = static_cast<int>(classes.size());
        }
        classes[static_cast<std::size_t>(chosen) - 1] =
            classes[static_cast<std::size_t>(chosen) - 1].with(v);
        colors[static_cast<std::size_t>(v)] = chosen;
    }
    return Coloring(std::move(colors), static_cast<int>(classes.size()));
}

namespace {

// Exhaustive search over legal runs. best() gives the minimum number of
// NEW colors opened from step `pos` to the end, given the current class
// contents. Future cost depends only on which vertex sets the classes are
// — not on their indices — so the memo key is the sorted mask multiset
// (which also fixes pos: its union is exactly the processed prefix).
struct RunSearch {
    const Digraph& d;
    const VertexOrdering& phi;
    std::map<std::vector<std::uint64_t>, int> memo;

    int best(std::vector<std::uint64_t>& classes, int pos) {
        if (pos == d.order())
            return 0;
        std::vector<std::uint64_t> key = classes;
        std::sort(key.begin(), key.end());
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        const int v = phi[static_cast<std::size_t>(pos)];
        const std::uint64_t bit = std::uint64_t{1} << v;
        int result = -1;
        // index, not iterate: deeper forced steps push/pop on `classes`,
        // which can reallocate out from under a range-for reference
        const std::size_t open = classes.size();
        for (std::size_t i = 0; i < open; ++i) {
            if (d.has_cycle_through(VertexSet(classes[i]), v))
                continue;
            classes[i] |= bit;
            const int sub = best(classes, pos + 1);
            classes[i] &= ~bit;
            if (result < 0 || sub < result)
                result = sub;
        }
        if (result < 0) { // no class admits v: forced to open a color
            classes.push_back(bit);
            result = 1 + best(classes, pos + 1);
            classes.pop_back();
        }
        memo.emplace(std::move(key), result);
        return result;
    }
};

} // namespace

ParsimoniousRun parsimonious_min_colors(const Digraph& d, const VertexOrdering& phi) {
    require_ordering(phi, d.order());
    RunSearch search{d, phi, {}};
    std::vector<std::uint64_t> classes;
    ParsimoniousRun run;
    run.ordering = phi;
    run.trace.reserve(phi.size());
    // Front-to-back trace reconstruction: at each step take the smallest
    // choice whose completion still attains the optimum, so the final
    // trace is the lexicographically smallest optimal one.
    for (int pos = 0; pos < d.order(); ++pos) {
        const int v = phi[static_cast<std::size_t>(pos)];
        const std::uint64_t bit = std::uint64_t{1} << v;
        const int want = search.best(classes, pos);
        int chosen = 0;
        for (std::size_t i = 0; i < classes.size(); ++i) {
            if (d.has_cycle_through(VertexSet(classes[i]), v))
                continue;
            classes[i] |= bit;
            if (search.best(classes, pos + 1) == want) {
                chosen = static_cast<int>(i) + 1;
                break;
            }
            classes[i] &= ~bit;
        }
        if (!chosen) { // either no class admits v, or every reuse wastes a color
            bool any_admissible = false;
            for (const auto& cls : classes)
                if (!d.has_cycle_through(VertexSet(cls), v)) {
                    any_admissible = true;
                    break;
                }
            assert(!any_admissible && "some admissible reuse must attain the optimum");
            (void)any_admissible;
            classes.push_back(bit);
            chosen = static_cast<int>(classes.size());
        }
        run.trace.push_back(chosen);
    }
    run.colors_used = static_cast<int>(classes.size());
    return run;
}

Coloring replay_run(const Digraph& d, const ParsimoniousRun& run) {
    if (!is_permutation(run.ordering, d.order()))
        throw ReplayError(0, "ordering is not a permutation of the vertex set");
    if (run.trace.size() != run.ordering.size())
        throw ReplayError(0, "trace and ordering lengths differ");
    std::vector<int> colors(static_cast<std::size_t>(d.order()), 0);
    std::vector<VertexSet> classes;
    for (std::size_t i = 0; i < run.ordering.size(); ++i) {
        const int step = static_cast<int>(i) + 1;
        const int v = run.ordering[i];
        const int c = run.trace[i];
        const int t = static_cast<int>(classes.size());
        if (c < 1 || c > t + 1)
            throw ReplayError(step, "color " + std::to_string(c) + " out of range with " +
                                        std::to_string(t) + " classes open");
        if (c == t + 1) {
            for (int j = 0; j < t; ++j)
                if (!d.has_cycle_through(classes[static_cast<std::size_t>(j)], v))
                    throw ReplayError(step, "opened color " + std::to_string(c) +
                                                " although class " + std::to_string(j + 1) +
                                                " admits vertex " + std::to_string(v));
            classes.push_back(VertexSet::single(v));
        } else {
            if (d.has_cycle_through(classes[static_cast<std::size_t>(c) - 1], v))
                throw ReplayError(step, "vertex " + std::to_string(v) +
                                            " closes a directed cycle in class " +
                                            std::to_string(c));
            classes[static_cast<std::size_t>(c) - 1] =
                classes[static_cast<std::size_t>(c) - 1].with(v);
        }
        colors[static_cast<std::size_t>(v)] = c;
    }
    if (run.colors_used != static_cast<int>(classes.size()))
        throw ReplayError(static_cast<int>(run.ordering.size()),
                          "run claims " + std::to_string(run.colors_used) + " colors but used " +
                              std::to_string(classes.size()));
    return Coloring(std::move(colors), static_cast<int>(classes.size()));
}

} // namespace dikroma
