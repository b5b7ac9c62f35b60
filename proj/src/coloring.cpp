#include "dikroma/coloring.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <map>
#include <sstream>

#include "dikroma/errors.hpp"

namespace dikroma {

std::string pair_mode_name(PairMode mode) {
    return mode == PairMode::ordered ? "ordered" : "unordered";
}

Coloring::Coloring(std::vector<int> colors_in, int k_in) : colors(std::move(colors_in)), k(k_in) {
    assert(k >= (colors.empty() ? 0 : 1));
    std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
    for (int c : colors) {
        assert(c >= 1 && c <= k);
        seen[static_cast<std::size_t>(c)] = true;
    }
    for (int c = 1; c <= k; ++c)
        assert(seen[static_cast<std::size_t>(c)] && "every color 1..k must be used");
}

VertexSet Coloring::class_of(int color) const {
    VertexSet s;
    for (int v = 0; v < order(); ++v)
        if (colors[static_cast<std::size_t>(v)] == color)
            s = s.with(v);
    return s;
}

std::vector<VertexSet> Coloring::classes() const {
    std::vector<VertexSet> out(static_cast<std::size_t>(k));
    for (int v = 0; v < order(); ++v)
        out[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)]) - 1] =
            out[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)]) - 1].with(v);
    return out;
}

Coloring normalize(const std::vector<int>& raw, NormalizationReport* report) {
    std::map<int, int> relabel;
    for (int c : raw) {
        if (c < 1)
            throw std::invalid_argument("colors must be positive, got " + std::to_string(c));
        relabel.emplace(c, 0);
    }
    int next = 0;
    bool changed = false;
    for (auto& [old_color, new_color] : relabel) {
        new_color = ++next;
        if (new_color != old_color)
            changed = true;
    }
    std::vector<int> colors;
    colors.reserve(raw.size());
    for (int c : raw)
        colors.push_back(relabel[c]);
    if (report) {
        report->changed = changed;
        report->relabeling.assign(relabel.begin(), relabel.end());
    }
    return Coloring(std::move(colors), next);
}

bool is_acyclic_coloring(const Digraph& d, const Coloring& c) {
    assert(c.order() == d.order());
    for (const VertexSet& cls : c.classes())
        if (!d.is_acyclic(cls))
            return false;
    return true;
}

std::vector<std::uint64_t> coverage_matrix(const Digraph& d, const Coloring& c) {
    assert(c.order() == d.order());
    assert(c.k <= 64);
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(c.k), 0);
    const auto classes = c.classes();
    for (int u = 0; u < d.order(); ++u) {
        const int i = c.color_of(u) - 1;
        const std::uint64_t out = d.out_neighbors(u).bits;
        for (int j = 0; j < c.k; ++j)
            if (out & classes[static_cast<std::size_t>(j)].bits)
                rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    }
    return rows;
}

bool is_complete_coloring(const Digraph& d, const Coloring& c, PairMode mode) {
    const auto cover = coverage_matrix(d, c);
    for (int i = 0; i < c.k; ++i)
        for (int j = i + 1; j < c.k; ++j) {
            const bool ij = (cover[static_cast<std::size_t>(i)] >> j) & 1;
            const bool ji = (cover[static_cast<std::size_t>(j)] >> i) & 1;
            if (mode == PairMode::ordered ? !(ij && ji) : !(ij || ji))
                return false;
        }
    return true;
}

bool is_digrundy_coloring(const Digraph& d, const Coloring& c) {
    if (!is_acyclic_coloring(d, c))
        return false;
    const auto classes = c.classes();
    for (int v = 0; v < d.order(); ++v) {
        const int j = c.color_of(v);
        for (int i = 1; i < j; ++i)
            if (!d.has_cycle_through(classes[static_cast<std::size_t>(i) - 1], v))
                return false;
    }
    return true;
}

Coloring parse_coloring(const std::string& text, int expected_n) {
    std::istringstream in(text);
    int k = 0;
    if (!(in >> k) || k < 1)
        throw ParseError("coloring header", "expected positive color count");
    std::vector<int> colors(static_cast<std::size_t>(expected_n), 0);
    std::vector<bool> assigned(static_cast<std::size_t>(expected_n), false);
    for (int i = 0; i < expected_n; ++i) {
        int v = 0;
        int c = 0;
        if (!(in >> v >> c))
            throw ParseError("coloring entry " + std::to_string(i + 1),
                             "expected \"vertex color\" pair");
        if (v < 0 || v >= expected_n)
            throw ParseError("coloring entry " + std::to_string(i + 1),
                             "vertex " + std::to_string(v) + " out of range");
        if (assigned[static_cast<std::size_t>(v)])
            throw ParseError("coloring entry " + std::to_string(i + 1),
                             "vertex " + std::to_string(v) + " colored twice");
        if (c < 1 || c > k)
            throw ParseError("coloring entry " + std::to_string(i + 1),
                             "color " + std::to_string(c) + " outside 1.." + std::to_string(k));
        assigned[static_cast<std::size_t>(v)] = true;
        colors[static_cast<std::size_t>(v)] = c;
    }
    std::string tail;
    if (in >> tail)
        throw ParseError("coloring tail", "trailing content \"" + tail + "\"");
    std::vector<bool> used(static_cast<std::size_t>(k) + 1, false);
    for (int c : colors)
        used[static_cast<std::size_t>(c)] = true;
    for (int c = 1; c <= k; ++c)
        if (!used[static_cast<std::size_t>(c)])
            throw ParseError("coloring", "color " + std::to_string(c) + " is unused");
    return Coloring(std::move(colors), k);
}

std::string serialize_coloring(const Coloring& c) {
    std::string out = std::to_string(c.k) + "\n";
    for (int v = 0; v < c.order(); ++v)
        out += std::to_string(v) + " " + std::to_string(c.color_of(v)) + "\n";
    return out;
}

} // namespace dikroma
