#include "dikroma/formats.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace dikroma {

namespace {

struct LineScanner {
    std::string_view text;
    std::size_t pos = 0;
    int line_no = 0;

    // Next non-empty, non-comment line, stripped of surrounding space.
    bool next(std::string_view& out) {
        while (pos < text.size()) {
            std::size_t eol = text.find('\n', pos);
            if (eol == std::string_view::npos)
                eol = text.size();
            std::string_view line = text.substr(pos, eol - pos);
            pos = eol + 1;
            ++line_no;
            while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front())))
                line.remove_prefix(1);
            while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
                line.remove_suffix(1);
            if (line.empty() || line.front() == '#')
                continue;
            out = line;
            return true;
        }
        return false;
    }

    std::string where() const { return "line " + std::to_string(line_no); }
};

std::vector<long> parse_ints(std::string_view line, std::size_t expect, const std::string& where) {
    std::vector<long> vals;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (p < end) {
        while (p < end && std::isspace(static_cast<unsigned char>(*p)))
            ++p;
        if (p == end)
            break;
        long v = 0;
        auto [next, ec] = std::from_chars(p, end, v);
        if (ec != std::errc())
            throw ParseError(where, "expected integer, got '" + std::string(p, end) + "'");
        vals.push_back(v);
        p = next;
    }
    if (vals.size() != expect)
        throw ParseError(where, "expected " + std::to_string(expect) + " integers, got " +
                                    std::to_string(vals.size()));
    return vals;
}

} // namespace

Digraph parse_edge_list(std::string_view text) {
    LineScanner scan{text};
    std::string_view line;
    if (!scan.next(line))
        throw ParseError("line " + std::to_string(scan.line_no), "missing header line \"n m\"");
    auto header = parse_ints(line, 2, scan.where());
    const long n = header[0];
    const long m = header[1];
    if (n < 1 || n > Digraph::kMaxVertices)
        throw ParseError(scan.where(), "vertex count " + std::to_string(n) + " outside [1, 64]");
    if (m < 0 || m > n * (n - 1))
        throw ParseError(scan.where(), "arc count " + std::to_string(m) + " outside [0, n(n-1)]");

    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (long i = 0; i < m; ++i) {
        if (!scan.next(line))
            throw ParseError(scan.where(), "unexpected end of input, expected " + std::to_string(m) +
                                               " arcs, got " + std::to_string(i));
        auto uv = parse_ints(line, 2, scan.where());
        const long u = uv[0], v = uv[1];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(scan.where(), "vertex out of range [0, " + std::to_string(n) + ")");
        if (u == v)
            throw ParseError(scan.where(), "loop arc " + std::to_string(u) + " -> " + std::to_string(v));
        if (rows[u] >> v & 1)
            throw ParseError(scan.where(), "duplicate arc " + std::to_string(u) + " -> " + std::to_string(v));
        rows[u] |= std::uint64_t{1} << v;
    }
    if (scan.next(line))
        throw ParseError(scan.where(), "trailing garbage '" + std::string(line) + "'");
    return Digraph::from_out_rows(static_cast<int>(n), std::move(rows));
}

std::string serialize_edge_list(const Digraph& d) {
    std::string out = std::to_string(d.order()) + " " + std::to_string(d.arc_count()) + "\n";
    for (auto [u, v] : d.arcs())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Digraph parse_digraph6(std::string_view text) {
    auto at_byte = [](std::size_t i) { return "byte " + std::to_string(i); };
    if (text.empty() || text[0] != '&')
        throw ParseError(at_byte(0), "digraph6 must start with '&'");
    if (text.size() < 2)
        throw ParseError(at_byte(1), "missing order byte");
    const int nb = static_cast<unsigned char>(text[1]);
    if (nb < 63 || nb > 63 + 62)
        throw ParseError(at_byte(1), "order byte " + std::to_string(nb) + " outside [63, 125]");
    const int n = nb - 63;
    if (n < 1)
        throw ParseError(at_byte(1), "vertex count must be at least 1");

    const int nbits = n * n;
    const int ngroups = (nbits + 5) / 6;
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (int g = 0; g < ngroups; ++g) {
        const std::size_t off = 2 + static_cast<std::size_t>(g);
        if (off >= text.size())
            throw ParseError(at_byte(off), "truncated body, expected " + std::to_string(ngroups) + " groups");
        const int b = static_cast<unsigned char>(text[off]);
        if (b < 63 || b > 126)
            throw ParseError(at_byte(off), "body byte " + std::to_string(b) + " outside [63, 126]");
        const int group = b - 63;
        for (int j = 0; j < 6; ++j) {
            if (!(group >> (5 - j) & 1))
                continue;
            const int bit = g * 6 + j;
            if (bit >= nbits)
                throw ParseError(at_byte(off), "nonzero padding bit");
            const int u = bit / n, v = bit % n;
            if (u == v)
                throw ParseError(at_byte(off), "loop arc at vertex " + std::to_string(u));
            rows[u] |= std::uint64_t{1} << v;
        }
    }
    for (std::size_t i = 2 + static_cast<std::size_t>(ngroups); i < text.size(); ++i)
        if (!std::isspace(static_cast<unsigned char>(text[i])))
            throw ParseError(at_byte(i), "trailing garbage");
    return Digraph::from_out_rows(n, std::move(rows));
}

std::string serialize_digraph6(const Digraph& d) {
    const int n = d.order();
    if (n > 62)
        throw CapError("digraph6 output supports at most 62 vertices, got " + std::to_string(n));
    std::string out;
    out += '&';
    out += static_cast<char>(63 + n);
    const int nbits = n * n;
    int group = 0, filled = 0;
    for (int bit = 0; bit < nbits; ++bit) {
        group = group << 1 | static_cast<int>(d.has_arc(bit / n, bit % n));
        if (++filled == 6) {
            out += static_cast<char>(63 + group);
            group = filled = 0;
        }
    }
    if (filled > 0)
        out += static_cast<char>(63 + (group << (6 - filled)));
    return out;
}

Digraph parse_digraph(std::string_view text) {
    std::size_t start = 0;
    while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start])))
        ++start;
    if (start < text.size() && text[start] == '&')
        return parse_digraph6(text.substr(start));
    return parse_edge_list(text);
}

} // namespace dikroma
