#ifndef DIKROMA_FORMATS_HPP
#define DIKROMA_FORMATS_HPP

#include <string>
#include <string_view>

#include "dikroma/digraph.hpp"
#include "dikroma/errors.hpp"

namespace dikroma {

// Edge-list text: '#' comment lines, a header line "n m", then m lines
// "u v" (0-based, u != v). Duplicate arcs are rejected. Errors name the
// offending line.
Digraph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Digraph& d);

// digraph6 (nauty-compatible, n <= 62): '&', then the byte n+63, then
// the n*n row-major adjacency bits zero-padded to a multiple of 6, each
// 6-bit group (first bit highest) emitted as the byte group+63. Errors
// name the offending byte offset.
Digraph parse_digraph6(std::string_view text);
std::string serialize_digraph6(const Digraph& d);

// Leading '&' selects digraph6, anything else edge-list.
Digraph parse_digraph(std::string_view text);

} // namespace dikroma

#endif
