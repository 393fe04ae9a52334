#ifndef CIRCDEF_GRAPH6_HPP
#define CIRCDEF_GRAPH6_HPP

#include <string>
#include <string_view>

#include "circdef/cubic_graph.hpp"

namespace circdef {

/// Decodes a graph6 string (optionally prefixed by ">>graph6<<") into a
/// cubic graph. Throws Malformed6 on syntax errors and NotCubic when the
/// encoded graph is not cubic.
CubicGraph graph6_decode(std::string_view text);

/// Encodes a closed cubic graph in graph6. Supports the short form (n <= 62)
/// and the 4-byte long form (n <= 258047). Throws HasDangles.
std::string graph6_encode(const CubicGraph& g);

} // namespace circdef

#endif
