#pragma once

#include <string>
#include <string_view>

#include "itree/graph.hpp"

namespace itree {

// graph6 codec, canonical ASCII form.
//
// Order field: n <= 62 is one byte n+63; 63 <= n <= 258047 is '~' followed
// by three bytes carrying n in 6-bit big-endian groups, each +63. Larger
// orders are refused (use the edge-list format instead).
//
// Bit field: upper-triangle entries x(0,1), x(0,2), x(1,2), x(0,3), ...
// packed into 6-bit groups, most significant bit first, zero-padded to a
// whole group, each group +63. Every payload byte must lie in 63..126.
//
// parse_graph6 accepts an optional ">>graph6<<" prefix and trailing
// CR/LF, and throws std::invalid_argument with a reason on malformed
// input (bad header, byte out of range, truncated or oversized payload).
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

}  // namespace itree
