#pragma once

#include <string>
#include <string_view>

#include "ivg/graph.hpp"

namespace ivg {

// graph6 text form: one byte n + 63, then the upper-triangle bits x(0,1),
// x(0,2), x(1,2), x(0,3), ... packed big-endian into 6-bit groups, each
// offset by 63.  Only the short header (n <= 62) is supported; our graphs
// stop at 32 vertices anyway.
[[nodiscard]] auto to_graph6(const Graph& g) -> std::string;

// Throws ParseError on anything malformed: bad length, bytes outside
// [63, 126], nonzero padding bits, or a vertex count beyond 32.
[[nodiscard]] auto from_graph6(std::string_view text) -> Graph;

}  // namespace ivg
