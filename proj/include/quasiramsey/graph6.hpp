#pragma once

#include <string>
#include <string_view>

#include "quasiramsey/graph.hpp"

namespace quasiramsey {

// graph6 (nauty/McKay format). Upper-triangle bits in column order
// (0,1),(0,2),(1,2),(0,3),..., six bits per byte offset by 63, zero padding.
// An optional ">>graph6<<" header is accepted; a trailing newline is not.
// Throws ParseError carrying the byte offset of the first bad byte.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

}  // namespace quasiramsey
