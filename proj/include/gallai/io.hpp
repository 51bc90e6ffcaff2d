#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

/// Decodes one graph6 line. An optional ">>graph6<<" header and trailing
/// whitespace are accepted; embedded newlines, bytes outside 63..126, a
/// wrong byte count and nonzero padding bits raise ParseError.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding without header or newline.
std::string write_graph6(const Graph& g);

/// One graph per non-blank line.
std::vector<Graph> parse_graph6_stream(std::istream& in);

/// "u v" per line, 0-based; '#' starts a comment; blank lines are ignored.
/// The order is one more than the largest index seen.
Graph parse_edge_list(std::string_view text);

std::string write_edge_list(const Graph& g);

}  // namespace gallai
