#pragma once

// graph6 text codec for undirected simple graphs.
//
// Format summary: a graph on n vertices is one ASCII line.  The order is
// encoded first (one byte '?'+n for n <= 62, otherwise '~' followed by a
// 3-byte big-endian base-64 number, or '~~' followed by 6 bytes for
// n >= 258048).  The upper triangle of the adjacency matrix, read column by
// column (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...), is then packed into
// 6-bit groups, each stored as one printable byte value + 63 ('?'..'~').
// Trailing padding bits must be zero.

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "sqenergy/graph.hpp"

namespace sqenergy {

// Serializes a graph to its graph6 line (without a trailing newline).
std::string to_graph6(const Graph& g);

// Parses one graph6 line.  A leading ">>graph6<<" header and surrounding
// whitespace/newline are tolerated.  Throws std::invalid_argument with a
// specific message for: empty input, a malformed order field, a line whose
// length does not match the declared order, a byte outside '?'..'~', and
// nonzero bits in the final padding group.
Graph from_graph6(const std::string& line);

// Reads consecutive graph6 lines from a stream (blank lines are skipped).
// Returns std::nullopt at end of input; malformed lines throw as above.
std::optional<Graph> read_graph6_line(std::istream& in);

// Convenience: decodes every line of a stream.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace sqenergy
