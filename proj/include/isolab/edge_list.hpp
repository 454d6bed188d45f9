#pragma once

#include <string>
#include <string_view>

#include "isolab/graph.hpp"

namespace isolab {

/// Text format:
///
///   # comment
///   n <count>
///   <u> <v>
///   ...
///
/// 0-based endpoints, LF line endings, '#' starts a comment anywhere on a line.
/// Self-loops, out-of-range endpoints and duplicate edges (in either
/// orientation) raise ParseError carrying the offending line number.
Graph parse_edge_list(std::string_view text, GraphOptions options = {});

/// Canonical form: header line then one "u v" line per edge with u < v,
/// sorted lexicographically.
std::string write_edge_list(const Graph& g);

Graph read_edge_list_file(const std::string& path, GraphOptions options = {});
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace isolab
