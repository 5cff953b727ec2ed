#pragma once

#include <iosfwd>
#include <string>

#include "gsample/graph.hpp"

namespace gsample {

struct LoadOptions {
  bool collapse_duplicates = true;
  bool drop_self_loops = true;
  bool largest_component_only = true;
};

/// Reads a SNAP-style edge list: one "u v" pair per line, '#' comments,
/// LF or CRLF. Node labels are remapped to dense ids in order of first
/// appearance; Graph::label() recovers the original. Directed inputs are
/// symmetrized (u->v and v->u collapse to one edge when duplicates collapse).
/// Throws ParseError on a malformed line, std::runtime_error when nothing survives.
Graph load_edge_list(std::istream& in, const LoadOptions& options = {});
Graph load_edge_list_file(const std::string& path, const LoadOptions& options = {});

/// Writes one line per edge using dense ids; self-loops as "u u" and
/// parallel edges as repeated lines.
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace gsample
