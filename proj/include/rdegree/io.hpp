#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "rdegree/graph.hpp"

namespace rdegree {

/// Result of reading an edge list. `labels[v]` is the id vertex v carried in
/// the input file.
struct EdgeListGraph {
  Graph graph;
  std::vector<std::uint64_t> labels;
};

/// Parses whitespace-separated edge pairs. Blank lines and `#` comments are
/// skipped. A leading `n <count>` line fixes the order and requires ids in
/// 0..count-1; without it the distinct ids are compacted, preserving their
/// order, onto 0..k-1.
EdgeListGraph parse_edge_list(std::istream& in);
EdgeListGraph parse_edge_list(std::string_view text);

/// One `u v` line per edge, preceded by an `n <count>` header only when the
/// graph has isolated vertices (the order is otherwise implied by the ids).
void write_edge_list(const Graph& g, std::ostream& out);

/// Decodes one graph6 line (short form only, n <= 62). Trailing `\r`/`\n`
/// are ignored.
Graph parse_graph6(std::string_view line);

std::string write_graph6(const Graph& g);

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

}  // namespace rdegree
