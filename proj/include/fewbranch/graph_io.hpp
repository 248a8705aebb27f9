#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fewbranch/graph.hpp"
#include "fewbranch/spanning_tree.hpp"

namespace fewbranch {

/// Input text rejected by a parser. what() carries a "line N: " prefix when
/// the problem is tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

/// Edge-list text:
///
///   # comment
///   p <n> <m>        (optional header; without it n = 1 + max id)
///   <u> <v>          (one edge per line, 0 <= u, v < n)
///
/// Duplicate edges are merged. Self-loops, ids >= n and malformed lines throw
/// ParseError. The header's m is informational and not checked against the
/// edge lines, since duplicates collapse.
Graph parse_graph(std::string_view text);
Graph read_graph(std::istream& in);

/// Canonical form: "p n m" then sorted "u v" lines with u < v.
std::string to_edge_list(const Graph& g);

/// Parent-array form: "t <n>" then one "v parent(v)" line per vertex, with
/// the root's parent written as -1.
std::string to_parent_array(const SpanningTree& t);
SpanningTree parse_tree(const Graph& host, std::string_view text);

}  // namespace fewbranch
