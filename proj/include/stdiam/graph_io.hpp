#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "stdiam/graph.hpp"

namespace stdiam {

enum class ParseErrorKind {
  malformed_header,
  vertex_out_of_range,
  negative_weight,
  weight_in_unweighted,
  missing_weight,
  malformed_line,
  edge_count_mismatch,
  malformed_sets,
};

const char* to_string(ParseErrorKind kind) noexcept;

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& what);

  ParseErrorKind kind() const noexcept { return kind_; }
  /// 1-based; 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

/// Edge-list format:
///   p <n> <m> <directed:0|1> <weighted:0|1>
///   e <u> <v> [<w>]        (m times, any order)
/// Blank lines and lines starting with 'c' or '#' are ignored.
Graph load_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

/// Partition format:
///   [mode bichromatic|st|subset]
///   S <id...>
///   [T <id...>]
/// Without a mode line the mode is inferred: no T or T = V\S is
/// bichromatic, T = S is subset, anything else is st.
PartitionSpec load_partition(std::istream& in, std::size_t vertex_count);
void write_partition(std::ostream& out, const PartitionSpec& p);

Graph load_graph_file(const std::string& path);
PartitionSpec load_partition_file(const std::string& path,
                                  std::size_t vertex_count);

}  // namespace stdiam
