#pragma once

#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ngon/graph.hpp"

namespace ngon {

/// A graph together with its named subsets and an optional embedded μ block,
/// i.e. everything one graph file carries.
struct GraphDocument {
  BipartiteGraph graph;
  std::map<std::string, std::vector<VertexId>> subsets;
  /// Raw `mu …` directive payloads (without the leading keyword), in file order.
  std::vector<std::string> mu_lines;

  /// Throws std::out_of_range if the subset is not declared.
  VertexSet named(const std::string& name) const;

  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Strict parser for the line-oriented graph format:
///
///   ngon <n>                    required, first declaration
///   vertex <id> <part>
///   edge <id> <id>              endpoints declared earlier
///   subset <name> <id> ...
///   mu <payload...>             optional μ-function directives
///
/// '#' starts a comment. Duplicate declarations are errors.
GraphDocument parse_graph(std::istream& in);
GraphDocument parse_graph_string(const std::string& text);
GraphDocument load_graph(const std::string& path);

/// Canonical serialization; parse_graph(write_graph(d)) == d.
std::string write_graph(const GraphDocument& doc);
void save_graph(const GraphDocument& doc, const std::string& path);

/// Resolves a subset argument: a declared name, or a literal `ids:1,2,3`.
VertexSet resolve_subset(const GraphDocument& doc, const std::string& spec);

std::string format_ids(const std::vector<VertexId>& ids, char sep = ',');

}  // namespace ngon
