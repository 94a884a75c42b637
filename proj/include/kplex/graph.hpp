#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kplex/bitset.hpp"

namespace kplex {

/// Raised for malformed instance files. `line()` is 1-based, 0 when the
/// error is not tied to a particular line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Immutable simple undirected graph with one adjacency bitset per vertex.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on `n` vertices. Self-loops are dropped, duplicate edges
  /// collapse. `labels` (optional) holds the external id of each vertex.
  Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges, std::vector<std::int64_t> labels = {});

  int n() const { return n_; }
  std::int64_t m() const { return m_; }
  const Bitset& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return degrees_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
  /// External id used in input files (1-based for DIMACS, the raw id for edge lists).
  std::int64_t label(Vertex v) const { return labels_[v]; }

  std::vector<std::pair<Vertex, Vertex>> edges() const;

 private:
  int n_ = 0;
  std::int64_t m_ = 0;
  std::vector<Bitset> adj_;
  std::vector<int> degrees_;
  std::vector<std::int64_t> labels_;
};

enum class InputFormat { kAuto, kDimacs, kEdgeList };

Graph parse_dimacs(std::istream& in);
Graph parse_edgelist(std::istream& in);
/// A leading `p edge` line (after comments) selects DIMACS, otherwise edge list.
Graph parse_graph(std::istream& in, InputFormat format = InputFormat::kAuto);
Graph parse_graph_text(std::string_view text, InputFormat format = InputFormat::kAuto);
Graph load_graph(const std::string& path, InputFormat format = InputFormat::kAuto);

void write_dimacs(const Graph& g, std::ostream& out);

struct DegeneracyOrder {
  std::vector<Vertex> ordering;
  int degeneracy = 0;
};

/// Repeatedly removes a minimum-degree vertex, smallest id first on ties.
DegeneracyOrder degeneracy_order(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // new id -> id in the source graph
};

/// Subgraph induced by `keep`, vertices renumbered in ascending source order.
/// Labels are carried over from the source graph.
InducedSubgraph induced_subgraph(const Graph& g, const Bitset& keep);

/// Erdős–Rényi G(n, p) from a fixed seed.
Graph random_graph(int n, double p, std::uint64_t seed);

}  // namespace kplex
