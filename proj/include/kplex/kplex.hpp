#pragma once

#include <span>
#include <vector>

#include "kplex/bitset.hpp"
#include "kplex/graph.hpp"

namespace kplex {

/// True iff every v in `verts` has at most k non-neighbours in `verts`,
/// counting v itself.
bool is_kplex(const Graph& g, const Bitset& verts, int k);
bool is_kplex(const Graph& g, std::span<const Vertex> verts, int k);

/// Partial k-plex S, its candidate set C and the cached non-neighbour counts
/// delta[v] = |S \ N(v)| for every vertex of the graph.
///
/// Mutation goes through add()/undo() and filter_candidates()/restore(), so a
/// depth-first search can walk the tree without copying the state.
class SearchState {
 public:
  /// S = {}, C = all vertices.
  SearchState(const Graph& g, int k);
  /// S = {}, C = `candidates`.
  SearchState(const Graph& g, int k, Bitset candidates);

  /// Builds S by adding `partial` in order, then sets C = `candidates` \ S.
  /// Throws std::invalid_argument when `partial` is not a k-plex.
  static SearchState with(const Graph& g, int k, std::span<const Vertex> partial, const Bitset& candidates);

  const Graph& graph() const { return *graph_; }
  int k() const { return k_; }
  std::span<const Vertex> partial() const { return partial_; }
  int partial_size() const { return static_cast<int>(partial_.size()); }
  const Bitset& in_partial() const { return in_partial_; }
  const Bitset& candidates() const { return candidates_; }
  int candidate_count() const { return candidates_.count(); }

  int delta(Vertex v) const { return delta_[v]; }
  /// k - delta(v). For v outside S this counts v itself as one of the
  /// tolerated non-neighbours once it joins.
  int slack(Vertex v) const { return k_ - delta_[v]; }

  /// Moves v from C to S and bumps delta of every non-neighbour of v
  /// (v included). Undone by undo().
  void add(Vertex v);
  /// Reverts the most recent add().
  void undo();

  /// Drops candidates that cannot join S: delta(v) + 1 > k, or v misses a
  /// saturated member u of S (delta(u) = k). Returns the removed vertices.
  Bitset filter_candidates();
  /// Puts previously removed candidates back.
  void restore_candidates(const Bitset& removed);

  void remove_candidate(Vertex v) { candidates_.reset(v); }
  void insert_candidate(Vertex v) { candidates_.set(v); }

 private:
  void bump_non_neighbors(Vertex v, int by);

  const Graph* graph_;
  int k_;
  std::vector<Vertex> partial_;
  Bitset in_partial_;
  Bitset candidates_;
  std::vector<int> delta_;
};

}  // namespace kplex
