#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

#include "kplex/bounds.hpp"
#include "kplex/graph.hpp"
#include "kplex/kplex.hpp"

namespace kplex {

using Seconds = std::chrono::duration<double>;

inline constexpr Seconds kDefaultCutoff{1800.0};

struct SolveReport {
  std::vector<Vertex> best;  // ids of the input graph, ascending
  int size = 0;
  bool optimal = false;
  int heuristic_size = 0;
  std::int64_t nodes = 0;
  std::int64_t bound_calls = 0;
  std::int64_t color_wins = 0;
  std::int64_t partition_wins = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// Called at every node where the configured bound is evaluated. The state
/// refers to the reduced graph the search runs on.
using BoundObserver = std::function<void(const SearchState&, const BoundResult&)>;

struct SolveOptions {
  BoundKind bound = BoundKind::kRelaxPub;
  Seconds cutoff = kDefaultCutoff;
  /// Seed lb with heuristic_lb. Off means the search starts from lb = 0.
  bool use_heuristic = true;
  BoundObserver observer;
};

/// Greedy k-plex: one greedy growth per start vertex, starts taken in reverse
/// degeneracy order, best result kept.
std::vector<Vertex> heuristic_lb(const Graph& g, int k);

/// Vertices surviving iterated removal of every v with deg(v) + k <= lb.
Bitset peel(const Graph& g, int k, int lb);

/// Exact maximum k-plex by branch and bound. Throws std::invalid_argument
/// for k < 1.
SolveReport solve(const Graph& g, int k, const SolveOptions& options);
inline SolveReport solve(const Graph& g, int k, BoundKind bound, Seconds cutoff = kDefaultCutoff) {
  return solve(g, k, SolveOptions{bound, cutoff, true, {}});
}

/// Solves `g` and, at the first `samples` bounded nodes, compares the bound
/// with the brute-force optimum of that node. Graphs above 16 vertices are
/// rejected with std::invalid_argument.
bool omega_upper_check(const Graph& g, int k, BoundKind bound, int samples);

}  // namespace kplex
