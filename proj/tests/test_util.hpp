#pragma once

#include <string>
#include <vector>

#include "kplex/bitset.hpp"
#include "kplex/graph.hpp"
#include "kplex/kplex.hpp"

namespace kplex::testing {

inline std::string fixture_path(const std::string& name) { return std::string(KPLEX_FIXTURE_DIR) + "/" + name; }

inline Graph fixture(const std::string& name) { return load_graph(fixture_path(name)); }

/// State with S = `partial` and C = every other vertex, then filtered.
inline SearchState state_with(const Graph& g, int k, const std::vector<Vertex>& partial) {
  Bitset cands = Bitset::full(g.n());
  for (Vertex v : partial) cands.reset(v);
  SearchState st = SearchState::with(g, k, partial, cands);
  st.filter_candidates();
  return st;
}

/// S = {0}, C = {1..5} on the two complementarity fixtures.
inline SearchState fig2_state(const Graph& g) { return state_with(g, 2, {0}); }

/// S = {0,1,2}, C = {3..10} on the coloring example, k = 4.
inline SearchState fig1_state(const Graph& g) { return state_with(g, 4, {0, 1, 2}); }

inline Graph cycle(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

inline Graph complete(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

}  // namespace kplex::testing
