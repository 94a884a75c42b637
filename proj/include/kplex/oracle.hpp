#pragma once

#include <span>
#include <vector>

#include "kplex/bitset.hpp"
#include "kplex/graph.hpp"

namespace kplex::oracle {

inline constexpr int kMaxGraphSize = 25;
inline constexpr int kMaxExtensionPool = 20;

struct OracleResult {
  int size = 0;
  std::vector<Vertex> witness;  // ascending ids
};

/// Exhaustive include/exclude enumeration over all vertices. The witness is
/// the first maximum met when vertices are tried in id order, include first.
/// Throws std::invalid_argument above kMaxGraphSize vertices.
OracleResult max_kplex_bruteforce(const Graph& g, int k);

/// |S| + the largest X subset of C with S ∪ X a k-plex.
/// Throws std::invalid_argument when |C| > kMaxExtensionPool, S is not a
/// k-plex, or S and C overlap.
int max_extension_bruteforce(const Graph& g, int k, std::span<const Vertex> partial, const Bitset& candidates);

}  // namespace kplex::oracle
