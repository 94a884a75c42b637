#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "kplex/bitset.hpp"
#include "kplex/kplex.hpp"

namespace kplex {

enum class ExtractionKind { kColoring, kPartition };

/// A subset of the candidates together with an upper bound on how many of
/// its vertices can join S simultaneously.
struct Extraction {
  Bitset verts;
  int ub = 0;
  ExtractionKind kind = ExtractionKind::kColoring;

  int size() const { return verts.count(); }
};

/// Strict "extracts more per unit of bound" comparison: |a|/ub_a > |b|/ub_b,
/// ties broken by the larger extraction. Evaluated by cross-multiplication;
/// an extraction with ub = 0 has infinite ratio.
bool dise_better(const Extraction& a, const Extraction& b);

struct BoundResult {
  int value = 0;
  std::int64_t color_wins = 0;
  std::int64_t partition_wins = 0;
};

enum class BoundKind { kGcb, kNorules, kRelaxGcb, kDisePub, kGcbPub, kRelaxPub };

inline constexpr BoundKind kAllBoundKinds[] = {BoundKind::kGcb,    BoundKind::kNorules, BoundKind::kRelaxGcb,
                                               BoundKind::kDisePub, BoundKind::kGcbPub, BoundKind::kRelaxPub};

std::string_view to_string(BoundKind kind);
std::optional<BoundKind> parse_bound_kind(std::string_view name);

/// How try_color scores its extraction.
enum class ColoringMode {
  kGcb,      // bare maximal independent set, ub = min(|I|, k)
  kTisub,    // bare maximal independent set, ub = TISUB
  kRelaxed,  // TISUB plus the loose/conflict and adjacency-budget admissions
};

/// Vertices admitted beyond the seed independent set, for inspection in tests.
struct TryColorTrace {
  std::vector<Vertex> seed;
  std::vector<Vertex> loose_or_conflict_admitted;
  std::vector<Vertex> budget_admitted;
};

/// max{i : i-th largest slack >= i} (1-based), 0 if no index qualifies.
int compute_tisub(std::span<const int> slacks);

/// Greedy extraction from `pool` (a subset of st.candidates()).
/// The seed independent set scans vertices by descending slack, ties by id.
Extraction try_color(const SearchState& st, const Bitset& pool, ColoringMode mode = ColoringMode::kRelaxed,
                     TryColorTrace* trace = nullptr);
inline Extraction try_color(const SearchState& st, TryColorTrace* trace = nullptr) {
  return try_color(st, st.candidates(), ColoringMode::kRelaxed, trace);
}

/// Best C \ N(u) over u in S with positive slack, or nothing when every such
/// set is empty.
std::optional<Extraction> select_partition(const SearchState& st, const Bitset& pool);
inline std::optional<Extraction> select_partition(const SearchState& st) {
  return select_partition(st, st.candidates());
}

BoundResult compute_gcb(const SearchState& st);
BoundResult relax_coloring_norules(const SearchState& st);
BoundResult relax_coloring(const SearchState& st);
BoundResult compute_disepub(const SearchState& st);
/// Seesaw between try_color and select_partition, keeping the better
/// extraction each round.
BoundResult select_ub(const SearchState& st);
BoundResult compute_gcbpub(const SearchState& st);

BoundResult compute_bound(BoundKind kind, const SearchState& st);

}  // namespace kplex
