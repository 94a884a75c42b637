#include "kplex/bounds.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>

namespace kplex {

bool dise_better(const Extraction& a, const Extraction& b) {
  const std::int64_t sa = a.size(), sb = b.size();
  if (a.ub == 0 || b.ub == 0) {
    if (a.ub == 0 && b.ub == 0) return sa > sb;
    return a.ub == 0;
  }
  const std::int64_t lhs = sa * b.ub;
  const std::int64_t rhs = sb * a.ub;
  return lhs > rhs || (lhs == rhs && sa > sb);
}

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::kGcb: return "gcb";
    case BoundKind::kNorules: return "norules";
    case BoundKind::kRelaxGcb: return "relaxgcb";
    case BoundKind::kDisePub: return "disepub";
    case BoundKind::kGcbPub: return "gcbpub";
    case BoundKind::kRelaxPub: return "relaxpub";
  }
  return "?";
}

std::optional<BoundKind> parse_bound_kind(std::string_view name) {
  for (BoundKind kind : kAllBoundKinds)
    if (to_string(kind) == name) return kind;
  return std::nullopt;
}

int compute_tisub(std::span<const int> slacks) {
  std::vector<int> sorted(slacks.begin(), slacks.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  int best = 0;
  for (int i = 1; i <= static_cast<int>(sorted.size()); ++i)
    if (sorted[i - 1] >= i) best = i;
  return best;
}

namespace {

/// Scan orders over a candidate pool: descending slack for seeding and the
/// loose/conflict pass, ascending slack for the adjacency-budget pass. Ties
/// by ascending id in both.
struct ScanOrder {
  std::vector<Vertex> descending;
  std::vector<Vertex> ascending;

  ScanOrder(const SearchState& st, const Bitset& pool) {
    descending = pool.to_vector();
    std::stable_sort(descending.begin(), descending.end(),
                     [&](Vertex a, Vertex b) { return st.slack(a) > st.slack(b); });
    ascending = pool.to_vector();
    std::stable_sort(ascending.begin(), ascending.end(),
                     [&](Vertex a, Vertex b) { return st.slack(a) < st.slack(b); });
  }
};

Extraction try_color_ordered(const SearchState& st, const Bitset& pool, const ScanOrder& order, ColoringMode mode,
                             TryColorTrace* trace) {
  const Graph& g = st.graph();
  Extraction ex{Bitset(g.n()), 0, ExtractionKind::kColoring};
  Bitset& members = ex.verts;

  std::vector<int> slacks;
  for (Vertex v : order.descending) {
    if (!pool.test(v) || members.intersects(g.neighbors(v))) continue;
    members.set(v);
    slacks.push_back(st.slack(v));
    if (trace) trace->seed.push_back(v);
  }
  assert(members.any());

  if (mode == ColoringMode::kGcb) {
    ex.ub = std::min(static_cast<int>(slacks.size()), st.k());
    return ex;
  }
  // slacks were collected in descending order already
  ex.ub = compute_tisub(slacks);
  if (mode == ColoringMode::kTisub) return ex;

  const int ub = ex.ub;
  Bitset loose_or_conflict(g.n());
  members.for_each([&](Vertex v) {
    if (st.slack(v) > ub) loose_or_conflict.set(v);
  });
  int lc = loose_or_conflict.count();

  if (lc < ub) {
    for (Vertex v : order.descending) {
      if (!pool.test(v) || members.test(v)) continue;
      Bitset fresh = g.neighbors(v) & members;
      fresh.and_not(loose_or_conflict);
      const int added = 1 + fresh.count();
      if (lc + added > ub) continue;
      members.set(v);
      loose_or_conflict |= fresh;
      loose_or_conflict.set(v);
      lc += added;
      if (trace) trace->loose_or_conflict_admitted.push_back(v);
      if (lc == ub) break;
    }
  }

  for (Vertex v : order.ascending) {
    if (st.slack(v) >= ub) break;
    if (!pool.test(v) || members.test(v)) continue;
    if (g.neighbors(v).count_and(members) <= ub - st.slack(v)) {
      members.set(v);
      if (trace) trace->budget_admitted.push_back(v);
    }
  }
  return ex;
}

BoundResult coloring_bound(const SearchState& st, ColoringMode mode) {
  BoundResult result{st.partial_size(), 0, 0};
  Bitset pool = st.candidates();
  const ScanOrder order(st, pool);
  while (pool.any()) {
    const Extraction ex = try_color_ordered(st, pool, order, mode, nullptr);
    pool.and_not(ex.verts);
    result.value += ex.ub;
  }
  return result;
}

BoundResult seesaw_bound(const SearchState& st, ColoringMode mode) {
  BoundResult result{st.partial_size(), 0, 0};
  Bitset pool = st.candidates();
  const ScanOrder order(st, pool);
  while (pool.any()) {
    Extraction color = try_color_ordered(st, pool, order, mode, nullptr);
    std::optional<Extraction> part = select_partition(st, pool);
    const Extraction* chosen = &color;
    if (part && dise_better(*part, color)) {
      chosen = &*part;
      ++result.partition_wins;
    } else {
      ++result.color_wins;
    }
    pool.and_not(chosen->verts);
    result.value += chosen->ub;
  }
  return result;
}

}  // namespace

Extraction try_color(const SearchState& st, const Bitset& pool, ColoringMode mode, TryColorTrace* trace) {
  if (pool.none()) throw std::logic_error("try_color on an empty candidate pool");
  return try_color_ordered(st, pool, ScanOrder(st, pool), mode, trace);
}

std::optional<Extraction> select_partition(const SearchState& st, const Bitset& pool) {
  const Graph& g = st.graph();
  std::optional<Extraction> best;
  for (Vertex u : st.partial()) {
    const int slack = st.slack(u);
    if (slack <= 0) continue;
    Extraction ex{difference(pool, g.neighbors(u)), 0, ExtractionKind::kPartition};
    const int size = ex.size();
    if (size == 0) continue;
    ex.ub = std::min(size, slack);
    if (!best || dise_better(ex, *best)) best = std::move(ex);
  }
  return best;
}

BoundResult compute_gcb(const SearchState& st) { return coloring_bound(st, ColoringMode::kGcb); }
BoundResult relax_coloring_norules(const SearchState& st) { return coloring_bound(st, ColoringMode::kTisub); }
BoundResult relax_coloring(const SearchState& st) { return coloring_bound(st, ColoringMode::kRelaxed); }

BoundResult compute_disepub(const SearchState& st) {
  BoundResult result{st.partial_size(), 0, 0};
  Bitset pool = st.candidates();
  while (auto part = select_partition(st, pool)) {
    pool.and_not(part->verts);
    result.value += part->ub;
  }
  // what is left is adjacent to all of S
  result.value += pool.count();
  return result;
}

BoundResult select_ub(const SearchState& st) { return seesaw_bound(st, ColoringMode::kRelaxed); }
BoundResult compute_gcbpub(const SearchState& st) { return seesaw_bound(st, ColoringMode::kGcb); }

BoundResult compute_bound(BoundKind kind, const SearchState& st) {
  switch (kind) {
    case BoundKind::kGcb: return compute_gcb(st);
    case BoundKind::kNorules: return relax_coloring_norules(st);
    case BoundKind::kRelaxGcb: return relax_coloring(st);
    case BoundKind::kDisePub: return compute_disepub(st);
    case BoundKind::kGcbPub: return compute_gcbpub(st);
    case BoundKind::kRelaxPub: return select_ub(st);
  }
  throw std::invalid_argument("unknown bound kind");
}

}  // namespace kplex
