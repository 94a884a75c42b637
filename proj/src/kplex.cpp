#include "kplex/kplex.hpp"

#include <cassert>
#include <stdexcept>

namespace kplex {

bool is_kplex(const Graph& g, const Bitset& verts, int k) {
  const int size = verts.count();
  bool ok = true;
  verts.for_each([&](Vertex v) {
    if (ok && size - verts.count_and(g.neighbors(v)) > k) ok = false;
  });
  return ok;
}

bool is_kplex(const Graph& g, std::span<const Vertex> verts, int k) {
  return is_kplex(g, Bitset::from_range(g.n(), verts), k);
}

SearchState::SearchState(const Graph& g, int k) : SearchState(g, k, Bitset::full(g.n())) {}

SearchState::SearchState(const Graph& g, int k, Bitset candidates)
    : graph_(&g),
      k_(k),
      in_partial_(g.n()),
      candidates_(std::move(candidates)),
      delta_(static_cast<std::size_t>(g.n()), 0) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (candidates_.width() != g.n()) throw std::invalid_argument("candidate set width does not match graph");
}

SearchState SearchState::with(const Graph& g, int k, std::span<const Vertex> partial, const Bitset& candidates) {
  if (!is_kplex(g, partial, k)) throw std::invalid_argument("partial set is not a k-plex");
  SearchState st(g, k, candidates);
  for (Vertex v : partial) {
    st.candidates_.set(v);
    st.add(v);
  }
  return st;
}

void SearchState::bump_non_neighbors(Vertex v, int by) {
  const Bitset& nb = graph_->neighbors(v);
  for (Vertex w = 0; w < graph_->n(); ++w)
    if (!nb.test(w)) delta_[w] += by;
}

void SearchState::add(Vertex v) {
  assert(candidates_.test(v));
  candidates_.reset(v);
  in_partial_.set(v);
  partial_.push_back(v);
  bump_non_neighbors(v, +1);
}

void SearchState::undo() {
  assert(!partial_.empty());
  const Vertex v = partial_.back();
  partial_.pop_back();
  in_partial_.reset(v);
  candidates_.set(v);
  bump_non_neighbors(v, -1);
}

Bitset SearchState::filter_candidates() {
  Bitset removed(graph_->n());
  Bitset saturated(graph_->n());
  for (Vertex u : partial_)
    if (delta_[u] >= k_) saturated.set(u);
  candidates_.for_each([&](Vertex v) {
    if (delta_[v] + 1 > k_ || !saturated.subset_of(graph_->neighbors(v))) removed.set(v);
  });
  candidates_.and_not(removed);
  return removed;
}

void SearchState::restore_candidates(const Bitset& removed) { candidates_ |= removed; }

}  // namespace kplex
