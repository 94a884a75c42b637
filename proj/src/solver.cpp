#include "kplex/solver.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "kplex/oracle.hpp"

namespace kplex {

namespace {

std::vector<Vertex> greedy_from(const Graph& g, int k, Vertex start) {
  const int n = g.n();
  std::vector<int> delta(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> members;
  Bitset saturated(n);
  Bitset open = Bitset::full(n);

  auto add = [&](Vertex v) {
    members.push_back(v);
    open.reset(v);
    const Bitset& nb = g.neighbors(v);
    for (Vertex w = 0; w < n; ++w)
      if (!nb.test(w)) ++delta[w];
    for (Vertex u : members)
      if (delta[u] >= k) saturated.set(u);
  };

  add(start);
  for (;;) {
    Vertex pick = -1;
    int pick_adj = -1;
    const int size = static_cast<int>(members.size());
    open.for_each([&](Vertex v) {
      if (delta[v] + 1 > k || !saturated.subset_of(g.neighbors(v))) return;
      const int adj = size - delta[v];
      if (adj > pick_adj) {
        pick = v;
        pick_adj = adj;
      }
    });
    if (pick < 0) break;
    add(pick);
  }
  return members;
}

class BranchAndBound {
 public:
  BranchAndBound(const InducedSubgraph& reduced, const SolveOptions& options, SolveReport& report,
                 std::chrono::steady_clock::time_point deadline)
      : reduced_(reduced), options_(options), report_(report), deadline_(deadline) {}

  void run(SearchState& st) { branch(st); }
  bool timed_out() const { return timed_out_; }

 private:
  void branch(SearchState& st) {
    ++report_.nodes;
    if ((report_.nodes & 1023) == 0 && std::chrono::steady_clock::now() >= deadline_) timed_out_ = true;
    if (timed_out_) return;

    const Bitset removed = st.filter_candidates();
    if (st.partial_size() > report_.size) record(st);

    const int candidates = st.candidate_count();
    if (candidates > 0 && st.partial_size() + candidates > report_.size) {
      const BoundResult bound = compute_bound(options_.bound, st);
      ++report_.bound_calls;
      report_.color_wins += bound.color_wins;
      report_.partition_wins += bound.partition_wins;
      if (options_.observer) options_.observer(st, bound);
      if (bound.value > report_.size) expand(st);
    }
    st.restore_candidates(removed);
  }

  void expand(SearchState& st) {
    const Graph& g = st.graph();
    const Bitset& cands = st.candidates();
    Vertex pick = -1;
    int pick_slack = 0;
    int pick_adj = 0;
    cands.for_each([&](Vertex v) {
      const int slack = st.slack(v);
      const int adj = g.neighbors(v).count_and(cands);
      if (pick < 0 || slack < pick_slack || (slack == pick_slack && adj < pick_adj)) {
        pick = v;
        pick_slack = slack;
        pick_adj = adj;
      }
    });

    st.add(pick);
    branch(st);
    st.undo();
    if (timed_out_) return;

    st.remove_candidate(pick);
    branch(st);
    st.insert_candidate(pick);
  }

  void record(const SearchState& st) {
    report_.size = st.partial_size();
    report_.best.clear();
    for (Vertex v : st.partial()) report_.best.push_back(reduced_.to_parent[v]);
    std::sort(report_.best.begin(), report_.best.end());
  }

  const InducedSubgraph& reduced_;
  const SolveOptions& options_;
  SolveReport& report_;
  std::chrono::steady_clock::time_point deadline_;
  bool timed_out_ = false;
};

}  // namespace

std::vector<Vertex> heuristic_lb(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  std::vector<Vertex> best;
  const auto order = degeneracy_order(g).ordering;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto found = greedy_from(g, k, *it);
    if (found.size() > best.size()) best = std::move(found);
  }
  std::sort(best.begin(), best.end());
  return best;
}

Bitset peel(const Graph& g, int k, int lb) {
  Bitset alive = Bitset::full(g.n());
  std::vector<int> deg(static_cast<std::size_t>(g.n()));
  std::deque<Vertex> queue;
  for (Vertex v = 0; v < g.n(); ++v) {
    deg[v] = g.degree(v);
    if (deg[v] + k <= lb) {
      alive.reset(v);
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    (g.neighbors(v) & alive).for_each([&](Vertex w) {
      if (--deg[w] + k <= lb) {
        alive.reset(w);
        queue.push_back(w);
      }
    });
  }
  return alive;
}

SolveReport solve(const Graph& g, int k, const SolveOptions& options) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  const auto deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(options.cutoff);

  SolveReport report;
  if (options.use_heuristic) {
    report.best = heuristic_lb(g, k);
    report.size = static_cast<int>(report.best.size());
  }
  report.heuristic_size = report.size;

  const InducedSubgraph reduced = induced_subgraph(g, peel(g, k, report.size));
  SearchState st(reduced.graph, k);
  BranchAndBound search(reduced, options, report, deadline);
  search.run(st);

  report.optimal = !search.timed_out();
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

bool omega_upper_check(const Graph& g, int k, BoundKind bound, int samples) {
  if (g.n() > 16) throw std::invalid_argument("omega_upper_check is limited to 16 vertices");
  int seen = 0;
  bool ok = true;
  SolveOptions options;
  options.bound = bound;
  options.use_heuristic = false;
  options.observer = [&](const SearchState& st, const BoundResult& result) {
    if (seen >= samples) return;
    ++seen;
    const int truth = oracle::max_extension_bruteforce(st.graph(), st.k(), st.partial(), st.candidates());
    if (result.value < truth) ok = false;
  };
  solve(g, k, options);
  return ok;
}

}  // namespace kplex
