#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kplex/kplex.hpp"
#include "test_util.hpp"

using namespace kplex;

namespace {

int delta_from_scratch(const Graph& g, const SearchState& st, Vertex v) {
  int d = 0;
  for (Vertex u : st.partial())
    if (!g.adjacent(u, v)) ++d;  // counts v itself when v is in S
  return d;
}

void check_deltas(const Graph& g, const SearchState& st) {
  for (Vertex v = 0; v < g.n(); ++v) CHECK(st.delta(v) == delta_from_scratch(g, st, v));
}

}  // namespace

TEST_CASE("is_kplex") {
  const Graph c5 = testing::cycle(5);
  CHECK_FALSE(is_kplex(c5, std::vector<Vertex>{0, 1, 2, 3, 4}, 2));
  CHECK(is_kplex(c5, std::vector<Vertex>{0, 1, 2, 3, 4}, 3));
  for (Vertex s = 0; s < 5; ++s) CHECK(is_kplex(c5, std::vector<Vertex>{s, (s + 1) % 5, (s + 2) % 5}, 2));
  CHECK(is_kplex(c5, std::vector<Vertex>{3}, 1));
  CHECK(is_kplex(c5, std::vector<Vertex>{}, 1));
  CHECK_FALSE(is_kplex(c5, std::vector<Vertex>{0, 2}, 1));
}

TEST_CASE("slack") {
  const Graph g(3, {{0, 1}});
  SearchState st(g, 3);
  CHECK(st.slack(1) == 3);

  SearchState two(g, 2);
  two.add(0);
  CHECK(two.slack(1) == 2);
  CHECK(two.slack(2) == 1);
  CHECK(two.slack(0) == 1);
}

TEST_CASE("add and undo") {
  const Graph g(2, {});
  SearchState st(g, 2);
  st.add(0);
  CHECK(st.partial_size() == 1);
  CHECK_FALSE(st.candidates().test(0));
  CHECK(st.delta(0) == 1);
  CHECK(st.delta(1) == 1);

  const Graph k3 = testing::complete(3);
  SearchState clique(k3, 1);
  for (Vertex v = 0; v < 3; ++v) clique.add(v);
  for (Vertex v = 0; v < 3; ++v) CHECK(clique.delta(v) == 1);

  SearchState a(k3, 2);
  a.add(1);
  const Bitset cands = a.candidates();
  const std::vector<int> deltas{a.delta(0), a.delta(1), a.delta(2)};
  a.add(2);
  a.undo();
  CHECK(a.candidates() == cands);
  CHECK(std::vector<int>{a.delta(0), a.delta(1), a.delta(2)} == deltas);
  CHECK(a.partial_size() == 1);
}

TEST_CASE("filter_candidates") {
  SUBCASE("saturated member excludes its non-neighbours") {
    // a=0, b=1 non-adjacent, v=2 adjacent to a only
    const Graph g(3, {{0, 2}});
    SearchState st(g, 2);
    st.add(0);
    st.add(1);
    CHECK(st.delta(1) == 2);
    const Bitset removed = st.filter_candidates();
    CHECK(removed.test(2));
    CHECK(st.candidates().none());
    st.restore_candidates(removed);
    CHECK(st.candidates().test(2));
  }
  SUBCASE("own slack") {
    const Graph g(2, {});
    SearchState st(g, 1);
    st.add(0);
    st.filter_candidates();
    CHECK_FALSE(st.candidates().test(1));
  }
  SUBCASE("empty S leaves C alone") {
    const Graph g = testing::cycle(5);
    SearchState st(g, 1);
    st.filter_candidates();
    CHECK(st.candidate_count() == 5);
  }
}

TEST_CASE("SearchState::with rejects non-k-plex seeds") {
  const Graph g(3, {});
  CHECK_THROWS_AS(SearchState::with(g, 1, std::vector<Vertex>{0, 1}, Bitset::full(3)), std::invalid_argument);
  CHECK_THROWS_AS(SearchState(g, 0), std::invalid_argument);
}

TEST_CASE("random walks keep the cache exact") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 10);
    const int k = 1 + static_cast<int>(rng() % 4);
    const Graph g = random_graph(n, 0.5, rng());
    SearchState st(g, k);
    std::vector<Bitset> removed;
    for (int step = 0; step < 3 * n; ++step) {
      const auto op = rng() % 4;
      if (op == 0 && st.partial_size() > 0 && removed.empty()) {
        st.undo();
      } else if (op == 1) {
        removed.push_back(st.filter_candidates());
        // after filtering every candidate joins S as a k-plex
        st.candidates().for_each([&](Vertex v) {
          std::vector<Vertex> grown(st.partial().begin(), st.partial().end());
          grown.push_back(v);
          CHECK(is_kplex(g, grown, k));
        });
      } else if (op == 2 && !removed.empty()) {
        st.restore_candidates(removed.back());
        removed.pop_back();
      } else if (removed.empty() == false && st.candidate_count() > 0) {
        const auto cands = st.candidates().to_vector();
        const Vertex v = cands[rng() % cands.size()];
        const Bitset before = st.candidates();
        const std::vector<Vertex> partial_before(st.partial().begin(), st.partial().end());
        std::vector<int> deltas_before(static_cast<std::size_t>(n));
        for (Vertex w = 0; w < n; ++w) deltas_before[w] = st.delta(w);
        st.add(v);
        CHECK(is_kplex(g, st.in_partial(), k));
        check_deltas(g, st);
        st.undo();
        CHECK(st.candidates() == before);
        for (Vertex w = 0; w < n; ++w) CHECK(st.delta(w) == deltas_before[w]);
        CHECK(std::vector<Vertex>(st.partial().begin(), st.partial().end()) == partial_before);
        st.add(v);
        removed.clear();
      }
      check_deltas(g, st);
      CHECK_FALSE(st.in_partial().intersects(st.candidates()));
    }
  }
}
