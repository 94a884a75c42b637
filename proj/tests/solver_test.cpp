#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kplex/oracle.hpp"
#include "kplex/solver.hpp"
#include "test_util.hpp"

using namespace kplex;

namespace {

Graph k6_minus_matching() {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v)
      if (!(u % 2 == 0 && v == u + 1)) edges.emplace_back(u, v);
  return Graph(6, edges);
}

}  // namespace

TEST_CASE("heuristic_lb") {
  CHECK(heuristic_lb(testing::complete(5), 2).size() == 5);
  const auto edgeless = heuristic_lb(Graph(4, {}), 2);
  CHECK(edgeless.size() == 2);
  CHECK(oracle::max_kplex_bruteforce(Graph(4, {}), 2).size == 2);
  CHECK(heuristic_lb(Graph(0, {}), 2).empty());
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = random_graph(20, 0.5, seed);
    const auto found = heuristic_lb(g, 3);
    CHECK(is_kplex(g, found, 3));
  }
}

TEST_CASE("peel") {
  const Graph k5 = testing::complete(5);
  CHECK(peel(k5, 2, 5).count() == 5);
  CHECK(peel(k5, 2, 6).count() == 0);
  CHECK(peel(k5, 2, 0).count() == 5);

  const Graph star(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  CHECK(peel(star, 1, 2).none());
  CHECK(peel(star, 1, 1).count() == 6);
}

TEST_CASE("solve small instances") {
  for (BoundKind kind : kAllBoundKinds) {
    CAPTURE(to_string(kind));
    const SolveReport c5 = solve(testing::cycle(5), 2, kind);
    CHECK(c5.size == 3);
    CHECK(c5.optimal);
    CHECK(c5.nodes >= 1);
    CHECK(is_kplex(testing::cycle(5), c5.best, 2));

    const Graph km = k6_minus_matching();
    CHECK(solve(km, 2, kind).size == 6);
    CHECK(oracle::max_kplex_bruteforce(km, 2).size == 6);

    const SolveReport empty = solve(Graph(0, {}), 1, kind);
    CHECK(empty.size == 0);
    CHECK(empty.optimal);
  }
  CHECK_THROWS_AS(solve(testing::cycle(5), 0, BoundKind::kGcb), std::invalid_argument);
}

TEST_CASE("solve matches the oracle on random graphs") {
  int instance = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const int n = 4 + static_cast<int>(seed % 13);
    const double p = std::vector<double>{0.2, 0.5, 0.8}[seed % 3];
    const Graph g = random_graph(n, p, seed * 7919);
    for (int k = 1; k <= 4; ++k) {
      const int truth = oracle::max_kplex_bruteforce(g, k).size;
      for (BoundKind kind : kAllBoundKinds) {
        const SolveReport r = solve(g, k, kind);
        CAPTURE(seed);
        CAPTURE(k);
        CAPTURE(to_string(kind));
        CHECK(r.size == truth);
        CHECK(r.size >= r.heuristic_size);
        CHECK(is_kplex(g, r.best, k));
        CHECK(static_cast<int>(r.best.size()) == r.size);
        ++instance;
      }
    }
  }
  CHECK(instance == 60 * 4 * 6);
}

TEST_CASE("solve without the heuristic still finds the optimum") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = random_graph(12, 0.5, seed);
    SolveOptions opts;
    opts.use_heuristic = false;
    opts.bound = BoundKind::kRelaxPub;
    CHECK(solve(g, 2, opts).size == oracle::max_kplex_bruteforce(g, 2).size);
  }
}

TEST_CASE("seesaw counters add up to the bound calls' rounds") {
  const Graph g = random_graph(30, 0.5, 11);
  const SolveReport gcb = solve(g, 2, BoundKind::kGcb);
  CHECK(gcb.color_wins == 0);
  CHECK(gcb.partition_wins == 0);
  const SolveReport pub = solve(g, 2, BoundKind::kRelaxPub);
  CHECK(pub.color_wins + pub.partition_wins >= pub.bound_calls);
  const SolveReport again = solve(g, 2, BoundKind::kRelaxPub);
  CHECK(again.nodes == pub.nodes);
  CHECK(again.color_wins == pub.color_wins);
  CHECK(again.partition_wins == pub.partition_wins);
}

TEST_CASE("cutoff returns a valid best-so-far") {
  const Graph g = random_graph(150, 0.9, 1);
  const auto start = std::chrono::steady_clock::now();
  const SolveReport r = solve(g, 4, BoundKind::kGcb, Seconds(0.2));
  const Seconds took = std::chrono::steady_clock::now() - start;
  CHECK_FALSE(r.optimal);
  CHECK(took.count() < 1.5);
  CHECK(is_kplex(g, r.best, 4));
  CHECK(r.size >= r.heuristic_size);
}

TEST_CASE("omega_upper_check") {
  CHECK(omega_upper_check(random_graph(10, 0.5, 3), 2, BoundKind::kRelaxPub, 100));
  CHECK(omega_upper_check(testing::complete(4), 1, BoundKind::kGcb, 100));
  CHECK(omega_upper_check(Graph(1, {}), 1, BoundKind::kRelaxGcb, 10));
  CHECK_THROWS_AS(omega_upper_check(Graph(17, {}), 2, BoundKind::kGcb, 10), std::invalid_argument);
}
