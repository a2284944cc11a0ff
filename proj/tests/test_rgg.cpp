#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "oracles.h"

#include "critradius/errors.h"
#include "critradius/rgg.h"
#include "critradius/sampling.h"

using namespace critradius;

namespace {

Graph graph_from(const oracle::SmallGraph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      if (g.adj[u][v]) edges.push_back({static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v), 1.0});
    }
  }
  return Graph(g.n, edges, 1.0);
}

oracle::SmallGraph cycle(int n) {
  oracle::SmallGraph g(n);
  for (int i = 0; i < n; ++i) g.add(i, (i + 1) % n);
  return g;
}

oracle::SmallGraph complete(int n) {
  oracle::SmallGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add(i, j);
  }
  return g;
}

std::set<double> pairwise_distances(const std::vector<Point>& pts) {
  std::set<double> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) out.insert(distance(pts[i], pts[j]));
  }
  return out;
}

}  // namespace

TEST_SUITE("rgg") {

TEST_CASE("closed threshold") {
  const std::vector<Point> two{{0, 0}, {1, 0}};
  CHECK(build_graph(two, 0.5).edge_count() == 0);
  CHECK(build_graph(two, 1.0).edge_count() == 1);
  CHECK(build_graph(two, 1.0).adjacent(0, 1));
}

TEST_CASE("grid neighbor search equals brute force") {
  const auto pts = sample_uniform(unit_square(), 1000, 4).points;
  for (double r : {0.0, 0.01, 0.1, 0.37, 2.0}) {
    const auto edges = neighbor_pairs(pts, r);
    const auto expected = oracle::brute_pairs(pts, r);
    REQUIRE(edges.size() == expected.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      CHECK(edges[i].u == expected[i].first);
      CHECK(edges[i].v == expected[i].second);
    }
  }
}

TEST_CASE("graph adjacency is symmetric and sorted") {
  const auto pts = sample_uniform(unit_disk(), 400, 8).points;
  const Graph g = build_graph(pts, 0.12);
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto nb = g.neighbors(v);
    CHECK(std::is_sorted(nb.begin(), nb.end()));
    for (std::size_t w : nb) {
      CHECK(w != v);
      CHECK(g.adjacent(w, v));
    }
  }
}

TEST_CASE("min degree") {
  CHECK(min_degree(graph_from(complete(4))) == 3);
  CHECK(min_degree(graph_from(oracle::SmallGraph(1))) == 0);
  oracle::SmallGraph path(3);
  path.add(0, 1);
  path.add(1, 2);
  CHECK(min_degree(graph_from(path)) == 1);
  CHECK_THROWS_AS(min_degree(graph_from(oracle::SmallGraph(0))), DomainError);
}

TEST_CASE("vertex connectivity small cases") {
  CHECK(vertex_connectivity_at_least(graph_from(cycle(5)), 2));
  CHECK_FALSE(vertex_connectivity_at_least(graph_from(cycle(5)), 3));
  CHECK(vertex_connectivity_at_least(graph_from(complete(5)), 4));
  CHECK_FALSE(vertex_connectivity_at_least(graph_from(complete(5)), 5));
  CHECK_FALSE(vertex_connectivity_at_least(graph_from(oracle::SmallGraph(1)), 1));
  CHECK_THROWS_AS(vertex_connectivity_at_least(graph_from(cycle(4)), 0), DomainError);
}

TEST_CASE("vertex connectivity matches exhaustive removal") {
  std::mt19937_64 gen(12345);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int disagreements = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(gen() % 8);
    const double p = 0.3 + 0.65 * u(gen);
    oracle::SmallGraph g(n);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (u(gen) < p) g.add(a, b);
      }
    }
    const Graph graph = graph_from(g);
    bool prev = true;
    for (int k = 1; k <= n; ++k) {
      const bool expected = oracle::brute_k_connected(g, k);
      const bool fast = vertex_connectivity_at_least(graph, k);
      const bool flow = vertex_connectivity_at_least_flow(graph, k);
      if (fast != expected || flow != expected) ++disagreements;
      CHECK((prev || !fast));
      prev = fast;
    }
  }
  CHECK(disagreements == 0);
}

TEST_CASE("critical radii on hand-built point sets") {
  const std::vector<Point> line{{0, 0}, {1, 0}, {3, 0}};
  CHECK(min_degree_radius(line, 1) == 2.0);
  CHECK(min_degree_radius(line, 2) == 3.0);
  CHECK(connectivity_radius(line, 1) == 2.0);

  const std::vector<Point> corners{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK(connectivity_radius(corners, 2) == 1.0);
  CHECK(connectivity_radius(corners, 3) == doctest::Approx(std::sqrt(2.0)));

  CHECK_THROWS_AS(min_degree_radius(line, 3), DomainError);
  CHECK_THROWS_AS(connectivity_radius(line, 3), DomainError);
  CHECK_THROWS_AS(connectivity_radius(line, 0), DomainError);
}

TEST_CASE("min-degree radius equals the sorted-distance oracle") {
  for (int inst = 0; inst < 10; ++inst) {
    const auto pts = sample_uniform(unit_square(), 500, 300 + inst).points;
    for (int k : {1, 2, 4}) CHECK(min_degree_radius(pts, k) == oracle::brute_min_degree_radius(pts, k));
  }
}

TEST_CASE("connectivity radius at k=1 equals the longest MST edge") {
  for (int inst = 0; inst < 10; ++inst) {
    const auto pts = sample_uniform(unit_regular_polygon(6), 300, 700 + inst).points;
    CHECK(connectivity_radius(pts, 1) == oracle::prim_longest_edge(pts));
  }
}

TEST_CASE("connectivity radius equals a linear scan with the exhaustive oracle") {
  for (int inst = 0; inst < 20; ++inst) {
    const auto pts = sample_uniform(unit_square(), 9, 900 + inst).points;
    for (int k = 1; k <= 3; ++k) {
      double expected = -1.0;
      for (double r : pairwise_distances(pts)) {
        oracle::SmallGraph g(9);
        for (const auto& [a, b] : oracle::brute_pairs(pts, r)) g.add(static_cast<int>(a), static_cast<int>(b));
        if (oracle::brute_k_connected(g, k)) {
          expected = r;
          break;
        }
      }
      CAPTURE(inst);
      CAPTURE(k);
      CHECK(connectivity_radius(pts, k) == expected);
    }
  }
}

TEST_CASE("radii are pairwise distances, ordered, and permutation invariant") {
  std::mt19937_64 gen(6);
  for (int inst = 0; inst < 5; ++inst) {
    auto pts = sample_uniform(unit_disk(), 150, 50 + inst).points;
    const auto dists = pairwise_distances(pts);
    for (int k : {1, 2, 3}) {
      const RadiusResult res = critical_radii(pts, k);
      CHECK(res.k == k);
      CHECK(res.rho_delta <= res.rho_kappa);
      CHECK(res.equal == (res.rho_delta == res.rho_kappa));
      CHECK(dists.count(res.rho_delta) == 1);
      CHECK(dists.count(res.rho_kappa) == 1);
      CHECK(res.rho_delta == min_degree_radius(pts, k));
      CHECK(res.rho_kappa == connectivity_radius(pts, k));
      // Exactly at the radius the property holds, just below it fails.
      const Graph at = build_graph(pts, res.rho_kappa);
      CHECK(vertex_connectivity_at_least(at, k));
      const Graph below = build_graph(pts, std::nextafter(res.rho_kappa, 0.0));
      CHECK_FALSE(vertex_connectivity_at_least(below, k));

      auto shuffled = pts;
      std::shuffle(shuffled.begin(), shuffled.end(), gen);
      const RadiusResult again = critical_radii(shuffled, k);
      CHECK(again.rho_delta == res.rho_delta);
      CHECK(again.rho_kappa == res.rho_kappa);
    }
  }
}

TEST_CASE("k-connectivity is monotone in r") {
  const auto pts = sample_uniform(unit_square(), 200, 31).points;
  const double rho = connectivity_radius(pts, 2);
  for (double f : {1.0, 1.1, 1.5, 3.0}) CHECK(vertex_connectivity_at_least(build_graph(pts, rho * f), 2));
  for (double f : {0.5, 0.9}) CHECK_FALSE(vertex_connectivity_at_least(build_graph(pts, rho * f), 2));
}

}  // TEST_SUITE
