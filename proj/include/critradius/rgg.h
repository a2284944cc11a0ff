#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "critradius/geometry.h"
#include "critradius/sampling.h"

namespace critradius {

struct Edge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  double length = 0.0;
};

/// Undirected simple graph in compressed adjacency form. Neighbor lists are
/// sorted; no self-loops.
class Graph {
 public:
  Graph() = default;
  /// Builds from an edge list; duplicate edges and self-loops are dropped.
  Graph(std::size_t n, std::span<const Edge> edges, double radius = 0.0);

  std::size_t size() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }
  double radius() const { return radius_; }

  std::span<const std::uint32_t> neighbors(std::size_t v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(std::size_t v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> targets_;
  double radius_ = 0.0;
};

/// All pairs (i < j) with distance(p_i, p_j) <= r, by grid bucketing.
/// Edges come out in (u, v) order.
std::vector<Edge> neighbor_pairs(std::span<const Point> points, double r);

/// Geometric graph with the closed threshold: edge iff distance <= r.
Graph build_graph(std::span<const Point> points, double r);
inline Graph build_graph(const PointSet& points, double r) { return build_graph(points.points, r); }

/// Throws DomainError on an empty graph.
std::size_t min_degree(const Graph& graph);

bool is_connected(const Graph& graph);
/// 2-connected: at least 3 vertices, connected, no articulation point.
bool is_biconnected(const Graph& graph);

/// Whether the graph is k-connected. A graph with n <= k vertices is not.
/// Dispatches to DFS checks for k <= 2 and to the flow-based test otherwise.
bool vertex_connectivity_at_least(const Graph& graph, int k);

/// Flow-based k-connectivity test for any k (Even's algorithm): unit vertex
/// capacity max-flow from each of the first k vertices, then from a super
/// source attached to each prefix v_0..v_{j-1} to v_j.
bool vertex_connectivity_at_least_flow(const Graph& graph, int k);

/// Number of internally vertex-disjoint s-t paths, counting a direct edge
/// as one path, capped at `cap`.
int local_vertex_connectivity(const Graph& graph, std::size_t s, std::size_t t, int cap);

/// rho(points; delta >= k): the largest k-th nearest neighbor distance.
/// Requires k >= 1 and more than k points.
double min_degree_radius(std::span<const Point> points, int k);
inline double min_degree_radius(const PointSet& points, int k) {
  return min_degree_radius(points.points, k);
}

/// rho(points; kappa >= k): the smallest pairwise distance at which the
/// geometric graph is k-connected.
double connectivity_radius(std::span<const Point> points, int k);
inline double connectivity_radius(const PointSet& points, int k) {
  return connectivity_radius(points.points, k);
}

struct RadiusResult {
  double rho_delta = 0.0;
  double rho_kappa = 0.0;
  int k = 0;
  bool equal = false;
};

/// Both critical radii at order k, sharing the neighbor search.
RadiusResult critical_radii(std::span<const Point> points, int k);
inline RadiusResult critical_radii(const PointSet& points, int k) {
  return critical_radii(points.points, k);
}

}  // namespace critradius
