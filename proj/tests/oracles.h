#pragma once

// Independent reference implementations used only by tests. Nothing here
// calls the library's geometry or graph algorithms.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <bit>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "critradius/geometry.h"

namespace oracle {

using critradius::Point;

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
};

/// Mean and standard error of samples of a bounded score, scaled by `volume`.
class Accumulator {
 public:
  void add(double x) {
    ++count_;
    sum_ += x;
    sum_sq_ += x * x;
  }
  Estimate finish(double volume) const {
    const double n = static_cast<double>(count_);
    const double mean = sum_ / n;
    const double var = std::max(0.0, sum_sq_ / n - mean * mean);
    return {volume * mean, volume * std::sqrt(var / n)};
  }

 private:
  std::size_t count_ = 0;
  double sum_ = 0.0;
  double sum_sq_ = 0.0;
};

/// Half-plane test against counterclockwise vertices.
inline bool in_convex_polygon(const std::vector<Point>& poly, Point p) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point a = poly[i];
    const Point b = poly[(i + 1) % poly.size()];
    if ((b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x) < 0.0) return false;
  }
  return true;
}

inline bool in_disk(Point c, double r, Point p) {
  const double dx = p.x - c.x;
  const double dy = p.y - c.y;
  return dx * dx + dy * dy <= r * r;
}

/// |B(center, r) ∩ polygon| by hit counting in the ball's bounding square.
inline Estimate mc_ball_polygon_area(const std::vector<Point>& poly, Point center, double r,
                                     std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(-r, r);
  Accumulator acc;
  for (std::size_t i = 0; i < samples; ++i) {
    const Point p{center.x + u(gen), center.y + u(gen)};
    acc.add(in_disk(center, r, p) && in_convex_polygon(poly, p) ? 1.0 : 0.0);
  }
  return acc.finish(4.0 * r * r);
}

/// |B(center, r) ∩ B(disk_center, disk_r)| by hit counting.
inline Estimate mc_ball_disk_area(Point disk_center, double disk_r, Point center, double r,
                                  std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(-r, r);
  Accumulator acc;
  for (std::size_t i = 0; i < samples; ++i) {
    const Point p{center.x + u(gen), center.y + u(gen)};
    acc.add(in_disk(center, r, p) && in_disk(disk_center, disk_r, p) ? 1.0 : 0.0);
  }
  return acc.finish(4.0 * r * r);
}

/// |{x : |x| <= r, x_1 <= t}| by hit counting.
inline Estimate mc_segment_area(double r, double t, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(-r, r);
  Accumulator acc;
  for (std::size_t i = 0; i < samples; ++i) {
    const double x = u(gen);
    const double y = u(gen);
    acc.add(x * x + y * y <= r * r && x <= t ? 1.0 : 0.0);
  }
  return acc.finish(4.0 * r * r);
}

/// Shadow area of two radius-r disks A = B((0,0), r), B = B((d,0), r), as a
/// signed set combination: |B \ A| - |half of A facing B| + |sector of A with
/// half-angle acos(d/2r) facing B| - |triangle A E F|, E,F = (d, ±sqrt(r²-d²)).
inline Estimate mc_shadow_area(double r, double d, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> ux(-r, d + r);
  std::uniform_real_distribution<double> uy(-r, r);
  const double half_angle = std::acos(d / (2.0 * r));
  const double h = std::sqrt(r * r - d * d);
  const std::vector<Point> triangle{{0.0, 0.0}, {d, -h}, {d, h}};
  Accumulator acc;
  for (std::size_t i = 0; i < samples; ++i) {
    const Point p{ux(gen), uy(gen)};
    const bool in_a = in_disk({0.0, 0.0}, r, p);
    const bool in_b = in_disk({d, 0.0}, r, p);
    double score = 0.0;
    if (in_b && !in_a) score += 1.0;
    if (in_a && p.x >= 0.0) score -= 1.0;
    if (in_a && std::abs(std::atan2(p.y, p.x)) <= half_angle) score += 1.0;
    if (d > 0.0 && in_convex_polygon(triangle, p)) score -= 1.0;
    acc.add(score);
  }
  return acc.finish((d + 2.0 * r) * 2.0 * r);
}

/// All pairs (i < j) at distance <= r, by exhaustive comparison.
inline std::vector<std::pair<std::size_t, std::size_t>> brute_pairs(const std::vector<Point>& pts,
                                                                    double r) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double dx = pts[i].x - pts[j].x;
      const double dy = pts[i].y - pts[j].y;
      if (std::sqrt(dx * dx + dy * dy) <= r) out.emplace_back(i, j);
    }
  }
  return out;
}

inline double dist(Point a, Point b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

/// Max over points of the k-th smallest distance to another point, from the
/// full sorted distance rows.
inline double brute_min_degree_radius(const std::vector<Point>& pts, int k) {
  double worst = 0.0;
  std::vector<double> row;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    row.clear();
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j != i) row.push_back(dist(pts[i], pts[j]));
    }
    std::sort(row.begin(), row.end());
    worst = std::max(worst, row[static_cast<std::size_t>(k) - 1]);
  }
  return worst;
}

/// Longest edge of the Euclidean minimum spanning tree, by dense Prim.
inline double prim_longest_edge(const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  std::vector<double> best(n, INFINITY);
  std::vector<char> used(n, 0);
  best[0] = 0.0;
  double longest = 0.0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!used[i] && (pick == n || best[i] < best[pick])) pick = i;
    }
    used[pick] = 1;
    longest = std::max(longest, best[pick]);
    for (std::size_t i = 0; i < n; ++i) {
      if (!used[i]) best[i] = std::min(best[i], dist(pts[pick], pts[i]));
    }
  }
  return longest;
}

/// Adjacency-matrix graph for exhaustive checks.
struct SmallGraph {
  int n = 0;
  std::vector<std::vector<char>> adj;

  explicit SmallGraph(int vertices) : n(vertices), adj(vertices, std::vector<char>(vertices, 0)) {}
  void add(int u, int v) { adj[u][v] = adj[v][u] = 1; }
};

/// Connected after deleting the vertices flagged in `removed`.
inline bool connected_without(const SmallGraph& g, const std::vector<char>& removed) {
  int start = -1;
  int alive = 0;
  for (int v = 0; v < g.n; ++v) {
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  }
  if (alive <= 1) return true;
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < g.n; ++w) {
      if (g.adj[v][w] && !removed[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == alive;
}

/// k-connected: more than k vertices and no removal of fewer than k
/// vertices disconnects the graph. Enumerates every subset.
inline bool brute_k_connected(const SmallGraph& g, int k) {
  if (g.n <= k) return false;
  for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
    if (std::popcount(mask) >= k) continue;
    std::vector<char> removed(g.n, 0);
    for (int v = 0; v < g.n; ++v) removed[v] = (mask >> v) & 1u;
    if (!connected_without(g, removed)) return false;
  }
  return true;
}

}  // namespace oracle
