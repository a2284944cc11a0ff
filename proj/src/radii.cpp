#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <queue>
#include <string>

#include "critradius/rgg.h"
#include "spatial_grid.h"

namespace critradius {

namespace {

void require_order(std::span<const Point> points, int k, const char* what) {
  if (k < 1) throw DomainError(std::string(what) + ": k must be at least 1");
  if (points.size() <= static_cast<std::size_t>(k)) {
    throw DomainError(std::string(what) + ": need more than k points (n=" +
                      std::to_string(points.size()) + ", k=" + std::to_string(k) + ")");
  }
}

double bounding_diagonal(std::span<const Point> points) {
  BoundingBox box{points.front(), points.front()};
  for (const Point& p : points) {
    box.lo.x = std::min(box.lo.x, p.x);
    box.lo.y = std::min(box.lo.y, p.y);
    box.hi.x = std::max(box.hi.x, p.x);
    box.hi.y = std::max(box.hi.y, p.y);
  }
  return box.diagonal();
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --components_;
    return true;
  }
  std::size_t components() const { return components_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t components_;
};

/// Kruskal over length-sorted edges: the edge that joins the last two
/// components, i.e. the longest minimum spanning tree edge.
std::optional<double> bottleneck_spanning_length(std::size_t n, std::span<const Edge> sorted) {
  DisjointSets sets(n);
  for (const Edge& e : sorted) {
    if (sets.unite(e.u, e.v) && sets.components() == 1) return e.length;
  }
  return std::nullopt;
}

bool k_connected_prefix(std::size_t n, std::span<const Edge> sorted, double r, int k) {
  const auto end = std::upper_bound(sorted.begin(), sorted.end(), r,
                                    [](double value, const Edge& e) { return value < e.length; });
  const Graph g(n, std::span<const Edge>(sorted.begin(), end), r);
  return vertex_connectivity_at_least(g, k);
}

double connectivity_radius_from(std::span<const Point> points, int k, double lower) {
  const std::size_t n = points.size();
  const double diag = bounding_diagonal(points);
  const double everything = diag * (1.0 + 1e-9);
  double hi = lower;
  for (;;) {
    std::vector<Edge> edges = neighbor_pairs(points, hi);
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
      if (a.length != b.length) return a.length < b.length;
      return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    if (k == 1) {
      if (const auto d = bottleneck_spanning_length(n, edges)) return *d;
    } else if (vertex_connectivity_at_least(Graph(n, edges, hi), k)) {
      // Candidate radii: distinct realized lengths from the lower bound up.
      std::vector<double> candidates;
      for (const Edge& e : edges) {
        if (e.length >= lower && (candidates.empty() || candidates.back() != e.length)) {
          candidates.push_back(e.length);
        }
      }
      if (k_connected_prefix(n, edges, candidates.front(), k)) return candidates.front();
      std::size_t bad = 0;                     // predicate false
      std::size_t good = candidates.size() - 1;  // predicate true
      while (good - bad > 1) {
        const std::size_t mid = bad + (good - bad) / 2;
        if (k_connected_prefix(n, edges, candidates[mid], k)) {
          good = mid;
        } else {
          bad = mid;
        }
      }
      return candidates[good];
    }
    if (hi >= everything) {
      // The complete graph on more than k vertices is k-connected.
      throw std::logic_error("connectivity_radius: complete graph not k-connected");
    }
    hi = hi > 0.0 ? std::min(hi * 1.25, everything)
                  : std::min(everything, diag / std::sqrt(static_cast<double>(n)));
  }
}

}  // namespace

double min_degree_radius(std::span<const Point> points, int k) {
  require_order(points, k, "min_degree_radius");
  const std::size_t n = points.size();
  const auto kk = static_cast<std::size_t>(k);

  BoundingBox box{points.front(), points.front()};
  for (const Point& p : points) {
    box.lo.x = std::min(box.lo.x, p.x);
    box.lo.y = std::min(box.lo.y, p.y);
    box.hi.x = std::max(box.hi.x, p.x);
    box.hi.y = std::max(box.hi.y, p.y);
  }
  const double w = box.width();
  const double h = box.height();
  if (w == 0.0 && h == 0.0) return 0.0;
  // About k+1 points per cell on average.
  const double per_cell = static_cast<double>(kk + 1) / static_cast<double>(n);
  const double cell = (w > 0.0 && h > 0.0) ? std::sqrt(w * h * per_cell) : std::max(w, h) * per_cell;
  const detail::PointGrid grid(points, cell);
  const int max_ring = std::max(grid.nx(), grid.ny());

  double worst = 0.0;
  std::priority_queue<double> best;  // k smallest distances, max on top
  for (std::size_t i = 0; i < n; ++i) {
    best = {};
    const Point p = points[i];
    const int cx = grid.cell_x(p.x);
    const int cy = grid.cell_y(p.y);
    const auto visit = [&](int ix, int iy) {
      if (ix < 0 || iy < 0 || ix >= grid.nx() || iy >= grid.ny()) return;
      for (std::uint32_t j : grid.bucket(ix, iy)) {
        if (j == i) continue;
        const double d = distance(p, points[j]);
        if (best.size() < kk) {
          best.push(d);
        } else if (d < best.top()) {
          best.pop();
          best.push(d);
        }
      }
    };
    for (int m = 0; m <= max_ring; ++m) {
      if (m == 0) {
        visit(cx, cy);
      } else {
        for (int ix = cx - m; ix <= cx + m; ++ix) {
          visit(ix, cy - m);
          visit(ix, cy + m);
        }
        for (int iy = cy - m + 1; iy <= cy + m - 1; ++iy) {
          visit(cx - m, iy);
          visit(cx + m, iy);
        }
      }
      // Everything outside the visited block is farther than m cells.
      if (best.size() == kk && best.top() <= m * grid.cell() * (1.0 - 1e-9)) break;
    }
    worst = std::max(worst, best.top());
  }
  return worst;
}

double connectivity_radius(std::span<const Point> points, int k) {
  return critical_radii(points, k).rho_kappa;
}

RadiusResult critical_radii(std::span<const Point> points, int k) {
  require_order(points, k, "critical_radii");
  RadiusResult result;
  result.k = k;
  result.rho_delta = min_degree_radius(points, k);
  result.rho_kappa = connectivity_radius_from(points, k, result.rho_delta);
  result.equal = result.rho_delta == result.rho_kappa;
  return result;
}

}  // namespace critradius
