#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "critradius/rgg.h"
#include "spatial_grid.h"

namespace critradius {

Graph::Graph(std::size_t n, std::span<const Edge> edges, double radius) : radius_(radius) {
  offsets_.assign(n + 1, 0);
  for (const Edge& e : edges) {
    if (e.u == e.v) continue;
    if (e.u >= n || e.v >= n) throw DomainError("Graph: edge endpoint out of range");
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 1; i <= n; ++i) offsets_[i] += offsets_[i - 1];
  targets_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges) {
    if (e.u == e.v) continue;
    targets_[fill[e.u]++] = e.v;
    targets_[fill[e.v]++] = e.u;
  }
  // Sort each list and squeeze out duplicates, compacting in place.
  std::size_t write = 0;
  std::size_t begin = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t end = offsets_[v + 1];
    std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(begin),
              targets_.begin() + static_cast<std::ptrdiff_t>(end));
    const std::size_t new_begin = write;
    for (std::size_t i = begin; i < end; ++i) {
      if (i > begin && targets_[i] == targets_[i - 1]) continue;
      targets_[write++] = targets_[i];
    }
    offsets_[v] = new_begin;
    begin = end;
  }
  offsets_[n] = write;
  targets_.resize(write);
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), static_cast<std::uint32_t>(v));
}

std::vector<Edge> neighbor_pairs(std::span<const Point> points, double r) {
  std::vector<Edge> edges;
  if (!(r >= 0.0)) throw DomainError("neighbor_pairs: radius must be nonnegative");
  if (points.size() < 2) return edges;
  if (points.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw DomainError("neighbor_pairs: too many points");
  }
  // Slightly wider than r so rounding in the cell index never splits a pair
  // at distance exactly r across non-adjacent cells.
  const detail::PointGrid grid(points, r * (1.0 + 1e-9));
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point p = points[i];
    const int cx = grid.cell_x(p.x);
    const int cy = grid.cell_y(p.y);
    for (int iy = std::max(cy - 1, 0); iy <= std::min(cy + 1, grid.ny() - 1); ++iy) {
      for (int ix = std::max(cx - 1, 0); ix <= std::min(cx + 1, grid.nx() - 1); ++ix) {
        for (std::uint32_t j : grid.bucket(ix, iy)) {
          if (j <= i) continue;
          const double d = distance(p, points[j]);
          if (d <= r) edges.push_back({static_cast<std::uint32_t>(i), j, d});
        }
      }
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  return edges;
}

Graph build_graph(std::span<const Point> points, double r) {
  if (!(r >= 0.0)) throw DomainError("build_graph: radius must be nonnegative");
  const auto edges = neighbor_pairs(points, r);
  return Graph(points.size(), edges, r);
}

std::size_t min_degree(const Graph& graph) {
  if (graph.size() == 0) throw DomainError("min_degree: empty graph");
  std::size_t best = graph.degree(0);
  for (std::size_t v = 1; v < graph.size(); ++v) best = std::min(best, graph.degree(v));
  return best;
}

bool is_connected(const Graph& graph) {
  const std::size_t n = graph.size();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<std::uint32_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::uint32_t v = stack.back();
    stack.pop_back();
    for (std::uint32_t w : graph.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

bool is_biconnected(const Graph& graph) {
  const std::size_t n = graph.size();
  if (n < 3) return false;
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> disc(n, kUnvisited);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<std::uint32_t> parent(n, kUnvisited);
  std::vector<std::size_t> next_child(n, 0);

  // Iterative Tarjan low-link from vertex 0.
  std::uint32_t time = 0;
  std::size_t root_children = 0;
  std::vector<std::uint32_t> stack{0};
  disc[0] = low[0] = time++;
  while (!stack.empty()) {
    const std::uint32_t v = stack.back();
    const auto nb = graph.neighbors(v);
    if (next_child[v] < nb.size()) {
      const std::uint32_t w = nb[next_child[v]++];
      if (disc[w] == kUnvisited) {
        parent[w] = v;
        disc[w] = low[w] = time++;
        if (v == 0) ++root_children;
        stack.push_back(w);
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }
    stack.pop_back();
    const std::uint32_t p = parent[v];
    if (p != kUnvisited) {
      low[p] = std::min(low[p], low[v]);
      if (p != 0 && low[v] >= disc[p]) return false;
    }
  }
  if (time != n) return false;
  return root_children == 1;
}

namespace {

/// Unit-capacity vertex-split network: vertex v becomes in(v) = 2v and
/// out(v) = 2v + 1 joined by a capacity-1 arc; graph edges become
/// out -> in arcs both ways. Node 2n is a super source with an arc to every
/// in-node, enabled per query.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& graph) : n_(graph.size()) {
    const std::size_t nodes = 2 * n_ + 1;
    std::vector<std::size_t> out_degree(nodes, 0);
    for (std::size_t v = 0; v < n_; ++v) {
      out_degree[in(v)] += 1;   // in -> out
      out_degree[out(v)] += 1;  // reverse of in -> out
      for (std::uint32_t w : graph.neighbors(v)) {
        out_degree[out(v)] += 1;  // out(v) -> in(w)
        out_degree[in(w)] += 1;   // reverse
      }
      out_degree[source()] += 1;  // S -> in(v)
      out_degree[in(v)] += 1;     // reverse
    }
    first_.assign(nodes + 1, 0);
    for (std::size_t i = 0; i < nodes; ++i) first_[i + 1] = first_[i] + out_degree[i];
    arcs_.resize(first_[nodes]);
    std::vector<std::size_t> fill(first_.begin(), first_.end() - 1);
    const auto add = [&](std::size_t from, std::size_t to, std::uint8_t cap) {
      const std::size_t a = fill[from]++;
      const std::size_t b = fill[to]++;
      arcs_[a] = {static_cast<std::uint32_t>(to), b, cap, cap};
      arcs_[b] = {static_cast<std::uint32_t>(from), a, 0, 0};
    };
    source_arc_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      add(in(v), out(v), 1);
      for (std::uint32_t w : graph.neighbors(v)) add(out(v), in(w), 1);
      source_arc_[v] = fill[source()];
      add(source(), in(v), 0);
    }
  }

  /// Max number of internally disjoint paths from vertex s (or the super
  /// source when `from_super` is set, attached to vertices [0, prefix)) to t.
  int max_paths(std::size_t s, bool from_super, std::size_t prefix,
                const std::vector<std::uint32_t>& order, std::size_t t, int cap) {
    for (Arc& a : arcs_) a.cap = a.base;
    if (from_super) {
      for (std::size_t i = 0; i < prefix; ++i) arcs_[source_arc_[order[i]]].cap = 1;
    }
    const std::size_t src = from_super ? source() : out(s);
    const std::size_t sink = in(t);
    int flow = 0;
    std::vector<std::size_t> via(first_.size() - 1);
    std::vector<char> seen(first_.size() - 1);
    std::deque<std::size_t> queue;
    while (flow < cap) {
      std::fill(seen.begin(), seen.end(), 0);
      queue.assign(1, src);
      seen[src] = 1;
      bool found = false;
      while (!queue.empty() && !found) {
        const std::size_t x = queue.front();
        queue.pop_front();
        for (std::size_t a = first_[x]; a < first_[x + 1]; ++a) {
          const Arc& arc = arcs_[a];
          if (arc.cap == 0 || seen[arc.to]) continue;
          seen[arc.to] = 1;
          via[arc.to] = a;
          if (arc.to == sink) {
            found = true;
            break;
          }
          queue.push_back(arc.to);
        }
      }
      if (!found) break;
      for (std::size_t x = sink; x != src;) {
        Arc& arc = arcs_[via[x]];
        arc.cap -= 1;
        arcs_[arc.rev].cap += 1;
        x = arcs_[arc.rev].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Arc {
    std::uint32_t to;
    std::size_t rev;
    std::uint8_t cap;
    std::uint8_t base;
  };

  static std::size_t in(std::size_t v) { return 2 * v; }
  static std::size_t out(std::size_t v) { return 2 * v + 1; }
  std::size_t source() const { return 2 * n_; }

  std::size_t n_;
  std::vector<std::size_t> first_;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> source_arc_;
};

void require_k(int k, const char* what) {
  if (k < 1) throw DomainError(std::string(what) + ": k must be at least 1, got " + std::to_string(k));
}

}  // namespace

int local_vertex_connectivity(const Graph& graph, std::size_t s, std::size_t t, int cap) {
  if (s >= graph.size() || t >= graph.size() || s == t) {
    throw DomainError("local_vertex_connectivity: need two distinct vertices of the graph");
  }
  SplitNetwork net(graph);
  return net.max_paths(s, false, 0, {}, t, cap);
}

bool vertex_connectivity_at_least_flow(const Graph& graph, int k) {
  require_k(k, "vertex_connectivity_at_least");
  const std::size_t n = graph.size();
  const auto kk = static_cast<std::size_t>(k);
  if (n <= kk) return false;
  if (min_degree(graph) < kk) return false;

  // Process vertices by decreasing degree; any order is valid.
  std::vector<std::uint32_t> order(n);
  for (std::size_t v = 0; v < n; ++v) order[v] = static_cast<std::uint32_t>(v);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return graph.degree(a) > graph.degree(b);
  });

  SplitNetwork net(graph);
  for (std::size_t i = 0; i < kk; ++i) {
    for (std::size_t j = i + 1; j < kk; ++j) {
      if (net.max_paths(order[i], false, 0, order, order[j], k) < k) return false;
    }
  }
  for (std::size_t j = kk; j < n; ++j) {
    if (net.max_paths(0, true, j, order, order[j], k) < k) return false;
  }
  return true;
}

bool vertex_connectivity_at_least(const Graph& graph, int k) {
  require_k(k, "vertex_connectivity_at_least");
  const std::size_t n = graph.size();
  if (n <= static_cast<std::size_t>(k)) return false;
  if (k == 1) return is_connected(graph);
  if (k == 2) return is_biconnected(graph);
  return vertex_connectivity_at_least_flow(graph, k);
}

}  // namespace critradius
