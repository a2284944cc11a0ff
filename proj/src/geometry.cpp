#include "critradius/geometry.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

namespace critradius {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRelTol = 1e-12;

bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

BoundingBox bounds_of(std::span<const Point> pts) {
  BoundingBox box{pts.front(), pts.front()};
  for (const Point& p : pts) {
    box.lo.x = std::min(box.lo.x, p.x);
    box.lo.y = std::min(box.lo.y, p.y);
    box.hi.x = std::max(box.hi.x, p.x);
    box.hi.y = std::max(box.hi.y, p.y);
  }
  return box;
}

double point_segment_distance(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, a + t * ab);
}

// Signed area of B(0, r) ∩ triangle(0, a, b), with a and b relative to the
// circle center. Inside stretches of the edge contribute a triangle, outside
// stretches a circular sector.
double edge_contribution(Point a, Point b, double r) {
  const auto sector = [r](Point p, Point q) {
    return 0.5 * r * r * std::atan2(cross(p, q), dot(p, q));
  };
  const Point d = b - a;
  const double qa = dot(d, d);
  if (qa == 0.0) return 0.0;
  const double qb = dot(a, d);
  const double qc = dot(a, a) - r * r;
  const double disc = qb * qb - qa * qc;
  if (disc <= 0.0) return sector(a, b);
  const double root = std::sqrt(disc);
  double t1 = (-qb - root) / qa;
  double t2 = (-qb + root) / qa;
  if (t2 <= 0.0 || t1 >= 1.0) return sector(a, b);
  t1 = std::max(t1, 0.0);
  t2 = std::min(t2, 1.0);
  const Point p = a + t1 * d;
  const Point q = a + t2 * d;
  return sector(a, p) + 0.5 * cross(p, q) + sector(q, b);
}

void require_positive_radius(double r, const char* what) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw DomainError(std::string(what) + ": radius must be positive and finite, got " +
                      std::to_string(r));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// ConvexRegion

ConvexRegion ConvexRegion::polygon(std::vector<Point> vertices, std::string id) {
  if (vertices.size() < 3) throw InvalidRegion("polygon needs at least 3 vertices");
  for (const Point& p : vertices) {
    if (!finite(p)) throw InvalidRegion("polygon vertex is not finite");
  }
  const double diag = bounds_of(vertices).diagonal();
  if (!(diag > 0.0)) throw InvalidRegion("polygon vertices coincide");

  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Point& a = vertices[i];
    const Point& b = vertices[(i + 1) % vertices.size()];
    if (distance(a, b) <= kRelTol * diag) {
      throw InvalidRegion("polygon has a zero-length edge at vertex " + std::to_string(i));
    }
  }

  const double signed_area = polygon_signed_area(vertices);
  if (std::abs(signed_area) <= kRelTol * diag * diag) {
    throw InvalidRegion("polygon is degenerate (collinear vertices)");
  }
  if (signed_area < 0.0) std::reverse(vertices.begin(), vertices.end());

  // Merge collinear runs; a zero-cross turn that doubles back is a spike.
  const double cross_tol = kRelTol * diag * diag;
  bool merged = true;
  while (merged && vertices.size() >= 3) {
    merged = false;
    const std::size_t m = vertices.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Point prev = vertices[(i + m - 1) % m];
      const Point cur = vertices[i];
      const Point next = vertices[(i + 1) % m];
      const double turn = cross(cur - prev, next - cur);
      if (std::abs(turn) <= cross_tol) {
        if (dot(cur - prev, next - cur) <= 0.0) {
          throw InvalidRegion("polygon doubles back at vertex " + std::to_string(i));
        }
        vertices.erase(vertices.begin() + static_cast<std::ptrdiff_t>(i));
        merged = true;
        break;
      }
    }
  }
  if (vertices.size() < 3) throw InvalidRegion("polygon is degenerate (collinear vertices)");

  const std::size_t m = vertices.size();
  double turning = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const Point prev = vertices[(i + m - 1) % m];
    const Point cur = vertices[i];
    const Point next = vertices[(i + 1) % m];
    const Point e0 = cur - prev;
    const Point e1 = next - cur;
    if (cross(e0, e1) <= cross_tol) {
      throw InvalidRegion("polygon is not convex: reflex vertex " + std::to_string(i));
    }
    turning += std::atan2(cross(e0, e1), dot(e0, e1));
  }
  if (std::abs(turning - 2.0 * kPi) > 1e-9) {
    throw InvalidRegion("polygon winds more than once (self-intersecting)");
  }

  ConvexRegion region;
  region.kind_ = RegionKind::polygon;
  region.vertices_ = std::move(vertices);
  region.id_ = std::move(id);
  region.finish();
  return region;
}

ConvexRegion ConvexRegion::disk(Point center, double radius, std::string id) {
  if (!finite(center)) throw InvalidRegion("disk center is not finite");
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw InvalidRegion("disk radius must be positive and finite");
  }
  ConvexRegion region;
  region.kind_ = RegionKind::disk;
  region.center_ = center;
  region.radius_ = radius;
  region.id_ = std::move(id);
  region.finish();
  return region;
}

void ConvexRegion::finish() {
  if (kind_ == RegionKind::disk) {
    area_ = kPi * radius_ * radius_;
    perimeter_ = 2.0 * kPi * radius_;
    bounds_ = {{center_.x - radius_, center_.y - radius_},
               {center_.x + radius_, center_.y + radius_}};
    return;
  }
  area_ = polygon_signed_area(vertices_);
  perimeter_ = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    perimeter_ += distance(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
  }
  center_ = polygon_centroid(vertices_);
  bounds_ = bounds_of(vertices_);
}

ConvexRegion ConvexRegion::with_id(std::string id) const {
  ConvexRegion copy = *this;
  copy.id_ = std::move(id);
  return copy;
}

ConvexRegion ConvexRegion::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw DomainError("scale factor must be positive and finite");
  }
  ConvexRegion copy = *this;
  if (kind_ == RegionKind::disk) {
    copy.radius_ = radius_ * factor;
  } else {
    for (Point& v : copy.vertices_) v = center_ + factor * (v - center_);
  }
  copy.finish();
  copy.center_ = center_;
  return copy;
}

// ---------------------------------------------------------------------------
// Built-in shapes

ConvexRegion unit_square() {
  return ConvexRegion::polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, "unit-square");
}

ConvexRegion unit_disk() {
  return ConvexRegion::disk({0, 0}, 1.0 / std::sqrt(kPi), "unit-disk");
}

ConvexRegion unit_rectangle(double width) {
  if (!(width > 0.0) || !std::isfinite(width)) {
    throw InvalidRegion("rectangle width must be positive and finite");
  }
  const double h = 1.0 / width;
  return ConvexRegion::polygon({{0, 0}, {width, 0}, {width, h}, {0, h}}, "rect");
}

ConvexRegion unit_regular_polygon(int sides) {
  if (sides < 3) throw InvalidRegion("regular polygon needs at least 3 sides");
  const double step = 2.0 * kPi / sides;
  const double circumradius = std::sqrt(2.0 / (sides * std::sin(step)));
  std::vector<Point> v;
  v.reserve(static_cast<std::size_t>(sides));
  for (int i = 0; i < sides; ++i) {
    v.push_back({circumradius * std::cos(step * i), circumradius * std::sin(step * i)});
  }
  return ConvexRegion::polygon(std::move(v), "regular-" + std::to_string(sides));
}

// ---------------------------------------------------------------------------
// Measurements

double region_area(const ConvexRegion& region) { return region.area(); }

double region_perimeter(const ConvexRegion& region) { return region.perimeter(); }

ConvexRegion normalize_unit_area(const ConvexRegion& region) {
  if (region.area() == 1.0) return region;
  return region.scaled(1.0 / std::sqrt(region.area()));
}

bool contains(const ConvexRegion& region, Point p) {
  if (!finite(p)) return false;
  const double tol = kRelTol * region.diameter();
  if (region.is_disk()) return distance(p, region.center()) <= region.radius() + tol;
  const auto v = region.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point a = v[i];
    const Point b = v[(i + 1) % v.size()];
    if (cross(b - a, p - a) < -tol * distance(a, b)) return false;
  }
  return true;
}

double signed_boundary_distance(const ConvexRegion& region, Point p) {
  if (region.is_disk()) return distance(p, region.center()) - region.radius();
  const auto v = region.vertices();
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point a = v[i];
    const Point b = v[(i + 1) % v.size()];
    worst = std::max(worst, -cross(b - a, p - a) / distance(a, b));
  }
  return worst;
}

double distance_to_boundary(const ConvexRegion& region, Point p) {
  if (!contains(region, p)) {
    throw DomainError("distance_to_boundary: point (" + std::to_string(p.x) + ", " +
                      std::to_string(p.y) + ") is outside the region");
  }
  if (region.is_disk()) {
    return std::max(0.0, region.radius() - distance(p, region.center()));
  }
  const auto v = region.vertices();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    best = std::min(best, point_segment_distance(p, v[i], v[(i + 1) % v.size()]));
  }
  return best;
}

double ball_region_intersection_area(const ConvexRegion& region, Point center, double r) {
  require_positive_radius(r, "ball_region_intersection_area");
  if (!contains(region, center)) {
    throw DomainError("ball_region_intersection_area: center is outside the region");
  }
  return ball_region_intersection_area_unchecked(region, center, r);
}

double ball_region_intersection_area_unchecked(const ConvexRegion& region, Point center,
                                               double r) {
  const double full = kPi * r * r;
  if (region.is_disk()) {
    const double d = distance(center, region.center());
    if (region.radius() - d >= r) return full;
    return std::min(full, circle_circle_intersection_area(r, region.radius(), d));
  }
  if (-signed_boundary_distance(region, center) >= r) return full;
  return std::min(full, circle_polygon_intersection_area(region.vertices(), center, r));
}

double segment_area(double r, double t) {
  require_positive_radius(r, "segment_area");
  if (!(t >= 0.0 && t <= r)) {
    throw DomainError("segment_area: t must lie in [0, r], got t=" + std::to_string(t));
  }
  return kPi * r * r - r * r * std::acos(t / r) + t * std::sqrt(r * r - t * t);
}

double lens_shadow_area_exact(double r, double d) {
  require_positive_radius(r, "lens_shadow_area_exact");
  if (!(d >= 0.0 && d <= r)) {
    throw DomainError("lens_shadow_area_exact: d must lie in [0, r], got d=" +
                      std::to_string(d));
  }
  // pi/2 - acos(u/2) = asin(u/2), and the chord difference is rationalized, so
  // both terms stay positive and small u keeps full precision.
  const double u = d / r;
  const double u2 = u * u;
  const double chords = 0.75 * u * u2 / (std::sqrt(1.0 - 0.25 * u2) + std::sqrt(1.0 - u2));
  return r * r * (std::asin(0.5 * u) + chords);
}

double lens_shadow_area_series(double r, double d) {
  require_positive_radius(r, "lens_shadow_area_series");
  if (!(d >= 0.0 && d <= r)) {
    throw DomainError("lens_shadow_area_series: d must lie in [0, r], got d=" +
                      std::to_string(d));
  }
  const double u = d / r;
  const double u2 = u * u;
  return r * r * u * (0.5 + u2 * (19.0 / 48.0 + u2 * (153.0 / 1280.0)));
}

double inner_parallel_area(const ConvexRegion& region, double r) {
  if (!(r >= 0.0)) throw DomainError("inner_parallel_area: r must be nonnegative");
  if (region.is_disk()) {
    const double inner = std::max(0.0, region.radius() - r);
    return kPi * inner * inner;
  }
  const auto v = region.vertices();
  std::vector<Point> poly(v.begin(), v.end());
  for (std::size_t i = 0; i < v.size() && !poly.empty(); ++i) {
    poly = clip_left_of(poly, v[i], v[(i + 1) % v.size()], r);
  }
  return poly.size() < 3 ? 0.0 : std::max(0.0, polygon_signed_area(poly));
}

// ---------------------------------------------------------------------------
// Polygon helpers

double polygon_signed_area(std::span<const Point> vertices) {
  double twice = 0.0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    twice += cross(vertices[i], vertices[(i + 1) % vertices.size()]);
  }
  return 0.5 * twice;
}

Point polygon_centroid(std::span<const Point> vertices) {
  // Relative to the first vertex to limit cancellation.
  const Point origin = vertices.front();
  double twice_area = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Point a = vertices[i] - origin;
    const Point b = vertices[(i + 1) % vertices.size()] - origin;
    const double w = cross(a, b);
    twice_area += w;
    cx += (a.x + b.x) * w;
    cy += (a.y + b.y) * w;
  }
  if (twice_area == 0.0) return origin;
  return origin + Point{cx / (3.0 * twice_area), cy / (3.0 * twice_area)};
}

double circle_polygon_intersection_area(std::span<const Point> polygon, Point center, double r) {
  double area = 0.0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point a = polygon[i] - center;
    const Point b = polygon[(i + 1) % polygon.size()] - center;
    area += edge_contribution(a, b, r);
  }
  return std::max(0.0, area);
}

double circle_circle_intersection_area(double r1, double r2, double d) {
  if (d >= r1 + r2) return 0.0;
  const double small = std::min(r1, r2);
  if (d <= std::abs(r1 - r2)) return kPi * small * small;
  const double c1 = std::clamp((d * d + r1 * r1 - r2 * r2) / (2.0 * d * r1), -1.0, 1.0);
  const double c2 = std::clamp((d * d + r2 * r2 - r1 * r1) / (2.0 * d * r2), -1.0, 1.0);
  const double kite = (-d + r1 + r2) * (d + r1 - r2) * (d - r1 + r2) * (d + r1 + r2);
  return r1 * r1 * std::acos(c1) + r2 * r2 * std::acos(c2) - 0.5 * std::sqrt(std::max(0.0, kite));
}

std::vector<Point> clip_left_of(std::span<const Point> polygon, Point a, Point b, double offset) {
  std::vector<Point> out;
  if (polygon.empty()) return out;
  out.reserve(polygon.size() + 1);
  const Point dir = b - a;
  const double len = std::sqrt(dot(dir, dir));
  const auto level = [&](Point p) { return cross(dir, p - a) / len - offset; };
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point p = polygon[i];
    const Point q = polygon[(i + 1) % polygon.size()];
    const double fp = level(p);
    const double fq = level(q);
    if (fp >= 0.0) out.push_back(p);
    if ((fp >= 0.0) != (fq >= 0.0)) {
      const double t = fp / (fp - fq);
      out.push_back(p + t * (q - p));
    }
  }
  return out;
}

std::vector<Point> clip_to_polygon(std::span<const Point> polygon, const ConvexRegion& region) {
  std::vector<Point> poly(polygon.begin(), polygon.end());
  const auto v = region.vertices();
  for (std::size_t i = 0; i < v.size() && !poly.empty(); ++i) {
    poly = clip_left_of(poly, v[i], v[(i + 1) % v.size()], 0.0);
  }
  return poly;
}

}  // namespace critradius
