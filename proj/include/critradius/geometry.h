#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "critradius/errors.h"

namespace critradius {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point a, Point b) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }

/// Euclidean distance. Every pairwise distance in the library goes through
/// this function, so radii computed from point sets compare exactly.
inline double distance(Point a, Point b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

struct BoundingBox {
  Point lo;
  Point hi;

  double width() const { return hi.x - lo.x; }
  double height() const { return hi.y - lo.y; }
  double diagonal() const { return std::hypot(width(), height()); }
};

enum class RegionKind { polygon, disk };

/// Immutable convex planar domain: a strictly convex polygon stored
/// counterclockwise, or a disk. Area and perimeter are computed once at
/// construction.
class ConvexRegion {
 public:
  /// Validates and canonicalizes a vertex list. Exactly collinear
  /// consecutive vertices are merged, clockwise input is reversed, and
  /// reflex, repeated or non-finite vertices throw InvalidRegion.
  static ConvexRegion polygon(std::vector<Point> vertices, std::string id = "polygon");
  static ConvexRegion disk(Point center, double radius, std::string id = "disk");

  RegionKind kind() const { return kind_; }
  bool is_disk() const { return kind_ == RegionKind::disk; }

  /// Counterclockwise vertices; empty for disks.
  std::span<const Point> vertices() const { return vertices_; }
  /// Disk center, or polygon area centroid.
  Point center() const { return center_; }
  /// Disk radius; zero for polygons.
  double radius() const { return radius_; }

  double area() const { return area_; }
  double perimeter() const { return perimeter_; }
  const BoundingBox& bounds() const { return bounds_; }
  double diameter() const { return bounds_.diagonal(); }

  const std::string& id() const { return id_; }
  ConvexRegion with_id(std::string id) const;

  /// Uniform scaling about the center.
  ConvexRegion scaled(double factor) const;

 private:
  ConvexRegion() = default;
  void finish();

  RegionKind kind_ = RegionKind::polygon;
  std::vector<Point> vertices_;
  Point center_;
  double radius_ = 0.0;
  double area_ = 0.0;
  double perimeter_ = 0.0;
  BoundingBox bounds_;
  std::string id_;
};

// Built-in unit-area shapes.
ConvexRegion unit_square();
ConvexRegion unit_disk();
/// width x (1/width) rectangle with its lower-left corner at the origin.
ConvexRegion unit_rectangle(double width);
/// Regular polygon with the given number of sides, centered at the origin.
ConvexRegion unit_regular_polygon(int sides);

double region_area(const ConvexRegion& region);
double region_perimeter(const ConvexRegion& region);

/// Scales the region about its center so that its area is one.
ConvexRegion normalize_unit_area(const ConvexRegion& region);

/// Closed containment: boundary points are inside, up to 1e-12 * diameter.
bool contains(const ConvexRegion& region, Point p);

/// Distance from an inside point to the boundary. Throws DomainError for
/// points outside the region.
double distance_to_boundary(const ConvexRegion& region, Point p);

/// Signed distance to the boundary: negative inside, positive outside.
/// Exact inside the region; outside a polygon it is a lower bound on the
/// true distance (max over edge half-plane distances). 1-Lipschitz.
double signed_boundary_distance(const ConvexRegion& region, Point p);

/// |B(center, r) ∩ region|. Equals pi r^2 exactly when the ball lies
/// inside the region.
double ball_region_intersection_area(const ConvexRegion& region, Point center, double r);

/// Same quantity without the containment and radius checks; used by the
/// quadrature inner loop where the caller guarantees both.
double ball_region_intersection_area_unchecked(const ConvexRegion& region, Point center,
                                               double r);

/// Area of a disk of radius r cut by the half-plane x1 <= t, 0 <= t <= r.
double segment_area(double r, double t);

/// Shadow area between two radius-r disks whose centers are d apart, closed form.
double lens_shadow_area_exact(double r, double d);

/// Fifth-order series r^2 [u/2 + 19/48 u^3 + 153/1280 u^5], u = d/r.
double lens_shadow_area_series(double r, double d);

/// Area of {x in region : dist(x, boundary) >= r}.
double inner_parallel_area(const ConvexRegion& region, double r);

// Polygon helpers (counterclockwise vertex lists).
double polygon_signed_area(std::span<const Point> vertices);
Point polygon_centroid(std::span<const Point> vertices);

/// Area of the intersection of the disk B(center, r) with a counterclockwise
/// polygon, by per-edge signed triangle/sector decomposition.
double circle_polygon_intersection_area(std::span<const Point> polygon, Point center, double r);

/// Area of the intersection of two disks at center distance d.
double circle_circle_intersection_area(double r1, double r2, double d);

/// Keeps the part of a convex polygon on the left of the directed line
/// a -> b, shifted left by offset.
std::vector<Point> clip_left_of(std::span<const Point> polygon, Point a, Point b, double offset);

/// Intersection of a convex polygon with the region's polygon.
std::vector<Point> clip_to_polygon(std::span<const Point> polygon, const ConvexRegion& region);

}  // namespace critradius
