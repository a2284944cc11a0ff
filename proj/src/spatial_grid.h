#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "critradius/geometry.h"

namespace critradius::detail {

/// Uniform bucket grid over the bounding box of a point set, stored as
/// compressed cell lists. Cells are at least `min_cell` wide and the grid is
/// capped at about 4n cells, so any cell size >= r keeps the 3x3
/// neighborhood query exact for radius r.
class PointGrid {
 public:
  PointGrid(std::span<const Point> points, double min_cell) : points_(points) {
    lo_ = points.front();
    Point hi = points.front();
    for (const Point& p : points) {
      lo_.x = std::min(lo_.x, p.x);
      lo_.y = std::min(lo_.y, p.y);
      hi.x = std::max(hi.x, p.x);
      hi.y = std::max(hi.y, p.y);
    }
    const double w = hi.x - lo_.x;
    const double h = hi.y - lo_.y;
    cell_ = min_cell > 0.0 ? min_cell : std::max(std::max(w, h), 1.0);
    const double limit = 4.0 * static_cast<double>(points.size()) + 16.0;
    while ((std::floor(w / cell_) + 1.0) * (std::floor(h / cell_) + 1.0) > limit) cell_ *= 2.0;
    nx_ = static_cast<int>(std::floor(w / cell_)) + 1;
    ny_ = static_cast<int>(std::floor(h / cell_)) + 1;

    start_.assign(static_cast<std::size_t>(nx_) * ny_ + 1, 0);
    std::vector<std::uint32_t> cell_of(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      cell_of[i] = static_cast<std::uint32_t>(index(cell_x(points[i].x), cell_y(points[i].y)));
      ++start_[cell_of[i] + 1];
    }
    for (std::size_t c = 1; c < start_.size(); ++c) start_[c] += start_[c - 1];
    items_.resize(points.size());
    std::vector<std::uint32_t> fill(start_.begin(), start_.end() - 1);
    for (std::size_t i = 0; i < points.size(); ++i) {
      items_[fill[cell_of[i]]++] = static_cast<std::uint32_t>(i);
    }
  }

  double cell() const { return cell_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }

  int cell_x(double x) const {
    return std::clamp(static_cast<int>(std::floor((x - lo_.x) / cell_)), 0, nx_ - 1);
  }
  int cell_y(double y) const {
    return std::clamp(static_cast<int>(std::floor((y - lo_.y) / cell_)), 0, ny_ - 1);
  }

  std::span<const std::uint32_t> bucket(int ix, int iy) const {
    const std::size_t c = index(ix, iy);
    return {items_.data() + start_[c], items_.data() + start_[c + 1]};
  }

 private:
  std::size_t index(int ix, int iy) const {
    return static_cast<std::size_t>(iy) * static_cast<std::size_t>(nx_) +
           static_cast<std::size_t>(ix);
  }

  std::span<const Point> points_;
  Point lo_;
  double cell_ = 1.0;
  int nx_ = 1;
  int ny_ = 1;
  std::vector<std::uint32_t> start_;
  std::vector<std::uint32_t> items_;
};

}  // namespace critradius::detail
