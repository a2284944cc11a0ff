#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "critradius/geometry.h"

namespace critradius {

enum class Process { uniform, poisson };

std::string_view to_string(Process process);
/// Parses "uniform" or "poisson"; throws DomainError otherwise.
Process parse_process(std::string_view text);

/// Points plus the provenance that generated them.
struct PointSet {
  std::vector<Point> points;
  std::uint64_t seed = 0;
  Process process = Process::uniform;
  std::string region_id;

  std::size_t size() const { return points.size(); }
};

/// n i.i.d. uniform points, by rejection from the bounding box.
PointSet sample_uniform(const ConvexRegion& region, std::size_t n, std::uint64_t seed);

/// Homogeneous Poisson process: Poisson(intensity * area) points, then i.i.d.
/// uniform placement.
PointSet sample_poisson(const ConvexRegion& region, double intensity, std::uint64_t seed);

/// CSV with header "x,y", 17 significant digits.
void write_points_csv(std::ostream& out, const std::vector<Point>& points);
/// JSON array [[x, y], ...].
void write_points_json(std::ostream& out, const std::vector<Point>& points);

/// Reads the CSV written above. A header line "x,y" is required; blank lines
/// are skipped. Throws ParseError naming the offending line.
std::vector<Point> read_points_csv(std::istream& in);
std::vector<Point> read_points_json(std::istream& in);

}  // namespace critradius
