#include "critradius/sampling.h"

#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "json.hpp"

#include "critradius/format.h"
#include "critradius/rng.h"

namespace critradius {

std::uint64_t poisson_variate(double mean, Rng& rng) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) {
    throw DomainError("poisson_variate: mean must be finite and nonnegative");
  }
  if (mean == 0.0) return 0;
  if (mean < 30.0) {
    // Sequential search on the CDF.
    double p = std::exp(-mean);
    double cdf = p;
    const double u = rng.uniform();
    std::uint64_t k = 0;
    while (u > cdf) {
      ++k;
      p *= mean / static_cast<double>(k);
      cdf += p;
      if (p == 0.0 && cdf < u) break;  // round-off tail
    }
    return k;
  }
  const double slam = std::sqrt(mean);
  const double loglam = std::log(mean);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = rng.uniform() - 0.5;
    const double v = rng.uniform();
    const double us = 0.5 - std::abs(u);
    const double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
        -mean + k * loglam - std::lgamma(k + 1.0)) {
      return static_cast<std::uint64_t>(k);
    }
  }
}

std::string_view to_string(Process process) {
  return process == Process::uniform ? "uniform" : "poisson";
}

Process parse_process(std::string_view text) {
  if (text == "uniform") return Process::uniform;
  if (text == "poisson") return Process::poisson;
  throw DomainError("unknown process '" + std::string(text) + "' (expected uniform|poisson)");
}

namespace {

void fill_uniform(const ConvexRegion& region, std::size_t n, Rng& rng, std::vector<Point>& out) {
  const BoundingBox& box = region.bounds();
  out.reserve(out.size() + n);
  while (n > 0) {
    const Point p{rng.uniform(box.lo.x, box.hi.x), rng.uniform(box.lo.y, box.hi.y)};
    if (contains(region, p)) {
      out.push_back(p);
      --n;
    }
  }
}

}  // namespace

PointSet sample_uniform(const ConvexRegion& region, std::size_t n, std::uint64_t seed) {
  PointSet set;
  set.seed = seed;
  set.process = Process::uniform;
  set.region_id = region.id();
  Rng rng(seed);
  fill_uniform(region, n, rng, set.points);
  return set;
}

PointSet sample_poisson(const ConvexRegion& region, double intensity, std::uint64_t seed) {
  if (!(intensity >= 0.0) || !std::isfinite(intensity)) {
    throw DomainError("sample_poisson: intensity must be finite and nonnegative");
  }
  PointSet set;
  set.seed = seed;
  set.process = Process::poisson;
  set.region_id = region.id();
  Rng rng(seed);
  const std::uint64_t count = poisson_variate(intensity * region.area(), rng);
  fill_uniform(region, static_cast<std::size_t>(count), rng, set.points);
  return set;
}

void write_points_csv(std::ostream& out, const std::vector<Point>& points) {
  out << "x,y\n";
  for (const Point& p : points) out << format_g17(p.x) << ',' << format_g17(p.y) << '\n';
}

void write_points_json(std::ostream& out, const std::vector<Point>& points) {
  out << '[';
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out << ',';
    out << '[' << format_g17(points[i].x) << ',' << format_g17(points[i].y) << ']';
  }
  out << "]\n";
}

std::vector<Point> read_points_csv(std::istream& in) {
  std::vector<Point> points;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (!header_seen) {
      std::string compact;
      for (char ch : line) {
        if (ch != ' ' && ch != '\t') compact += ch;
      }
      if (compact != "x,y") {
        throw ParseError("line " + std::to_string(line_no) + ": expected header 'x,y'");
      }
      header_seen = true;
      continue;
    }
    const auto comma = line.find(',');
    Point p;
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos ||
        !parse_double(std::string_view(line).substr(0, comma), p.x) ||
        !parse_double(std::string_view(line).substr(comma + 1), p.y) || !std::isfinite(p.x) ||
        !std::isfinite(p.y)) {
      throw ParseError("line " + std::to_string(line_no) + ": expected two finite numbers 'x,y'");
    }
    points.push_back(p);
  }
  if (!header_seen) throw ParseError("line 1: missing header 'x,y'");
  return points;
}

std::vector<Point> read_points_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("point JSON must be an array of [x, y] pairs");
  std::vector<Point> points;
  points.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& item = doc[i];
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number()) {
      throw ParseError("point " + std::to_string(i) + ": expected [x, y]");
    }
    points.push_back({item[0].get<double>(), item[1].get<double>()});
  }
  return points;
}

}  // namespace critradius
