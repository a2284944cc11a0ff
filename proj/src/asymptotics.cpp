#include "critradius/asymptotics.h"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "critradius/parallel.h"

namespace critradius {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(kPi);

void require_perimeter(double perimeter) {
  // Isoperimetric bound for unit area; the disk sits exactly on it.
  const double floor = 2.0 * kSqrtPi;
  if (!std::isfinite(perimeter) || perimeter < floor * (1.0 - 1e-12)) {
    throw DomainError("perimeter " + std::to_string(perimeter) +
                      " violates the isoperimetric bound 2*sqrt(pi) for unit area");
  }
}

void require_order(int k, const char* what) {
  if (k < 1) {
    throw DomainError(std::string(what) + ": defined for k >= 1 only, got k=" + std::to_string(k));
  }
}

// log( l sqrt(pi) / (2^(k+1) k!) )
double log_boundary_coefficient(int k, double perimeter) {
  return std::log(perimeter) + 0.5 * std::log(kPi) - (k + 1) * std::numbers::ln2 -
         std::lgamma(k + 1.0);
}

double simpson_step(const auto& f, double a, double b, double fa, double fm, double fb,
                    double whole, double eps, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

/// Adaptive Simpson over [a, b] to relative tolerance `rel_tol`, seeded by a
/// 64-panel composite pass that fixes the magnitude of the absolute target.
double adaptive_simpson(const auto& f, double a, double b, double rel_tol) {
  constexpr int kPanels = 64;
  const double width = (b - a) / kPanels;
  std::vector<double> fx(2 * kPanels + 1);
  for (int i = 0; i <= 2 * kPanels; ++i) fx[i] = f(a + 0.5 * width * i);
  std::vector<double> panel(kPanels);
  double rough = 0.0;
  for (int p = 0; p < kPanels; ++p) {
    panel[p] = width / 6.0 * (fx[2 * p] + 4.0 * fx[2 * p + 1] + fx[2 * p + 2]);
    rough += std::abs(panel[p]);
  }
  if (rough == 0.0) return 0.0;
  const double eps = rel_tol * rough / kPanels;
  std::vector<double> refined(kPanels);
  for (int p = 0; p < kPanels; ++p) {
    const double lo = a + width * p;
    refined[p] = simpson_step(f, lo, lo + width, fx[2 * p], fx[2 * p + 1], fx[2 * p + 2],
                              panel[p], eps, 48);
  }
  return pairwise_sum(refined);
}

}  // namespace

double xi(int k, double perimeter, double c) {
  require_order(k, "xi");
  require_perimeter(perimeter);
  if (!std::isfinite(c)) throw DomainError("xi: c must be finite");
  if (k == 1) {
    // sqrt(e^-c + pi l^2/64) - l sqrt(pi)/8, rationalized to avoid cancellation.
    const double e = std::exp(-c);
    const double b = perimeter * kSqrtPi / 8.0;
    const double root = std::sqrt(e + b * b);
    return -2.0 * std::log(e / (root + b));
  }
  return 2.0 * log_boundary_coefficient(k, perimeter) + 2.0 * c;
}

double predicted_radius(const PredictionInput& input) {
  const double n = input.n;
  if (!std::isfinite(n) || n < 2.0) {
    throw DomainError("predicted_radius: n must be at least 2, got " + std::to_string(n));
  }
  if (input.k < 0) throw DomainError("predicted_radius: k must be nonnegative");
  if (!std::isfinite(input.c)) throw DomainError("predicted_radius: c must be finite");
  const double log_n = std::log(n);
  double radicand = 0.0;
  if (input.k == 0) {
    radicand = log_n + input.c;
  } else {
    const double log_log_n = std::log(log_n);
    if (!(log_log_n > 0.0)) {
      throw DomainError("predicted_radius: log log n must be positive for k >= 1 (n > e)");
    }
    radicand = log_n + (2 * input.k - 1) * log_log_n + xi(input.k, input.perimeter, input.c);
  }
  if (!(radicand > 0.0)) {
    throw DomainError("predicted_radius: nonpositive radicand " + std::to_string(radicand));
  }
  return std::sqrt(radicand / (kPi * n));
}

double limit_probability(double c) { return std::exp(-std::exp(-c)); }

double boundary_band_target(int k, double perimeter, double c) {
  require_order(k, "boundary_band_target");
  return std::exp(log_boundary_coefficient(k, perimeter) - 0.5 * xi(k, perimeter, c));
}

double lemma4_target(int k, double perimeter, double c) {
  return boundary_band_target(k, perimeter, c) / perimeter;
}

double poisson_mass(double n, double area, int k) {
  const double mean = n * area;
  if (k == 0) return std::exp(-mean);
  if (mean <= 0.0) return 0.0;
  return std::exp(k * std::log(mean) - mean - std::lgamma(k + 1.0));
}

double lemma4_lhs(double n, double r, int k) {
  if (!std::isfinite(n) || n < 1.0) throw DomainError("lemma4_lhs: n must be at least 1");
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("lemma4_lhs: r must be positive");
  if (k < 0) throw DomainError("lemma4_lhs: k must be nonnegative");
  const auto integrand = [&](double t) { return n * poisson_mass(n, segment_area(r, t), k); };
  return adaptive_simpson(integrand, 0.0, 0.5 * r, 1e-8);
}

IntegralBreakdown integral_lhs(const ConvexRegion& region, double n, double r, int k,
                               const QuadratureSpec& quad) {
  if (!std::isfinite(n) || n < 1.0) throw DomainError("integral_lhs: n must be at least 1");
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("integral_lhs: r must be positive");
  if (k < 0) throw DomainError("integral_lhs: k must be nonnegative");
  if (!(quad.band_cell > 0.0) || quad.band_cell > quad.interior_cell ||
      !std::isfinite(quad.interior_cell)) {
    throw DomainError("integral_lhs: need 0 < band_cell <= interior_cell");
  }
  if (!(quad.band_width >= 1.0)) throw DomainError("integral_lhs: band_width must be >= 1");

  const double interior_area = inner_parallel_area(region, r);
  if (!(interior_area > 0.0)) {
    throw DomainError("integral_lhs: r=" + std::to_string(r) +
                      " leaves no interior zone; the region is too small for this radius");
  }

  const double full = kPi * r * r;
  const double psi_full = poisson_mass(n, full, k);

  const double coarse = quad.interior_cell * r;
  const int split = static_cast<int>(std::ceil(quad.interior_cell / quad.band_cell - 1e-9));
  const double fine = coarse / split;
  const double coarse_half_diag = coarse * std::numbers::sqrt2 / 2.0;
  const double fine_half_diag = fine * std::numbers::sqrt2 / 2.0;
  const double band_depth = quad.band_width * r;

  const BoundingBox& box = region.bounds();
  const auto cols = static_cast<std::size_t>(std::ceil(box.width() / coarse));
  const auto rows = static_cast<std::size_t>(std::ceil(box.height() / coarse));

  // Integrates n (psi(x) - psi_full), which vanishes on the interior zone,
  // so the quadrature only sees cells within r of the boundary.
  const auto integrand = [&](Point x) {
    return n * (poisson_mass(n, ball_region_intersection_area_unchecked(region, x, r), k) - psi_full);
  };

  // Midpoint value of a cell cut by the boundary: exact clipped area, evaluated
  // at the clipped centroid (or the nearest inside point for a disk).
  const auto cut_cell = [&](Point f, double size) -> double {
    const double h = 0.5 * size;
    const std::vector<Point> square{
        {f.x - h, f.y - h}, {f.x + h, f.y - h}, {f.x + h, f.y + h}, {f.x - h, f.y + h}};
    double area = 0.0;
    Point at = f;
    if (region.is_disk()) {
      area = circle_polygon_intersection_area(square, region.center(), region.radius());
      const double d = distance(f, region.center());
      const double inside = region.radius() * (1.0 - 1e-12);
      if (d > inside) at = region.center() + (inside / d) * (f - region.center());
    } else {
      const std::vector<Point> clipped = clip_to_polygon(square, region);
      if (clipped.size() < 3) return 0.0;
      area = polygon_signed_area(clipped);
      at = polygon_centroid(clipped);
    }
    if (!(area > 0.0)) return 0.0;
    return area * integrand(at);
  };

  // Uncut cells: 3x3 Gauss-Legendre. The integrand decays on a scale of
  // about r / (2 n r^2), well below the cell size, so a midpoint value is
  // not accurate enough.
  constexpr double kNode = 0.7745966692414834;  // sqrt(3/5)
  constexpr std::array<double, 3> kWeight{5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
  const auto fine_cell = [&](Point f) -> double {
    const double s = signed_boundary_distance(region, f);
    if (s <= -(r + fine_half_diag) || s >= fine_half_diag) return 0.0;
    if (s > -fine_half_diag) {
      constexpr int kSplit = 4;
      const double sub = fine / kSplit;
      double sum = 0.0;
      for (int j = 0; j < kSplit; ++j) {
        for (int i = 0; i < kSplit; ++i) {
          const Point c{f.x - 0.5 * fine + sub * (i + 0.5), f.y - 0.5 * fine + sub * (j + 0.5)};
          const double sc = signed_boundary_distance(region, c);
          if (sc >= 0.5 * sub * std::numbers::sqrt2) continue;
          sum += sc <= -0.5 * sub * std::numbers::sqrt2 ? sub * sub * integrand(c) : cut_cell(c, sub);
        }
      }
      return sum;
    }
    const std::array<double, 3> offset{-kNode * 0.5 * fine, 0.0, kNode * 0.5 * fine};
    double sum = 0.0;
    for (int j = 0; j < 3; ++j) {
      for (int i = 0; i < 3; ++i) {
        sum += kWeight[i] * kWeight[j] * integrand({f.x + offset[i], f.y + offset[j]});
      }
    }
    return fine * fine * sum;
  };

  std::vector<double> row_sums(rows, 0.0);
  parallel_for(rows, quad.threads, [&](std::size_t row) {
    std::vector<double> cells;
    const double y0 = box.lo.y + coarse * static_cast<double>(row);
    for (std::size_t col = 0; col < cols; ++col) {
      const double x0 = box.lo.x + coarse * static_cast<double>(col);
      const Point c{x0 + 0.5 * coarse, y0 + 0.5 * coarse};
      const double s = signed_boundary_distance(region, c);
      if (s <= -(band_depth + coarse_half_diag) || s >= coarse_half_diag) continue;
      double cell_sum = 0.0;
      for (int j = 0; j < split; ++j) {
        for (int i = 0; i < split; ++i) {
          cell_sum += fine_cell({x0 + fine * (i + 0.5), y0 + fine * (j + 0.5)});
        }
      }
      cells.push_back(cell_sum);
    }
    row_sums[row] = pairwise_sum(cells);
  });
  const double correction = pairwise_sum(row_sums);

  IntegralBreakdown out;
  out.interior = n * psi_full * interior_area;
  out.total = n * psi_full * region.area() + correction;
  out.boundary_band = out.total - out.interior;
  return out;
}

MinimalityReport disk_minimality_report(const std::vector<ConvexRegion>& regions, double n,
                                        int k, double c) {
  MinimalityReport report;
  for (const ConvexRegion& region : regions) {
    if (std::abs(region.area() - 1.0) > 1e-9) {
      throw DomainError("disk_minimality_report: region '" + region.id() +
                        "' does not have unit area");
    }
    MinimalityRow row;
    row.region_id = region.id();
    row.is_disk = region.is_disk();
    row.perimeter = region.perimeter();
    row.predicted_radius = predicted_radius({n, k, c, row.perimeter});
    report.rows.push_back(row);
  }
  bool minimal = true;
  for (const MinimalityRow& disk : report.rows) {
    if (!disk.is_disk) continue;
    for (const MinimalityRow& other : report.rows) {
      if (!other.is_disk && !(disk.predicted_radius < other.predicted_radius)) minimal = false;
    }
  }
  report.disk_strictly_minimal = minimal;
  return report;
}

}  // namespace critradius
