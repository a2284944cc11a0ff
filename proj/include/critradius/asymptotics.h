#pragma once

#include <string>
#include <vector>

#include "critradius/geometry.h"

namespace critradius {

/// Inputs of the radius formula. `k` is the order in the limit law: the
/// events it predicts are delta >= k+1 and kappa >= k+1. `n` may be
/// non-integral; `perimeter` is the boundary length of a unit-area region.
struct PredictionInput {
  double n = 0.0;
  int k = 0;
  double c = 0.0;
  double perimeter = 0.0;
};

/// Cell sizes of the boundary quadrature, as fractions of r.
struct QuadratureSpec {
  double interior_cell = 0.25;
  double band_cell = 1.0 / 16.0;
  /// Refinement band depth, in multiples of r.
  double band_width = 2.0;
  /// Worker threads; 0 picks hardware concurrency. Does not affect results.
  unsigned threads = 0;
};

/// The integral (n/k!) ∫ (n|B(x,r)∩Ω|)^k exp(-n|B(x,r)∩Ω|) dx, split into the
/// interior zone {dist(x, ∂Ω) >= r} and the boundary band (the rest).
struct IntegralBreakdown {
  double total = 0.0;
  double interior = 0.0;
  double boundary_band = 0.0;
};

/// Shape offset in the radius formula, for k >= 1:
///   k = 1: -2 log( sqrt(e^-c + pi l^2 / 64) - l sqrt(pi) / 8 )
///   k > 1:  2 log( l sqrt(pi) / (2^(k+1) k!) ) + 2c
double xi(int k, double perimeter, double c);

/// r_n = sqrt((log n + (2k-1) log log n + xi) / (pi n)) for k >= 1 and
/// sqrt((log n + c) / (pi n)) for k = 0. Natural logarithms.
double predicted_radius(const PredictionInput& input);

/// exp(-e^-c).
double limit_probability(double c);

/// Leading-order value of the boundary-band integral,
/// l sqrt(pi) / (2^(k+1) k!) e^(-xi/2), for k >= 1.
double boundary_band_target(int k, double perimeter, double c);

/// Density (1/k!) (n a)^k e^(-n a) evaluated in log space.
double poisson_mass(double n, double area, int k);

/// Two-zone evaluation of the integral. The interior zone has the constant
/// integrand value at |B| = pi r^2, times its exact area; only cells within
/// band_width * r of the boundary are evaluated, on a band_cell * r grid.
/// Cells inside the region use a 3x3 Gauss-Legendre rule; cells cut by the
/// boundary are split 4x4 and use exact clipped areas.
/// Throws DomainError when r is not positive or the interior zone is empty.
IntegralBreakdown integral_lhs(const ConvexRegion& region, double n, double r, int k,
                               const QuadratureSpec& quad = {});

/// n ∫_0^{r/2} (n a(r,t))^k e^{-n a(r,t)} / k! dt with a = segment_area, by
/// adaptive Simpson to relative tolerance 1e-8.
double lemma4_lhs(double n, double r, int k);

/// Closed-form target of lemma4_lhs for k >= 1: sqrt(pi)/(2^(k+1) k!) e^(-xi/2).
double lemma4_target(int k, double perimeter, double c);

struct MinimalityRow {
  std::string region_id;
  bool is_disk = false;
  double perimeter = 0.0;
  double predicted_radius = 0.0;
};

struct MinimalityReport {
  std::vector<MinimalityRow> rows;
  /// Every disk row has a strictly smaller radius than every non-disk row.
  bool disk_strictly_minimal = false;
};

/// Predicted radius per region at fixed (n, k, c). Regions must have unit area.
MinimalityReport disk_minimality_report(const std::vector<ConvexRegion>& regions, double n,
                                        int k, double c);

}  // namespace critradius
