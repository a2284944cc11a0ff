#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/poisson.hpp>

#include "doctest.h"

#include "critradius/errors.h"
#include "critradius/rng.h"
#include "critradius/sampling.h"

using namespace critradius;

namespace {

double chi2_quantile(double dof, double p) {
  return boost::math::quantile(boost::math::chi_squared_distribution<double>(dof), p);
}

}  // namespace

TEST_SUITE("sampling") {

TEST_CASE("empty sets") {
  CHECK(sample_uniform(unit_square(), 0, 1).size() == 0);
  CHECK(sample_poisson(unit_square(), 0.0, 1).size() == 0);
  CHECK_THROWS_AS(sample_poisson(unit_square(), -1.0, 1), DomainError);
}

TEST_CASE("uniform points pass a 10x10 chi-square test") {
  const auto pts = sample_uniform(unit_square(), 100000, 42);
  REQUIRE(pts.size() == 100000);
  std::vector<double> counts(100, 0.0);
  for (const Point& p : pts.points) {
    const int i = std::min(9, static_cast<int>(p.x * 10));
    const int j = std::min(9, static_cast<int>(p.y * 10));
    counts[j * 10 + i] += 1.0;
  }
  double stat = 0.0;
  for (double c : counts) stat += (c - 1000.0) * (c - 1000.0) / 1000.0;
  CHECK(stat < chi2_quantile(99, 0.999));
  CHECK(pts.seed == 42);
  CHECK(pts.region_id == "unit-square");
}

TEST_CASE("disk points stay inside and cover sub-regions proportionally") {
  const auto disk = unit_disk();
  const auto pts = sample_uniform(disk, 100000, 7);
  std::size_t inner = 0;
  for (const Point& p : pts.points) {
    CHECK(distance(p, disk.center()) <= disk.radius());
    if (distance(p, disk.center()) <= 0.5 * disk.radius()) ++inner;
  }
  // Inner disk has a quarter of the area.
  const double se = std::sqrt(0.25 * 0.75 / 1e5);
  CHECK(std::abs(inner / 1e5 - 0.25) <= 4 * se);
}

TEST_CASE("determinism per seed") {
  const auto hex = unit_regular_polygon(6);
  const auto a = sample_uniform(hex, 1000, 99);
  const auto b = sample_uniform(hex, 1000, 99);
  const auto c = sample_uniform(hex, 1000, 100);
  CHECK(a.points == b.points);
  CHECK(a.points != c.points);
  const auto pa = sample_poisson(hex, 500.0, 3);
  const auto pb = sample_poisson(hex, 500.0, 3);
  CHECK(pa.points == pb.points);
  CHECK(pa.process == Process::poisson);
}

TEST_CASE("poisson counts: mean and dispersion") {
  constexpr int kReps = 10000;
  double sum = 0.0;
  double sum_sq = 0.0;
  std::vector<double> left(kReps);
  std::vector<double> right(kReps);
  for (int i = 0; i < kReps; ++i) {
    const auto pts = sample_poisson(unit_square(), 1000.0, derive_seed(2024, i));
    const double n = static_cast<double>(pts.size());
    sum += n;
    sum_sq += n * n;
    for (const Point& p : pts.points) (p.x < 0.5 ? left[i] : right[i]) += 1.0;
  }
  const double mean = sum / kReps;
  CHECK(std::abs(mean - 1000.0) <= 4.0 * std::sqrt(1000.0 / kReps));

  // Index of dispersion: sum (x - mean)^2 / mean ~ chi^2(kReps - 1).
  const double dispersion = (sum_sq - kReps * mean * mean) / mean;
  CHECK(dispersion > chi2_quantile(kReps - 1, 0.0005));
  CHECK(dispersion < chi2_quantile(kReps - 1, 0.9995));

  // Counts in disjoint halves are uncorrelated.
  double ml = 0.0;
  double mr = 0.0;
  for (int i = 0; i < kReps; ++i) {
    ml += left[i];
    mr += right[i];
  }
  ml /= kReps;
  mr /= kReps;
  double cov = 0.0;
  double vl = 0.0;
  double vr = 0.0;
  for (int i = 0; i < kReps; ++i) {
    cov += (left[i] - ml) * (right[i] - mr);
    vl += (left[i] - ml) * (left[i] - ml);
    vr += (right[i] - mr) * (right[i] - mr);
  }
  const double corr = cov / std::sqrt(vl * vr);
  CHECK(std::abs(corr) <= 4.0 / std::sqrt(static_cast<double>(kReps)));
  CHECK(std::abs(ml - 500.0) <= 4.0 * std::sqrt(500.0 / kReps));
}

TEST_CASE("poisson_variate matches the pmf for small and large means") {
  for (double mean : {0.7, 4.0, 25.0, 60.0, 400.0}) {
    Rng rng(derive_seed(77, static_cast<std::uint64_t>(mean * 10)));
    const boost::math::poisson_distribution<double> dist(mean);
    constexpr int kDraws = 200000;
    // Bins with expected count >= 20; tails pooled.
    int lo = 0;
    while (boost::math::cdf(dist, lo) * kDraws < 20) ++lo;
    int hi = lo;
    while (boost::math::cdf(boost::math::complement(dist, hi)) * kDraws >= 20) ++hi;
    std::vector<double> observed(hi - lo + 1, 0.0);
    for (int i = 0; i < kDraws; ++i) {
      const auto x = static_cast<int>(poisson_variate(mean, rng));
      observed[std::clamp(x, lo, hi) - lo] += 1.0;
    }
    double stat = 0.0;
    for (int x = lo; x <= hi; ++x) {
      double p = 0.0;
      if (x == lo) {
        p = boost::math::cdf(dist, lo);
      } else if (x == hi) {
        p = boost::math::cdf(boost::math::complement(dist, hi - 1));
      } else {
        p = boost::math::pdf(dist, x);
      }
      const double e = p * kDraws;
      stat += (observed[x - lo] - e) * (observed[x - lo] - e) / e;
    }
    CAPTURE(mean);
    CHECK(stat < chi2_quantile(hi - lo, 0.999));
  }
}

TEST_CASE("poisson sub-region counts are Poisson with the restricted mean") {
  // Restrict to A = [0, 0.3] x [0, 0.5]; mean 200 * 0.15 = 30.
  constexpr int kReps = 20000;
  std::vector<double> counts(kReps, 0.0);
  for (int i = 0; i < kReps; ++i) {
    const auto pts = sample_poisson(unit_square(), 200.0, derive_seed(9, i));
    for (const Point& p : pts.points) counts[i] += (p.x <= 0.3 && p.y <= 0.5) ? 1.0 : 0.0;
  }
  const boost::math::poisson_distribution<double> dist(30.0);
  const int lo = 18;
  const int hi = 43;
  std::vector<double> observed(hi - lo + 1, 0.0);
  for (double c : counts) observed[std::clamp(static_cast<int>(c), lo, hi) - lo] += 1.0;
  double stat = 0.0;
  for (int x = lo; x <= hi; ++x) {
    double p = boost::math::pdf(dist, x);
    if (x == lo) p = boost::math::cdf(dist, lo);
    if (x == hi) p = boost::math::cdf(boost::math::complement(dist, hi - 1));
    const double e = p * kReps;
    stat += (observed[x - lo] - e) * (observed[x - lo] - e) / e;
  }
  CHECK(stat < chi2_quantile(hi - lo, 0.999));
}

TEST_CASE("point CSV and JSON round trip") {
  const auto pts = sample_uniform(unit_square(), 50, 5).points;
  std::stringstream csv;
  write_points_csv(csv, pts);
  CHECK(csv.str().rfind("x,y\n", 0) == 0);
  CHECK(read_points_csv(csv) == pts);
  std::stringstream json;
  write_points_json(json, pts);
  CHECK(read_points_json(json) == pts);
}

TEST_CASE("malformed point CSV names the line") {
  std::stringstream in("x,y\n0,0\n\n1,abc\n");
  try {
    read_points_csv(in);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
  std::stringstream no_header("0,0\n1,1\n");
  CHECK_THROWS_AS(read_points_csv(no_header), ParseError);
}

TEST_CASE("process names") {
  CHECK(parse_process("uniform") == Process::uniform);
  CHECK(parse_process("poisson") == Process::poisson);
  CHECK(to_string(Process::poisson) == "poisson");
  CHECK_THROWS_AS(parse_process("binomial"), DomainError);
}

}  // TEST_SUITE
