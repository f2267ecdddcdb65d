#include <catch2/catch_amalgamated.hpp>

#include <hk/estimate.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

using namespace hk;

namespace {

std::vector<SeriesPoint> sample(unsigned d, std::uint64_t p, unsigned emax,
                                std::uint64_t (*f)(std::uint64_t)) {
  std::vector<SeriesPoint> pts;
  std::uint64_t q = 1;
  pts.push_back({1, f(1)});
  for (unsigned e = 1; e <= emax; ++e) {
    q *= p;
    pts.push_back({q, f(q)});
  }
  (void)d;
  return pts;
}

} // namespace

TEST_CASE("exact polynomial data is solved exactly") {
  // v(q) = q^3: the regular pattern
  auto cube = [](std::uint64_t q) { return q * q * q; };
  LeadingEstimate est = estimate_leading(sample(3, 2, 4, cube), 3);
  CHECK(est.alpha == 1.0);
  CHECK(est.residual == 0.0);
  REQUIRE(est.alpha_rational.has_value());
  CHECK(*est.alpha_rational == Rat::of(1));

  // v(q) = (3 q^2 - 1)/2: quadric cone values
  auto quad = [](std::uint64_t q) { return (3 * q * q - 1) / 2; };
  LeadingEstimate e2 = estimate_leading(sample(2, 5, 4, quad), 2);
  CHECK(std::fabs(e2.alpha - 1.5) < 1e-5);
  REQUIRE(e2.alpha_rational.has_value());
  CHECK(*e2.alpha_rational == Rat::of(3, 2));

  // exact alpha q^2 + beta q with no noise term: two-point solve is exact
  auto clean = [](std::uint64_t q) { return (3 * q * q - q) / 2; };
  LeadingEstimate e3 = estimate_leading(sample(2, 5, 3, clean), 2);
  CHECK(e3.method == "two-point");
  CHECK(e3.alpha == 1.5);
  CHECK(e3.residual == 0.0);
  REQUIRE(e3.alpha_exact.has_value());
  CHECK(*e3.alpha_exact == Rat::of(3, 2));
  CHECK(std::fabs(e3.beta + 0.5) < 1e-12);
}

TEST_CASE("quartic series reconstructs its limit from three steps") {
  std::vector<SeriesPoint> pts = {
      {1, 1}, {5, 339}, {25, 43017}, {125, 5379051}};
  LeadingEstimate est = estimate_leading(pts, 3);
  CHECK(std::fabs(est.alpha - 168.0 / 61.0) < 5e-3);
  REQUIRE(est.alpha_rational.has_value());
  CHECK(*est.alpha_rational == Rat::of(168, 61));
}

TEST_CASE("zero-dimensional series short-circuit to the last value") {
  std::vector<SeriesPoint> pts = {{1, 7}, {5, 7}, {25, 7}};
  LeadingEstimate est = estimate_leading(pts, 0);
  CHECK(est.alpha == 7.0);
  CHECK(est.method == "stable");
}

TEST_CASE("single-sample series fall back to the plain ratio") {
  std::vector<SeriesPoint> pts = {{1, 1}, {5, 80}};
  LeadingEstimate est = estimate_leading(pts, 2);
  CHECK(est.method == "ratio");
  CHECK(est.alpha == 80.0 / 25.0);
}

TEST_CASE("misfit data leaves a visible residual") {
  // cubic growth declared as dimension 2: no q^2 model fits
  std::vector<SeriesPoint> pts = {
      {1, 1}, {5, 125}, {25, 15625}, {125, 1953125}};
  LeadingEstimate est = estimate_leading(pts, 2);
  CHECK(est.residual > 0.05 * est.alpha);
}

TEST_CASE("rational reconstruction snaps to minimal denominators") {
  REQUIRE(rational_reconstruct(0.5, 1e-9).value() == Rat::of(1, 2));
  REQUIRE(rational_reconstruct(1.0 / 3.0, 1e-9).value() == Rat::of(1, 3));
  REQUIRE(rational_reconstruct(2.754099, 1e-5).value() == Rat::of(168, 61));
  // the simplest rational wins inside a loose window
  REQUIRE(rational_reconstruct(0.2500001, 1e-3).value() == Rat::of(1, 4));
  CHECK(rational_reconstruct(1.0, 1e-12).value() == Rat::of(1));
  // nothing with a small denominator sits within 1e-12 of pi
  CHECK_FALSE(rational_reconstruct(3.14159265358979, 1e-12).has_value());
}

TEST_CASE("difference path recovers multiplicities from ordinary powers") {
  // lambda(R / I^n) = n (2n + 1) - e.g. the parameter pair (x^2, y^2) shifted
  std::vector<SeriesPoint> pts;
  for (std::uint64_t n = 1; n <= 6; ++n) pts.push_back({n, n * (2 * n + 1)});
  DifferenceEstimate est = estimate_hs_multiplicity(pts, 2);
  CHECK(est.value == 4.0);
  CHECK(est.residual == 0.0);
  REQUIRE(est.exact.has_value());
  CHECK(*est.exact == Rat::of(4));

  // the full maximal-ideal staircase in two variables: multiplicity 1
  std::vector<SeriesPoint> tri;
  for (std::uint64_t n = 1; n <= 5; ++n) tri.push_back({n, n * (n + 1) / 2});
  CHECK(*estimate_hs_multiplicity(tri, 2).exact == Rat::of(1));

  // a degree-5 plane curve: the n-th value is sum of min(i + 1, 5) over
  // i < n, so the slope settles at 5 after a burn-in
  std::vector<SeriesPoint> curve;
  std::uint64_t acc = 0;
  for (std::uint64_t n = 1; n <= 8; ++n) {
    acc += std::min<std::uint64_t>(n, 5);
    curve.push_back({n, acc});
  }
  DifferenceEstimate c = estimate_hs_multiplicity(curve, 1);
  CHECK(*c.exact == Rat::of(5));
  CHECK(c.residual == 0.0);
}

TEST_CASE("difference path validates its inputs") {
  std::vector<SeriesPoint> two = {{1, 1}, {2, 4}};
  CHECK_THROWS_AS(estimate_hs_multiplicity(two, 2), std::invalid_argument);
  std::vector<SeriesPoint> gap = {{1, 1}, {2, 4}, {4, 16}, {5, 25}};
  CHECK_THROWS_AS(estimate_hs_multiplicity(gap, 2), std::invalid_argument);
}
