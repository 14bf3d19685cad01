#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cara/annulus.hpp"

using namespace cara;

namespace {

const double kE = std::numbers::e;

PointSet segment_samples(double from, double to) {
  PointSet out;
  for (int i = 0; i <= 512; ++i) out.push_back({from + (to - from) * i / 512, 0});
  return out;
}

RegionSample half_annulus(int n) {
  const Annulus a({0, 0}, 1, kE);
  return RegionSample::from_predicate({-kE, 0, kE, kE}, n,
                                      [a](Point p) { return p.y > 0 && a.contains(p); });
}

}  // namespace

TEST_CASE("extremal_length examples") {
  CHECK(extremal_length(Annulus({0, 0}, 1, kE)) == doctest::Approx(2 * std::numbers::pi).epsilon(1e-12));
  CHECK(extremal_length(Annulus({0, 0}, 1, std::exp(2 * std::numbers::pi))) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(extremal_length(Annulus({0, 0}, 2, 2 * kE * kE)) ==
        doctest::Approx(std::numbers::pi).epsilon(1e-12));
  CHECK_THROWS(extremal_length(Annulus({0, 0}, 2, 1)));
}

TEST_CASE("extremal_length monotonicity and scale invariance") {
  for (double r = 0.1; r < 2; r += 0.1) {
    for (double big = 2.5; big < 10; big += 0.5) {
      const double lam = extremal_length(Annulus({0, 0}, r, big));
      CHECK(extremal_length(Annulus({0, 0}, r, big + 0.25)) < lam);
      CHECK(extremal_length(Annulus({0, 0}, r + 0.05, big)) > lam);
      CHECK(extremal_length(Annulus({3, 3}, 17 * r, 17 * big)) == doctest::Approx(lam).epsilon(1e-12));
    }
  }
}

TEST_CASE("region area estimate") {
  const RegionSample h = half_annulus(1024);
  const double exact = std::numbers::pi * (kE * kE - 1) / 2;
  CHECK(std::abs(h.area_estimate - exact) <= 5 * h.area_std_error + 1e-3);
  CHECK(h.area_std_error > 0);
}

TEST_CASE("polar separation examples") {
  const Annulus a({0, 0}, 1, kE);
  const RegionSample omega = half_annulus(1024);
  const PolarSeparationCandidate cand(segment_samples(1, kE), segment_samples(-1, -kE));
  CHECK(is_polar_separation(a, omega, cand, 16, 1024).passed());
  const PolarSeparationCandidate swapped(segment_samples(-1, -kE), segment_samples(1, kE));
  CHECK(is_polar_separation(a, omega, swapped, 16, 1024).passed());

  const RegionSample full =
      RegionSample::from_predicate({-kE, -kE, kE, kE}, 1024, [a](Point p) { return a.contains(p); });
  PointSet e_arc, f_arc;
  for (int i = 0; i <= 64; ++i) {
    e_arc.push_back({kE * std::cos(0.5 * i / 64), kE * std::sin(0.5 * i / 64)});
    f_arc.push_back({kE * std::cos(3 + 0.5 * i / 64), kE * std::sin(3 + 0.5 * i / 64)});
  }
  const PolarCheck bad = is_polar_separation(a, full, PolarSeparationCandidate(e_arc, f_arc), 16, 1024);
  CHECK_FALSE(bad.passed());
  CHECK(bad.failing_circles == bad.circles);
  REQUIRE(bad.failing_radius.has_value());
  CHECK(*bad.failing_radius > 1.0);

  CHECK_THROWS_WITH(PolarSeparationCandidate({{1, 0}}, {{1, 0}}), "candidate sets intersect");
  CHECK_THROWS(is_polar_separation(a, omega, cand, 4, 1024));
  CHECK_THROWS(is_polar_separation(a, omega, cand, 16, 100));
}

TEST_CASE("length-area examples") {
  const Annulus a({0, 0}, 1, kE);
  const RegionSample omega = half_annulus(1024);
  const PolarSeparationCandidate cand(segment_samples(1, kE), segment_samples(-1, -kE));
  const LengthAreaRecord id = length_area_check(a, omega, cand, MapSpec::identity());
  CHECK(id.lambda == doctest::Approx(2 * std::numbers::pi));
  CHECK(id.ratio == doctest::Approx(8 / (std::numbers::pi * (kE * kE - 1))).epsilon(0.02));
  CHECK(id.holds);
  CHECK(length_area_check(a, omega, cand, MapSpec::mobius(0.3)).holds);

  const RegionSample strip = RegionSample::from_predicate(
      {-kE, 0, kE, 0.05}, 4096, [a](Point p) { return p.y > 0 && p.y < 0.01 && a.contains(p); });
  const LengthAreaRecord thin = length_area_check(a, strip, cand, MapSpec::identity());
  CHECK(thin.ratio > thin.lambda);
  CHECK_FALSE(thin.holds);

  const RegionSample empty =
      RegionSample::from_predicate({1.5, 0.1, 2, 0.6}, 64, [](Point) { return false; });
  CHECK_THROWS_WITH(length_area_check(a, empty, cand, MapSpec::identity()), "degenerate region");
}
