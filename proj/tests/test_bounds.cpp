#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cara/bounds.hpp"

using namespace cara;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("Log2Real arithmetic") {
  CHECK(Log2Real::from_value(0.0).is_zero());
  CHECK(std::isinf(Log2Real::zero().log2()));
  CHECK(*Log2Real::zero().value() == 0.0);
  const Log2Real tiny = Log2Real::from_log2(-2000);
  CHECK_FALSE(tiny.value().has_value());
  CHECK((tiny + tiny).log2() == doctest::Approx(-1999.0).epsilon(1e-15));
  CHECK((tiny + Log2Real::zero()) == tiny);
  CHECK((Log2Real::from_value(3) + Log2Real::from_value(5)).log2() == doctest::Approx(3.0));
  CHECK(*Log2Real::from_value(0.75).value() == doctest::Approx(0.75));
  CHECK(tiny < Log2Real::from_log2(-1999));
  CHECK(Log2Real::zero() < tiny);
  CHECK(tiny.scaled(1000).log2() == doctest::Approx(-1000.0));
  CHECK_THROWS(Log2Real::from_value(-1.0));
}

TEST_CASE("diameter bound closed form") {
  CHECK(thm32_diameter_bound(0.75 / kPi, 1.0) == doctest::Approx(std::sqrt(3.25)).epsilon(1e-12));
  CHECK(thm32_diameter_bound(1e-14, 1.0) < 1e-6);
  CHECK_THROWS_WITH_AS(thm32_diameter_bound(0.3 / kPi, 0.5), "annulus too thin for radius",
                       std::domain_error);
  CHECK_THROWS(thm32_diameter_bound(0.0, 0.5));
  CHECK_THROWS(thm32_diameter_bound(0.01, 1.5));
  for (double r = 0.2; r <= 1.0; r += 0.1) {
    double prev = 0;
    for (double lam = 1e-4; kPi * lam <= r * r; lam *= 1.5) {
      const double b = thm32_diameter_bound(lam, r);
      CHECK(b > prev);
      prev = b;
    }
  }
}

TEST_CASE("sanity window at l = eps / 2") {
  for (int i = 1; i <= 99; ++i) {
    const double eps = i / 100.0;
    const double rho = eqn1_radius(eps, eps / 2);
    CHECK(rho * rho > 7.0 / 16);
    CHECK(rho * rho < 1.0);
  }
}

TEST_CASE("exponential factor at l = 0.25, eps = 0.5") {
  const double log2_factor = 8 * kPi * kPi / ((0.0625 - 0.25) * std::numbers::ln2);
  CHECK(log2_factor == doctest::Approx(-607.5).epsilon(1e-3));
  const BoundQuery q{MapSpec::identity(), 1.0, 0.5};
  CHECK(eqn1_log2_at(q, 0.25) ==
        doctest::Approx(log2_factor + std::log2(1 - eqn1_radius(0.5, 0.25))).epsilon(1e-12));
}

TEST_CASE("threshold regression values") {
  // Frozen from an independent grid search at l_grid = 10^4.
  const BoundQuery half{MapSpec::identity(), 1.0, 0.5};
  const ThresholdResult r = eqn1_threshold(half);
  CHECK(r.threshold.log2() == doctest::Approx(-465.4970414403615).epsilon(1e-12));
  CHECK(r.l_star == doctest::Approx(0.0411280764341038).epsilon(1e-6));
  CHECK(k_of(half) == 468);

  const BoundQuery quarter{MapSpec::identity(), 1.0, 0.25};
  CHECK(eqn1_threshold(quarter).threshold.log2() ==
        doctest::Approx(-1834.341204025495).epsilon(1e-12));
  CHECK(k_of(quarter) == 1837);
  CHECK(k_of(quarter) > k_of(half));
}

TEST_CASE("threshold is maximal over its grid") {
  for (const auto& entry : map_catalog()) {
    CAPTURE(entry.name);
    const BoundQuery q{entry.map, boundary_point(entry.map, 1.0), 0.3};
    const ThresholdResult r = eqn1_threshold(q, 128);
    CHECK(r.l_star > 0);
    CHECK(r.l_star < q.eps);
    CHECK(eqn1_log2_at(q, r.l_star) == doctest::Approx(r.threshold.log2()).epsilon(1e-12));
    for (int i = 1; i <= 128; ++i) CHECK(eqn1_log2_at(q, q.eps * i / 129) <= r.threshold.log2());
  }
}

TEST_CASE("threshold errors") {
  for (double eps : {0.0, 1.0, -0.2, 1.5}) {
    CHECK_THROWS_WITH(eqn1_threshold({MapSpec::identity(), 1.0, eps}), "unsupported epsilon");
  }
  CHECK_THROWS(eqn1_threshold({MapSpec::identity(), 1.0, 0.5}, 16));
}

TEST_CASE("threshold shifts by log2 of the scale") {
  const MapSpec inner = MapSpec::quadratic(Complex(0, 0.2));
  const MapSpec scaled = MapSpec::affine(2.0, {1, -0.5}, inner);
  for (double theta : {0.0, 2.0, 4.0}) {
    const Complex z = boundary_point(inner, theta);
    const double a = eqn1_threshold({inner, z, 0.4}).threshold.log2();
    const double b = eqn1_threshold({scaled, 2.0 * z + Complex(1, -0.5), 0.4}).threshold.log2();
    CHECK(std::abs(b - a - 1.0) < 1e-9);
  }
}

TEST_CASE("delta construction") {
  const BoundQuery q{MapSpec::identity(), 1.0, 0.5};
  const DeltaResult d = delta_of(q, MLCTable::linear(8, 1));
  CHECK(d.k == 468);
  CHECK(d.g_used == 469);
  CHECK(d.delta.log2() == doctest::Approx(std::log2(3.0) - 469).epsilon(1e-14));
  CHECK(d.delta < d.threshold);
  CHECK(d.threshold.log2() - d.delta.log2() >= 1.0);

  CHECK_THROWS_WITH_AS(delta_of(q, MLCTable({1, 2, 3})), "MLC table does not cover k",
                       std::out_of_range);
  const DeltaResult padded = delta_of(q, MLCTable({1, 2, 3}, 5));
  CHECK(padded.g_used == 473);
}

TEST_CASE("best annulus bound finds admissible annuli only when they exist") {
  // Needs ln(r1 / r0) >= 2 pi^2 / rho^2, far beyond any r0 at unit scale.
  CHECK_FALSE(best_annulus_bound(MapSpec::identity(), 1.0, 0.05).has_value());
  const auto tiny = best_annulus_bound(MapSpec::identity(), 1.0, 1e-12);
  REQUIRE(tiny.has_value());
  CHECK(kPi * tiny->lambda <= tiny->rho * tiny->rho);
  CHECK(tiny->r1 < 1 - tiny->rho);
  CHECK(tiny->bound == doctest::Approx(thm32_diameter_bound(tiny->lambda, tiny->rho)));
}
