#include <doctest.h>

#include <cmath>

#include "cara/mlc.hpp"

using namespace cara;

namespace {

JordanCurve corridor(double neck) {
  const double y0 = 0.5 - neck / 2, y1 = 0.5 + neck / 2;
  return JordanCurve({{0, 0}, {1, 0}, {1, y0}, {1.5, y0}, {1.5, 0}, {2.5, 0},
                      {2.5, 1}, {1.5, 1}, {1.5, y1}, {1, y1}, {1, 1}, {0, 1}});
}

const JordanCurve kSquare({{0, 0}, {1, 0}, {1, 1}, {0, 1}});

}  // namespace

TEST_CASE("MLCTable basics") {
  const MLCTable t({1, 3, 4});
  CHECK(t.kmax() == 2);
  CHECK(t.at(1) == 3);
  CHECK(t.is_increasing());
  CHECK_THROWS_WITH_AS(t.at(3), "MLC table does not cover k", std::out_of_range);
  const MLCTable ext = t.with_linear_extension();
  CHECK(ext.at(10) == 12);
  CHECK(MLCTable::linear(4, 1).at(100) == 101);
  CHECK_FALSE(MLCTable({2, 1}).is_increasing());
  CHECK_THROWS(MLCTable(std::vector<int>{}));
  CHECK_THROWS(MLCTable({-1}));
}

TEST_CASE("circle with g(k) = k + 1 passes") {
  const JordanCurve circle = trace_map_boundary(MapSpec::identity(), 16384);
  const MLCTable table = MLCTable::linear(8, 1);
  for (int k = 0; k <= 8; ++k) {
    CAPTURE(k);
    CHECK_FALSE(check_mlc(circle, table, k, 4096).has_value());
  }
}

TEST_CASE("corridor neck produces a witness") {
  const JordanCurve c = corridor(std::ldexp(1.0, -5));
  const auto w = check_mlc(c, MLCTable::linear(1, 1), 1, 4096);
  REQUIRE(w.has_value());
  CHECK(w->k == 1);
  CHECK(w->pair_distance > 0);
  CHECK(w->pair_distance <= 0.25);
  CHECK(w->best_arc_diameter > 0.5);

  // At g(1) = 5 only the pair straddling the neck remains.
  const auto neck = check_mlc(c, MLCTable({5, 5}), 1, 4096);
  REQUIRE(neck.has_value());
  CHECK(neck->pair_distance == doctest::Approx(1.0 / 32).epsilon(1e-12));
  CHECK(neck->best_arc_diameter > 1.0);
}

TEST_CASE("pairs on one straight edge never witness") {
  const JordanCurve strip({{0, 0}, {4, 0}, {4, 1}, {0, 1}});
  CHECK_FALSE(check_mlc(strip, MLCTable::linear(3, 1), 3, 1024).has_value());
}

TEST_CASE("check_mlc is monotone in g and in resolution") {
  const JordanCurve c = corridor(std::ldexp(1.0, -5));
  CHECK_FALSE(check_mlc(c, MLCTable({7, 7}), 1, 4096).has_value());
  CHECK_FALSE(check_mlc(c, MLCTable({9, 9}), 1, 4096).has_value());
  CHECK_FALSE(check_mlc(c, MLCTable({7, 7}), 1, 512).has_value());
  CHECK_THROWS(check_mlc(c, MLCTable({7, 7}), 2, 4096));
  CHECK_THROWS(check_mlc(c, MLCTable({7, 7}), 1, 32));
}

TEST_CASE("estimates") {
  // Sampling never hits a pair at exactly 2^-k, so the raw circle estimate
  // can land one below the analytic k + 1.
  const auto circle_raw = estimate_mlc_raw(trace_map_boundary(MapSpec::identity(), 16384), 8, 4096);
  for (int k = 0; k <= 8; ++k) {
    CAPTURE(k);
    CHECK(circle_raw[k] >= k);
    CHECK(circle_raw[k] <= k + 1);
  }
  const MLCTable circle = estimate_mlc(trace_map_boundary(MapSpec::identity(), 16384), 8, 4096);
  CHECK(circle.is_increasing());
  for (int k = 0; k <= 8; ++k) CHECK(circle.at(k) <= k + 2);

  const auto square = estimate_mlc_raw(kSquare, 6, 4096);
  for (int k = 0; k <= 6; ++k) CHECK(square[k] <= k + 2);

  const MLCTable c = estimate_mlc(corridor(std::ldexp(1.0, -5)), 2, 4096);
  CHECK(c.at(1) >= 5);
  CHECK(c.is_increasing());
}

TEST_CASE("membership theorem instances") {
  const JordanCurve circle = trace_map_boundary(MapSpec::identity(), 4096);
  const MLCTable table = MLCTable::linear(8, 1);
  const Circle disk({1, 0}, 0.3);
  CHECK(verify_membership_theorem(circle, table, disk, {1 - std::ldexp(1.0, -8), 0}, {0, 0.0}, 6,
                                  512));
  CHECK_THROWS_WITH_AS(
      verify_membership_theorem(circle, table, disk, {1 - 4 * std::ldexp(1.0, -7), 0}, {0, 0.0},
                                6, 512),
      doctest::Contains("theorem hypotheses not met"), std::invalid_argument);

  const MLCTable square_table = MLCTable::linear(8, 2);
  CHECK(verify_membership_theorem(kSquare, square_table, Circle({0.5, 0}, 0.3),
                                  {0.5, std::ldexp(1.0, -8)}, {0, 0.5}, 4, 512));
}
