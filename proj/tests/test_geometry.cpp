#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cara/geometry.hpp"
#include "cara/jordan_curve.hpp"

using namespace cara;

namespace {
const JordanCurve kSquare({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

TEST_CASE("set_diameter examples") {
  CHECK(set_diameter(PointSet{{0, 0}}) == 0.0);
  CHECK(set_diameter(PointSet{{0, 0}, {3, 4}}) == doctest::Approx(5.0));
  CHECK(set_diameter(PointSet{{0, 0}, {1, 0}, {1, 1}, {0, 1}}) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK_THROWS_WITH_AS(set_diameter(PointSet{}), "empty point set", std::invalid_argument);
}

TEST_CASE("set_diameter agrees with brute force on random sets") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    PointSet s(5 + trial);
    for (auto& p : s) p = {u(rng), u(rng)};
    double brute = 0;
    for (auto& a : s)
      for (auto& b : s) brute = std::max(brute, distance(a, b));
    CHECK(set_diameter(s) == doctest::Approx(brute).epsilon(1e-12));
  }
}

TEST_CASE("d_inf examples") {
  CHECK(d_inf(PointSet{{0, 0}}, PointSet{{1, 0}}) == doctest::Approx(1.0));
  CHECK(d_inf(PointSet{{0, 0}, {2, 2}}, PointSet{{2, 2}}) == 0.0);
  PointSet right, left;
  const double e = std::numbers::e;
  for (int i = 0; i <= 1000; ++i) {
    right.push_back({1 + (e - 1) * i / 1000, 0});
    left.push_back({-1 - (e - 1) * i / 1000, 0});
  }
  CHECK(d_inf(right, left) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS(d_inf(PointSet{}, right));
}

TEST_CASE("diameter dominates d_inf of any bipartition") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 100; ++trial) {
    PointSet s(2 + trial % 30);
    for (auto& p : s) p = {u(rng), u(rng)};
    const std::size_t cut = 1 + rng() % (s.size() - 1);
    const PointSet a(s.begin(), s.begin() + cut), b(s.begin() + cut, s.end());
    CHECK(set_diameter(s) >= d_inf(a, b));
  }
}

TEST_CASE("set_diameter is invariant under rigid motions") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    PointSet s(40);
    for (auto& p : s) p = {u(rng), u(rng)};
    const double t = u(rng);
    const Point shift{u(rng), u(rng)};
    PointSet moved;
    for (auto& p : s) {
      moved.push_back(shift + Point{std::cos(t) * p.x - std::sin(t) * p.y,
                                    std::sin(t) * p.x + std::cos(t) * p.y});
    }
    CHECK(set_diameter(moved) == doctest::Approx(set_diameter(s)).epsilon(1e-12));
  }
}

TEST_CASE("point_in_polygon examples") {
  CHECK(point_in_polygon({0.5, 0.5}, kSquare) == Location::inside);
  CHECK(point_in_polygon({2, 2}, kSquare) == Location::outside);
  CHECK(point_in_polygon({0.5, 0}, kSquare) == Location::boundary);
}

TEST_CASE("point_in_polygon alternates along a sweep line") {
  // Star-shaped polygon crossed by the horizontal line y = 0.05.
  std::vector<Point> star;
  for (int i = 0; i < 10; ++i) {
    const double r = i % 2 ? 0.4 : 1.0;
    const double t = 2 * std::numbers::pi * i / 10 + 0.1;
    star.push_back({r * std::cos(t), r * std::sin(t)});
  }
  const JordanCurve curve(star);
  int changes = 0;
  Location prev = Location::outside;
  for (int i = 0; i <= 4000; ++i) {
    const Location here = point_in_polygon({-1.2 + 2.4 * i / 4000, 0.05}, curve);
    if (here == Location::boundary) continue;
    if (here != prev) ++changes;
    prev = here;
  }
  CHECK(prev == Location::outside);
  CHECK(changes % 2 == 0);
  CHECK(changes >= 2);
}

TEST_CASE("circle_polygon_intersection examples") {
  auto hits = circle_polygon_intersection(Circle({0.5, 0}, 0.25), kSquare);
  REQUIRE(hits.size() == 2);
  CHECK(hits[0].point.x == doctest::Approx(0.25));
  CHECK(hits[1].point.x == doctest::Approx(0.75));
  CHECK(hits[0].point.y == doctest::Approx(0.0));

  CHECK(circle_polygon_intersection(Circle({0.5, 0.5}, 0.2), kSquare).empty());

  hits = circle_polygon_intersection(Circle({0, 0}, 0.1), kSquare);
  REQUIRE(hits.size() == 2);
  for (const auto& h : hits) CHECK(norm(h.point) == doctest::Approx(0.1));
  CHECK((std::abs(hits[0].point.y) < 1e-12) != (std::abs(hits[1].point.y) < 1e-12));
}

TEST_CASE("circle crossings lie on both curves and come in even numbers") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<Point> poly;
  for (int i = 0; i < 12; ++i) {
    const double t = 2 * std::numbers::pi * i / 12;
    const double r = 0.6 + 0.4 * u(rng);
    poly.push_back({r * std::cos(t), r * std::sin(t)});
  }
  const JordanCurve curve(poly);
  for (int trial = 0; trial < 200; ++trial) {
    const Circle c({u(rng) - 0.5, u(rng) - 0.5}, 0.05 + u(rng));
    const auto hits = circle_polygon_intersection(c, curve);
    int crossings = 0;
    for (const auto& h : hits) {
      CHECK(c.distance_to_boundary(h.point) <= 1e-9);
      CHECK(curve.distance_to(h.point) <= 1e-9);
      if (!h.tangent) ++crossings;
    }
    CHECK(crossings % 2 == 0);
  }
}

TEST_CASE("circle and annulus validation") {
  CHECK_THROWS(Circle({0, 0}, 0.0));
  CHECK_THROWS(Circle({0, 0}, -1.0));
  CHECK_THROWS(Annulus({0, 0}, 2.0, 1.0));
  CHECK_THROWS(Annulus({0, 0}, 0.0, 1.0));
}
