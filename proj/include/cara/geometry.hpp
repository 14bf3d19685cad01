#pragma once

// Planar primitives shared by every other part of the library: points,
// circles, annuli, set diameters and distances between point sets.

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <vector>

namespace cara {

using Complex = std::complex<double>;

/// Absolute tolerance used by geometric predicates (on-curve, on-circle).
inline constexpr double kGeomTol = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point a, Point b) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

inline Complex to_complex(Point p) { return {p.x, p.y}; }
inline Point to_point(Complex z) { return {z.real(), z.imag()}; }

using PointSet = std::vector<Point>;

/// Axis-aligned bounding box.
struct Box {
  double xmin = 0.0, ymin = 0.0, xmax = 0.0, ymax = 0.0;

  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  double extent() const { return std::max(width(), height()); }
  bool contains(Point p) const {
    return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
  }
};

Box bounding_box(std::span<const Point> points);

/// A circle with strictly positive finite radius.
class Circle {
 public:
  Circle(Point center, double radius);

  Point center() const { return center_; }
  double radius() const { return radius_; }
  /// Distance from p to the circle itself (not the disk).
  double distance_to_boundary(Point p) const {
    return std::abs(distance(p, center_) - radius_);
  }
  bool strictly_inside(Point p) const { return distance(p, center_) < radius_; }
  Point at_angle(double theta) const {
    return {center_.x + radius_ * std::cos(theta),
            center_.y + radius_ * std::sin(theta)};
  }

 private:
  Point center_;
  double radius_;
};

/// Open annulus {z : inner < |z - center| < outer}, 0 < inner < outer < inf.
class Annulus {
 public:
  Annulus(Point center, double inner, double outer);

  Point center() const { return center_; }
  double inner() const { return inner_; }
  double outer() const { return outer_; }
  bool contains(Point p) const {
    const double d = distance(p, center_);
    return d > inner_ && d < outer_;
  }

 private:
  Point center_;
  double inner_;
  double outer_;
};

/// Largest pairwise distance; 0 for a singleton. Throws on empty input.
double set_diameter(std::span<const Point> points);

/// Smallest distance between a point of `a` and a point of `b`.
double d_inf(std::span<const Point> a, std::span<const Point> b);

/// Convex hull in counterclockwise order, collinear points dropped.
std::vector<Point> convex_hull(std::span<const Point> points);

double segment_distance(Point p, Point a, Point b);

/// Closest point of segment [a, b] to p, as the affine parameter in [0, 1].
double segment_projection(Point p, Point a, Point b);

/// Closed-segment intersection test (touching counts).
bool segments_intersect(Point a, Point b, Point c, Point d);

}  // namespace cara
