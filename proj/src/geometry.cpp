#include "cara/geometry.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace cara {

Box bounding_box(std::span<const Point> points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  Box b{points[0].x, points[0].y, points[0].x, points[0].y};
  for (const Point& p : points) {
    b.xmin = std::min(b.xmin, p.x);
    b.xmax = std::max(b.xmax, p.x);
    b.ymin = std::min(b.ymin, p.y);
    b.ymax = std::max(b.ymax, p.y);
  }
  return b;
}

Circle::Circle(Point center, double radius) : center_(center), radius_(radius) {
  if (!(radius > 0.0) || !std::isfinite(radius) || !std::isfinite(center.x) ||
      !std::isfinite(center.y)) {
    throw std::invalid_argument("circle radius must be positive and finite");
  }
}

Annulus::Annulus(Point center, double inner, double outer)
    : center_(center), inner_(inner), outer_(outer) {
  if (!(inner > 0.0) || !(inner < outer) || !std::isfinite(outer)) {
    throw std::invalid_argument("annulus requires 0 < inner < outer < inf");
  }
}

std::vector<Point> convex_hull(std::span<const Point> points) {
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;

  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    const Point p = pts[i];
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

double set_diameter(std::span<const Point> points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  if (points.size() == 1) return 0.0;
  const std::vector<Point> hull = convex_hull(points);
  if (hull.size() == 2) return distance(hull[0], hull[1]);

  // Rotating calipers over antipodal pairs.
  const std::size_t n = hull.size();
  double best = 0.0;
  std::size_t j = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = hull[i];
    const Point b = hull[(i + 1) % n];
    while (std::abs(cross(b - a, hull[(j + 1) % n] - a)) >
           std::abs(cross(b - a, hull[j] - a))) {
      j = (j + 1) % n;
    }
    best = std::max({best, distance(a, hull[j]), distance(b, hull[j])});
  }
  return best;
}

double d_inf(std::span<const Point> a, std::span<const Point> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("empty point set");
  std::vector<Point> sorted(b.begin(), b.end());
  std::sort(sorted.begin(), sorted.end(), [](Point p, Point q) { return p.x < q.x; });

  double best = std::numeric_limits<double>::infinity();
  for (const Point& p : a) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), p.x,
                               [](Point q, double x) { return q.x < x; });
    for (auto r = it; r != sorted.end() && r->x - p.x < best; ++r) {
      best = std::min(best, distance(p, *r));
    }
    for (auto l = it; l != sorted.begin();) {
      --l;
      if (p.x - l->x >= best) break;
      best = std::min(best, distance(p, *l));
    }
    if (best == 0.0) break;
  }
  return best;
}

double segment_projection(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return 0.0;
  return std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
}

double segment_distance(Point p, Point a, Point b) {
  const double t = segment_projection(p, a, b);
  return distance(p, a + t * (b - a));
}

namespace {

int orientation(Point a, Point b, Point c) {
  const double v = cross(b - a, c - a);
  return (v > 0.0) - (v < 0.0);
}

bool on_segment(Point a, Point b, Point p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

bool segments_intersect(Point a, Point b, Point c, Point d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

}  // namespace cara
