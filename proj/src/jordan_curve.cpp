#include "cara/jordan_curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cara {

namespace {

bool edges_fold(Point prev, Point v, Point next) {
  return cross(v - prev, next - v) == 0.0 && dot(prev - v, next - v) > 0.0;
}

// Bucket edges on a coarse grid and test the pairs that share a bucket.
bool has_self_intersection(const std::vector<Point>& v) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (edges_fold(v[(i + n - 1) % n], v[i], v[(i + 1) % n])) return true;
  }
  if (n == 3) return false;

  const Box box = bounding_box(v);
  const int g = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(n))));
  const double cw = std::max(box.width(), 1e-300) / g;
  const double ch = std::max(box.height(), 1e-300) / g;
  const auto cell_x = [&](double x) {
    return std::clamp(static_cast<int>((x - box.xmin) / cw), 0, g - 1);
  };
  const auto cell_y = [&](double y) {
    return std::clamp(static_cast<int>((y - box.ymin) / ch), 0, g - 1);
  };

  std::vector<std::vector<std::size_t>> buckets(static_cast<std::size_t>(g) * g);
  for (std::size_t e = 0; e < n; ++e) {
    const Point a = v[e];
    const Point b = v[(e + 1) % n];
    for (int cx = cell_x(std::min(a.x, b.x)); cx <= cell_x(std::max(a.x, b.x)); ++cx) {
      for (int cy = cell_y(std::min(a.y, b.y)); cy <= cell_y(std::max(a.y, b.y)); ++cy) {
        buckets[static_cast<std::size_t>(cy) * g + cx].push_back(e);
      }
    }
  }

  for (const auto& bucket : buckets) {
    for (std::size_t i = 0; i < bucket.size(); ++i) {
      for (std::size_t j = i + 1; j < bucket.size(); ++j) {
        const std::size_t a = std::min(bucket[i], bucket[j]);
        const std::size_t b = std::max(bucket[i], bucket[j]);
        if (b == a + 1 || (a == 0 && b == n - 1)) continue;
        if (segments_intersect(v[a], v[(a + 1) % n], v[b], v[(b + 1) % n])) return true;
      }
    }
  }
  return false;
}

double signed_area(const std::vector<Point>& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += cross(v[i], v[(i + 1) % v.size()]);
  return 0.5 * s;
}

}  // namespace

JordanCurve::JordanCurve(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw std::invalid_argument("not a Jordan curve: fewer than 3 vertices");
  for (std::size_t i = 0; i < n; ++i) {
    const Point p = vertices_[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw std::invalid_argument("not a Jordan curve: non-finite vertex");
    }
    if (p == vertices_[(i + 1) % n]) {
      throw std::invalid_argument("not a Jordan curve: repeated vertex");
    }
  }
  double a = signed_area(vertices_);
  if (a == 0.0 || has_self_intersection(vertices_)) {
    throw std::invalid_argument("not a Jordan curve");
  }
  if (a < 0.0) {
    std::reverse(vertices_.begin(), vertices_.end());
    a = -a;
  }
  area_ = a;
  bbox_ = bounding_box(vertices_);
  cumulative_.resize(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    cumulative_[i + 1] = cumulative_[i] + distance(vertex(i), vertex(i + 1));
  }
}

CurvePoint JordanCurve::normalize(CurvePoint p) const {
  if (!(p.t >= 0.0 && p.t <= 1.0)) throw std::invalid_argument("curve parameter outside [0, 1]");
  p.edge %= size();
  if (p.t == 1.0) {
    p.edge = (p.edge + 1) % size();
    p.t = 0.0;
  }
  return p;
}

Point JordanCurve::at(CurvePoint p) const {
  p = normalize(p);
  const Point a = edge_start(p.edge);
  return a + p.t * (edge_end(p.edge) - a);
}

double JordanCurve::arc_position(CurvePoint p) const {
  p = normalize(p);
  return cumulative_[p.edge] + p.t * (cumulative_[p.edge + 1] - cumulative_[p.edge]);
}

CurvePoint JordanCurve::at_arc_length(double s) const {
  const double total = perimeter();
  s = std::fmod(s, total);
  if (s < 0.0) s += total;
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
  std::size_t e = static_cast<std::size_t>(std::distance(cumulative_.begin(), it)) - 1;
  e = std::min(e, size() - 1);
  const double len = cumulative_[e + 1] - cumulative_[e];
  return normalize({e, std::clamp((s - cumulative_[e]) / len, 0.0, 1.0)});
}

double JordanCurve::distance_to(Point p) const {
  double best = distance(p, vertices_[0]);
  for (std::size_t e = 0; e < size(); ++e) {
    best = std::min(best, segment_distance(p, edge_start(e), edge_end(e)));
  }
  return best;
}

CurvePoint JordanCurve::project(Point p) const {
  CurvePoint best{0, 0.0};
  double best_d = distance(p, vertices_[0]);
  for (std::size_t e = 0; e < size(); ++e) {
    const double t = segment_projection(p, edge_start(e), edge_end(e));
    const Point a = edge_start(e);
    const double d = distance(p, a + t * (edge_end(e) - a));
    if (d < best_d) {
      best_d = d;
      best = {e, t};
    }
  }
  return normalize(best);
}

Point JordanCurve::inward_normal(CurvePoint p) const {
  p = normalize(p);
  const auto left_normal = [&](std::size_t e) {
    const Point d = edge_end(e) - edge_start(e);
    return (1.0 / norm(d)) * Point{-d.y, d.x};
  };
  Point n = left_normal(p.edge);
  if (p.t == 0.0) {
    const Point m = n + left_normal((p.edge + size() - 1) % size());
    if (norm(m) > 1e-12) n = (1.0 / norm(m)) * m;
  }
  return n;
}

Location point_in_polygon(Point z, const JordanCurve& curve, double tol) {
  if (tol < 0.0) throw std::invalid_argument("negative tolerance");
  if (curve.distance_to(z) <= tol) return Location::boundary;
  int winding = 0;
  for (std::size_t e = 0; e < curve.size(); ++e) {
    const Point a = curve.edge_start(e);
    const Point b = curve.edge_end(e);
    if (a.y <= z.y) {
      if (b.y > z.y && cross(b - a, z - a) > 0.0) ++winding;
    } else if (b.y <= z.y && cross(b - a, z - a) < 0.0) {
      --winding;
    }
  }
  return winding != 0 ? Location::inside : Location::outside;
}

std::vector<CircleCrossing> circle_polygon_intersection(const Circle& circle,
                                                        const JordanCurve& curve) {
  const std::size_t n = curve.size();
  const Point c = circle.center();
  const double rho = circle.radius();
  std::vector<bool> on_circle(n);
  for (std::size_t i = 0; i < n; ++i) {
    on_circle[i] = circle.distance_to_boundary(curve.vertex(i)) <= kGeomTol;
  }

  std::vector<CircleCrossing> out;
  for (std::size_t e = 0; e < n; ++e) {
    const Point a = curve.edge_start(e);
    const Point b = curve.edge_end(e);
    const Point d = b - a;

    if (on_circle[e]) {
      // The sign of |x - c|^2 - rho^2 just before and just after the vertex
      // decides whether the polygon crosses or only touches the circle.
      const Point prev = curve.vertex(e + n - 1);
      const double after = dot(a - c, d);
      const double before = -dot(a - c, a - prev);
      const bool crossing = (after > 0.0 && before < 0.0) || (after < 0.0 && before > 0.0);
      out.push_back({{e, 0.0}, a, !crossing});
    }

    // |a + t d - c|^2 = rho^2  ->  A t^2 + 2 B t + C = 0
    const Point ac = a - c;
    const double A = dot(d, d);
    const double B = dot(ac, d);
    const double C = dot(ac, ac) - rho * rho;
    const double disc = B * B - A * C;
    const double scale = std::max(A * rho * rho, 1e-300);
    std::vector<std::pair<double, bool>> roots;
    if (std::abs(disc) <= 1e-14 * scale) {
      roots.emplace_back(-B / A, true);
    } else if (disc > 0.0) {
      const double s = std::sqrt(disc);
      // Stable pairing of the two roots.
      const double q = -(B + std::copysign(s, B));
      double t1 = q / A;
      double t2 = (q != 0.0) ? C / q : -t1;
      if (t1 > t2) std::swap(t1, t2);
      roots.emplace_back(t1, false);
      roots.emplace_back(t2, false);
    }
    for (auto [t, tangent] : roots) {
      if (t < 0.0 || t > 1.0) continue;
      const Point p = a + t * d;
      if (on_circle[e] && distance(p, a) <= kGeomTol) continue;
      if (on_circle[(e + 1) % n] && distance(p, b) <= kGeomTol) continue;
      if (t == 1.0) continue;
      out.push_back({{e, t}, p, tangent});
    }
  }
  return out;
}

std::vector<Point> forward_arc(const JordanCurve& curve, CurvePoint p, CurvePoint q) {
  p = curve.normalize(p);
  q = curve.normalize(q);
  std::vector<Point> arc{curve.at(p)};
  const auto push = [&](Point x) {
    if (!(x == arc.back())) arc.push_back(x);
  };
  const bool same_edge_ahead = p.edge == q.edge && q.t > p.t;
  if (!same_edge_ahead) {
    std::size_t e = p.edge;
    do {
      e = (e + 1) % curve.size();
      push(curve.vertex(e));
    } while (e != q.edge);
  }
  push(curve.at(q));
  return arc;
}

SubarcPair split_at(const JordanCurve& curve, CurvePoint p, CurvePoint q) {
  if (distance(curve.at(p), curve.at(q)) <= 1e-12) {
    throw std::invalid_argument("degenerate split");
  }
  return {forward_arc(curve, p, q), forward_arc(curve, q, p)};
}

double subarc_diameter(std::span<const Point> arc) {
  if (arc.empty()) throw std::invalid_argument("empty arc");
  return set_diameter(arc);
}

double polyline_length(std::span<const Point> arc) {
  double len = 0.0;
  for (std::size_t i = 1; i < arc.size(); ++i) len += distance(arc[i - 1], arc[i]);
  return len;
}

JordanCurve trace_map_boundary(const MapSpec& map, int n) {
  if (n < 16) throw std::invalid_argument("trace needs n >= 16");
  std::vector<Point> v(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    v[j] = to_point(map.psi(std::polar(1.0, 2.0 * std::numbers::pi * j / n)));
  }
  try {
    return JordanCurve(std::move(v));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("self-intersecting trace; increase n");
  }
}

}  // namespace cara
