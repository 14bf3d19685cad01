#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cara/geometry.hpp"
#include "cara/maps.hpp"

namespace cara {

/// A point on a polygon: affine parameter t along edge `edge`
/// (from vertex edge to vertex edge+1, cyclically).
struct CurvePoint {
  std::size_t edge = 0;
  double t = 0.0;

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

enum class Location { inside, outside, boundary };

/// Simple closed polygon, stored counterclockwise.
///
/// Construction rejects repeated consecutive vertices and any pair of edges
/// that meet other than at a shared endpoint. A clockwise input is reversed,
/// so CurvePoints always refer to the stored (counterclockwise) vertex order.
class JordanCurve {
 public:
  explicit JordanCurve(std::vector<Point> vertices);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Point>& vertices() const { return vertices_; }
  Point vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  Point edge_start(std::size_t e) const { return vertex(e); }
  Point edge_end(std::size_t e) const { return vertex(e + 1); }

  Point at(CurvePoint p) const;
  /// Maps (i, 1) to (i + 1, 0) and reduces the edge index modulo size().
  CurvePoint normalize(CurvePoint p) const;

  double perimeter() const { return cumulative_.back(); }
  double area() const { return area_; }
  Box bbox() const { return bbox_; }

  /// Arc length from vertex 0 to p along the traversal direction.
  double arc_position(CurvePoint p) const;
  CurvePoint at_arc_length(double s) const;

  double distance_to(Point p) const;
  /// Nearest point of the curve to p.
  CurvePoint project(Point p) const;

  /// Unit normal pointing into the interior at p; at a vertex this bisects
  /// the two adjacent edge normals.
  Point inward_normal(CurvePoint p) const;

 private:
  std::vector<Point> vertices_;
  std::vector<double> cumulative_;
  double area_ = 0.0;
  Box bbox_;
};

/// Winding-number classification; `boundary` whenever the distance to the
/// curve is at most tol.
Location point_in_polygon(Point z, const JordanCurve& curve, double tol = 1e-12);

struct CircleCrossing {
  CurvePoint where;
  Point point;
  /// Tangential contact (edge tangent to the circle, or a vertex touching
  /// it without crossing). Tangencies do not count toward crossing parity.
  bool tangent = false;
};

/// Points where the circle meets the polygon, in traversal order of the
/// polygon. Every point lies on both within 1e-9.
std::vector<CircleCrossing> circle_polygon_intersection(const Circle& circle,
                                                        const JordanCurve& curve);

/// The two subarcs joining p and q: arc1 runs forward (counterclockwise)
/// from p to q, arc2 forward from q back to p.
struct SubarcPair {
  std::vector<Point> arc1;
  std::vector<Point> arc2;
};

SubarcPair split_at(const JordanCurve& curve, CurvePoint p, CurvePoint q);

/// Vertices visited going forward from p to q, endpoints included.
std::vector<Point> forward_arc(const JordanCurve& curve, CurvePoint p, CurvePoint q);

/// Exact maximum pairwise distance of a polyline (attained at vertices).
double subarc_diameter(std::span<const Point> arc);

double polyline_length(std::span<const Point> arc);

/// Polygon with vertices psi(exp(2 pi i j / n)), j = 0..n-1.
JordanCurve trace_map_boundary(const MapSpec& map, int n);

}  // namespace cara
