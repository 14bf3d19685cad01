#include "cara/components.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cara {

std::vector<Point> ComponentRegion::cell_centers() const {
  std::vector<Point> out;
  out.reserve(cell_count);
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.push_back(grid.center(i));
  }
  return out;
}

Grid disk_grid(Point center, double r, int grid_n) {
  return Grid::covering({center.x - r, center.y - r, center.x + r, center.y + r}, grid_n);
}

namespace {

ComponentRegion extract(const Grid& grid, const Labeling& labels, int id, Point zeta,
                        bool with_zeta) {
  ComponentRegion out;
  out.grid = grid;
  out.mask.assign(grid.cell_count(), 0);
  bool first = true;
  for (std::size_t i = 0; i < grid.cell_count(); ++i) {
    if (labels.label[i] != id) continue;
    out.mask[i] = 1;
    ++out.cell_count;
    const Point c = grid.center(i);
    if (first) {
      out.bbox = {c.x, c.y, c.x, c.y};
      first = false;
    } else {
      out.bbox = {std::min(out.bbox.xmin, c.x), std::min(out.bbox.ymin, c.y),
                  std::max(out.bbox.xmax, c.x), std::max(out.bbox.ymax, c.y)};
    }
    if (with_zeta && distance(c, zeta) <= 2.0 * grid.cell) out.touches_zeta0 = true;
  }
  out.area_estimate = static_cast<double>(out.cell_count) * grid.cell_area();
  return out;
}

struct DiskLabels {
  Labeling labels;
  CellMask member;
};

DiskLabels label_disk_intersection(const JordanDomain& domain, Point zeta, double r,
                                   const Grid& grid) {
  if (!(r > 0.0)) throw std::invalid_argument("radius must be positive");
  DiskLabels out;
  out.member = rasterize_interior(grid, domain.boundary);
  for (std::size_t i = 0; i < out.member.size(); ++i) {
    if (out.member[i] && !(distance(grid.center(i), zeta) < r)) out.member[i] = 0;
  }
  std::vector<Segment> edges;
  for (const Segment& s : polygon_edges(domain.boundary)) {
    if (segment_distance(zeta, s.a, s.b) < r + 2.0 * grid.cell) edges.push_back(s);
  }
  AdjacencyCuts cuts(grid);
  add_cuts(grid, edges, cuts);
  out.labels = label_components(grid, out.member, cuts);
  return out;
}

}  // namespace

ComponentRegion boundary_component_on(const JordanDomain& domain, CurvePoint zeta0, double r,
                                      const Grid& grid) {
  const Point zeta = domain.boundary.at(zeta0);
  const DiskLabels dl = label_disk_intersection(domain, zeta, r, grid);
  const Point normal = domain.boundary.inward_normal(zeta0);
  for (int offset = 2; offset <= 8; ++offset) {
    const auto idx = grid.locate(zeta + (offset * grid.cell) * normal);
    if (!idx || !dl.member[*idx]) continue;
    ComponentRegion region = extract(grid, dl.labels, dl.labels.label[*idx], zeta, true);
    if (!region.touches_zeta0) continue;
    region.boundary_touch.push_back(domain.boundary.normalize(zeta0));
    return region;
  }
  throw std::runtime_error("cannot seed component");
}

ComponentRegion boundary_component(const JordanDomain& domain, CurvePoint zeta0, double r,
                                   int grid_n) {
  if (grid_n < 128) throw std::invalid_argument("grid_n must be at least 128");
  if (!(r > 0.0)) throw std::invalid_argument("radius must be positive");
  return boundary_component_on(domain, zeta0, r, disk_grid(domain.boundary.at(zeta0), r, grid_n));
}

std::vector<ComponentRegion> all_disk_components(const JordanDomain& domain, CurvePoint zeta0,
                                                 double r, const Grid& grid) {
  const Point zeta = domain.boundary.at(zeta0);
  const DiskLabels dl = label_disk_intersection(domain, zeta, r, grid);
  std::vector<ComponentRegion> out;
  for (int id = 0; id < dl.labels.count(); ++id) {
    out.push_back(extract(grid, dl.labels, id, zeta, true));
  }
  return out;
}

namespace {

void require_crosscut(const JordanCurve& boundary, const std::vector<Point>& alpha) {
  if (alpha.size() < 2) throw std::invalid_argument("not a crosscut: fewer than 2 points");
  const double tol = kGeomTol * std::max(1.0, boundary.bbox().extent());
  if (boundary.distance_to(alpha.front()) > tol || boundary.distance_to(alpha.back()) > tol) {
    throw std::invalid_argument("not a crosscut");
  }
  for (std::size_t i = 1; i + 1 < alpha.size(); ++i) {
    if (point_in_polygon(alpha[i], boundary) != Location::inside) {
      throw std::invalid_argument("not a crosscut");
    }
  }
  // Apart from its endpoints the crosscut must avoid the boundary.
  for (std::size_t i = 1; i < alpha.size(); ++i) {
    Point a = alpha[i - 1];
    Point b = alpha[i];
    const Point d = b - a;
    if (i == 1) a = a + 1e-7 * d;
    if (i + 1 == alpha.size()) b = b - 1e-7 * d;
    if (point_in_polygon(0.5 * (a + b), boundary) != Location::inside) {
      throw std::invalid_argument("not a crosscut");
    }
    for (std::size_t e = 0; e < boundary.size(); ++e) {
      if (segments_intersect(a, b, boundary.edge_start(e), boundary.edge_end(e))) {
        throw std::invalid_argument("not a crosscut");
      }
    }
  }
}

}  // namespace

std::pair<ComponentRegion, ComponentRegion> crosscut_sides(const JordanDomain& domain,
                                                           const std::vector<Point>& alpha,
                                                           int grid_n) {
  const JordanCurve& boundary = domain.boundary;
  require_crosscut(boundary, alpha);

  const Grid grid = Grid::covering(boundary.bbox(), grid_n);
  const CellMask member = rasterize_interior(grid, boundary);
  AdjacencyCuts cuts(grid);
  add_cuts(grid, polygon_edges(boundary), cuts);
  add_cuts(grid, polyline_segments(alpha), cuts);
  const Labeling labels = label_components(grid, member, cuts);
  if (labels.count() < 2) {
    throw std::runtime_error("crosscut does not split the grid; increase grid_n");
  }

  std::vector<int> order(static_cast<std::size_t>(labels.count()));
  for (int i = 0; i < labels.count(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return labels.sizes[a] > labels.sizes[b]; });

  const CurvePoint p = boundary.project(alpha.front());
  const CurvePoint q = boundary.project(alpha.back());
  ComponentRegion a = extract(grid, labels, order[0], {}, false);
  ComponentRegion b = extract(grid, labels, order[1], {}, false);
  a.boundary_touch = b.boundary_touch = {p, q};

  // The side bounded by the forward arc p -> q and the crosscut.
  std::vector<Point> side = forward_arc(boundary, p, q);
  for (std::size_t i = alpha.size() - 1; i-- > 1;) side.push_back(alpha[i]);
  const JordanCurve first_side(std::move(side));
  std::size_t probe = 0;
  while (!a.mask[probe]) ++probe;
  if (point_in_polygon(grid.center(probe), first_side, 0.0) != Location::inside) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

std::vector<CircleCutArc> circle_cut_components(const JordanDomain& domain, const Circle& circle,
                                                CurvePoint p_mark, CurvePoint q_mark) {
  const JordanCurve& boundary = domain.boundary;
  const Point p = boundary.at(p_mark);
  const Point q = boundary.at(q_mark);
  const bool p_in = circle.strictly_inside(p);
  const bool q_in = circle.strictly_inside(q);
  if (p_in == q_in || circle.distance_to_boundary(p) <= kGeomTol ||
      circle.distance_to_boundary(q) <= kGeomTol) {
    throw std::invalid_argument("circle does not separate");
  }

  const double total = boundary.perimeter();
  const auto offset = [&](CurvePoint x) {
    double s = boundary.arc_position(x) - boundary.arc_position(p_mark);
    if (s < 0.0) s += total;
    return s;
  };
  const double q_offset = offset(q_mark);
  const auto label = [&](CurvePoint x) {
    return offset(x) <= q_offset ? SubarcLabel::gamma1 : SubarcLabel::gamma2;
  };

  struct Hit {
    double theta;
    CurvePoint where;
  };
  std::vector<Hit> hits;
  for (const CircleCrossing& c : circle_polygon_intersection(circle, boundary)) {
    if (c.tangent) continue;
    double theta = std::atan2(c.point.y - circle.center().y, c.point.x - circle.center().x);
    if (theta < 0.0) theta += 2.0 * std::numbers::pi;
    hits.push_back({theta, c.where});
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.theta < b.theta; });

  std::vector<CircleCutArc> out;
  for (std::size_t i = 0; i < hits.size(); ++i) {
    const Hit& a = hits[i];
    const Hit& b = hits[(i + 1) % hits.size()];
    double end = b.theta;
    if (end <= a.theta) end += 2.0 * std::numbers::pi;
    const Point mid = circle.at_angle(0.5 * (a.theta + end));
    if (point_in_polygon(mid, boundary) != Location::inside) continue;
    out.push_back({a.theta, end, a.where, b.where, label(a.where), label(b.where)});
  }
  return out;
}

}  // namespace cara
