#include "cara/raster.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cara {

Grid Grid::covering(const Box& box, int n) {
  if (n <= 0) throw std::invalid_argument("grid size must be positive");
  const double extent = box.extent();
  if (!(extent > 0.0)) throw std::invalid_argument("cannot grid a degenerate box");
  Grid g;
  g.cell = extent / n;
  g.nx = n;
  g.ny = n;
  const double cx = 0.5 * (box.xmin + box.xmax);
  const double cy = 0.5 * (box.ymin + box.ymax);
  g.origin = {cx - 0.5 * n * g.cell, cy - 0.5 * n * g.cell};
  return g;
}

std::optional<std::size_t> Grid::locate(Point p) const {
  const double fx = std::floor((p.x - origin.x) / cell);
  const double fy = std::floor((p.y - origin.y) / cell);
  if (fx < 0 || fy < 0 || fx >= nx || fy >= ny) return std::nullopt;
  return index(static_cast<int>(fx), static_cast<int>(fy));
}

CellMask rasterize_interior(const Grid& grid, const JordanCurve& curve) {
  std::vector<std::vector<double>> crossings(static_cast<std::size_t>(grid.ny));
  const auto row_y = [&](int r) { return grid.origin.y + (r + 0.5) * grid.cell; };

  for (std::size_t e = 0; e < curve.size(); ++e) {
    const Point a = curve.edge_start(e);
    const Point b = curve.edge_end(e);
    if (a.y == b.y) continue;
    const double ylo = std::min(a.y, b.y);
    const double yhi = std::max(a.y, b.y);
    int r0 = static_cast<int>(std::ceil((ylo - grid.origin.y) / grid.cell - 0.5)) - 1;
    int r1 = static_cast<int>(std::ceil((yhi - grid.origin.y) / grid.cell - 0.5)) + 1;
    r0 = std::max(r0, 0);
    r1 = std::min(r1, grid.ny - 1);
    for (int r = r0; r <= r1; ++r) {
      const double y = row_y(r);
      if (!(ylo <= y && y < yhi)) continue;
      crossings[r].push_back(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
    }
  }

  CellMask mask(grid.cell_count(), 0);
  for (int r = 0; r < grid.ny; ++r) {
    auto& xs = crossings[r];
    std::sort(xs.begin(), xs.end());
    for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
      int c0 = static_cast<int>(std::ceil((xs[i] - grid.origin.x) / grid.cell - 0.5));
      c0 = std::max(c0, 0);
      for (int c = c0; c < grid.nx; ++c) {
        const double x = grid.origin.x + (c + 0.5) * grid.cell;
        if (x >= xs[i + 1]) break;
        if (x > xs[i]) mask[grid.index(c, r)] = 1;
      }
    }
  }
  return mask;
}

bool AdjacencyCuts::any(const Grid& grid, std::size_t idx) const {
  const int ix = static_cast<int>(idx % grid.nx);
  const int iy = static_cast<int>(idx / grid.nx);
  if (right[idx] || up[idx]) return true;
  if (ix > 0 && right[idx - 1]) return true;
  if (iy > 0 && up[idx - grid.nx]) return true;
  return false;
}

void add_cuts(const Grid& grid, std::span<const Segment> segments, AdjacencyCuts& cuts) {
  const auto to_cell = [&](double v, double o, int n) {
    return std::clamp(static_cast<int>(std::floor((v - o) / grid.cell - 0.5)), -1, n);
  };
  for (const Segment& s : segments) {
    const int x0 = std::max(to_cell(std::min(s.a.x, s.b.x), grid.origin.x, grid.nx) - 1, 0);
    const int x1 = std::min(to_cell(std::max(s.a.x, s.b.x), grid.origin.x, grid.nx) + 1, grid.nx - 1);
    const int y0 = std::max(to_cell(std::min(s.a.y, s.b.y), grid.origin.y, grid.ny) - 1, 0);
    const int y1 = std::min(to_cell(std::max(s.a.y, s.b.y), grid.origin.y, grid.ny) + 1, grid.ny - 1);
    for (int iy = y0; iy <= y1; ++iy) {
      for (int ix = x0; ix <= x1; ++ix) {
        const std::size_t idx = grid.index(ix, iy);
        const Point c = grid.center(ix, iy);
        if (ix + 1 < grid.nx && !cuts.right[idx] &&
            segments_intersect(c, grid.center(ix + 1, iy), s.a, s.b)) {
          cuts.right[idx] = 1;
        }
        if (iy + 1 < grid.ny && !cuts.up[idx] &&
            segments_intersect(c, grid.center(ix, iy + 1), s.a, s.b)) {
          cuts.up[idx] = 1;
        }
      }
    }
  }
}

std::vector<Segment> polygon_edges(const JordanCurve& curve) {
  std::vector<Segment> out;
  out.reserve(curve.size());
  for (std::size_t e = 0; e < curve.size(); ++e) out.push_back({curve.edge_start(e), curve.edge_end(e)});
  return out;
}

std::vector<Segment> polyline_segments(std::span<const Point> polyline) {
  std::vector<Segment> out;
  for (std::size_t i = 1; i < polyline.size(); ++i) out.push_back({polyline[i - 1], polyline[i]});
  return out;
}

Labeling label_components(const Grid& grid, const CellMask& member, const AdjacencyCuts& cuts) {
  Labeling out;
  out.label.assign(grid.cell_count(), -1);
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < grid.cell_count(); ++start) {
    if (!member[start] || out.label[start] >= 0) continue;
    const int id = out.count();
    out.sizes.push_back(0);
    out.label[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t idx = stack.back();
      stack.pop_back();
      ++out.sizes[id];
      const int ix = static_cast<int>(idx % grid.nx);
      const int iy = static_cast<int>(idx / grid.nx);
      const auto visit = [&](std::size_t nb) {
        if (member[nb] && out.label[nb] < 0) {
          out.label[nb] = id;
          stack.push_back(nb);
        }
      };
      if (ix + 1 < grid.nx && !cuts.right[idx]) visit(idx + 1);
      if (ix > 0 && !cuts.right[idx - 1]) visit(idx - 1);
      if (iy + 1 < grid.ny && !cuts.up[idx]) visit(idx + grid.nx);
      if (iy > 0 && !cuts.up[idx - grid.nx]) visit(idx - grid.nx);
    }
  }
  return out;
}

}  // namespace cara
