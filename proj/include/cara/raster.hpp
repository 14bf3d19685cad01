#pragma once

// Uniform cell grids: polygon rasterization by cell centers, adjacency cuts
// along segments, and 4-connected component labeling.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cara/geometry.hpp"
#include "cara/jordan_curve.hpp"

namespace cara {

struct Segment {
  Point a;
  Point b;
};

struct Grid {
  Point origin;  // lower-left corner of cell (0, 0)
  double cell = 1.0;
  int nx = 0;
  int ny = 0;

  /// Square grid of n x n cells covering the box (the longer side).
  static Grid covering(const Box& box, int n);

  std::size_t cell_count() const { return static_cast<std::size_t>(nx) * ny; }
  std::size_t index(int ix, int iy) const { return static_cast<std::size_t>(iy) * nx + ix; }
  Point center(int ix, int iy) const {
    return {origin.x + (ix + 0.5) * cell, origin.y + (iy + 0.5) * cell};
  }
  Point center(std::size_t idx) const {
    return center(static_cast<int>(idx % nx), static_cast<int>(idx / nx));
  }
  double cell_area() const { return cell * cell; }
  /// Cell containing p, if p lies on the grid.
  std::optional<std::size_t> locate(Point p) const;
};

using CellMask = std::vector<std::uint8_t>;

/// Cells whose centers lie strictly inside the polygon (scanline parity).
CellMask rasterize_interior(const Grid& grid, const JordanCurve& curve);

/// Removed adjacencies: right[i] cuts (ix,iy)-(ix+1,iy), up[i] cuts (ix,iy)-(ix,iy+1).
struct AdjacencyCuts {
  std::vector<std::uint8_t> right;
  std::vector<std::uint8_t> up;

  explicit AdjacencyCuts(const Grid& grid)
      : right(grid.cell_count(), 0), up(grid.cell_count(), 0) {}
  bool any(const Grid& grid, std::size_t idx) const;
};

/// Cut every adjacency whose center-to-center segment meets one of `segments`.
void add_cuts(const Grid& grid, std::span<const Segment> segments, AdjacencyCuts& cuts);

std::vector<Segment> polygon_edges(const JordanCurve& curve);
std::vector<Segment> polyline_segments(std::span<const Point> polyline);

/// 4-connected components of the member cells. label[i] = -1 for non-members.
struct Labeling {
  std::vector<int> label;
  std::vector<std::size_t> sizes;
  int count() const { return static_cast<int>(sizes.size()); }
};

Labeling label_components(const Grid& grid, const CellMask& member, const AdjacencyCuts& cuts);

}  // namespace cara
