#pragma once

// Extremal length of annuli, polar separations, and the length-area check.

#include <functional>
#include <optional>

#include "cara/geometry.hpp"
#include "cara/maps.hpp"
#include "cara/raster.hpp"

namespace cara {

/// 2 pi / ln(R / r).
double extremal_length(const Annulus& annulus);

/// A region given as a cell mask, with its area estimate. The standard error
/// treats each cell on the mask boundary as a fair coin.
struct RegionSample {
  Grid grid;
  CellMask mask;
  double area_estimate = 0.0;
  double area_std_error = 0.0;

  static RegionSample from_predicate(const Box& box, int n,
                                     const std::function<bool(Point)>& inside);
  bool contains(Point p) const;
  /// Member cells with a non-member 4-neighbour (or on the grid edge).
  bool is_edge_cell(std::size_t idx) const;
};

/// Disjoint, non-empty point sets E and F.
class PolarSeparationCandidate {
 public:
  PolarSeparationCandidate(PointSet e, PointSet f);
  const PointSet& e() const { return e_; }
  const PointSet& f() const { return f_; }

 private:
  PointSet e_;
  PointSet f_;
};

struct PolarCheck {
  /// Smallest intermediate radius with no component of C ∩ Omega whose
  /// closure reaches both E and F.
  std::optional<double> failing_radius;
  int failing_circles = 0;
  int circles = 0;
  bool passed() const { return !failing_radius.has_value(); }
};

/// Tests n_circles geometrically spaced intermediate circles, each sampled at
/// `res` points. "Reaches" means within one grid cell (diagonal) plus one
/// angular step.
PolarCheck is_polar_separation(const Annulus& annulus, const RegionSample& omega,
                               const PolarSeparationCandidate& cand, int n_circles, int res);

struct LengthAreaRecord {
  double lambda = 0.0;
  double d_inf = 0.0;
  double area = 0.0;
  double area_std_error = 0.0;
  double ratio = 0.0;
  double ratio_std_error = 0.0;
  bool holds = false;
};

/// ratio = d_inf(map[E], map[F])^2 / Area(map[Omega]), with the mapped area
/// integrated as sum |psi'|^2 over member cells. `map` acts through psi.
/// holds = lambda >= ratio - 3 sigma.
LengthAreaRecord length_area_check(const Annulus& annulus, const RegionSample& omega,
                                   const PolarSeparationCandidate& cand, const MapSpec& map);

}  // namespace cara
