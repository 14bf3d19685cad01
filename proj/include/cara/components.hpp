#pragma once

// Components of disk-domain intersections, crosscut sides and circle cuts,
// computed on uniform grids for polygonal Jordan domains.

#include <string>
#include <utility>
#include <vector>

#include "cara/geometry.hpp"
#include "cara/jordan_curve.hpp"
#include "cara/raster.hpp"

namespace cara {

/// Interior of a simple polygon (counterclockwise).
struct JordanDomain {
  JordanCurve boundary;
};

struct ComponentRegion {
  Grid grid;
  CellMask mask;
  std::size_t cell_count = 0;
  double area_estimate = 0.0;
  Box bbox;  // of member cell centers
  /// Whether a member cell center lies within two cell sizes of zeta0, i.e.
  /// the closure reaches zeta0 up to one cell of raster slack.
  bool touches_zeta0 = false;
  /// Boundary landmarks the closure reaches (zeta0 for disk components, the
  /// crosscut endpoints for crosscut sides).
  std::vector<CurvePoint> boundary_touch;

  std::vector<Point> cell_centers() const;
};

/// Grid of grid_n x grid_n cells over the bounding box of D_r(zeta0).
Grid disk_grid(Point center, double r, int grid_n);

/// C(D; zeta0, r): the component of D_r(zeta0) ∩ D whose closure contains
/// zeta0, seeded two cells along the inward normal (retrying up to eight).
ComponentRegion boundary_component(const JordanDomain& domain, CurvePoint zeta0, double r,
                                   int grid_n);
/// Same, on a caller-chosen grid (for comparing components across radii).
ComponentRegion boundary_component_on(const JordanDomain& domain, CurvePoint zeta0, double r,
                                      const Grid& grid);

/// Every component of D_r(zeta0) ∩ D on the grid, with touches_zeta0 set.
std::vector<ComponentRegion> all_disk_components(const JordanDomain& domain, CurvePoint zeta0,
                                                 double r, const Grid& grid);

/// The two sides of a crosscut. `first` is the side bounded by the crosscut
/// and the boundary arc running forward (counterclockwise) from the
/// crosscut's first endpoint to its last.
std::pair<ComponentRegion, ComponentRegion> crosscut_sides(const JordanDomain& domain,
                                                           const std::vector<Point>& alpha,
                                                           int grid_n = 512);

enum class SubarcLabel { gamma1, gamma2 };

/// A component of C ∩ D: the arc of the circle from angle theta_start
/// counterclockwise to theta_end, with both endpoints on the boundary.
struct CircleCutArc {
  double theta_start = 0.0;
  double theta_end = 0.0;
  CurvePoint start;
  CurvePoint end;
  SubarcLabel start_label = SubarcLabel::gamma1;
  SubarcLabel end_label = SubarcLabel::gamma1;

  bool has_both_labels() const { return start_label != end_label; }
};

/// Components of C ∩ D, each endpoint labelled by the subarc of the boundary
/// (gamma1 runs forward from p_mark to q_mark) it lies on.
std::vector<CircleCutArc> circle_cut_components(const JordanDomain& domain, const Circle& circle,
                                                CurvePoint p_mark, CurvePoint q_mark);

}  // namespace cara
