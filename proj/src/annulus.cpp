#include "cara/annulus.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace cara {

double extremal_length(const Annulus& annulus) {
  return 2.0 * std::numbers::pi / std::log(annulus.outer() / annulus.inner());
}

RegionSample RegionSample::from_predicate(const Box& box, int n,
                                          const std::function<bool(Point)>& inside) {
  if (n <= 0) throw std::invalid_argument("grid size must be positive");
  if (!(box.extent() > 0.0)) throw std::invalid_argument("degenerate region box");
  RegionSample out;
  Grid& g = out.grid;
  g.cell = box.extent() / n;
  g.nx = std::max(1, static_cast<int>(std::ceil(box.width() / g.cell)));
  g.ny = std::max(1, static_cast<int>(std::ceil(box.height() / g.cell)));
  g.origin = {box.xmin, box.ymin};
  out.mask.assign(g.cell_count(), 0);
  std::size_t members = 0;
  for (std::size_t i = 0; i < out.mask.size(); ++i) {
    out.mask[i] = inside(g.center(i)) ? 1 : 0;
    members += out.mask[i];
  }
  std::size_t edge = 0;
  for (std::size_t i = 0; i < out.mask.size(); ++i) edge += out.is_edge_cell(i);
  out.area_estimate = static_cast<double>(members) * g.cell_area();
  out.area_std_error = 0.5 * g.cell_area() * std::sqrt(static_cast<double>(edge));
  return out;
}

bool RegionSample::contains(Point p) const {
  const auto idx = grid.locate(p);
  return idx && mask[*idx];
}

bool RegionSample::is_edge_cell(std::size_t idx) const {
  if (!mask[idx]) return false;
  const int ix = static_cast<int>(idx % grid.nx);
  const int iy = static_cast<int>(idx / grid.nx);
  if (ix == 0 || iy == 0 || ix == grid.nx - 1 || iy == grid.ny - 1) return true;
  return !mask[idx - 1] || !mask[idx + 1] || !mask[idx - grid.nx] || !mask[idx + grid.nx];
}

PolarSeparationCandidate::PolarSeparationCandidate(PointSet e, PointSet f)
    : e_(std::move(e)), f_(std::move(f)) {
  if (e_.empty() || f_.empty()) throw std::invalid_argument("candidate sets must be non-empty");
  if (d_inf(e_, f_) <= 0.0) throw std::invalid_argument("candidate sets intersect");
}

namespace {

void require_inside_annulus(const Annulus& annulus, const RegionSample& omega) {
  const double slack = omega.grid.cell * std::numbers::sqrt2;
  for (std::size_t i = 0; i < omega.mask.size(); ++i) {
    if (!omega.mask[i]) continue;
    const double d = distance(omega.grid.center(i), annulus.center());
    if (d < annulus.inner() - slack || d > annulus.outer() + slack) {
      throw std::invalid_argument("region is not inside the annulus");
    }
  }
}

double distance_to_set(Point p, const PointSet& s) {
  const Point one[] = {p};
  return d_inf(one, s);
}

}  // namespace

PolarCheck is_polar_separation(const Annulus& annulus, const RegionSample& omega,
                               const PolarSeparationCandidate& cand, int n_circles, int res) {
  if (n_circles < 8) throw std::invalid_argument("need at least 8 intermediate circles");
  if (res < 256) throw std::invalid_argument("need at least 256 points per circle");
  require_inside_annulus(annulus, omega);

  const double ratio = annulus.outer() / annulus.inner();
  const double step = 2.0 * std::numbers::pi / res;
  PolarCheck out;
  out.circles = n_circles;
  std::vector<std::uint8_t> in(static_cast<std::size_t>(res));
  for (int i = 0; i < n_circles; ++i) {
    const double rho = annulus.inner() * std::pow(ratio, (i + 1.0) / (n_circles + 1.0));
    const Circle circle(annulus.center(), rho);
    const double tol = omega.grid.cell * std::numbers::sqrt2 + rho * step;
    const auto near = [&](Point p, const PointSet& s) { return distance_to_set(p, s) <= tol; };

    int first_out = -1;
    for (int j = 0; j < res; ++j) {
      in[j] = omega.contains(circle.at_angle(j * step));
      if (!in[j] && first_out < 0) first_out = j;
    }

    // Walk the cyclic runs of member samples; a run's closure ends half a
    // step beyond its first and last samples.
    bool found = false;
    if (first_out >= 0) {
      for (int m = 1; m <= res && !found; ++m) {
        const int j = (first_out + m) % res;
        if (!in[j] || in[(j + res - 1) % res]) continue;
        int len = 0;
        while (len < res && in[(j + len) % res]) ++len;
        const Point p1 = circle.at_angle((j - 0.5) * step);
        const Point p2 = circle.at_angle((j + len - 0.5) * step);
        found = (near(p1, cand.e()) || near(p2, cand.e())) &&
                (near(p1, cand.f()) || near(p2, cand.f()));
      }
    }
    if (!found) {
      ++out.failing_circles;
      if (!out.failing_radius) out.failing_radius = rho;
    }
  }
  return out;
}

LengthAreaRecord length_area_check(const Annulus& annulus, const RegionSample& omega,
                                   const PolarSeparationCandidate& cand, const MapSpec& map) {
  require_inside_annulus(annulus, omega);
  LengthAreaRecord rec;
  rec.lambda = extremal_length(annulus);

  const double cell_area = omega.grid.cell_area();
  double variance = 0.0;
  for (std::size_t i = 0; i < omega.mask.size(); ++i) {
    if (!omega.mask[i]) continue;
    const double jac = std::norm(map.psi_prime(to_complex(omega.grid.center(i))));
    if (!std::isfinite(jac) || jac < 1e-24) {
      throw std::invalid_argument("map is not conformal on the region");
    }
    rec.area += jac * cell_area;
    if (omega.is_edge_cell(i)) variance += 0.25 * (jac * cell_area) * (jac * cell_area);
  }
  rec.area_std_error = std::sqrt(variance);

  const auto push = [&](const PointSet& s) {
    PointSet out;
    out.reserve(s.size());
    for (Point p : s) out.push_back(to_point(map.psi(to_complex(p))));
    return out;
  };
  rec.d_inf = d_inf(push(cand.e()), push(cand.f()));
  if (rec.area == 0.0) {
    if (rec.d_inf > 0.0) throw std::invalid_argument("degenerate region");
    return rec;
  }
  rec.ratio = rec.d_inf * rec.d_inf / rec.area;
  rec.ratio_std_error = rec.ratio * rec.area_std_error / rec.area;
  rec.holds = rec.lambda >= rec.ratio - 3.0 * rec.ratio_std_error;
  return rec;
}

}  // namespace cara
