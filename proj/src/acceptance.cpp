#include "cara/acceptance.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cara/annulus.hpp"
#include "cara/bounds.hpp"
#include "cara/components.hpp"
#include "cara/harness.hpp"
#include "cara/mlc.hpp"

namespace cara {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::array<double, 4> kThetas = {0.0, kPi / 2, kPi, 3 * kPi / 2};
constexpr int kTraceN = 4096;

bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(10);
  out << x;
  return out.str();
}

// --- 1 ------------------------------------------------------------------

CriterionResult extremal_length_criterion() {
  CriterionResult r{1, "extremal length closed form", true, ""};
  const double e = std::numbers::e;
  const bool examples = rel_close(extremal_length(Annulus({0, 0}, 1, e)), 2 * kPi, 1e-12) &&
                        rel_close(extremal_length(Annulus({0, 0}, 1, std::exp(2 * kPi))), 1.0,
                                  1e-12) &&
                        rel_close(extremal_length(Annulus({0, 0}, 2, 2 * e * e)), kPi, 1e-12);
  int monotone_failures = 0;
  int scale_failures = 0;
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const double rr = 0.5 + 0.1 * i;
      const double big = 3.0 + 0.5 * j;
      const double lam = extremal_length(Annulus({1, -2}, rr, big));
      if (j + 1 < 20 && !(extremal_length(Annulus({1, -2}, rr, big + 0.5)) < lam)) {
        ++monotone_failures;
      }
      if (i + 1 < 20 && !(extremal_length(Annulus({1, -2}, rr + 0.1, big)) > lam)) {
        ++monotone_failures;
      }
      for (double c : {1e-3, 0.37, 7.5, 1e4}) {
        if (!rel_close(extremal_length(Annulus({c, c}, c * rr, c * big)), lam, 1e-12)) {
          ++scale_failures;
        }
      }
    }
  }
  r.passed = examples && monotone_failures == 0 && scale_failures == 0;
  r.detail = std::string("examples ") + (examples ? "ok" : "FAILED") +
             ", monotonicity failures " + std::to_string(monotone_failures) +
             ", scale failures " + std::to_string(scale_failures);
  return r;
}

// --- 2 ------------------------------------------------------------------

CriterionResult sanity_window_criterion() {
  CriterionResult r{2, "sanity window at l = eps/2", true, ""};
  int failures = 0;
  double lo = 1.0;
  double hi = 0.0;
  for (int i = 1; i <= 99; ++i) {
    const double eps = i / 100.0;
    const double l = eps / 2;
    const double v = (1 - l) * (1 - l) + (eps * eps - l * l) / 4;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    if (!(v > 7.0 / 16.0 && v < 1.0)) ++failures;
  }
  r.passed = failures == 0;
  r.detail = "99 eps values, range [" + fmt(lo) + ", " + fmt(hi) + "], failures " +
             std::to_string(failures);
  return r;
}

// --- 3, 4 ----------------------------------------------------------------

constexpr std::array<double, 4> kEpsValues = {0.1, 0.25, 0.5, 0.9};

CriterionResult positivity_criterion() {
  CriterionResult r{3, "threshold positive for 0 < eps < 1", true, ""};
  int count = 0;
  int failures = 0;
  double lowest = std::numeric_limits<double>::infinity();
  for (const CatalogEntry& entry : map_catalog()) {
    for (double theta : kThetas) {
      for (double eps : kEpsValues) {
        const BoundQuery q{entry.map, boundary_point(entry.map, theta), eps};
        const ThresholdResult res = eqn1_threshold(q);
        ++count;
        const double x = res.threshold.log2();
        if (res.threshold.is_zero() || !std::isfinite(x) || !(res.l_star > 0 && res.l_star < eps)) {
          ++failures;
        }
        lowest = std::min(lowest, x);
      }
    }
  }
  r.passed = failures == 0;
  r.detail = std::to_string(count) + " instances, failures " + std::to_string(failures) +
             ", smallest log2 threshold " + fmt(lowest);
  return r;
}

MLCTable boundary_table(const MapSpec& map) {
  return estimate_mlc(trace_map_boundary(map, kTraceN), 6, 1024).with_linear_extension();
}

CriterionResult soundness_criterion() {
  CriterionResult r{4, "delta below threshold with margin 1", true, ""};
  int count = 0;
  int failures = 0;
  double smallest_margin = std::numeric_limits<double>::infinity();
  for (const CatalogEntry& entry : map_catalog()) {
    const MLCTable table = boundary_table(entry.map);
    for (double theta : kThetas) {
      for (double eps : kEpsValues) {
        const BoundQuery q{entry.map, boundary_point(entry.map, theta), eps};
        ++count;
        try {
          const DeltaResult d = delta_of(q, table);
          const double margin = d.threshold.log2() - d.delta.log2();
          smallest_margin = std::min(smallest_margin, margin);
          if (!(margin >= 1.0 - 1e-9)) ++failures;
        } catch (const std::exception&) {
          ++failures;
        }
      }
    }
  }
  r.passed = failures == 0;
  r.detail = std::to_string(count) + " instances, failures " + std::to_string(failures) +
             ", smallest log2 margin " + fmt(smallest_margin);
  return r;
}

// --- 5 ------------------------------------------------------------------

// delta with |phi(z) - phi(zeta0)| <= delta / min|psi'| < eps / 2 on the
// convex catalog domains.
double hand_scaled_delta(const MapSpec& map, double eps) {
  double min_derivative = std::numeric_limits<double>::infinity();
  for (int j = 0; j < 4096; ++j) {
    min_derivative =
        std::min(min_derivative, std::abs(map.psi_prime(std::polar(1.0, 2 * kPi * j / 4096))));
  }
  return 0.5 * eps * min_derivative;
}

CriterionResult continuity_criterion(std::uint64_t seed) {
  CriterionResult r{5, "continuity verification", true, ""};
  constexpr long kSamples = 100000;
  std::uint64_t s = seed;
  long sound_violations = 0;
  int sound_instances = 0;
  for (const CatalogEntry& entry : map_catalog()) {
    const Log2Real delta = Log2Real::from_value(hand_scaled_delta(entry.map, 0.5));
    for (double theta : kThetas) {
      const VerificationReport rep = verify_continuity(
          entry.map, boundary_point(entry.map, theta), 0.5, delta, kSamples, s++);
      ++sound_instances;
      sound_violations += rep.violations;
      if (rep.samples < kSamples) r.passed = false;
    }
  }
  const MapSpec identity = MapSpec::identity();
  const VerificationReport easy =
      verify_continuity(identity, 1.0, 0.5, Log2Real::from_value(0.1), kSamples, s++);

  const MapSpec quad = MapSpec::quadratic(0.25);
  const BoundQuery q{quad, 1.25, 0.25};
  const DeltaResult formula = delta_of(q, boundary_table(quad));
  const VerificationReport formal = verify_continuity(quad, 1.25, 0.25, formula.delta, kSamples, s++);

  const VerificationReport planted =
      verify_continuity(identity, 1.0, 0.5, Log2Real::from_value(1.2), kSamples, s++);

  r.passed = r.passed && sound_violations == 0 && easy.violations == 0 &&
             formal.violations == 0 && planted.violations >= 1;
  r.detail = std::to_string(sound_instances) + " hand-scaled instances, violations " +
             std::to_string(sound_violations) + "; identity delta=0.1 violations " +
             std::to_string(easy.violations) + "; formula delta (log2 " +
             fmt(formula.delta.log2()) + ") " +
             (formal.vacuous ? "vacuous" : std::to_string(formal.violations) + " violations") +
             "; planted delta=1.2 violations " + std::to_string(planted.violations);
  return r;
}

// --- 6 ------------------------------------------------------------------

CriterionResult diameter_bound_criterion() {
  CriterionResult r{6, "diameter below the annulus bound", true, ""};
  constexpr int kGrid = 1024;
  int count = 0;
  int unbounded = 0;
  int exceeded = 0;
  double smallest_lambda = std::numeric_limits<double>::infinity();
  double largest_diameter = 0.0;
  for (const CatalogEntry& entry : map_catalog()) {
    for (double theta : kThetas) {
      const Complex zeta0 = boundary_point(entry.map, theta);
      for (double r0 : {0.2, 0.1, 0.05}) {
        ++count;
        const VerificationReport rep = verify_diameter(entry.map, zeta0, r0, 1.0, kGrid);
        largest_diameter = std::max(largest_diameter, *rep.diameter);
        // The widest annulus available: outer radius from the smallest disk.
        const double r1 = min_inverse_distance(entry.map, zeta0, 1.0 / 257);
        if (r1 > r0) smallest_lambda = std::min(smallest_lambda, 2 * kPi / std::log(r1 / r0));
        const auto bound = best_annulus_bound(entry.map, zeta0, r0);
        if (!bound) {
          ++unbounded;
        } else if (!(*rep.diameter < bound->bound + 4.0 / kGrid)) {
          ++exceeded;
        }
      }
    }
  }
  r.passed = unbounded == 0 && exceeded == 0;
  r.detail = std::to_string(count) + " instances, no admissible annulus " +
             std::to_string(unbounded) + ", bound exceeded " + std::to_string(exceeded) +
             "; smallest lambda available " + fmt(smallest_lambda) +
             " (the bound needs pi*lambda <= r^2 < 1); largest measured diameter " +
             fmt(largest_diameter);
  return r;
}

// --- 7 ------------------------------------------------------------------

JordanCurve corridor_polygon(double neck) {
  const double y0 = 0.5 - neck / 2;
  const double y1 = 0.5 + neck / 2;
  return JordanCurve({{0, 0}, {1, 0}, {1, y0}, {1.5, y0}, {1.5, 0}, {2.5, 0},
                      {2.5, 1}, {1.5, 1}, {1.5, y1}, {1, y1}, {1, 1}, {0, 1}});
}

CriterionResult mlc_criterion() {
  CriterionResult r{7, "moduli of local connectivity", true, ""};
  const JordanCurve circle = trace_map_boundary(MapSpec::identity(), 16384);
  const MLCTable circle_table = MLCTable::linear(8, 1);
  int circle_failures = 0;
  for (int k = 0; k <= 8; ++k) {
    if (check_mlc(circle, circle_table, k, 1 << 14)) ++circle_failures;
  }

  const JordanCurve square({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const std::vector<int> square_raw = estimate_mlc_raw(square, 6, 4096);
  int square_failures = 0;
  for (int k = 0; k <= 6; ++k) {
    if (square_raw[k] > k + 2) ++square_failures;
  }

  const JordanCurve corridor = corridor_polygon(std::ldexp(1.0, -5));
  const auto witness = check_mlc(corridor, MLCTable::linear(1, 1), 1, 4096);
  const bool witness_ok = witness && witness->pair_distance <= 0.25 &&
                          witness->best_arc_diameter > 0.5;
  const MLCTable corridor_table = estimate_mlc(corridor, 1, 4096);

  r.passed = circle_failures == 0 && square_failures == 0 && witness_ok &&
             corridor_table.values()[1] >= 5;
  std::string square_text;
  for (int g : square_raw) square_text += (square_text.empty() ? "" : ",") + std::to_string(g);
  r.detail = "circle failures " + std::to_string(circle_failures) + "; square raw g = [" +
             square_text + "]; corridor witness " +
             (witness ? "d=" + fmt(witness->pair_distance) +
                            " arc diameter=" + fmt(witness->best_arc_diameter)
                      : std::string("none")) +
             "; corridor g(1) = " + std::to_string(corridor_table.values()[1]);
  return r;
}

// --- 8 ------------------------------------------------------------------

struct HalfAnnulus {
  Annulus annulus{{0, 0}, 1.0, std::numbers::e};
  RegionSample omega;
  PolarSeparationCandidate cand;
};

HalfAnnulus half_annulus(int n) {
  const double e = std::numbers::e;
  const Annulus a({0, 0}, 1.0, e);
  RegionSample omega = RegionSample::from_predicate(
      {-e, 0.0, e, e}, n, [&](Point p) { return p.y > 0 && a.contains(p); });
  PointSet left;
  PointSet right;
  for (int i = 0; i <= 512; ++i) {
    const double x = 1.0 + (e - 1.0) * i / 512;
    right.push_back({x, 0});
    left.push_back({-x, 0});
  }
  return {a, std::move(omega), PolarSeparationCandidate(std::move(right), std::move(left))};
}

CriterionResult length_area_criterion() {
  CriterionResult r{8, "length-area inequality", true, ""};
  const HalfAnnulus h = half_annulus(1024);
  const PolarCheck polar = is_polar_separation(h.annulus, h.omega, h.cand, 16, 1024);
  const LengthAreaRecord id = length_area_check(h.annulus, h.omega, h.cand, MapSpec::identity());
  const LengthAreaRecord mob = length_area_check(h.annulus, h.omega, h.cand, MapSpec::mobius(0.3));
  const double e = std::numbers::e;
  const double expected = 8.0 / (kPi * (e * e - 1.0));
  const bool ratio_ok = std::abs(id.ratio - expected) <= 0.02 * expected;
  r.passed = polar.passed() && id.holds && mob.holds && ratio_ok;
  r.detail = std::string("polar separation ") + (polar.passed() ? "ok" : "FAILED") +
             "; identity ratio " + fmt(id.ratio) + " (expected " + fmt(expected) +
             ") lambda " + fmt(id.lambda) + "; mobius ratio " + fmt(mob.ratio);
  return r;
}

// --- 9 ------------------------------------------------------------------

JordanCurve random_convex_polygon(std::mt19937_64& rng) {
  for (;;) {
    const int n = 5 + static_cast<int>(rng() % 8);
    std::vector<double> angles;
    for (int i = 0; i < n; ++i) angles.push_back(2 * kPi * unit_uniform(rng()));
    std::sort(angles.begin(), angles.end());
    bool spread = true;
    for (int i = 0; i < n; ++i) {
      const double next = i + 1 < n ? angles[i + 1] : angles[0] + 2 * kPi;
      if (next - angles[i] < 0.05) spread = false;
    }
    if (!spread) continue;
    const double scale = 0.5 + 2.0 * unit_uniform(rng());
    const Point shift{unit_uniform(rng()) - 0.5, unit_uniform(rng()) - 0.5};
    const double stretch = 0.5 + unit_uniform(rng());
    std::vector<Point> vertices;
    for (double t : angles) {
      vertices.push_back(shift + scale * Point{std::cos(t), stretch * std::sin(t)});
    }
    return JordanCurve(std::move(vertices));
  }
}

CriterionResult circle_cut_criterion(std::uint64_t seed) {
  CriterionResult r{9, "circle cuts reach both subarcs", true, ""};
  std::mt19937_64 rng(seed);
  int missing = 0;
  std::size_t arcs = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const JordanDomain domain{random_convex_polygon(rng)};
    const JordanCurve& b = domain.boundary;
    for (;;) {
      const double total = b.perimeter();
      const CurvePoint p = b.at_arc_length(total * unit_uniform(rng()));
      const CurvePoint q = b.at_arc_length(total * unit_uniform(rng()));
      const Point pp = b.at(p);
      const Point qq = b.at(q);
      if (distance(pp, qq) < 0.05 * b.bbox().extent()) continue;
      const Point center = pp + (0.4 * unit_uniform(rng())) * (qq - pp) +
                           (0.1 * distance(pp, qq)) *
                               Point{unit_uniform(rng()) - 0.5, unit_uniform(rng()) - 0.5};
      const double dp = distance(center, pp);
      const double dq = distance(center, qq);
      if (!(dq > dp + 1e-6)) continue;
      const double radius = dp + (0.1 + 0.8 * unit_uniform(rng())) * (dq - dp);
      const auto cut = circle_cut_components(domain, Circle(center, radius), p, q);
      arcs += cut.size();
      bool found = false;
      for (const CircleCutArc& arc : cut) found = found || arc.has_both_labels();
      if (!found) ++missing;
      break;
    }
  }
  r.passed = missing == 0;
  r.detail = "100 instances, " + std::to_string(arcs) + " arcs, instances without a two-label arc " +
             std::to_string(missing);
  return r;
}

// --- 10 -----------------------------------------------------------------

bool mask_included(const CellMask& inner, const CellMask& outer) {
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] && !outer[i]) return false;
  }
  return true;
}

CriterionResult uniqueness_criterion() {
  CriterionResult r{10, "boundary component uniqueness and nesting", true, ""};
  constexpr int kGrid = 1024;
  constexpr std::array<double, 3> kRadii = {0.05, 0.1, 0.2};
  int count = 0;
  int not_unique = 0;
  int not_nested = 0;
  for (const CatalogEntry& entry : map_catalog()) {
    const JordanDomain domain{trace_map_boundary(entry.map, kTraceN)};
    for (double theta : kThetas) {
      const CurvePoint zeta0{static_cast<std::size_t>(std::lround(theta / (2 * kPi) * kTraceN)), 0};
      const Point zeta = domain.boundary.at(zeta0);
      for (double radius : kRadii) {
        ++count;
        int touching = 0;
        for (const ComponentRegion& c :
             all_disk_components(domain, zeta0, radius, disk_grid(zeta, radius, kGrid))) {
          if (c.touches_zeta0) ++touching;
        }
        if (touching != 1) ++not_unique;
      }
      const Grid shared = disk_grid(zeta, kRadii.back(), kGrid);
      const ComponentRegion c05 = boundary_component_on(domain, zeta0, 0.05, shared);
      const ComponentRegion c10 = boundary_component_on(domain, zeta0, 0.1, shared);
      const ComponentRegion c20 = boundary_component_on(domain, zeta0, 0.2, shared);
      if (!mask_included(c05.mask, c10.mask) || !mask_included(c10.mask, c20.mask)) ++not_nested;
    }
  }
  r.passed = not_unique == 0 && not_nested == 0;
  r.detail = std::to_string(count) + " disks, not unique " + std::to_string(not_unique) +
             ", nesting failures " + std::to_string(not_nested);
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  switch (id) {
    case 1: return extremal_length_criterion();
    case 2: return sanity_window_criterion();
    case 3: return positivity_criterion();
    case 4: return soundness_criterion();
    case 5: return continuity_criterion(seed);
    case 6: return diameter_bound_criterion();
    case 7: return mlc_criterion();
    case 8: return length_area_criterion();
    case 9: return circle_cut_criterion(seed);
    case 10: return uniqueness_criterion();
    default: throw std::out_of_range("no acceptance criterion " + std::to_string(id));
  }
}

}  // namespace cara
