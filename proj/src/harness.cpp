#include "cara/harness.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cara/acceptance.hpp"
#include "cara/components.hpp"
#include "cara/io.hpp"

namespace cara {

double unit_uniform(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

namespace {

std::string describe_point(Complex z) {
  std::ostringstream out;
  out.precision(17);
  out << "(" << z.real() << "," << z.imag() << ")";
  return out.str();
}

long elapsed_ms(std::chrono::steady_clock::time_point start) {
  return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count());
}

}  // namespace

VerificationReport verify_continuity(const MapSpec& map, Complex zeta0, double eps,
                                     const Log2Real& delta, long n_samples, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  if (n_samples < 0) throw std::invalid_argument("sample count must be non-negative");
  const auto w0 = map.phi(zeta0);
  if (!w0 || std::abs(std::abs(*w0) - 1.0) > 1e-6) {
    throw std::invalid_argument("zeta0 is not a boundary point");
  }
  const Complex phi0 = *w0 / std::abs(*w0);

  VerificationReport report;
  report.kind = "continuity";
  report.instance = map.describe() + " zeta0=" + describe_point(zeta0);
  report.seed = seed;

  // Below about 2^-40 relative to |zeta0| the disk holds too few doubles.
  const double floor_log2 = std::log2(std::max(1.0, std::abs(zeta0))) - 40.0;
  if (delta.is_zero() || delta.log2() < floor_log2) {
    report.vacuous = true;
    report.note = "vacuous: no representable samples";
    report.runtime_ms = elapsed_ms(start);
    return report;
  }
  const double radius = *delta.value();

  std::mt19937_64 rng(seed);
  const long max_attempts = std::max(1000L, 50 * n_samples);
  for (long attempt = 0; attempt < max_attempts && report.samples < n_samples; ++attempt) {
    const double u = unit_uniform(rng());
    const double v = unit_uniform(rng());
    const Complex z = zeta0 + std::polar(radius * std::sqrt(u), 2.0 * std::numbers::pi * v);
    const auto w = map.phi(z);
    if (!w || !(std::abs(*w) < 1.0)) continue;
    if (std::abs(map.psi(*w) - z) > 1e-9 * std::max(1.0, std::abs(z))) continue;
    ++report.samples;
    const double d = std::abs(*w - phi0);
    report.worst_ratio = std::max(report.worst_ratio, d / eps);
    if (!(d < eps)) ++report.violations;
  }
  if (report.samples < n_samples) report.note = "sampler exhausted its attempt budget";
  report.runtime_ms = elapsed_ms(start);
  return report;
}

VerificationReport verify_diameter(const MapSpec& map, Complex zeta0, double r0, double eps,
                                   int grid_n) {
  const auto start = std::chrono::steady_clock::now();
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  const JordanDomain domain{trace_map_boundary(map, 4096)};
  if (!(r0 >= 4.0 * domain.boundary.bbox().extent() / grid_n)) {
    throw std::invalid_argument("r0 unresolvable; increase grid_n or r0");
  }
  const ComponentRegion region =
      boundary_component(domain, domain.boundary.project(to_point(zeta0)), r0, grid_n);

  std::vector<Point> image;
  image.reserve(region.cell_count);
  for (const Point& c : region.cell_centers()) {
    auto w = map.phi(to_complex(c));
    if (!w) continue;
    // Cells of the inscribed trace can poke past the true boundary by
    // rounding; clamp them onto the unit circle.
    if (std::abs(*w) > 1.0) *w /= std::abs(*w);
    image.push_back(to_point(*w));
  }

  VerificationReport report;
  report.kind = "diameter";
  std::ostringstream desc;
  desc.precision(12);
  desc << map.describe() << " zeta0=" << describe_point(zeta0) << " r0=" << r0
       << " grid_n=" << grid_n;
  report.instance = desc.str();
  report.samples = static_cast<long>(image.size());
  const double diameter = image.empty() ? 0.0 : set_diameter(image);
  report.diameter = diameter;
  report.worst_ratio = diameter / eps;
  report.violations = diameter < eps ? 0 : 1;
  report.runtime_ms = elapsed_ms(start);
  return report;
}

namespace {

Complex zeta_from_entry(const nlohmann::json& entry, const MapSpec& map) {
  if (entry.contains("zeta_theta")) return boundary_point(map, entry.at("zeta_theta").get<double>());
  if (entry.contains("zeta")) {
    const auto& z = entry.at("zeta");
    return {z.at(0).get<double>(), z.at(1).get<double>()};
  }
  throw std::invalid_argument("instance needs zeta or zeta_theta");
}

Log2Real delta_from_entry(const nlohmann::json& entry, const MapSpec& map, Complex zeta0,
                          double eps, nlohmann::json& detail) {
  if (entry.contains("delta")) return Log2Real::from_value(entry.at("delta").get<double>());
  if (entry.contains("delta_log2")) return Log2Real::from_log2(entry.at("delta_log2").get<double>());
  const BoundQuery q{map, zeta0, eps};
  const int l_grid = entry.value("l_grid", 256);
  if (entry.contains("table")) {
    const DeltaResult d = delta_of(q, table_from_json(entry.at("table")), l_grid);
    detail = delta_to_json(d);
    return d.delta;
  }
  if (entry.contains("estimate_table")) {
    const auto& est = entry.at("estimate_table");
    const JordanCurve curve = trace_map_boundary(map, est.value("trace_n", 4096));
    const MLCTable table =
        estimate_mlc(curve, est.value("kmax", 6), est.value("resolution", 1024))
            .with_linear_extension();
    const DeltaResult d = delta_of(q, table, l_grid);
    detail = delta_to_json(d);
    detail["table"] = table_to_json(table);
    return d.delta;
  }
  throw std::invalid_argument("continuity instance needs delta, delta_log2, table or estimate_table");
}

}  // namespace

SuiteOutcome run_suite(const nlohmann::json& config) {
  SuiteOutcome out;
  const std::uint64_t seed = config.value("seed", std::uint64_t{42});
  out.report["seed"] = seed;

  out.report["criteria"] = nlohmann::json::array();
  for (const auto& id : config.value("criteria", nlohmann::json::array())) {
    const CriterionResult r = run_criterion(id.get<int>(), seed);
    out.report["criteria"].push_back(
        {{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    out.passed = out.passed && r.passed;
  }

  out.report["continuity"] = nlohmann::json::array();
  for (const auto& entry : config.value("continuity", nlohmann::json::array())) {
    const MapSpec map = map_from_json(entry.at("map"));
    const Complex zeta0 = zeta_from_entry(entry, map);
    const double eps = entry.at("eps").get<double>();
    nlohmann::json delta_detail;
    const Log2Real delta = delta_from_entry(entry, map, zeta0, eps, delta_detail);
    const bool expect_violations = entry.value("expect_violations", false);
    const VerificationReport r = verify_continuity(
        map, zeta0, eps, delta, entry.value("samples", 100000L), entry.value("seed", seed));
    const bool passed = expect_violations ? r.violations > 0 : r.violations == 0;
    nlohmann::json item = {{"name", entry.value("name", r.instance)},
                           {"eps", eps},
                           {"log2_delta", delta.log2()},
                           {"expect_violations", expect_violations},
                           {"passed", passed},
                           {"report", report_to_json(r)}};
    if (!delta_detail.is_null()) item["delta"] = delta_detail;
    out.report["continuity"].push_back(std::move(item));
    out.passed = out.passed && passed;
  }

  out.report["diameter"] = nlohmann::json::array();
  for (const auto& entry : config.value("diameter", nlohmann::json::array())) {
    const MapSpec map = map_from_json(entry.at("map"));
    const Complex zeta0 = zeta_from_entry(entry, map);
    const VerificationReport r =
        verify_diameter(map, zeta0, entry.at("r0").get<double>(), entry.at("eps").get<double>(),
                        entry.value("grid_n", 1024));
    const bool passed = r.violations == 0;
    out.report["diameter"].push_back({{"name", entry.value("name", r.instance)},
                                      {"passed", passed},
                                      {"report", report_to_json(r)}});
    out.passed = out.passed && passed;
  }
  out.report["passed"] = out.passed;
  return out;
}

}  // namespace cara
