// Command-line front end: extremal lengths, MLC tables, delta bounds,
// boundary components, verification runs and the suite.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cara/annulus.hpp"
#include "cara/bounds.hpp"
#include "cara/components.hpp"
#include "cara/harness.hpp"
#include "cara/io.hpp"
#include "cara/mlc.hpp"

namespace {

using nlohmann::json;

cara::MapSpec require_map(const cara::DomainSpec& domain) {
  if (!domain.map) throw std::invalid_argument("this command needs a mapped_disk domain");
  return *domain.map;
}

void emit(const json& value, const std::string& path) {
  if (path.empty()) {
    std::cout << value.dump(2) << "\n";
  } else {
    cara::write_json_file(path, value);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary-extension bounds and checks for Jordan domains"};
  app.require_subcommand(1);

  double inner = 0.0, outer = 0.0;
  auto* lambda_cmd = app.add_subcommand("lambda", "Extremal length of an annulus");
  lambda_cmd->add_option("--inner", inner, "Inner radius")->required();
  lambda_cmd->add_option("--outer", outer, "Outer radius")->required();

  auto* mlc_cmd = app.add_subcommand("mlc", "Moduli of local connectivity");
  mlc_cmd->require_subcommand(1);
  std::string curve_file, table_file, out_file;
  int kmax = 8, k = 0, resolution = 4096;
  auto* estimate_cmd = mlc_cmd->add_subcommand("estimate", "Estimate a padded, increasing table");
  estimate_cmd->add_option("--curve", curve_file, "Curve JSON")->required();
  estimate_cmd->add_option("--kmax", kmax, "Largest k")->capture_default_str();
  estimate_cmd->add_option("--resolution", resolution, "Samples per unit perimeter")
      ->capture_default_str();
  estimate_cmd->add_option("--out", out_file, "Table JSON (stdout if omitted)");
  auto* check_cmd = mlc_cmd->add_subcommand("check", "Search for a violating pair");
  check_cmd->add_option("--curve", curve_file, "Curve JSON")->required();
  check_cmd->add_option("--table", table_file, "Table JSON")->required();
  check_cmd->add_option("--k", k, "Level")->required();
  check_cmd->add_option("--resolution", resolution, "Samples per unit perimeter")
      ->capture_default_str();

  std::string domain_file, zeta_text;
  double eps = 0.0;
  int l_grid = 256;
  auto* delta_cmd = app.add_subcommand("delta", "k and delta for a boundary point");
  delta_cmd->add_option("--domain", domain_file, "mapped_disk JSON")->required();
  delta_cmd->add_option("--zeta", zeta_text, "Boundary point x,y")->required();
  delta_cmd->add_option("--eps", eps, "Epsilon in (0,1)")->required();
  delta_cmd->add_option("--table", table_file, "MLC table JSON")->required();
  delta_cmd->add_option("--l-grid", l_grid, "Grid size for the sup over l")->capture_default_str();

  double radius = 0.0;
  int grid_n = 1024;
  std::string csv_file;
  auto* comp_cmd = app.add_subcommand("component", "Component of the disk at zeta reaching zeta");
  comp_cmd->add_option("--domain", domain_file, "Domain JSON")->required();
  comp_cmd->add_option("--zeta", zeta_text, "Boundary point x,y")->required();
  comp_cmd->add_option("--radius", radius, "Disk radius")->required();
  comp_cmd->add_option("--grid", grid_n, "Cells per side")->capture_default_str();
  comp_cmd->add_option("--out", csv_file, "CSV of member cell centers");

  auto* verify_cmd = app.add_subcommand("verify", "Empirical verification runs");
  verify_cmd->require_subcommand(1);
  std::optional<double> delta_log2, r0;
  long samples = 100000;
  std::uint64_t seed = 42;
  std::string report_file;
  auto* cont_cmd = verify_cmd->add_subcommand("continuity", "Sample the delta-disk at zeta");
  auto* diam_cmd = verify_cmd->add_subcommand("diameter", "Diameter of phi on C(D; zeta, r0)");
  for (auto* cmd : {cont_cmd, diam_cmd}) {
    cmd->add_option("--domain", domain_file, "mapped_disk JSON")->required();
    cmd->add_option("--zeta", zeta_text, "Boundary point x,y")->required();
    cmd->add_option("--eps", eps, "Epsilon")->required();
    cmd->add_option("--report", report_file, "Report JSON (stdout if omitted)");
  }
  cont_cmd->add_option("--delta-log2", delta_log2, "log2 of delta")->required();
  cont_cmd->add_option("--samples", samples, "Accepted samples")->capture_default_str();
  cont_cmd->add_option("--seed", seed, "Generator seed")->capture_default_str();
  diam_cmd->add_option("--r0", r0, "Disk radius")->required();
  diam_cmd->add_option("--grid", grid_n, "Cells per side")->capture_default_str();

  std::string config_file;
  auto* suite_cmd = app.add_subcommand("suite", "Run a suite configuration");
  suite_cmd->add_option("--config", config_file, "Suite JSON")->required();
  suite_cmd->add_option("--report", report_file, "Report JSON (stdout if omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (lambda_cmd->parsed()) {
      std::printf("%.17g\n", cara::extremal_length(cara::Annulus({0, 0}, inner, outer)));
    } else if (estimate_cmd->parsed()) {
      const auto domain = cara::domain_from_json(cara::read_json_file(curve_file));
      emit(cara::table_to_json(cara::estimate_mlc(domain.boundary, kmax, resolution)), out_file);
    } else if (check_cmd->parsed()) {
      const auto domain = cara::domain_from_json(cara::read_json_file(curve_file));
      const auto table = cara::table_from_json(cara::read_json_file(table_file));
      const auto witness = cara::check_mlc(domain.boundary, table, k, resolution);
      if (!witness) {
        emit({{"pass", true}, {"k", k}}, "");
        return 0;
      }
      const auto& b = domain.boundary;
      const cara::Point p = b.at(witness->p);
      const cara::Point q = b.at(witness->q);
      emit({{"pass", false},
            {"k", k},
            {"p", {p.x, p.y}},
            {"q", {q.x, q.y}},
            {"pair_distance", witness->pair_distance},
            {"best_arc_diameter", witness->best_arc_diameter}},
           "");
      return 1;
    } else if (delta_cmd->parsed()) {
      const auto map = require_map(cara::domain_from_json(cara::read_json_file(domain_file)));
      const auto table = cara::table_from_json(cara::read_json_file(table_file));
      const cara::BoundQuery q{map, cara::parse_point(zeta_text), eps};
      emit(cara::delta_to_json(cara::delta_of(q, table, l_grid)), "");
    } else if (comp_cmd->parsed()) {
      const auto domain = cara::domain_from_json(cara::read_json_file(domain_file));
      const cara::JordanDomain d{domain.boundary};
      const auto zeta = d.boundary.project(cara::to_point(cara::parse_point(zeta_text)));
      const auto region = cara::boundary_component(d, zeta, radius, grid_n);
      if (!csv_file.empty()) {
        std::ofstream out(csv_file);
        if (!out) throw std::runtime_error("cannot write " + csv_file);
        cara::write_component_csv(out, region);
      }
      emit(cara::component_summary(region), "");
    } else if (cont_cmd->parsed()) {
      const auto map = require_map(cara::domain_from_json(cara::read_json_file(domain_file)));
      const auto report =
          cara::verify_continuity(map, cara::parse_point(zeta_text), eps,
                                  cara::Log2Real::from_log2(*delta_log2), samples, seed);
      emit(cara::report_to_json(report), report_file);
      return report.violations == 0 ? 0 : 1;
    } else if (diam_cmd->parsed()) {
      const auto map = require_map(cara::domain_from_json(cara::read_json_file(domain_file)));
      const auto report = cara::verify_diameter(map, cara::parse_point(zeta_text), *r0, eps, grid_n);
      emit(cara::report_to_json(report), report_file);
      return report.violations == 0 ? 0 : 1;
    } else if (suite_cmd->parsed()) {
      const auto outcome = cara::run_suite(cara::read_json_file(config_file));
      emit(outcome.report, report_file);
      return outcome.passed ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
