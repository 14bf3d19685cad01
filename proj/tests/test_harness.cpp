#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cara/harness.hpp"
#include "cara/io.hpp"

using namespace cara;
using nlohmann::json;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

const json kPlanted = {{"name", "planted"},
                       {"map", {{"kind", "identity"}}},
                       {"zeta", {1.0, 0.0}},
                       {"eps", 0.5},
                       {"delta", 1.2},
                       {"samples", 2000},
                       {"expect_violations", true}};

}  // namespace

TEST_CASE("continuity examples") {
  const MapSpec id = MapSpec::identity();
  const VerificationReport ok = verify_continuity(id, 1.0, 0.5, Log2Real::from_value(0.1), 100000, 1);
  CHECK(ok.samples == 100000);
  CHECK(ok.violations == 0);
  CHECK(ok.worst_ratio < 0.2);
  CHECK_FALSE(ok.vacuous);

  const VerificationReport bad = verify_continuity(id, 1.0, 0.5, Log2Real::from_value(1.2), 10000, 1);
  CHECK(bad.violations > 0);
  CHECK(bad.worst_ratio > 1.0);

  const MapSpec quad = MapSpec::quadratic(0.25);
  const DeltaResult d = delta_of({quad, 1.25, 0.25}, MLCTable::linear(8, 2));
  const VerificationReport formal = verify_continuity(quad, 1.25, 0.25, d.delta, 1000, 1);
  CHECK(formal.vacuous);
  CHECK(formal.violations == 0);

  CHECK_THROWS_WITH(verify_continuity(id, 0.5, 0.5, Log2Real::from_value(0.1), 10, 1),
                    "zeta0 is not a boundary point");
}

TEST_CASE("continuity reports depend only on their inputs") {
  const MapSpec m = MapSpec::mobius({0.3, 0.2});
  const Complex z = boundary_point(m, 1.0);
  const auto a = verify_continuity(m, z, 0.3, Log2Real::from_value(0.05), 5000, 9);
  const auto b = verify_continuity(m, z, 0.3, Log2Real::from_value(0.05), 5000, 9);
  CHECK(report_to_json(a).dump() == report_to_json(b).dump());
  const auto c = verify_continuity(m, z, 0.3, Log2Real::from_value(0.05), 5000, 10);
  CHECK(report_to_json(a).dump() != report_to_json(c).dump());
}

TEST_CASE("diameter examples") {
  const auto id = verify_diameter(MapSpec::identity(), 1.0, 0.1, 0.5, 1024);
  CHECK(*id.diameter <= 0.2);
  CHECK(id.violations == 0);

  // Oracle: exact image of the disk cap, 0.2984093; the grid sees slightly less.
  const auto mob = verify_diameter(MapSpec::mobius(0.5), 1.0, 0.05, 0.5, 1024);
  CHECK(*mob.diameter == doctest::Approx(0.2984093).epsilon(2e-3 / 0.2984093));
  CHECK(*mob.diameter <= 0.2984093);
  CHECK(mob.violations == 0);

  CHECK_THROWS_WITH(verify_diameter(MapSpec::identity(), 1.0, 1e-9, 0.5, 1024),
                    "r0 unresolvable; increase grid_n or r0");
}

TEST_CASE("suite pass, planted failure and determinism") {
  json config = {{"seed", 5}, {"criteria", {1, 2}}, {"continuity", {kPlanted}}};
  const SuiteOutcome first = run_suite(config);
  CHECK(first.passed);
  CHECK(first.report.at("continuity").at(0).at("report").at("violations").get<long>() > 0);
  CHECK(first.report.dump() == run_suite(config).report.dump());

  config["continuity"][0]["expect_violations"] = false;
  const SuiteOutcome failed = run_suite(config);
  CHECK_FALSE(failed.passed);
  CHECK_FALSE(failed.report.at("continuity").at(0).at("passed").get<bool>());

  config = {{"diameter",
             {{{"map", {{"kind", "identity"}}}, {"zeta", {1.0, 0.0}}, {"r0", 0.1}, {"eps", 0.5},
               {"grid_n", 512}}}}};
  CHECK(run_suite(config).passed);
}

TEST_CASE("malformed config names the line") {
  const std::string path = temp_path("cara_bad_config.json");
  {
    std::ofstream out(path);
    out << "{\n  \"seed\": 1,\n  \"criteria\": [1,, 2]\n}\n";
  }
  CHECK_THROWS_WITH(read_json_file(path), doctest::Contains(":3:"));
  std::remove(path.c_str());
  CHECK_THROWS(read_json_file(temp_path("cara_missing_file.json")));
}

TEST_CASE("map, domain and table formats") {
  for (const auto& entry : map_catalog()) {
    const json j = map_to_json(entry.map);
    CHECK(map_to_json(map_from_json(j)) == j);
  }
  const json mob = {{"type", "mapped_disk"}, {"map", {{"kind", "mobius"}, {"a", {0.5, 0.0}}}}};
  const DomainSpec d = domain_from_json(mob, 256);
  CHECK(d.map.has_value());
  CHECK(d.boundary.size() == 256);

  const json poly = {{"type", "polygon"}, {"vertices", {{0, 0}, {1, 0}, {1, 1}, {0, 1}}}};
  const DomainSpec sq = domain_from_json(poly);
  CHECK_FALSE(sq.map.has_value());
  CHECK(polygon_to_json(sq.boundary) == poly);
  CHECK_THROWS(domain_from_json({{"type", "blob"}}));
  CHECK_THROWS(map_from_json({{"kind", "spiral"}}));

  const MLCTable t({1, 2, 4}, 3);
  CHECK(table_to_json(table_from_json(table_to_json(t))) == table_to_json(t));
  CHECK_THROWS(table_from_json({{"kmax", 5}, {"g", {1, 2}}}));

  CHECK(parse_point("1.5,-2") == Complex(1.5, -2));
  CHECK_THROWS(parse_point("1.5"));
  CHECK_THROWS(parse_point("1,2,3"));
}

TEST_CASE("component export") {
  const JordanDomain sq{JordanCurve({{0, 0}, {1, 0}, {1, 1}, {0, 1}})};
  const ComponentRegion c = boundary_component(sq, {0, 0.5}, 0.25, 128);
  std::ostringstream csv;
  write_component_csv(csv, c);
  const std::string text = csv.str();
  CHECK(text.rfind("cell_x,cell_y\n", 0) == 0);
  CHECK(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) == c.cell_count + 1);
  const json s = component_summary(c);
  CHECK(s.at("touches_zeta0").get<bool>());
  CHECK(s.at("bbox").size() == 4);
}
