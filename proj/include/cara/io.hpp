#pragma once

// JSON and CSV formats shared by the CLI and the suite.

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "cara/bounds.hpp"
#include "cara/components.hpp"
#include "cara/harness.hpp"
#include "cara/jordan_curve.hpp"
#include "cara/maps.hpp"
#include "cara/mlc.hpp"

namespace cara {

/// Reads a JSON file; parse errors name the file, line and column.
nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& value);

/// {"kind":"identity"}, {"kind":"mobius","a":[re,im]}, {"kind":"quad","c":[re,im]},
/// {"kind":"affine","scale":s,"shift":[re,im],"inner":{...}}.
MapSpec map_from_json(const nlohmann::json& j);
nlohmann::json map_to_json(const MapSpec& map);

/// A domain file: {"type":"polygon","vertices":[[x,y],...]} or
/// {"type":"mapped_disk","map":{...}}; mapped disks are traced at trace_n.
struct DomainSpec {
  JordanCurve boundary;
  std::optional<MapSpec> map;
};
DomainSpec domain_from_json(const nlohmann::json& j, int trace_n = 4096);
nlohmann::json polygon_to_json(const JordanCurve& curve);

MLCTable table_from_json(const nlohmann::json& j);
nlohmann::json table_to_json(const MLCTable& table);

nlohmann::json delta_to_json(const DeltaResult& d);
nlohmann::json report_to_json(const VerificationReport& r);

void write_component_csv(std::ostream& out, const ComponentRegion& region);
nlohmann::json component_summary(const ComponentRegion& region);

/// "x,y" -> complex.
Complex parse_point(const std::string& text);

}  // namespace cara
