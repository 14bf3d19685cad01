#include "cara/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cara {

using nlohmann::json;

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t upto = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw std::runtime_error(path + ":" + std::to_string(line) + ":" + std::to_string(column) +
                             ": malformed JSON: " + e.what());
  }
}

void write_json_file(const std::string& path, const nlohmann::json& value) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << value.dump(2) << "\n";
}

namespace {

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [re, im]");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};

}  // namespace

MapSpec map_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "identity") return MapSpec::identity();
  if (kind == "mobius") return MapSpec::mobius(complex_from_json(j.at("a")));
  if (kind == "quad") return MapSpec::quadratic(complex_from_json(j.at("c")));
  if (kind == "affine") {
    return MapSpec::affine(j.at("scale").get<double>(),
                           complex_from_json(j.value("shift", json::array({0.0, 0.0}))),
                           map_from_json(j.at("inner")));
  }
  throw std::invalid_argument("unknown map kind: " + kind);
}

nlohmann::json map_to_json(const MapSpec& map) {
  return std::visit(
      Overloaded{
          [](const IdentityMap&) { return json{{"kind", "identity"}}; },
          [](const MobiusMap& m) { return json{{"kind", "mobius"}, {"a", complex_to_json(m.a)}}; },
          [](const QuadraticMap& m) { return json{{"kind", "quad"}, {"c", complex_to_json(m.c)}}; },
          [](const AffineMap& m) {
            return json{{"kind", "affine"},
                        {"scale", m.scale},
                        {"shift", complex_to_json(m.shift)},
                        {"inner", map_to_json(*m.inner)}};
          },
      },
      map.kind());
}

DomainSpec domain_from_json(const nlohmann::json& j, int trace_n) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "polygon") {
    std::vector<Point> vertices;
    for (const auto& v : j.at("vertices")) {
      vertices.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
    }
    return {JordanCurve(std::move(vertices)), std::nullopt};
  }
  if (type == "mapped_disk") {
    MapSpec map = map_from_json(j.at("map"));
    return {trace_map_boundary(map, trace_n), std::move(map)};
  }
  throw std::invalid_argument("unknown domain type: " + type);
}

nlohmann::json polygon_to_json(const JordanCurve& curve) {
  json vertices = json::array();
  for (const Point& p : curve.vertices()) vertices.push_back({p.x, p.y});
  return {{"type", "polygon"}, {"vertices", vertices}};
}

MLCTable table_from_json(const nlohmann::json& j) {
  std::vector<int> g = j.at("g").get<std::vector<int>>();
  if (j.contains("kmax") && j.at("kmax").get<long>() + 1 != static_cast<long>(g.size())) {
    throw std::invalid_argument("kmax does not match the length of g");
  }
  std::optional<int> pad;
  if (j.contains("extension_pad")) pad = j.at("extension_pad").get<int>();
  return MLCTable(std::move(g), pad);
}

nlohmann::json table_to_json(const MLCTable& table) {
  json out = {{"kmax", table.kmax()}, {"g", table.values()}};
  if (table.extension_pad()) out["extension_pad"] = *table.extension_pad();
  return out;
}

nlohmann::json delta_to_json(const DeltaResult& d) {
  return {{"k", d.k},
          {"log2_delta", d.delta.log2()},
          {"log2_threshold", d.threshold.log2()},
          {"l_star", d.l_star},
          {"g_used", d.g_used}};
}

nlohmann::json report_to_json(const VerificationReport& r) {
  json out = {{"kind", r.kind},         {"instance", r.instance},
              {"samples", r.samples},   {"violations", r.violations},
              {"worst_ratio", r.worst_ratio}, {"seed", r.seed},
              {"vacuous", r.vacuous}};
  if (!r.note.empty()) out["note"] = r.note;
  if (r.diameter) out["diameter"] = *r.diameter;
  return out;
}

void write_component_csv(std::ostream& out, const ComponentRegion& region) {
  out.precision(17);
  out << "cell_x,cell_y\n";
  for (const Point& c : region.cell_centers()) out << c.x << "," << c.y << "\n";
}

nlohmann::json component_summary(const ComponentRegion& region) {
  return {{"area_estimate", region.area_estimate},
          {"cell_count", region.cell_count},
          {"bbox", {region.bbox.xmin, region.bbox.ymin, region.bbox.xmax, region.bbox.ymax}},
          {"touches_zeta0", region.touches_zeta0}};
}

Complex parse_point(const std::string& text) {
  std::istringstream in(text);
  double x = 0.0;
  double y = 0.0;
  char comma = 0;
  if (!(in >> x >> comma >> y) || comma != ',' || !(in >> std::ws).eof()) {
    throw std::invalid_argument("expected \"x,y\", got \"" + text + "\"");
  }
  return {x, y};
}

}  // namespace cara
