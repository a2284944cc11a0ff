#include "critradius/region_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "critradius/errors.h"

namespace critradius {

namespace {

using nlohmann::json;

Point parse_point(const json& value, const char* what) {
  if (!value.is_array() || value.size() != 2 || !value[0].is_number() || !value[1].is_number()) {
    throw ParseError(std::string("region: ") + what + " must be a [x, y] pair of numbers");
  }
  return {value[0].get<double>(), value[1].get<double>()};
}

double number_field(const json& object, const char* key) {
  const auto it = object.find(key);
  if (it == object.end() || !it->is_number()) {
    throw ParseError(std::string("region: missing numeric field '") + key + "'");
  }
  return it->get<double>();
}

ConvexRegion from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("region: document must be a JSON object");
  const auto kind_it = doc.find("kind");
  if (kind_it == doc.end() || !kind_it->is_string()) {
    throw ParseError("region: missing string field 'kind'");
  }
  const std::string kind = kind_it->get<std::string>();

  ConvexRegion region = unit_square();
  if (kind == "polygon") {
    const auto it = doc.find("vertices");
    if (it == doc.end() || !it->is_array()) throw ParseError("region: 'vertices' must be an array");
    std::vector<Point> vertices;
    for (const json& v : *it) vertices.push_back(parse_point(v, "vertex"));
    region = ConvexRegion::polygon(std::move(vertices));
  } else if (kind == "disk") {
    const auto it = doc.find("center");
    if (it == doc.end()) throw ParseError("region: disk needs 'center'");
    region = ConvexRegion::disk(parse_point(*it, "center"), number_field(doc, "radius"));
  } else if (kind == "named") {
    const auto name_it = doc.find("name");
    if (name_it == doc.end() || !name_it->is_string()) {
      throw ParseError("region: named region needs string field 'name'");
    }
    double width = 1.0;
    if (const auto params = doc.find("params"); params != doc.end() && !params->is_null()) {
      if (!params->is_object()) throw ParseError("region: 'params' must be an object");
      if (params->contains("width")) width = number_field(*params, "width");
    }
    region = named_region(name_it->get<std::string>(), width);
  } else {
    throw ParseError("region: unknown kind '" + kind + "'");
  }

  if (const auto it = doc.find("normalize"); it != doc.end()) {
    if (!it->is_boolean()) throw ParseError("region: 'normalize' must be a boolean");
    if (it->get<bool>()) region = normalize_unit_area(region);
  }
  return region;
}

}  // namespace

ConvexRegion parse_region(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("region: ") + e.what());
  }
  return from_json(doc);
}

ConvexRegion read_region(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_region(buffer.str());
}

ConvexRegion load_region_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("region: cannot open '" + path + "'");
  return read_region(in);
}

ConvexRegion named_region(std::string_view name, double width) {
  if (name == "unit-square") return unit_square();
  if (name == "unit-disk") return unit_disk();
  if (name == "rect") return unit_rectangle(width);
  if (name == "hexagon") return unit_regular_polygon(6).with_id("hexagon");
  throw InvalidRegion("unknown named region '" + std::string(name) + "'");
}

std::vector<std::string> named_region_names() { return {"unit-square", "unit-disk", "rect", "hexagon"}; }

std::string region_to_json(const ConvexRegion& region) {
  json doc;
  if (region.is_disk()) {
    doc["kind"] = "disk";
    doc["center"] = {region.center().x, region.center().y};
    doc["radius"] = region.radius();
  } else {
    doc["kind"] = "polygon";
    json vertices = json::array();
    for (const Point& p : region.vertices()) vertices.push_back({p.x, p.y});
    doc["vertices"] = vertices;
  }
  return doc.dump();
}

}  // namespace critradius
