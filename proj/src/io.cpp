#include "lattice_equiv/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace lattice_equiv {

namespace {

Integer json_integer(const Json& v) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(v.get<unsigned long long>());
    return Integer(v.get<long long>());
  }
  if (v.is_string()) return parse_integer(v.get<std::string>());
  if (v.is_number_float()) {
    throw LatticeError(ErrorKind::ParseError, "coordinates must be exact integers (got " + v.dump() +
                                                  "); write large values as strings");
  }
  throw LatticeError(ErrorKind::ParseError, "coordinate is not an integer: " + v.dump());
}

}  // namespace

PolytopeDocument parse_polytope(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    throw LatticeError(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw LatticeError(ErrorKind::ParseError, "document must be a JSON object");
  if (!doc.contains("dim") || !doc.contains("points")) {
    throw LatticeError(ErrorKind::ParseError, "document needs \"dim\" and \"points\"");
  }
  const Integer dim_value = json_integer(doc["dim"]);
  if (dim_value < 1 || dim_value > 64) throw LatticeError(ErrorKind::ParseError, "\"dim\" out of range");
  const auto dim = dim_value.convert_to<std::size_t>();
  const Json& pts = doc["points"];
  if (!pts.is_array()) throw LatticeError(ErrorKind::ParseError, "\"points\" must be an array");

  std::vector<LatticePoint> points;
  for (const auto& row : pts) {
    if (!row.is_array()) throw LatticeError(ErrorKind::ParseError, "each point must be an array");
    if (row.size() != dim) {
      throw LatticeError(ErrorKind::DimensionMismatch, "point " + row.dump() + " does not have " +
                                                           std::to_string(dim) + " coordinates");
    }
    std::vector<Integer> c;
    for (const auto& x : row) c.push_back(json_integer(x));
    points.emplace_back(std::move(c));
  }

  std::optional<std::string> label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw LatticeError(ErrorKind::ParseError, "\"label\" must be a string");
    label = doc["label"].get<std::string>();
  }

  if (dim == 2) {
    std::vector<LatticePoint> distinct = points;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (affine_dimension(distinct) != 2) {
      throw LatticeError(ErrorKind::DegenerateInput, "points do not span the plane");
    }
    LatticePolytope hull = convex_hull_2d(distinct);
    PolytopeDocument out{hull, label, hull.size() != points.size(), {}};
    if (out.hull_taken) {
      auto verts = hull.vertices();
      for (const auto& p : points)
        if (std::find(verts.begin(), verts.end(), p) == verts.end()) out.dropped.push_back(p);
    }
    return out;
  }
  return {LatticePolytope::from_vertices(dim, std::move(points)), label, false, {}};
}

PolytopeDocument read_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LatticeError(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_polytope(ss.str());
}

Json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max()) {
    return x.convert_to<long long>();
  }
  return x.str();
}

Json point_to_json(const LatticePoint& p) {
  Json a = Json::array();
  for (const auto& x : p.coords()) a.push_back(integer_to_json(x));
  return a;
}

Json polytope_to_json(const LatticePolytope& p, const std::optional<std::string>& label) {
  Json pts = Json::array();
  for (const auto& v : p.vertices()) pts.push_back(point_to_json(v));
  Json j{{"dim", p.dim()}, {"points", std::move(pts)}};
  if (label) j["label"] = *label;
  return j;
}

std::string serialize_polytope(const LatticePolytope& p, const std::optional<std::string>& label) {
  return polytope_to_json(p, label).dump();
}

Json map_to_json(const RationalAffineMap& map) {
  Json m = Json::array();
  for (const auto& row : map.matrix()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_fraction_string(x));
    m.push_back(std::move(r));
  }
  Json t = Json::array();
  for (const auto& x : map.translation()) t.push_back(to_fraction_string(x));
  return Json{{"convention", "x -> x * matrix + translation (row vectors)"},
              {"matrix", std::move(m)},
              {"translation", std::move(t)},
              {"determinant", to_fraction_string(map.determinant())}};
}

Json witness_to_json(const EquivalenceWitness& w, EquivalenceMode mode) {
  return Json{{"mode", std::string(to_string(mode))}, {"bijection", w.bijection}, {"map", map_to_json(w.map)}};
}

Json volume_vector_to_json(const VolumeVector& w) {
  Json entries = Json::array();
  for (const auto& x : w.entries) entries.push_back(integer_to_json(x));
  Json manifest = Json::array();
  for (auto tuple : w.manifest()) {
    for (auto& i : tuple) ++i;
    manifest.push_back(tuple);
  }
  return Json{{"entries", std::move(entries)}, {"manifest", std::move(manifest)}, {"index_base", 1}};
}

Json primitive_to_json(const PrimitiveVolumeVector& p) {
  Json dir = Json::array();
  for (const auto& x : p.direction) dir.push_back(integer_to_json(x));
  return Json{{"k", integer_to_json(p.content)}, {"direction", std::move(dir)}};
}

Json heights_to_json(const LatticeHeightVector& h) {
  Json blocks = Json::array();
  for (std::size_t i = 0; i < h.blocks.size(); ++i) {
    Json values = Json::array();
    for (const auto& v : h.blocks[i]) values.push_back(v ? integer_to_json(*v) : Json(nullptr));
    Json manifest = Json::array();
    for (auto tuple : h.manifest(i)) {
      for (auto& x : tuple) ++x;
      manifest.push_back(tuple);
    }
    blocks.push_back(Json{{"point", i + 1}, {"heights", std::move(values)}, {"manifest", std::move(manifest)}});
  }
  return blocks;
}

std::string format_log_ratio(std::size_t numerator_count, std::size_t h) {
  if (h <= 1 || numerator_count == 0) return "";
  double r = std::log(static_cast<double>(numerator_count)) / std::log(static_cast<double>(h));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.6g", r);
  return buf;
}

std::string emit_census_csv(const std::vector<CensusRow>& rows) {
  std::string out = "param,H,K,A,logK_over_logH,logA_over_logH\n";
  for (const auto& r : rows) {
    out += r.param + "," + std::to_string(r.h) + "," + std::to_string(r.k) + "," + std::to_string(r.a) + "," +
           format_log_ratio(r.k, r.h) + "," + format_log_ratio(r.a, r.h) + "\n";
  }
  return out;
}

}  // namespace lattice_equiv
