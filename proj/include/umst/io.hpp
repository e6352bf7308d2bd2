#pragma once

// JSON instance files and the JSON-lines event log.
//
// Edge model:
//   {"model":"edge","vertices":[...],
//    "edges":[{"id":..,"u":..,"v":..,"area":{...},"true_weight":"<decimal>"}]}
// An area is {"lo":"<decimal>","hi":"<decimal>","lo_open":b,"hi_open":b};
// a bare number (or decimal string) denotes a trivial area.
//
// Vertex model:
//   {"model":"vertex",
//    "vertices":[{"id":..,"region":{"kind":"point|rect|disk",...},
//                 "true_location":[x,y]}],
//    "edges":[{"u":..,"v":..}]}        // omitted edges = complete graph

#include <fstream>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "umst/generators.hpp"

namespace umst {

using Json = nlohmann::json;

inline Json weight_to_json(const Weight& w) {
  if (denominator(w) == 1 && numerator(w) >= std::numeric_limits<std::int64_t>::min() &&
      numerator(w) <= std::numeric_limits<std::int64_t>::max())
    return Json(numerator(w).convert_to<std::int64_t>());
  return Json(format_weight(w));
}

inline Weight weight_from_json(const Json& j) {
  if (j.is_string()) return parse_weight(j.get<std::string>());
  if (j.is_number_integer()) return Weight(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Weight(j.get<std::uint64_t>());
  if (j.is_number_float()) return weight_from_double(j.get<double>());
  throw Error(ErrorCode::BadInput, "expected a weight, got " + j.dump());
}

inline Json area_to_json(const Area& a) {
  if (a.is_trivial()) return weight_to_json(a.inf());
  return Json{{"lo", format_weight(a.inf())},
              {"hi", format_weight(a.sup())},
              {"lo_open", a.lo_open},
              {"hi_open", a.hi_open}};
}

inline Area area_from_json(const Json& j) {
  if (!j.is_object()) return Area::trivial(weight_from_json(j));
  if (!j.contains("lo") || !j.contains("hi"))
    throw Error(ErrorCode::BadInput, "area object needs lo and hi");
  return Area::make(weight_from_json(j.at("lo")), weight_from_json(j.at("hi")),
                    j.value("lo_open", true), j.value("hi_open", true));
}

inline Json instance_to_json(const Instance& inst) {
  Json out;
  out["model"] = "edge";
  out["vertices"] = inst.graph.vertex_names;
  Json edges = Json::array();
  for (EdgeIndex e = 0; e < inst.graph.edge_count(); ++e) {
    const EdgeData& d = inst.graph.edges[e];
    edges.push_back(Json{{"id", d.name},
                         {"u", inst.graph.vertex_names[d.u]},
                         {"v", inst.graph.vertex_names[d.v]},
                         {"area", area_to_json(d.area)},
                         {"true_weight", format_weight(inst.truth[e])}});
  }
  out["edges"] = std::move(edges);
  return out;
}

inline Instance instance_from_json(const Json& j) {
  Instance inst;
  if (!j.contains("vertices") || !j.contains("edges"))
    throw Error(ErrorCode::BadInput, "instance needs vertices and edges");
  for (const auto& v : j.at("vertices")) inst.graph.vertex_names.push_back(v.get<std::string>());
  for (const auto& ej : j.at("edges")) {
    EdgeData d;
    d.name = ej.at("id").is_string() ? ej.at("id").get<std::string>() : ej.at("id").dump();
    auto u = inst.graph.vertex_by_name(ej.at("u").get<std::string>());
    auto v = inst.graph.vertex_by_name(ej.at("v").get<std::string>());
    if (!u || !v)
      throw Error(ErrorCode::BadInput, "edge '" + d.name + "' references an unknown vertex");
    d.u = *u;
    d.v = *v;
    d.area = area_from_json(ej.at("area"));
    inst.graph.edges.push_back(std::move(d));
    if (!ej.contains("true_weight"))
      throw Error(ErrorCode::BadInput, "edge '" + inst.graph.edges.back().name +
                                           "' is missing true_weight");
    inst.truth.push_back(weight_from_json(ej.at("true_weight")));
  }
  validate_instance(inst);  // structure + realization property
  return inst;
}

inline Json point_to_json(const Point& p) { return Json::array({p.x, p.y}); }

inline Point point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw Error(ErrorCode::BadInput, "expected [x, y], got " + j.dump());
  return Point{j[0].get<double>(), j[1].get<double>()};
}

inline Json region_to_json(const Region& r) {
  if (auto* p = std::get_if<Point>(&r.shape))
    return Json{{"kind", "point"}, {"at", point_to_json(*p)}};
  if (auto* rc = std::get_if<Rect>(&r.shape))
    return Json{{"kind", "rect"},
                {"corner", Json::array({rc->x0, rc->y0})},
                {"width", rc->width},
                {"height", rc->height}};
  const Disk& d = std::get<Disk>(r.shape);
  return Json{{"kind", "disk"}, {"center", point_to_json(d.center)}, {"radius", d.radius}};
}

inline Region region_from_json(const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "point") return Region{point_from_json(j.at("at"))};
  if (kind == "rect") {
    Point c = point_from_json(j.at("corner"));
    return Region{Rect{c.x, c.y, j.at("width").get<double>(), j.at("height").get<double>()}};
  }
  if (kind == "disk")
    return Region{Disk{point_from_json(j.at("center")), j.at("radius").get<double>()}};
  throw Error(ErrorCode::BadInput, "unknown region kind '" + kind + "'");
}

inline Json vertex_instance_to_json(const VertexInstance& vi) {
  Json out;
  out["model"] = "vertex";
  Json verts = Json::array();
  for (int i = 0; i < vi.vertex_count(); ++i)
    verts.push_back(Json{{"id", vi.names[i]},
                         {"region", region_to_json(vi.regions[i])},
                         {"true_location", point_to_json(vi.truth[i])}});
  out["vertices"] = std::move(verts);
  // complete graphs leave "edges" out
  std::vector<std::pair<int, int>> complete;
  for (int u = 0; u < vi.vertex_count(); ++u)
    for (int v = u + 1; v < vi.vertex_count(); ++v) complete.push_back({u, v});
  if (vi.edge_list != complete) {
    Json edges = Json::array();
    for (auto [u, v] : vi.edge_list)
      edges.push_back(Json{{"u", vi.names[u]}, {"v", vi.names[v]}});
    out["edges"] = std::move(edges);
  }
  return out;
}

inline VertexInstance vertex_instance_from_json(const Json& j) {
  VertexInstance vi;
  for (const auto& vj : j.at("vertices")) {
    vi.names.push_back(vj.at("id").get<std::string>());
    vi.regions.push_back(region_from_json(vj.at("region")));
    vi.truth.push_back(point_from_json(vj.at("true_location")));
  }
  if (j.contains("edges")) {
    for (const auto& ej : j.at("edges")) {
      auto u = std::find(vi.names.begin(), vi.names.end(), ej.at("u").get<std::string>());
      auto v = std::find(vi.names.begin(), vi.names.end(), ej.at("v").get<std::string>());
      if (u == vi.names.end() || v == vi.names.end())
        throw Error(ErrorCode::BadInput, "vertex-model edge references an unknown vertex");
      int ui = static_cast<int>(u - vi.names.begin());
      int vj2 = static_cast<int>(v - vi.names.begin());
      vi.edge_list.push_back({std::min(ui, vj2), std::max(ui, vj2)});
    }
  } else {
    make_complete(vi);
  }
  validate_vertex_instance(vi);
  return vi;
}

using AnyInstance = std::variant<Instance, VertexInstance>;

inline AnyInstance any_instance_from_json(const Json& j) {
  std::string model = j.value("model", "edge");
  if (model == "edge") return instance_from_json(j);
  if (model == "vertex") return vertex_instance_from_json(j);
  throw Error(ErrorCode::BadInput, "unknown model '" + model + "'");
}

inline AnyInstance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadInput, "cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& ex) {
    throw Error(ErrorCode::BadInput, "cannot parse '" + path + "': " + ex.what());
  }
  return any_instance_from_json(j);
}

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::BadInput, "cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

inline const char* event_kind_name(RunEvent::Kind k) {
  switch (k) {
    case RunEvent::Kind::Add: return "add";
    case RunEvent::Kind::Delete: return "delete";
    case RunEvent::Kind::UpdatePair: return "update-pair";
    case RunEvent::Kind::Return: return "return";
  }
  return "?";
}

// One JSON object per line:
//   {"run":n,"event":"add|delete|update-pair|return","edges":[...]}
// Vertex-model pair updates also carry the revealed vertices.
inline std::string events_to_jsonl(const std::vector<RunEvent>& events,
                                   const std::vector<std::string>& edge_names,
                                   const std::vector<std::string>& vertex_names = {}) {
  std::ostringstream out;
  for (const auto& ev : events) {
    Json j;
    j["run"] = ev.run;
    j["event"] = event_kind_name(ev.kind);
    Json edges = Json::array();
    for (EdgeIndex e : ev.edges) edges.push_back(edge_names.at(e));
    j["edges"] = std::move(edges);
    if (!ev.vertices.empty()) {
      Json verts = Json::array();
      for (VertexIndex v : ev.vertices) verts.push_back(vertex_names.at(v));
      j["vertices"] = std::move(verts);
    }
    out << j.dump() << "\n";
  }
  return out.str();
}

}  // namespace umst
