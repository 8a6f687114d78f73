#include "ribbon/schema_json.hpp"

#include <cstdio>
#include <cstdlib>

#include "json.hpp"
#include "ribbon/error.hpp"

namespace ribbon {

using json = nlohmann::ordered_json;

double round_to_schema_precision(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

namespace {

json length_to_json(const BoundaryLength& len) {
  if (len.is_symbolic()) return "sym:" + len.symbol;
  return round_to_schema_precision(*len.value);
}

BoundaryLength length_from_json(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.rfind("sym:", 0) != 0 || s.size() == 4) throw Error(ErrorKind::Parse, "bad symbolic length '" + s + "'");
    return BoundaryLength::symbolic(s.substr(4));
  }
  if (!j.is_number()) throw Error(ErrorKind::Parse, "boundary length must be a number or sym:<label>");
  return BoundaryLength::numeric(j.get<double>());
}

json dart_list(const MetricGraph& g, std::span<const Dart> darts) {
  json out = json::array();
  for (Dart d : darts) out.push_back(g.dart_name(d));
  return out;
}

std::vector<Dart> darts_from_json(const MetricGraph& g, const json& j) {
  std::vector<Dart> out;
  for (const auto& item : j) {
    auto d = g.find_dart(item.get<std::string>());
    if (!d) throw Error(ErrorKind::Parse, "unknown dart '" + item.get<std::string>() + "'");
    out.push_back(*d);
  }
  return out;
}

Construction construction_from_string(const std::string& s) {
  for (auto c : {Construction::Naive, Construction::Sigma, Construction::SigmaTarget}) {
    if (s == to_string(c)) return c;
  }
  throw Error(ErrorKind::Parse, "unknown construction '" + s + "'");
}

const char* provenance(Construction c) {
  switch (c) {
    case Construction::Naive:
      return "vertex spheres and edge pants glued along unit cuffs, free waists capped by one-holed tori";
    case Construction::Sigma:
      return "bordered surface with the graph as spine following the rotation system; boundary lengths are the "
             "geodesic representatives of the boundary walks, kept symbolic; caps are pants and one-holed tori";
    case Construction::SigmaTarget:
      return "sigma construction with one cap replaced by a higher-genus surface to reach the target genus";
  }
  return "";
}

json graph_to_json(const MetricGraph& g) {
  json vertices = json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    vertices.push_back({{"name", g.vertex_name(v)}, {"degree", g.degree(v)}});
  }
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"name", e.name},
                     {"tail", g.vertex_name(e.tail)},
                     {"head", g.vertex_name(e.head)},
                     {"length", round_to_schema_precision(e.length)}});
  }
  return {{"vertices", vertices}, {"edges", edges}};
}

MetricGraph graph_from_json(const json& j) {
  std::vector<std::string> names;
  for (const auto& v : j.at("vertices")) names.push_back(v.at("name").get<std::string>());
  MetricGraph probe(names, {});
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    auto tail = probe.find_vertex(e.at("tail").get<std::string>());
    auto head = probe.find_vertex(e.at("head").get<std::string>());
    if (!tail || !head) throw Error(ErrorKind::Parse, "edge references an unknown vertex");
    edges.push_back(Edge{e.at("name").get<std::string>(), *tail, *head, e.at("length").get<double>()});
  }
  MetricGraph g(std::move(names), std::move(edges));
  std::size_t i = 0;
  for (const auto& v : j.at("vertices")) {
    if (v.contains("degree") && v.at("degree").get<std::size_t>() != g.degree(static_cast<VertexId>(i))) {
      throw Error(ErrorKind::Parse, "vertex '" + g.vertex_name(static_cast<VertexId>(i)) +
                                        "' degree disagrees with its edges");
    }
    ++i;
  }
  return g;
}

json block_to_json(const MetricGraph& g, const Block& b) {
  json boundaries = json::array();
  for (const auto& bd : b.boundaries) boundaries.push_back({{"label", bd.label}, {"length", length_to_json(bd.length)}});
  json payload = json::object();
  if (b.vertex) {
    payload["vertex"] = g.vertex_name(*b.vertex);
    payload["degree"] = g.degree(*b.vertex);
  }
  if (b.foot) payload["foot"] = round_to_schema_precision(*b.foot);
  if (b.edge) payload["edge"] = g.edge(*b.edge).name;
  if (b.waist) payload["waist"] = round_to_schema_precision(*b.waist);
  if (b.clearance) payload["clearance"] = round_to_schema_precision(*b.clearance);
  if (!b.walks.empty()) {
    json walks = json::array();
    for (const auto& w : b.walks) walks.push_back(dart_list(g, w));
    payload["walks"] = walks;
  }
  return {{"id", b.id},
          {"kind", to_string(b.kind)},
          {"genus", b.genus},
          {"chi", b.euler_characteristic()},
          {"boundaries", boundaries},
          {"payload", payload}};
}

Block block_from_json(const MetricGraph& g, const json& j) {
  Block b;
  b.id = j.at("id").get<std::string>();
  auto kind = block_kind_from_string(j.at("kind").get<std::string>());
  if (!kind) throw Error(ErrorKind::Parse, "unknown block kind '" + j.at("kind").get<std::string>() + "'");
  b.kind = *kind;
  b.genus = j.at("genus").get<std::size_t>();
  for (const auto& bd : j.at("boundaries")) {
    b.boundaries.push_back({bd.at("label").get<std::string>(), length_from_json(bd.at("length"))});
  }
  const json& payload = j.contains("payload") ? j.at("payload") : json::object();
  if (payload.contains("vertex")) {
    auto v = g.find_vertex(payload.at("vertex").get<std::string>());
    if (!v) throw Error(ErrorKind::Parse, b.id + ": unknown vertex");
    b.vertex = *v;
  }
  if (payload.contains("foot")) b.foot = payload.at("foot").get<double>();
  if (payload.contains("edge")) {
    auto e = g.find_edge(payload.at("edge").get<std::string>());
    if (!e) throw Error(ErrorKind::Parse, b.id + ": unknown edge");
    b.edge = *e;
  }
  if (payload.contains("waist")) b.waist = payload.at("waist").get<double>();
  if (payload.contains("clearance")) b.clearance = payload.at("clearance").get<double>();
  if (payload.contains("walks")) {
    for (const auto& w : payload.at("walks")) b.walks.push_back(darts_from_json(g, w));
  }
  return b;
}

json ref_to_json(const BoundaryRef& r) { return {{"block", r.block}, {"boundary", r.label}}; }

BoundaryRef ref_from_json(const json& j) {
  return {j.at("block").get<std::string>(), j.at("boundary").get<std::string>()};
}

}  // namespace

std::string schema_to_json(const SurfaceSchema& s) {
  const MetricGraph& g = s.graph;
  json meta;
  meta["graph_hash"] = graph_hash(g);
  meta["t"] = round_to_schema_precision(s.scale.t);
  meta["delta"] = round_to_schema_precision(s.scale.margin);
  meta["f_min"] = round_to_schema_precision(s.scale.f_min);
  meta["construction"] = to_string(s.summary.construction);
  meta["provenance"] = provenance(s.summary.construction);
  if (s.rotation) {
    json rot = json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      rot.push_back({{"vertex", g.vertex_name(v)}, {"darts", dart_list(g, s.rotation->cycle(v))}});
    }
    meta["rotation"] = rot;
  } else {
    meta["rotation"] = nullptr;
  }
  meta["graph"] = graph_to_json(g);

  json blocks = json::array();
  for (const Block& b : s.blocks) blocks.push_back(block_to_json(g, b));
  json gluings = json::array();
  for (const Gluing& gl : s.gluings) {
    gluings.push_back({{"a", ref_to_json(gl.a)}, {"b", ref_to_json(gl.b)}, {"twist", gl.twist}});
  }
  json summary = {{"genus", s.summary.genus},
                  {"boundary_count", s.summary.boundary_count},
                  {"minimal", s.summary.minimal},
                  {"construction", to_string(s.summary.construction)}};
  if (s.summary.target_genus) summary["target_genus"] = *s.summary.target_genus;

  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["meta"] = meta;
  doc["blocks"] = blocks;
  doc["gluings"] = gluings;
  doc["summary"] = summary;
  return doc.dump(2) + "\n";
}

SurfaceSchema schema_from_json(std::string_view text) {
  try {
    json doc = json::parse(text);
    if (!doc.is_object()) throw Error(ErrorKind::Parse, "schema must be a JSON object");
    const int version = doc.at("schema_version").get<int>();
    if (version != kSchemaVersion) {
      throw Error(ErrorKind::Parse, "unsupported schema_version " + std::to_string(version));
    }
    const json& meta = doc.at("meta");
    SurfaceSchema s;
    s.graph = graph_from_json(meta.at("graph"));
    const MetricGraph& g = s.graph;
    if (meta.contains("rotation") && !meta.at("rotation").is_null()) {
      std::vector<std::vector<Dart>> cycles(g.vertex_count());
      for (const auto& entry : meta.at("rotation")) {
        auto v = g.find_vertex(entry.at("vertex").get<std::string>());
        if (!v) throw Error(ErrorKind::Parse, "rotation names an unknown vertex");
        cycles[*v] = darts_from_json(g, entry.at("darts"));
      }
      s.rotation = RotationSystem(g, std::move(cycles));
    }
    s.scale.t = meta.at("t").get<double>();
    s.scale.margin = meta.at("delta").get<double>();
    s.scale.f_min = meta.contains("f_min") ? meta.at("f_min").get<double>() : min_waist_distance();
    for (const auto& b : doc.at("blocks")) s.blocks.push_back(block_from_json(g, b));
    for (const auto& gl : doc.at("gluings")) {
      s.gluings.push_back({ref_from_json(gl.at("a")), ref_from_json(gl.at("b")),
                           gl.contains("twist") ? gl.at("twist").get<double>() : 0.0});
    }
    const json& summary = doc.at("summary");
    s.summary.genus = summary.at("genus").get<std::size_t>();
    s.summary.boundary_count = summary.at("boundary_count").get<std::size_t>();
    s.summary.minimal = summary.at("minimal").get<bool>();
    s.summary.construction = construction_from_string(summary.at("construction").get<std::string>());
    if (summary.contains("target_genus")) s.summary.target_genus = summary.at("target_genus").get<std::size_t>();
    return s;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed schema: ") + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw;
    throw Error(ErrorKind::Parse, std::string("malformed schema: ") + e.what());
  }
}

}  // namespace ribbon
