#include "calissons/io.hpp"

#include <algorithm>
#include <set>

#include "calissons/constraints.hpp"

namespace calissons {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& message) {
  throw ParseError("malformed_document", message, where.empty() ? "/" : where);
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) bad(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) bad(where, std::string("missing member '") + key + "'");
  return *it;
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  const auto v = j.get<long long>();
  if (v < -(1LL << 28) || v > (1LL << 28)) bad(where, "coordinate out of range");
  return static_cast<int>(v);
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

GridVertex parse_vertex(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) bad(where, "expected [u, v]");
  return {as_int(j[0], where + "/0"), as_int(j[1], where + "/1"), 0};
}

Axis parse_axis_at(const json& j, const std::string& where) {
  try {
    return parse_axis(as_string(j, where));
  } catch (const std::invalid_argument& e) {
    bad(where, e.what());
  }
}

}  // namespace

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed_json", e.what(), "byte " + std::to_string(e.byte));
  }
}

PuzzleDocument parse_document(const json& j) {
  PuzzleDocument d;
  const json& r = member(j, "region", "");
  const std::string type = as_string(member(r, "type", "/region"), "/region/type");
  if (type == "hexagon") {
    d.kind = RegionKind::Hexagon;
    d.n = as_int(member(r, "n", "/region"), "/region/n");
    if (d.n < 1) throw RuleError("invalid_region", "hexagon size must be at least 1", "/region/n");
    if (d.n > 400) throw RuleError("invalid_region", "hexagon size too large", "/region/n");
    d.region = Region::hexagon(d.n);
  } else if (type == "boundary") {
    d.kind = RegionKind::Boundary;
    d.start = parse_vertex(member(r, "start", "/region"), "/region/start");
    const json& steps = member(r, "steps", "/region");
    if (!steps.is_array()) bad("/region/steps", "expected an array of steps");
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const std::string where = "/region/steps/" + std::to_string(i);
      try {
        d.steps.push_back(parse_signed_axis(as_string(steps[i], where)));
      } catch (const std::invalid_argument& e) {
        bad(where, e.what());
      }
    }
    try {
      d.region = Region::from_boundary(d.start, d.steps);
    } catch (const RegionError& e) {
      throw RuleError("invalid_region", e.what(), "/region");
    }
  } else if (type == "infinite") {
    d.kind = RegionKind::Infinite;
  } else {
    bad("/region/type", "unknown region type '" + type + "'");
  }

  std::set<GridEdge> edges;
  if (j.contains("edges")) {
    const json& es = j.at("edges");
    if (!es.is_array()) bad("/edges", "expected an array of edges");
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string where = "/edges/" + std::to_string(i);
      const GridEdge e{parse_vertex(member(es[i], "v", where), where + "/v"),
                       parse_axis_at(member(es[i], "axis", where), where + "/axis")};
      if (d.region) {
        switch (d.region->classify(e)) {
          case EdgeKind::Outside: throw RuleError("edge_outside_region", "constraint edge lies outside the region", where);
          case EdgeKind::Boundary: throw RuleError("edge_on_boundary", "constraint edge lies on the region contour", where);
          case EdgeKind::Interior: break;
        }
      }
      edges.insert(e);
    }
  }
  d.edges.assign(edges.begin(), edges.end());

  for (const char* key : {"title", "author"}) {
    if (!j.contains(key)) continue;
    std::string s = as_string(j.at(key), std::string("/") + key);
    (std::string_view(key) == "title" ? d.title : d.author) = std::move(s);
  }
  return d;
}

json document_to_json(const PuzzleDocument& d) {
  json j = json::object();
  switch (d.kind) {
    case RegionKind::Hexagon: j["region"] = {{"type", "hexagon"}, {"n", d.n}}; break;
    case RegionKind::Boundary: {
      json steps = json::array();
      for (const SignedAxis& s : d.steps) steps.push_back(to_string(s));
      j["region"] = {{"type", "boundary"}, {"start", {d.start.u, d.start.v}}, {"steps", steps}};
      break;
    }
    case RegionKind::Infinite: j["region"] = {{"type", "infinite"}}; break;
  }
  j["edges"] = json::array();
  for (const GridEdge& e : d.edges) j["edges"].push_back(edge_to_json(e));
  if (d.title) j["title"] = *d.title;
  if (d.author) j["author"] = *d.author;
  return j;
}

json vertex_to_json(const GridVertex& p) {
  if (p.copy != 0) return json::array({p.u, p.v, p.copy});
  return json::array({p.u, p.v});
}

json edge_to_json(const GridEdge& e) {
  return {{"v", vertex_to_json(e.origin.raw())}, {"axis", std::string(1, axis_char(e.axis))}};
}

json triangle_to_json(const Triangle& t) {
  return {{"anchor", vertex_to_json(t.anchor.raw())}, {"chirality", t.chirality == Chirality::Left ? "left" : "right"}};
}

json calisson_to_json(const Calisson& c) {
  const Cube q = c.cube();
  return {{"cube", {q.x, q.y, q.z}}, {"normal", std::string(1, axis_char(c.normal))}};
}

json tiling_to_json(const Tiling& t) {
  json out = json::array();
  for (const Calisson& c : t) out.push_back(calisson_to_json(c));
  return out;
}

json violation_to_json(const Violation& v) {
  json j = {{"kind", std::string(violation_name(v.kind))}};
  if (const auto* t = std::get_if<Triangle>(&v.location)) {
    j["triangle"] = triangle_to_json(*t);
  } else {
    j["edge"] = edge_to_json(std::get<GridEdge>(v.location));
  }
  return j;
}

json heights_to_json(const HeightField& h) {
  json out = json::array();
  for (const auto& [p, value] : h) out.push_back({{"v", vertex_to_json(p)}, {"h", value}});
  return out;
}

json witness_to_json(const std::vector<WitnessArc>& w) {
  json out = json::array();
  for (const WitnessArc& a : w) {
    out.push_back({{"from", vertex_to_json(a.from)},
                   {"from_height", a.from_height},
                   {"to", vertex_to_json(a.to)},
                   {"to_height", a.to_height},
                   {"weight", a.weight},
                   {"tag", std::string(tag_name(a.tag))}});
  }
  return out;
}

json graph_to_json(const ProjectedGraph& g) {
  json vs = json::array();
  for (const GridVertex& p : g.vertices()) vs.push_back(vertex_to_json(p));
  json as = json::array();
  for (const Arc& a : g.arcs()) {
    as.push_back({{"from", a.from}, {"to", a.to}, {"weight", a.weight}, {"tag", std::string(tag_name(a.tag))}});
  }
  return {{"vertices", vs}, {"arcs", as}};
}

Tiling parse_tiling(const json& j, const std::string& where) {
  if (j.is_object()) return parse_tiling(member(j, "tiling", where), where + "/tiling");
  if (!j.is_array()) bad(where, "expected an array of calissons");
  Tiling t;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "/" + std::to_string(i);
    const json& cube = member(j[i], "cube", at);
    if (!cube.is_array() || cube.size() != 3) bad(at + "/cube", "expected [x, y, z]");
    const long long x = as_int(cube[0], at + "/cube/0");
    const long long y = as_int(cube[1], at + "/cube/1");
    const long long z = as_int(cube[2], at + "/cube/2");
    t.push_back(Calisson::from_cube({x, y, z}, parse_axis_at(member(j[i], "normal", at), at + "/normal")));
  }
  // Duplicates are kept so that the checker can report them as overlaps.
  std::sort(t.begin(), t.end());
  return t;
}

std::string serialize(const json& j) { return j.dump(2) + "\n"; }

}  // namespace calissons
