#include "calissons/service.hpp"

#include <optional>

#include "calissons/baselines.hpp"
#include "calissons/constraints.hpp"
#include "calissons/render.hpp"
#include "calissons/solver_finite.hpp"
#include "calissons/solver_infinite.hpp"

namespace calissons {

namespace {

Response json_response(int exit_code, const json& body) {
  Response r;
  r.exit_code = exit_code;
  r.body = serialize(body);
  return r;
}

Response text_response(std::string content_type, std::string body) {
  Response r;
  r.content_type = std::move(content_type);
  r.body = std::move(body);
  return r;
}

Response error_response(int http_status, const std::string& code, const std::string& message,
                        const std::string& location) {
  Response r = json_response(2, {{"error", {{"code", code}, {"message", message}, {"location", location}}}});
  r.http_status = http_status;
  return r;
}

std::string option_string(const json& req, const char* key, const std::string& fallback) {
  if (!req.contains(key)) return fallback;
  if (!req.at(key).is_string()) throw ParseError("malformed_request", std::string("option '") + key + "' must be a string", std::string("/") + key);
  return req.at(key).get<std::string>();
}

bool option_bool(const json& req, const char* key) {
  if (!req.contains(key)) return false;
  if (!req.at(key).is_boolean()) throw ParseError("malformed_request", std::string("option '") + key + "' must be a boolean", std::string("/") + key);
  return req.at(key).get<bool>();
}

struct Request {
  json options;
  PuzzleDocument doc;
};

Request read_request(const json& req) {
  if (!req.is_object()) throw ParseError("malformed_request", "request must be a JSON object", "/");
  // Locations in errors are relative to the puzzle document either way.
  if (req.contains("document")) return {req, parse_document(req.at("document"))};
  return {json::object(), parse_document(req)};
}

Tiling request_tiling(const json& options, bool required) {
  if (!options.contains("tiling")) {
    if (required) throw ParseError("malformed_request", "missing member 'tiling'", "/");
    return {};
  }
  return parse_tiling(options.at("tiling"), "/tiling");
}

const Region& finite_region(const PuzzleDocument& d, std::string_view what) {
  if (!d.region) throw RuleError("infinite_region", std::string(what) + " needs a finite region", "/region");
  return *d.region;
}

json unsolvable_json(const Unsolvable& u) {
  json j = {{"verdict", "unsolvable"}, {"reason", std::string(unsolvable_name(u.reason))}};
  if (u.untilable) {
    j["untilable"] = {{"reason", std::string(untilable_name(u.untilable->reason))},
                      {"closure", u.untilable->closure},
                      {"vertex", vertex_to_json(u.untilable->vertex)}};
  }
  j["witness"] = witness_to_json(u.witness);
  j["total_weight"] = u.total_weight();
  return j;
}

Response decide_infinite_response(const PuzzleDocument& d) {
  const InfiniteVerdict v = decide_infinite(d.edges);
  if (v.solvable) return json_response(0, {{"verdict", "solvable"}});
  json cycle = json::array();
  for (const GridVertex& p : v.cycle) cycle.push_back(vertex_to_json(p));
  return json_response(1, {{"verdict", "unsolvable"}, {"reason", "absorbing_cycle"}, {"cycle", cycle},
                           {"total_weight", v.total_weight}});
}

Response solve(const Request& r) {
  if (r.doc.infinite()) return decide_infinite_response(r.doc);
  const Region& region = *r.doc.region;
  const std::string method = option_string(r.options, "method", "advancing");
  const std::string ext = option_string(r.options, "extremal", "lowest");
  if (ext != "lowest" && ext != "highest") throw ParseError("malformed_request", "extremal must be 'lowest' or 'highest'", "/extremal");
  const Extremal extremal = ext == "highest" ? Extremal::Highest : Extremal::Lowest;
  SolveOutcome out;
  if (method == "advancing") {
    out = solve_finite(region, r.doc.edges, extremal);
  } else if (method == "bellman-ford") {
    out = solve_finite_bf(region, r.doc.edges, extremal);
  } else {
    throw ParseError("malformed_request", "method must be 'advancing' or 'bellman-ford'", "/method");
  }
  json body;
  int code = 0;
  if (const auto* s = std::get_if<Solution>(&out)) {
    body = {{"verdict", "solvable"}, {"extremal", std::string(extremal_name(s->extremal))}, {"tiling", tiling_to_json(s->tiling)}};
  } else {
    body = unsolvable_json(std::get<Unsolvable>(out));
    code = 1;
  }
  body["method"] = method;
  if (option_bool(r.options, "overlay")) body["graph"] = graph_to_json(build_projected_graph(region, r.doc.edges));
  return json_response(code, body);
}

Response decide(const Request& r) {
  if (r.doc.infinite()) return decide_infinite_response(r.doc);
  const SolveOutcome out = solve_finite(*r.doc.region, r.doc.edges);
  if (std::holds_alternative<Solution>(out)) return json_response(0, {{"verdict", "solvable"}});
  return json_response(1, unsolvable_json(std::get<Unsolvable>(out)));
}

Response check_request(const Request& r) {
  const Region& region = finite_region(r.doc, "check");
  const Tiling t = request_tiling(r.options, true);
  const auto violations = check(region, r.doc.edges, t);
  json vs = json::array();
  for (const Violation& v : violations) vs.push_back(violation_to_json(v));
  return json_response(violations.empty() ? 0 : 1, {{"valid", violations.empty()}, {"violations", vs}});
}

Response extremes(const Request& r) {
  const Region& region = finite_region(r.doc, "extremes");
  const auto ex = thurston_extremes(region);
  if (const auto* u = std::get_if<Untilable>(&ex)) {
    return json_response(1, {{"verdict", "untilable"},
                             {"reason", std::string(untilable_name(u->reason))},
                             {"closure", u->closure},
                             {"vertex", vertex_to_json(u->vertex)}});
  }
  const auto& e = std::get<Extremes>(ex);
  return json_response(0, {{"verdict", "tilable"},
                           {"min", tiling_to_json(e.min)},
                           {"max", tiling_to_json(e.max)},
                           {"min_heights", heights_to_json(e.min_heights)},
                           {"max_heights", heights_to_json(e.max_heights)}});
}

Response render(const Request& r) {
  const std::string format = option_string(r.options, "format", "svg");
  std::optional<Tiling> t;
  if (r.options.contains("tiling")) t = request_tiling(r.options, true);
  if (format == "svg") return text_response("image/svg+xml", render_svg(r.doc, t));
  if (format == "ascii") return text_response("text/plain", render_ascii(r.doc, t));
  throw ParseError("malformed_request", "format must be 'svg' or 'ascii'", "/format");
}

Response enumerate_request(const Request& r) {
  const Region& region = finite_region(r.doc, "enumerate");
  EnumerateOptions opt;
  if (r.options.contains("limit")) {
    const json& l = r.options.at("limit");
    if (!l.is_number_integer() || l.get<long long>() < 0) throw ParseError("malformed_request", "limit must be a non-negative integer", "/limit");
    opt.limit = l.get<std::size_t>();
  }
  const Enumeration e = enumerate(region, r.doc.edges, opt);
  json body = {{"count", e.tilings.size()}, {"truncated", e.truncated}};
  if (option_bool(r.options, "list")) {
    json list = json::array();
    for (const Tiling& t : e.tilings) list.push_back(tiling_to_json(t));
    body["tilings"] = list;
  }
  return json_response(e.tilings.empty() ? 1 : 0, body);
}

Response encode_sat(const Request& r) {
  const Region& region = finite_region(r.doc, "encode-sat");
  return text_response("text/plain", to_dimacs(sat_encode(region, r.doc.edges)));
}

}  // namespace

Response handle_request(std::string_view endpoint, const json& request) {
  try {
    const Request r = read_request(request);
    if (endpoint == "solve") return solve(r);
    if (endpoint == "decide") return decide(r);
    if (endpoint == "check") return check_request(r);
    if (endpoint == "extremes") return extremes(r);
    if (endpoint == "render") return render(r);
    if (endpoint == "enumerate") return enumerate_request(r);
    if (endpoint == "encode-sat") return encode_sat(r);
    return error_response(404, "unknown_endpoint", "unknown endpoint '" + std::string(endpoint) + "'", "");
  } catch (const ParseError& e) {
    return error_response(400, e.code(), e.what(), e.location());
  } catch (const RuleError& e) {
    return error_response(422, e.code(), e.what(), e.location());
  } catch (const ConstraintError& e) {
    return error_response(422, "invalid_edge", e.what(), "/edges");
  } catch (const RegionError& e) {
    return error_response(422, "invalid_region", e.what(), "/region");
  } catch (const std::exception& e) {
    return error_response(500, "internal_error", e.what(), "");
  }
}

Response handle_request_text(std::string_view endpoint, std::string_view request_text) {
  try {
    return handle_request(endpoint, parse_json_text(request_text));
  } catch (const ParseError& e) {
    return error_response(400, e.code(), e.what(), e.location());
  }
}

}  // namespace calissons
