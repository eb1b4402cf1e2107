#include <doctest.h>

#include <httplib.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>

#include "calissons/http.hpp"
#include "calissons/io.hpp"
#include "calissons/render.hpp"
#include "calissons/service.hpp"
#include "calissons/solver_finite.hpp"

using namespace calissons;

namespace {

const char* kHexagon2 = R"({"region": {"type": "hexagon", "n": 2}, "edges": []})";

json enclosed_triangle_doc(const char* region) {
  json edges = json::array();
  for (const GridEdge& e : Triangle{{0, 0}, Chirality::Right}.edges()) edges.push_back(edge_to_json(e));
  return {{"region", json::parse(region)}, {"edges", edges}};
}

json error_of(const Response& r) { return json::parse(r.body).at("error"); }

std::string run_cli(const std::string& args, int* status = nullptr) {
  const std::string cmd = std::string(CALISSONS_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int st = pclose(p);
  if (status) *status = WEXITSTATUS(st);
  return out;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "calissons_test_interface";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path, std::ios::binary) << text;
  return path;
}

}  // namespace

TEST_CASE("input errors carry a code and a location") {
  const Response syntax = handle_request_text("solve", "{\"region\": ");
  CHECK(syntax.exit_code == 2);
  CHECK(syntax.http_status == 400);
  CHECK(error_of(syntax).at("code") == "malformed_json");

  const Response wrong_type = handle_request_text("solve", R"({"region": {"type": "hexagon", "n": "two"}})");
  CHECK(wrong_type.http_status == 400);
  CHECK(error_of(wrong_type).at("location") == "/region/n");

  const Response on_contour = handle_request_text(
      "solve", R"({"region": {"type": "hexagon", "n": 2}, "edges": [{"v": [0, 0], "axis": "x"}, {"v": [2, 1], "axis": "y"}]})");
  CHECK(on_contour.exit_code == 2);
  CHECK(on_contour.http_status == 422);
  CHECK(error_of(on_contour).at("code") == "edge_on_boundary");
  CHECK(error_of(on_contour).at("location") == "/edges/1");

  const Response outside = handle_request_text(
      "solve", R"({"region": {"type": "hexagon", "n": 1}, "edges": [{"v": [7, 7], "axis": "z"}]})");
  CHECK(error_of(outside).at("code") == "edge_outside_region");

  const Response open_contour = handle_request_text(
      "extremes", R"({"region": {"type": "boundary", "start": [0, 0], "steps": ["+x", "+y"]}})");
  CHECK(open_contour.http_status == 422);
  CHECK(error_of(open_contour).at("code") == "invalid_region");

  CHECK(handle_request_text("frobnicate", kHexagon2).http_status == 404);
  CHECK(handle_request_text("extremes", R"({"region": {"type": "infinite"}})").http_status == 422);
}

TEST_CASE("documents round trip") {
  const json j = json::parse(
      R"({"region": {"type": "boundary", "start": [1, 1], "steps": ["-y", "+z", "-x", "+y", "-z", "+x"]},
          "edges": [{"v": [0, 0], "axis": "z"}], "title": "unit", "author": "someone"})");
  const PuzzleDocument d = parse_document(j);
  CHECK(d.region->triangles() == Region::hexagon(1).triangles());
  const json back = document_to_json(d);
  CHECK(back == document_to_json(parse_document(back)));
  CHECK(back.at("title") == "unit");

  const PuzzleDocument dup = parse_document(json::parse(
      R"({"region": {"type": "hexagon", "n": 2}, "edges": [{"v": [0, 0], "axis": "x"}, {"v": [0, 0], "axis": "x"}]})"));
  CHECK(dup.edges.size() == 1);
}

TEST_CASE("solve, check and decide") {
  const Response s = handle_request_text("solve", kHexagon2);
  CHECK(s.exit_code == 0);
  const json body = json::parse(s.body);
  CHECK(body.at("verdict") == "solvable");
  const Tiling t = parse_tiling(body);
  CHECK(check(Region::hexagon(2), {}, t).empty());

  const json req = {{"document", json::parse(kHexagon2)}, {"tiling", body.at("tiling")}};
  const Response ok = handle_request("check", req);
  CHECK(ok.exit_code == 0);
  CHECK(json::parse(ok.body).at("valid") == true);

  // Put an X edge under one of the calissons.
  json doc = json::parse(kHexagon2);
  GridEdge hidden{};
  for (const Calisson& c : t) {
    if (Region::hexagon(2).classify(c.covered_edge()) == EdgeKind::Interior) {
      hidden = c.covered_edge();
      break;
    }
  }
  doc["edges"].push_back(edge_to_json(hidden));
  const Response bad = handle_request("check", {{"document", doc}, {"tiling", body.at("tiling")}});
  CHECK(bad.exit_code == 1);
  const json v = json::parse(bad.body).at("violations");
  REQUIRE(v.size() == 1);
  CHECK(v[0].at("kind") == "x_overlapped");

  const Response unsolvable = handle_request("solve", enclosed_triangle_doc(R"({"type": "hexagon", "n": 2})"));
  CHECK(unsolvable.exit_code == 1);
  CHECK(json::parse(unsolvable.body).at("verdict") == "unsolvable");
  CHECK(json::parse(unsolvable.body).at("total_weight").get<long long>() < 0);

  const Response inf = handle_request("decide", enclosed_triangle_doc(R"({"type": "infinite"})"));
  CHECK(inf.exit_code == 1);
  CHECK_FALSE(json::parse(inf.body).at("cycle").empty());
  CHECK(handle_request_text("decide", R"({"region": {"type": "infinite"}})").exit_code == 0);
}

TEST_CASE("extremes are ordered") {
  const Response r = handle_request_text("extremes", R"({"region": {"type": "hexagon", "n": 3}})");
  REQUIRE(r.exit_code == 0);
  const json b = json::parse(r.body);
  CHECK(b.at("min") != b.at("max"));
  std::map<json, long long> lo;
  for (const json& e : b.at("min_heights")) lo[e.at("v")] = e.at("h").get<long long>();
  REQUIRE(lo.size() == b.at("max_heights").size());
  for (const json& e : b.at("max_heights")) CHECK(lo.at(e.at("v")) <= e.at("h").get<long long>());
}

TEST_CASE("enumerate and encode-sat") {
  const json b = json::parse(handle_request_text("enumerate", kHexagon2).body);
  CHECK(b.at("count") == 20);
  CHECK(b.at("truncated") == false);
  const json l = json::parse(handle_request("enumerate", {{"document", json::parse(kHexagon2)}, {"limit", 3}, {"list", true}}).body);
  CHECK(l.at("count") == 3);
  CHECK(l.at("tilings").size() == 3);
  const Response sat = handle_request_text("encode-sat", R"({"region": {"type": "hexagon", "n": 1}})");
  CHECK(sat.content_type == "text/plain");
  CHECK(sat.body.find("p cnf 6 12") != std::string::npos);
}

TEST_CASE("rendering") {
  const PuzzleDocument d = parse_document(json::parse(R"({"region": {"type": "hexagon", "n": 1}})"));
  const auto ext = std::get<Extremes>(thurston_extremes(*d.region));
  const std::string svg = render_svg(d, ext.max);
  CHECK(svg == render_svg(d, ext.max));
  std::size_t polygons = 0;
  for (auto pos = svg.find("<polygon"); pos != std::string::npos; pos = svg.find("<polygon", pos + 1)) ++polygons;
  CHECK(polygons == 3);
  for (const char* c : {"#3a66c4", "#d2453a", "#f1c232"}) CHECK(svg.find(c) != std::string::npos);

  const std::string ascii = render_ascii(d, ext.min);
  CHECK(ascii == render_ascii(d, ext.min));
  for (char c : {'b', 'r', 'y'}) CHECK(ascii.find(c) != std::string::npos);

  const Tiling foreign{Calisson::covering({{9, 9}, Axis::X})};
  CHECK_THROWS_AS(render_svg(d, foreign), RuleError);
}

TEST_CASE("HTTP and command line give identical bytes") {
  HttpService service;
  const int port = service.bind("127.0.0.1", 0);
  REQUIRE(port > 0);
  std::thread server([&] { service.run(); });
  httplib::Client client("127.0.0.1", port);
  client.set_connection_timeout(5);

  const auto doc = write_temp("hex2.json", kHexagon2);
  auto res = client.Post("/solve", kHexagon2, "application/json");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(res->body == handle_request_text("solve", kHexagon2).body);
  int status = -1;
  CHECK(res->body == run_cli("solve " + doc.string(), &status));
  CHECK(status == 0);

  const json tri = enclosed_triangle_doc(R"({"type": "infinite"})");
  const auto tri_path = write_temp("tri.json", tri.dump());
  res = client.Post("/decide", tri.dump(), "application/json");
  REQUIRE(res);
  CHECK(res->body == run_cli("decide " + tri_path.string(), &status));
  CHECK(status == 1);

  res = client.Post("/render", json{{"document", json::parse(kHexagon2)}, {"format", "ascii"}}.dump(), "application/json");
  REQUIRE(res);
  CHECK(res->body == run_cli("render --format ascii " + doc.string()));

  res = client.Post("/solve", "{oops", "application/json");
  REQUIRE(res);
  CHECK(res->status == 400);
  CHECK(client.Get("/health")->status == 200);

  service.stop();
  server.join();
}
