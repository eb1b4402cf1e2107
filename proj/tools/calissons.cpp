#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "calissons/generator.hpp"
#include "calissons/http.hpp"
#include "calissons/io.hpp"
#include "calissons/service.hpp"

using namespace calissons;

namespace {

struct InputError {
  std::string code;
  std::string message;
  std::string location;
};

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"io_error", "cannot read '" + path + "'", path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_json_text(text);
  } catch (const ParseError& e) {
    throw InputError{e.code(), e.what(), path + ": " + e.location()};
  }
}

int emit(const Response& r, const std::string& out) {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (r.exit_code == 2) {
    os = &std::cerr;
  } else if (!out.empty()) {
    file.open(out, std::ios::binary);
    if (!file) {
      std::cerr << serialize({{"error", {{"code", "io_error"}, {"message", "cannot write '" + out + "'"}, {"location", out}}}});
      return 2;
    }
    os = &file;
  }
  *os << r.body;
  return r.exit_code;
}

json generated_document(std::uint64_t seed, int max_triangles, int hexagon, int x_count, bool infinite) {
  std::mt19937_64 rng(seed);
  PuzzleDocument d;
  if (infinite) {
    d.kind = RegionKind::Infinite;
    d.edges = random_disc_edges(rng, 8, static_cast<std::size_t>(std::max(x_count, 1)));
  } else if (hexagon > 0) {
    d.kind = RegionKind::Hexagon;
    d.n = hexagon;
    d.region = Region::hexagon(hexagon);
    d.edges = planted_constraints(rng, *d.region, static_cast<std::size_t>(x_count < 0 ? hexagon : x_count));
  } else {
    InstanceOptions opt;
    opt.max_triangles = max_triangles;
    Instance inst = random_instance(rng, opt);
    d.kind = RegionKind::Boundary;
    d.start = inst.region.boundary().front().from.raw();
    d.steps = inst.region.boundary_steps();
    d.edges = std::move(inst.X);
  }
  d.title = "generated, seed " + std::to_string(seed);
  return document_to_json(d);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Calissons puzzle engine"};
  app.require_subcommand(1);
  std::string doc_path, tiling_path, out, method = "advancing", format = "svg", host = "127.0.0.1";
  bool highest = false, lowest = false, overlay = false, list = false, infinite = false;
  std::size_t limit = 0;
  int port = 8080, max_triangles = 40, hexagon = 0, x_count = -1;
  std::uint64_t seed = 1;

  auto* solve = app.add_subcommand("solve", "Solve a puzzle and print a tiling or an unsolvability witness");
  solve->add_option("document", doc_path, "Puzzle document (- for stdin)")->required();
  auto* hi = solve->add_flag("--highest", highest, "Return the highest solution");
  solve->add_flag("--lowest", lowest, "Return the lowest solution (default)")->excludes(hi);
  solve->add_option("--method", method, "advancing or bellman-ford")->check(CLI::IsMember({"advancing", "bellman-ford"}));
  solve->add_flag("--overlay", overlay, "Include the projected constraint graph");
  solve->add_option("--out", out, "Output file");

  auto* decide = app.add_subcommand("decide", "Decide solvability (infinite grid or finite region)");
  decide->add_option("document", doc_path)->required();
  decide->add_option("--out", out);

  auto* chk = app.add_subcommand("check", "Check a tiling against a puzzle");
  chk->add_option("document", doc_path)->required();
  chk->add_option("tiling", tiling_path)->required();
  chk->add_option("--out", out);

  auto* en = app.add_subcommand("enumerate", "Count (and optionally list) all solutions");
  en->add_option("document", doc_path)->required();
  auto* limit_opt = en->add_option("--limit", limit, "Stop after this many solutions");
  en->add_flag("--list", list, "Print the solutions");
  en->add_option("--out", out);

  auto* ex = app.add_subcommand("extremes", "Minimum and maximum tilings of the region");
  ex->add_option("document", doc_path)->required();
  ex->add_option("--out", out);

  auto* sat = app.add_subcommand("encode-sat", "DIMACS CNF encoding of the puzzle");
  sat->add_option("document", doc_path)->required();
  sat->add_option("--out", out);

  auto* rd = app.add_subcommand("render", "Draw a puzzle and optionally a tiling");
  rd->add_option("document", doc_path)->required();
  rd->add_option("tiling", tiling_path);
  rd->add_option("--format", format)->check(CLI::IsMember({"svg", "ascii"}));
  rd->add_option("--out", out);

  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--port", port);
  serve->add_option("--host", host);

  auto* gen = app.add_subcommand("generate", "Print a random puzzle document");
  gen->add_option("--seed", seed);
  gen->add_option("--max-triangles", max_triangles)->check(CLI::Range(2, 400));
  gen->add_option("--hexagon", hexagon, "Hexagon size; constraints are salient edges of a hidden tiling")->check(CLI::Range(1, 400));
  gen->add_option("--x-count", x_count, "Number of constraint edges");
  gen->add_flag("--infinite", infinite, "Random edges in a disc of radius 8 of the infinite grid");
  gen->add_option("--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (serve->parsed()) {
      HttpService service;
      const int bound = service.bind(host, port);
      if (bound < 0) {
        std::cerr << "cannot bind " << host << ":" << port << "\n";
        return 2;
      }
      std::cerr << "listening on http://" << host << ":" << bound << "\n";
      return service.run() ? 0 : 2;
    }
    if (gen->parsed()) {
      Response r;
      r.body = serialize(generated_document(seed, max_triangles, hexagon, x_count, infinite));
      return emit(r, out);
    }

    json request = {{"document", read_json(doc_path)}};
    std::string endpoint;
    if (solve->parsed()) {
      endpoint = "solve";
      request["method"] = method;
      request["extremal"] = highest ? "highest" : "lowest";
      if (overlay) request["overlay"] = true;
    } else if (decide->parsed()) {
      endpoint = "decide";
    } else if (chk->parsed()) {
      endpoint = "check";
      request["tiling"] = read_json(tiling_path);
    } else if (en->parsed()) {
      endpoint = "enumerate";
      if (limit_opt->count() > 0) request["limit"] = limit;
      if (list) request["list"] = true;
    } else if (ex->parsed()) {
      endpoint = "extremes";
    } else if (sat->parsed()) {
      endpoint = "encode-sat";
    } else {
      endpoint = "render";
      request["format"] = format;
      if (!tiling_path.empty()) request["tiling"] = read_json(tiling_path);
    }
    return emit(handle_request(endpoint, request), out);
  } catch (const InputError& e) {
    std::cerr << serialize({{"error", {{"code", e.code}, {"message", e.message}, {"location", e.location}}}});
    return 2;
  }
}
