#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "calissons/grid.hpp"
#include "calissons/region.hpp"
#include "calissons/solver_finite.hpp"
#include "calissons/tiling.hpp"

namespace calissons {

using json = nlohmann::json;

/// Input that is not well formed (bad JSON, wrong types, unknown names).
/// location is a JSON pointer into the offending document, or a byte offset
/// for syntax errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string code, const std::string& message, std::string location)
      : std::runtime_error(message), code_(std::move(code)), location_(std::move(location)) {}
  const std::string& code() const { return code_; }
  const std::string& location() const { return location_; }

 private:
  std::string code_;
  std::string location_;
};

/// Well-formed input that breaks a puzzle rule (bad contour, X edge on the
/// contour or outside the region, tiling for an infinite document, ...).
class RuleError : public std::runtime_error {
 public:
  RuleError(std::string code, const std::string& message, std::string location)
      : std::runtime_error(message), code_(std::move(code)), location_(std::move(location)) {}
  const std::string& code() const { return code_; }
  const std::string& location() const { return location_; }

 private:
  std::string code_;
  std::string location_;
};

enum class RegionKind { Hexagon, Boundary, Infinite };

struct PuzzleDocument {
  RegionKind kind = RegionKind::Hexagon;
  int n = 0;                        // hexagon size
  GridVertex start;                 // boundary start
  std::vector<SignedAxis> steps;    // boundary steps
  std::optional<Region> region;     // empty for infinite documents
  std::vector<GridEdge> edges;      // normalized, sorted, unique
  std::optional<std::string> title;
  std::optional<std::string> author;

  bool infinite() const { return kind == RegionKind::Infinite; }
};

json parse_json_text(std::string_view text);

PuzzleDocument parse_document(const json& j);
json document_to_json(const PuzzleDocument& d);

json vertex_to_json(const GridVertex& p);
json edge_to_json(const GridEdge& e);
json triangle_to_json(const Triangle& t);
json calisson_to_json(const Calisson& c);
json tiling_to_json(const Tiling& t);
json violation_to_json(const Violation& v);
json heights_to_json(const HeightField& h);
json witness_to_json(const std::vector<WitnessArc>& w);
json graph_to_json(const ProjectedGraph& g);

/// Accepts a bare array of calissons or an object with a "tiling" member
/// (such as the output of a solve).
Tiling parse_tiling(const json& j, const std::string& where = "");

/// Rendering used for every file and response body.
std::string serialize(const json& j);

}  // namespace calissons
