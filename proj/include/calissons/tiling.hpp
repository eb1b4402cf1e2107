#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <string_view>
#include <variant>
#include <vector>

#include "calissons/grid.hpp"
#include "calissons/region.hpp"

namespace calissons {

/// Sorted, duplicate-free calisson list.
using Tiling = std::vector<Calisson>;

/// Vertex (with copy) -> cube height. Heights follow cube coordinates: an
/// ascending step p -> p + d_a raises the height by one along a tiling edge.
using HeightField = std::map<GridVertex, long long>;

Tiling normalized(Tiling t);

class TilingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ViolationKind { Gap, Overlap, XOverlapped, SaliencySameColor, OffRegion };
std::string_view violation_name(ViolationKind k);
ViolationKind parse_violation_kind(std::string_view s);

struct Violation {
  ViolationKind kind = ViolationKind::Gap;
  std::variant<Triangle, GridEdge> location;
  auto operator<=>(const Violation&) const = default;
};

/// All rule violations of t as a tiling of region under constraints X,
/// sorted. Empty exactly when t is a solution.
std::vector<Violation> check(const Region& region, std::span<const GridEdge> X, const Tiling& t);

/// Same, ignoring the saliency rule.
std::vector<Violation> check_non_overlap(const Region& region, std::span<const GridEdge> X, const Tiling& t);

/// Heights obtained by walking the uncovered grid edges of a tiling from a
/// source vertex. Throws TilingError if t does not cover the region or the
/// walk is inconsistent.
HeightField heights_from_tiling(const Region& region, const Tiling& t, GridVertex source, long long source_height);

/// One ascending cube arc (p, h) -> (p + d_axis, h + 1) crossing a cut.
struct FrontierArc {
  GridVertex from;  // with copy
  long long height = 0;
  Axis axis = Axis::X;
  auto operator<=>(const FrontierArc&) const = default;
};

/// Projects the faces of a cut frontier. Throws TilingError unless the faces
/// partition the region.
Tiling tiling_from_cut(const Region& region, std::span<const FrontierArc> frontier);

/// Frontier of the cut {(p, h) : h >= H(p)} of a height field.
std::vector<FrontierArc> cut_frontier(const Region& region, const HeightField& h);

/// Calissons read off a distance field: in every triangle two edges must rise
/// by exactly one and the third (the covered one) must fall by two.
Tiling tiling_from_distances(const Region& region, const HeightField& h);

}  // namespace calissons
