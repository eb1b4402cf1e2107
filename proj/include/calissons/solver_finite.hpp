#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "calissons/constraints.hpp"
#include "calissons/region.hpp"
#include "calissons/tiling.hpp"

namespace calissons {

enum class Extremal { Lowest, Highest };
std::string_view extremal_name(Extremal e);

enum class UntilableReason { BoundaryClosure, Decimation };
std::string_view untilable_name(UntilableReason r);

struct Untilable {
  UntilableReason reason = UntilableReason::BoundaryClosure;
  long long closure = 0;      // height change around the contour
  GridVertex vertex;          // contour vertex whose height could not be kept
};

struct Extremes {
  Tiling min;
  Tiling max;
  HeightField min_heights;
  HeightField max_heights;
};

/// Order in which equal-priority vertices leave the queue. The extremes do
/// not depend on it; the parameter exists so tests can check that.
enum class TieOrder { Lexicographic, ReverseLexicographic };

/// Heights are absolute cube heights: the first contour vertex (u, v) gets
/// u + v. Returns Untilable if the contour does not close up in height, or if
/// the propagated heights undercut (resp. overshoot) the contour.
std::variant<Untilable, Extremes> thurston_extremes(const Region& region, TieOrder order = TieOrder::Lexicographic);

/// Cubes (p, h) over region vertices, h = u + v mod 3. Back holds the cubes
/// below the minimum tiling, Front those at or above the maximum one.
struct CubeSlab {
  const Region* region = nullptr;
  HeightField lo;  // Back = {h < lo(p)}
  HeightField hi;  // Front = {h >= hi(p)}

  bool in_back(const GridVertex& p, long long h) const { return h < lo.at(p); }
  bool in_front(const GridVertex& p, long long h) const { return h >= hi.at(p); }
  std::size_t interior_size() const;
};

/// Throws UntilableRegionError if the region has no tiling.
CubeSlab build_slab(const Region& region);

class UntilableRegionError : public std::runtime_error {
 public:
  explicit UntilableRegionError(Untilable u);
  const Untilable& info() const { return info_; }

 private:
  Untilable info_;
};

struct WitnessArc {
  GridVertex from;
  long long from_height = 0;
  GridVertex to;
  long long to_height = 0;
  int weight = 0;
  ArcTag tag = ArcTag::Ascending;
  auto operator<=>(const WitnessArc&) const = default;
};

enum class UnsolvableReason { UntilableRegion, FrontMeetsBack, AbsorbingCycle };
std::string_view unsolvable_name(UnsolvableReason r);

struct Unsolvable {
  UnsolvableReason reason = UnsolvableReason::FrontMeetsBack;
  std::optional<Untilable> untilable;
  // FrontMeetsBack: lifted arcs from a Front cube to a Back cube.
  // AbsorbingCycle: projected arcs of a closed walk, heights accumulated from 0.
  std::vector<WitnessArc> witness;

  long long total_weight() const;
};

struct Solution {
  Tiling tiling;
  Extremal extremal = Extremal::Lowest;
  HeightField heights;
};

using SolveOutcome = std::variant<Solution, Unsolvable>;

enum class Direction { FromFront, FromBack };

/// Connected component of Front (forward arcs) or of Back (reversed arcs) in
/// the lifted constraint graph. FromFront gives the highest solution,
/// FromBack the lowest.
SolveOutcome advancing_surface(const CubeSlab& slab, const ProjectedGraph& graph, Direction direction);

SolveOutcome solve_finite(const Region& region, std::span<const GridEdge> X, Extremal extremal = Extremal::Lowest);

/// Shortest distances on the projected graph: distances from the first
/// contour vertex give the highest solution, distances towards it the lowest.
SolveOutcome solve_finite_bf(const Region& region, std::span<const GridEdge> X, Extremal extremal = Extremal::Highest);

/// Reference height given to the first contour vertex by all solvers.
long long reference_height(const Region& region);

}  // namespace calissons
