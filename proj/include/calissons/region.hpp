#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "calissons/grid.hpp"

namespace calissons {

/// Raised for contours or triangle sets that do not describe a finite,
/// connected, simply connected region.
class RegionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BoundaryStep {
  GridVertex from;  // carries the copy id of the visited vertex
  SignedAxis step;
  auto operator<=>(const BoundaryStep&) const = default;
};

enum class EdgeKind { Outside, Boundary, Interior };

/// A finite simply connected set of triangles together with its
/// counterclockwise contour. The contour may touch itself: vertices it visits
/// more than once are split into copies (one per fan of incident triangles),
/// and edges it walks in both directions (slits) separate their two sides.
///
/// Immutable after construction.
class Region {
 public:
  static Region hexagon(int n);
  static Region from_boundary(GridVertex start, std::span<const SignedAxis> steps);
  /// Traces the contour of a triangle set, optionally cut along slit edges.
  static Region from_triangles(std::span<const Triangle> triangles,
                               std::span<const GridEdge> slits = {});

  const std::vector<Triangle>& triangles() const { return triangles_; }
  bool contains(const Triangle& t) const { return lookup_.count(t) != 0; }
  const std::vector<BoundaryStep>& boundary() const { return boundary_; }
  std::vector<SignedAxis> boundary_steps() const;
  const std::vector<GridEdge>& slits() const { return slits_; }
  bool is_slit(const GridEdge& e) const;

  EdgeKind classify(const GridEdge& e) const;
  /// Calisson fits entirely inside and does not straddle a slit.
  bool admits(const Calisson& c) const;

  /// Copy of raw vertex p as seen from triangle t (t must contain p).
  GridVertex vertex_copy(GridVertex p, const Triangle& t) const;
  /// All vertices, copies expanded, sorted.
  std::vector<GridVertex> vertices() const;
  /// Copy ids in use for a raw vertex: {0} unless duplicated.
  std::vector<GridVertex> copies_of(GridVertex p) const;
  bool is_duplicated(GridVertex p) const { return fans_.count(p.raw()) != 0; }

  std::size_t left_count() const;
  std::size_t right_count() const;

  bool operator==(const Region& o) const {
    return triangles_ == o.triangles_ && slits_ == o.slits_ && boundary_ == o.boundary_;
  }

 private:
  Region() = default;

  std::vector<Triangle> triangles_;
  std::unordered_set<Triangle, TriangleHash> lookup_;
  std::vector<GridEdge> slits_;
  std::vector<BoundaryStep> boundary_;
  // Raw vertex -> fans (bitmask over the 6 slots), ordered by first visit
  // along the contour. Only vertices with two or more fans are listed.
  std::map<GridVertex, std::vector<unsigned>> fans_;
};

}  // namespace calissons
