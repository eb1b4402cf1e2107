#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "calissons/grid.hpp"
#include "calissons/region.hpp"

namespace calissons {

/// Componentwise order on cubes: the transitive closure of the ascending DAG.
bool cube_leq(const Cube& a, const Cube& b);

/// Cube pairs around one constrained edge that a valid cut may not separate:
/// {F_k, B_{k+1}} for non-overlap and {L_k, R_k} for saliency, k in Z. The
/// family is periodic along (1,1,1) and only its base cubes are stored.
struct UnbreakableFamily {
  GridEdge source_edge;
  Cube left0;
  Cube right0;
  Cube front0;
  Cube back0;

  static constexpr Cube period{1, 1, 1};

  Cube left(long long k) const { return shift(left0, k); }
  Cube right(long long k) const { return shift(right0, k); }
  Cube front(long long k) const { return shift(front0, k); }
  Cube back(long long k) const { return shift(back0, k); }

  /// True when {a, b} is one of the unbreakable pairs of this family.
  bool binds(const Cube& a, const Cube& b) const;

 private:
  static Cube shift(const Cube& c, long long k) { return {c.x + k, c.y + k, c.z + k}; }
};

UnbreakableFamily unbreakable_family(const GridEdge& e);

/// Rejected constraint edge (outside the region or on its contour).
class ConstraintError : public std::invalid_argument {
 public:
  ConstraintError(const std::string& what, GridEdge edge) : std::invalid_argument(what), edge_(edge) {}
  const GridEdge& edge() const { return edge_; }

 private:
  GridEdge edge_;
};

enum class ArcTag : std::uint8_t { Ascending, BoundaryReverse, XReverse, Saliency };
std::string_view tag_name(ArcTag t);

struct Arc {
  int from = 0;
  int to = 0;
  int weight = 0;
  ArcTag tag = ArcTag::Ascending;
  auto operator<=>(const Arc&) const = default;
};

/// Weighted projection of the cube graph: +1 for ascending arcs, -1 for the
/// descending halves of non-overlap pairs (contour and X), 0 both ways for
/// saliency pairs. Lifting an arc p -> q of weight w gives the cube arcs
/// (p, h) -> (q, h + w).
class ProjectedGraph {
 public:
  ProjectedGraph(std::vector<GridVertex> vertices, std::vector<Arc> arcs);

  const std::vector<GridVertex>& vertices() const { return vertices_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::size_t size() const { return vertices_.size(); }
  /// -1 when absent.
  int index_of(const GridVertex& p) const;
  const GridVertex& vertex(int i) const { return vertices_[static_cast<std::size_t>(i)]; }

  /// Indices into arcs() leaving / entering vertex i.
  std::span<const int> out_arcs(int i) const;
  std::span<const int> in_arcs(int i) const;

  std::size_t count(ArcTag tag) const;

 private:
  std::vector<GridVertex> vertices_;
  std::unordered_map<GridVertex, int, VertexHash> index_;
  std::vector<Arc> arcs_;
  std::vector<int> out_offsets_, out_list_;
  std::vector<int> in_offsets_, in_list_;
};

/// Throws ConstraintError for X edges that are not interior to the region.
ProjectedGraph build_projected_graph(const Region& region, std::span<const GridEdge> constraints);

/// Endpoints of the saliency arcs of an interior X edge p -> p + d_a: the far
/// corners p - d_b and p - d_c of the two incident triangles.
std::array<GridVertex, 2> saliency_diagonal(const GridEdge& e);

}  // namespace calissons
