#pragma once

#include <span>
#include <vector>

#include "calissons/grid.hpp"

namespace calissons {

/// Length of a shortest ascending path from a to b in the full grid.
long long ascending_distance(GridVertex a, GridVertex b);

struct ReducedArc {
  int from = 0;
  int to = 0;
  long long weight = 0;
};

/// Complete digraph on the critical vertices (X endpoints and saliency
/// diagonals). Arc weight is the least of the ascending distance, -1 for the
/// reverse of an X edge and 0 for a saliency pair.
struct ReducedGraph {
  std::vector<GridVertex> vertices;  // sorted
  std::vector<ReducedArc> arcs;      // by (from, to)

  long long weight(int from, int to) const;
};

ReducedGraph build_reduced_graph(std::span<const GridEdge> X);

struct InfiniteVerdict {
  bool solvable = true;
  std::vector<GridVertex> cycle;  // closed walk; the first vertex is not repeated
  long long total_weight = 0;
};

InfiniteVerdict decide_infinite(std::span<const GridEdge> X);

}  // namespace calissons
