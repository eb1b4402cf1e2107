#pragma once

#include <limits>
#include <span>
#include <vector>

namespace calissons {

struct WeightedArc {
  int from = 0;
  int to = 0;
  long long weight = 0;
};

inline constexpr long long kUnreached = std::numeric_limits<long long>::max();

struct ShortestPaths {
  std::vector<long long> dist;  // kUnreached where no path exists
  std::vector<int> pred;        // arc index, -1 at sources and unreached vertices
  std::vector<int> cycle;       // arc indices of a negative cycle, in order; empty if none

  bool has_negative_cycle() const { return !cycle.empty(); }
};

/// Single- or multi-source shortest distances with negative weights.
/// Queue-based relaxation; a vertex whose current shortest walk uses n arcs
/// proves a negative cycle, which is then extracted from the predecessor
/// graph. Sources are (vertex, initial distance) pairs.
ShortestPaths bellman_ford(int n, std::span<const WeightedArc> arcs,
                           std::span<const std::pair<int, long long>> sources);

/// Sum of weights along a list of arc indices.
long long path_weight(std::span<const WeightedArc> arcs, std::span<const int> path);

}  // namespace calissons
