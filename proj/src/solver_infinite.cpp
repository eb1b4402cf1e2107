#include "calissons/solver_infinite.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "calissons/constraints.hpp"
#include "calissons/shortest_paths.hpp"

namespace calissons {

long long ascending_distance(GridVertex a, GridVertex b) {
  const long long du = static_cast<long long>(b.u) - a.u;
  const long long dv = static_cast<long long>(b.v) - a.v;
  return du + dv - 3 * std::min({du, dv, 0LL});
}

long long ReducedGraph::weight(int from, int to) const {
  const auto n = static_cast<std::size_t>(vertices.size());
  // Arcs are laid out row by row, skipping the diagonal.
  const auto f = static_cast<std::size_t>(from);
  const auto t = static_cast<std::size_t>(to);
  return arcs[f * (n - 1) + (t < f ? t : t - 1)].weight;
}

ReducedGraph build_reduced_graph(std::span<const GridEdge> X) {
  std::set<GridVertex> critical;
  std::map<std::pair<GridVertex, GridVertex>, long long> special;
  auto add_special = [&](GridVertex a, GridVertex b, long long w) {
    auto [it, fresh] = special.emplace(std::make_pair(a, b), w);
    if (!fresh) it->second = std::min(it->second, w);
  };
  for (const GridEdge& raw : X) {
    const GridEdge e{raw.origin.raw(), raw.axis};
    const auto diag = saliency_diagonal(e);
    critical.insert({e.origin, e.end(), diag[0], diag[1]});
    add_special(e.end(), e.origin, -1);
    add_special(diag[0], diag[1], 0);
    add_special(diag[1], diag[0], 0);
  }

  ReducedGraph g;
  g.vertices.assign(critical.begin(), critical.end());
  const int n = static_cast<int>(g.vertices.size());
  g.arcs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(n - 1, 0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const GridVertex a = g.vertices[static_cast<std::size_t>(i)];
      const GridVertex b = g.vertices[static_cast<std::size_t>(j)];
      long long w = ascending_distance(a, b);
      const auto it = special.find({a, b});
      if (it != special.end()) w = std::min(w, it->second);
      g.arcs.push_back({i, j, w});
    }
  }
  return g;
}

InfiniteVerdict decide_infinite(std::span<const GridEdge> X) {
  InfiniteVerdict out;
  if (X.empty()) return out;
  const ReducedGraph g = build_reduced_graph(X);
  std::vector<WeightedArc> arcs;
  arcs.reserve(g.arcs.size());
  for (const ReducedArc& a : g.arcs) arcs.push_back({a.from, a.to, a.weight});
  const std::pair<int, long long> src{0, 0};
  const ShortestPaths sp = bellman_ford(static_cast<int>(g.vertices.size()), arcs, std::span(&src, 1));
  if (!sp.has_negative_cycle()) return out;
  out.solvable = false;
  for (int a : sp.cycle) out.cycle.push_back(g.vertices[static_cast<std::size_t>(arcs[static_cast<std::size_t>(a)].from)]);
  out.total_weight = path_weight(arcs, sp.cycle);
  return out;
}

}  // namespace calissons
