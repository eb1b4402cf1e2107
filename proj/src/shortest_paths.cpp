#include "calissons/shortest_paths.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace calissons {

namespace {

std::vector<std::vector<int>> out_lists(int n, std::span<const WeightedArc> arcs) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < arcs.size(); ++k) out[static_cast<std::size_t>(arcs[k].from)].push_back(static_cast<int>(k));
  return out;
}

// A cycle of the predecessor graph reachable backwards from v, or empty.
std::vector<int> pred_cycle_from(int v, std::span<const WeightedArc> arcs, const std::vector<int>& pred) {
  std::vector<int> seen(pred.size(), -1);
  int step = 0;
  int x = v;
  while (x >= 0 && seen[static_cast<std::size_t>(x)] < 0) {
    seen[static_cast<std::size_t>(x)] = step++;
    const int a = pred[static_cast<std::size_t>(x)];
    x = a < 0 ? -1 : arcs[static_cast<std::size_t>(a)].from;
  }
  if (x < 0) return {};
  std::vector<int> cycle;
  int y = x;
  do {
    const int a = pred[static_cast<std::size_t>(y)];
    cycle.push_back(a);
    y = arcs[static_cast<std::size_t>(a)].from;
  } while (y != x);
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

// Classic n-round relaxation from a virtual source joined to every vertex;
// used only if the predecessor graph does not exhibit the cycle directly.
std::vector<int> classic_cycle(int n, std::span<const WeightedArc> arcs) {
  std::vector<long long> d(static_cast<std::size_t>(n), 0);
  std::vector<int> pred(static_cast<std::size_t>(n), -1);
  int last = -1;
  for (int round = 0; round <= n; ++round) {
    last = -1;
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      const WeightedArc& a = arcs[k];
      if (d[static_cast<std::size_t>(a.from)] + a.weight < d[static_cast<std::size_t>(a.to)]) {
        d[static_cast<std::size_t>(a.to)] = d[static_cast<std::size_t>(a.from)] + a.weight;
        pred[static_cast<std::size_t>(a.to)] = static_cast<int>(k);
        last = a.to;
      }
    }
    if (last < 0) return {};
  }
  int x = last;
  for (int i = 0; i < n; ++i) x = arcs[static_cast<std::size_t>(pred[static_cast<std::size_t>(x)])].from;
  return pred_cycle_from(x, arcs, pred);
}

}  // namespace

long long path_weight(std::span<const WeightedArc> arcs, std::span<const int> path) {
  long long w = 0;
  for (int a : path) w += arcs[static_cast<std::size_t>(a)].weight;
  return w;
}

ShortestPaths bellman_ford(int n, std::span<const WeightedArc> arcs,
                           std::span<const std::pair<int, long long>> sources) {
  ShortestPaths r;
  const auto un = static_cast<std::size_t>(n);
  r.dist.assign(un, kUnreached);
  r.pred.assign(un, -1);
  const auto out = out_lists(n, arcs);

  std::vector<int> len(un, 0);
  std::vector<char> queued(un, 0);
  std::deque<int> queue;
  for (const auto& [v, d0] : sources) {
    if (v < 0 || v >= n) throw std::out_of_range("source vertex out of range");
    if (d0 < r.dist[static_cast<std::size_t>(v)]) r.dist[static_cast<std::size_t>(v)] = d0;
    if (!queued[static_cast<std::size_t>(v)]) {
      queued[static_cast<std::size_t>(v)] = 1;
      queue.push_back(v);
    }
  }

  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    queued[static_cast<std::size_t>(x)] = 0;
    const long long dx = r.dist[static_cast<std::size_t>(x)];
    for (int k : out[static_cast<std::size_t>(x)]) {
      const WeightedArc& a = arcs[static_cast<std::size_t>(k)];
      const auto y = static_cast<std::size_t>(a.to);
      if (dx + a.weight >= r.dist[y]) continue;
      r.dist[y] = dx + a.weight;
      r.pred[y] = k;
      len[y] = len[static_cast<std::size_t>(x)] + 1;
      if (len[y] >= n) {
        r.cycle = pred_cycle_from(a.to, arcs, r.pred);
        if (r.cycle.empty() || path_weight(arcs, r.cycle) >= 0) r.cycle = classic_cycle(n, arcs);
        if (r.cycle.empty()) throw std::logic_error("negative cycle detected but not extracted");
        return r;
      }
      if (!queued[y]) {
        queued[y] = 1;
        queue.push_back(a.to);
      }
    }
  }
  return r;
}

}  // namespace calissons
