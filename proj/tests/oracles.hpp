#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the solvers.

#include <cstdint>
#include <algorithm>
#include <map>
#include <vector>

namespace oracle {

// Number of lozenge tilings of the hexagon with sides a, b, c:
// prod_{i<=a, j<=b, k<=c} (i+j+k-1)/(i+j+k-2), evaluated through prime
// exponents so no intermediate overflows or rounds.
inline std::uint64_t macmahon(int a, int b, int c) {
  std::map<int, int> exponent;
  auto factor = [&](int m, int sign) {
    for (int p = 2; p * p <= m; ++p) {
      while (m % p == 0) {
        exponent[p] += sign;
        m /= p;
      }
    }
    if (m > 1) exponent[m] += sign;
  };
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      for (int k = 1; k <= c; ++k) {
        factor(i + j + k - 1, +1);
        factor(i + j + k - 2, -1);
      }
  std::uint64_t r = 1;
  for (auto [p, e] : exponent) {
    if (e < 0) return 0;  // not an integer: cannot happen for a valid formula
    for (int t = 0; t < e; ++t) r *= static_cast<std::uint64_t>(p);
  }
  return r;
}

// Bellman-Ford on an explicit arc list, returning whether some cycle
// reachable from a virtual source (0 to every vertex) has negative weight.
struct Arc {
  int from;
  int to;
  long long w;
};

inline bool has_negative_cycle(int n, const std::vector<Arc>& arcs) {
  std::vector<long long> d(static_cast<std::size_t>(n), 0);
  for (int round = 0; round < n; ++round) {
    bool changed = false;
    for (const Arc& a : arcs) {
      if (d[static_cast<std::size_t>(a.from)] + a.w < d[static_cast<std::size_t>(a.to)]) {
        d[static_cast<std::size_t>(a.to)] = d[static_cast<std::size_t>(a.from)] + a.w;
        changed = true;
      }
    }
    if (!changed) return false;
  }
  for (const Arc& a : arcs) {
    if (d[static_cast<std::size_t>(a.from)] + a.w < d[static_cast<std::size_t>(a.to)]) return true;
  }
  return false;
}

// Constraint edge {(u, v), (u, v) + d_axis} with axis 0, 1, 2 for x, y, z.
struct Edge {
  int u;
  int v;
  int axis;
};

inline int hex_norm(int u, int v) { return std::max({u, v, 0}) - std::min({u, v, 0}); }

// Negative-cycle test on the full projected graph of the infinite grid
// restricted to a hexagonal window around the constraints, with no contour
// arcs. +1 on every grid edge in the ascending direction, -1 back along
// each constraint edge, 0 both ways between the far corners of the two
// triangles at a constraint edge. The margin keeps shortest ascending paths
// between constraint vertices inside the window.
inline bool window_solvable(const std::vector<Edge>& X, int margin = 3) {
  static constexpr int step[3][2] = {{1, 0}, {0, 1}, {-1, -1}};
  int reach = 0;
  for (const Edge& e : X) {
    reach = std::max(reach, hex_norm(e.u, e.v));
    reach = std::max(reach, hex_norm(e.u + step[e.axis][0], e.v + step[e.axis][1]));
  }
  const int radius = reach + 1 + margin;
  std::map<std::pair<int, int>, int> id;
  for (int u = -radius; u <= radius; ++u)
    for (int v = -radius; v <= radius; ++v)
      if (hex_norm(u, v) <= radius) id.emplace(std::pair{u, v}, static_cast<int>(id.size()));
  auto at = [&](int u, int v) {
    const auto it = id.find({u, v});
    return it == id.end() ? -1 : it->second;
  };
  std::vector<Arc> arcs;
  for (const auto& [p, i] : id) {
    for (const auto& d : step) {
      const int j = at(p.first + d[0], p.second + d[1]);
      if (j >= 0) arcs.push_back({i, j, 1});
    }
  }
  for (const Edge& e : X) {
    arcs.push_back({at(e.u + step[e.axis][0], e.v + step[e.axis][1]), at(e.u, e.v), -1});
    std::vector<int> far;
    for (int o = 0; o < 3; ++o)
      if (o != e.axis) far.push_back(at(e.u - step[o][0], e.v - step[o][1]));
    arcs.push_back({far[0], far[1], 0});
    arcs.push_back({far[1], far[0], 0});
  }
  return !has_negative_cycle(static_cast<int>(id.size()), arcs);
}

}  // namespace oracle
