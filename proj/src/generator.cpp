#include "calissons/generator.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "calissons/constraints.hpp"
#include "calissons/solver_finite.hpp"
#include "calissons/tiling.hpp"

namespace calissons {

namespace {

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

void fill_holes(std::set<Triangle>& tris) {
  int u0 = 0, u1 = 0, v0 = 0, v1 = 0;
  bool first = true;
  for (const Triangle& t : tris) {
    if (first) {
      u0 = u1 = t.anchor.u;
      v0 = v1 = t.anchor.v;
      first = false;
    }
    u0 = std::min(u0, t.anchor.u);
    u1 = std::max(u1, t.anchor.u);
    v0 = std::min(v0, t.anchor.v);
    v1 = std::max(v1, t.anchor.v);
  }
  u0 -= 2, v0 -= 2, u1 += 2, v1 += 2;
  auto inside_box = [&](const Triangle& t) {
    return t.anchor.u >= u0 && t.anchor.u <= u1 && t.anchor.v >= v0 && t.anchor.v <= v1;
  };
  std::set<Triangle> outside;
  std::deque<Triangle> queue;
  const Triangle corner{{u0, v0}, Chirality::Left};
  outside.insert(corner);
  queue.push_back(corner);
  while (!queue.empty()) {
    const Triangle t = queue.front();
    queue.pop_front();
    // Vertex adjacency: a cavity that reaches the outside through a single
    // vertex is kept, and the contour touches itself there.
    for (const GridVertex& p : t.vertices()) {
      for (int s = 0; s < 6; ++s) {
        const Triangle n = slot_triangle(p, s);
        if (!inside_box(n) || tris.count(n) != 0 || !outside.insert(n).second) continue;
        queue.push_back(n);
      }
    }
  }
  for (int u = u0; u <= u1; ++u) {
    for (int v = v0; v <= v1; ++v) {
      for (Chirality c : {Chirality::Left, Chirality::Right}) {
        const Triangle t{{u, v}, c};
        if (outside.count(t) == 0) tris.insert(t);
      }
    }
  }
}

// Random walk on height functions by +-3 moves at inner vertices, starting
// from the minimum tiling.
std::optional<Tiling> random_tiling(std::mt19937_64& rng, const Region& region) {
  auto ex = thurston_extremes(region);
  if (!std::holds_alternative<Extremes>(ex)) return std::nullopt;
  HeightField h = std::get<Extremes>(ex).min_heights;

  std::set<GridVertex> contour;
  for (const BoundaryStep& b : region.boundary()) contour.insert(b.from.raw());
  std::vector<GridVertex> inner;
  for (const auto& [p, value] : h) {
    if (contour.count(p.raw()) == 0) inner.push_back(p);
  }
  if (inner.empty()) return std::get<Extremes>(ex).min;

  auto fits = [&](const GridVertex& p) {
    for (int s = 0; s < 6; ++s) {
      const Triangle t = slot_triangle(p, s);
      for (const GridEdge& e : t.edges()) {
        if (h.at(region.vertex_copy(e.end(), t)) - h.at(region.vertex_copy(e.origin, t)) > 1) return false;
      }
    }
    return true;
  };
  const std::size_t moves = 40 * inner.size() + 200;
  for (std::size_t k = 0; k < moves; ++k) {
    const GridVertex& p = pick(rng, inner);
    const long long delta = coin(rng, 0.5) ? 3 : -3;
    h[p] += delta;
    if (!fits(p)) h[p] -= delta;
  }
  return tiling_from_distances(region, h);
}

// Edge-connected random growth from `seed`, keeping only triangles accepted
// by `allowed`. With lozenges, triangles are added in adjacent pairs.
std::set<Triangle> grow(std::mt19937_64& rng, Triangle seed, int target, bool lozenges,
                        const std::function<bool(const Triangle&)>& allowed) {
  std::set<Triangle> tris{seed};
  if (lozenges) {
    for (Axis a : kAxes) {
      if (allowed(seed.neighbor(a))) {
        tris.insert(seed.neighbor(a));
        break;
      }
    }
  }
  for (int guard = 0; static_cast<int>(tris.size()) < target && guard < 50 * target; ++guard) {
    std::vector<Triangle> frontier;
    for (const Triangle& t : tris) {
      for (Axis a : kAxes) {
        const Triangle n = t.neighbor(a);
        if (tris.count(n) == 0 && allowed(n)) frontier.push_back(n);
      }
    }
    if (frontier.empty()) break;
    const Triangle n = pick(rng, frontier);
    if (!lozenges) {
      tris.insert(n);
      continue;
    }
    std::vector<Triangle> partners;
    for (Axis b : kAxes) {
      const Triangle m = n.neighbor(b);
      if (tris.count(m) == 0 && allowed(m)) partners.push_back(m);
    }
    if (partners.empty()) continue;
    tris.insert(n);
    tris.insert(pick(rng, partners));
  }
  return tris;
}

}  // namespace

Region random_region(std::mt19937_64& rng, int target, double slit_probability) {
  for (;;) {
    const bool lozenges = coin(rng, 0.5);
    const Triangle seed{{0, 0}, Chirality::Left};
    std::set<Triangle> tris = grow(rng, seed, target, lozenges, [](const Triangle&) { return true; });
    fill_holes(tris);

    std::vector<GridEdge> slits;
    if (coin(rng, slit_probability)) {
      std::set<GridVertex> contour;
      std::set<GridEdge> boundary_edges;
      for (const Triangle& t : tris) {
        for (Axis a : kAxes) {
          if (tris.count(t.neighbor(a)) == 0) {
            boundary_edges.insert(t.edge(a));
            contour.insert(t.edge(a).origin);
            contour.insert(t.edge(a).end());
          }
        }
      }
      std::vector<GridEdge> candidates;
      for (const Triangle& t : tris) {
        for (const GridEdge& e : t.edges()) {
          if (boundary_edges.count(e) != 0) continue;
          if ((contour.count(e.origin) != 0) != (contour.count(e.end()) != 0)) candidates.push_back(e);
        }
      }
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      if (!candidates.empty()) slits.push_back(pick(rng, candidates));
    }

    const std::vector<Triangle> list(tris.begin(), tris.end());
    try {
      return Region::from_triangles(list, slits);
    } catch (const RegionError&) {
      continue;
    }
  }
}

std::vector<GridEdge> random_interior_edges(std::mt19937_64& rng, const Region& region, double p) {
  std::set<GridEdge> all;
  for (const Triangle& t : region.triangles()) {
    for (const GridEdge& e : t.edges()) {
      if (region.classify(e) == EdgeKind::Interior) all.insert(e);
    }
  }
  std::vector<GridEdge> out;
  for (const GridEdge& e : all) {
    if (coin(rng, p)) out.push_back(e);
  }
  return out;
}

std::vector<GridEdge> planted_constraints(std::mt19937_64& rng, const Region& region, std::size_t count) {
  const auto t = random_tiling(rng, region);
  if (!t) return {};
  std::map<Triangle, Calisson> owner;
  std::set<GridEdge> covered;
  for (const Calisson& c : *t) {
    covered.insert(c.covered_edge());
    for (const Triangle& tri : c.triangles()) owner.emplace(tri, c);
  }
  std::set<GridEdge> salient;
  for (const Triangle& tri : region.triangles()) {
    for (const GridEdge& e : tri.edges()) {
      if (covered.count(e) != 0 || region.classify(e) != EdgeKind::Interior) continue;
      const auto sides = incident_triangles(e);
      if (owner.at(sides[0]).color() != owner.at(sides[1]).color()) salient.insert(e);
    }
  }
  std::vector<GridEdge> pool(salient.begin(), salient.end());
  std::shuffle(pool.begin(), pool.end(), rng);
  if (pool.size() > count) pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<GridEdge> random_disc_edges(std::mt19937_64& rng, int radius, std::size_t count) {
  auto in_disc = [&](const GridVertex& p) {
    return static_cast<long long>(p.u) * p.u - static_cast<long long>(p.u) * p.v + static_cast<long long>(p.v) * p.v <=
           static_cast<long long>(radius) * radius;
  };
  std::vector<GridEdge> all;
  for (int u = -2 * radius; u <= 2 * radius; ++u) {
    for (int v = -2 * radius; v <= 2 * radius; ++v) {
      for (Axis a : kAxes) {
        const GridEdge e{{u, v}, a};
        if (in_disc(e.origin) && in_disc(e.end())) all.push_back(e);
      }
    }
  }
  std::shuffle(all.begin(), all.end(), rng);
  if (all.size() > count) all.resize(count);
  std::sort(all.begin(), all.end());
  return all;
}

Instance random_instance(std::mt19937_64& rng, const InstanceOptions& options) {
  const int target = std::uniform_int_distribution<int>(options.min_triangles, options.max_triangles)(rng);
  for (;;) {
    Region region = random_region(rng, target, options.slit_probability);
    if (static_cast<int>(region.triangles().size()) > options.max_triangles) continue;
    std::vector<GridEdge> X;
    if (coin(rng, options.planted_share)) {
      const auto count = std::uniform_int_distribution<std::size_t>(1, region.triangles().size() / 2 + 1)(rng);
      X = planted_constraints(rng, region, count);
    } else {
      X = random_interior_edges(rng, region, std::uniform_real_distribution<double>(0.05, 0.4)(rng));
    }
    return Instance{std::move(region), std::move(X)};
  }
}

}  // namespace calissons
