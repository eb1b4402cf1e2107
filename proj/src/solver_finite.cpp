#include "calissons/solver_finite.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <string>

#include "calissons/shortest_paths.hpp"

namespace calissons {

namespace {

std::vector<long long> to_vector(const ProjectedGraph& g, const HeightField& h) {
  std::vector<long long> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = h.at(g.vertex(static_cast<int>(i)));
  return out;
}

HeightField to_field(const ProjectedGraph& g, const std::vector<long long>& h) {
  HeightField out;
  for (std::size_t i = 0; i < g.size(); ++i) out.emplace_hint(out.end(), g.vertex(static_cast<int>(i)), h[i]);
  return out;
}

// Multi-source propagation along ascending arcs only. Upward: the pointwise
// least h(b) + dist(b, v) over contour vertices b. Downward: the pointwise
// greatest h(b) - dist(v, b).
std::vector<long long> propagate(const ProjectedGraph& g, const std::vector<std::pair<int, long long>>& seeds,
                                 bool upward, TieOrder order) {
  const int n = static_cast<int>(g.size());
  std::vector<long long> val(static_cast<std::size_t>(n), kUnreached);
  // Key is oriented so that the queue always pops the smallest key.
  auto key = [&](long long h) { return upward ? h : -h; };
  auto tie = [&](int i) { return order == TieOrder::Lexicographic ? i : n - 1 - i; };
  using Entry = std::pair<long long, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
  std::vector<long long> best(static_cast<std::size_t>(n), kUnreached);
  for (const auto& [i, h] : seeds) {
    if (key(h) < best[static_cast<std::size_t>(i)]) {
      best[static_cast<std::size_t>(i)] = key(h);
      pq.push({key(h), tie(i)});
    }
  }
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  while (!pq.empty()) {
    const auto [k, t] = pq.top();
    pq.pop();
    const int i = tie(t);  // tie() is an involution
    if (done[static_cast<std::size_t>(i)] || k != best[static_cast<std::size_t>(i)]) continue;
    done[static_cast<std::size_t>(i)] = 1;
    const auto arcs = upward ? g.out_arcs(i) : g.in_arcs(i);
    for (int a : arcs) {
      const Arc& arc = g.arcs()[static_cast<std::size_t>(a)];
      if (arc.tag != ArcTag::Ascending) continue;
      const int j = upward ? arc.to : arc.from;
      if (done[static_cast<std::size_t>(j)] || k + 1 >= best[static_cast<std::size_t>(j)]) continue;
      best[static_cast<std::size_t>(j)] = k + 1;
      pq.push({k + 1, tie(j)});
    }
  }
  for (int i = 0; i < n; ++i) {
    const long long b = best[static_cast<std::size_t>(i)];
    if (b == kUnreached) throw std::logic_error("region vertex not reached from the contour");
    val[static_cast<std::size_t>(i)] = upward ? b : -b;
  }
  return val;
}

// Three ascending arcs around a region triangle, starting and ending at i.
std::vector<std::array<int, 3>> stack_cycles(const Region& region, const ProjectedGraph& g) {
  std::vector<std::array<int, 3>> cyc(g.size(), {-1, -1, -1});
  auto find_arc = [&](int i, int j) {
    for (int a : g.out_arcs(i)) {
      const Arc& arc = g.arcs()[static_cast<std::size_t>(a)];
      if (arc.to == j && arc.tag == ArcTag::Ascending) return a;
    }
    throw std::logic_error("missing ascending arc");
  };
  for (const Triangle& t : region.triangles()) {
    const auto vs = t.vertices();
    std::array<int, 3> idx{};
    for (std::size_t k = 0; k < 3; ++k) idx[k] = g.index_of(region.vertex_copy(vs[k], t));
    // Left triangles run counterclockwise along ascending arcs; right ones
    // the other way around.
    const bool ccw = t.chirality == Chirality::Left;
    for (std::size_t k = 0; k < 3; ++k) {
      auto& c = cyc[static_cast<std::size_t>(idx[k])];
      if (c[0] >= 0) continue;
      int cur = idx[k];
      for (std::size_t s = 0; s < 3; ++s) {
        const int nxt = ccw ? idx[(k + s + 1) % 3] : idx[(k + 3 - s - 1) % 3];
        c[s] = find_arc(cur, nxt);
        cur = nxt;
      }
    }
  }
  return cyc;
}

}  // namespace

std::string_view extremal_name(Extremal e) { return e == Extremal::Lowest ? "lowest" : "highest"; }

std::string_view untilable_name(UntilableReason r) {
  return r == UntilableReason::BoundaryClosure ? "boundary_closure" : "decimation";
}

std::string_view unsolvable_name(UnsolvableReason r) {
  switch (r) {
    case UnsolvableReason::UntilableRegion: return "untilable_region";
    case UnsolvableReason::FrontMeetsBack: return "front_meets_back";
    case UnsolvableReason::AbsorbingCycle: return "absorbing_cycle";
  }
  return "";
}

UntilableRegionError::UntilableRegionError(Untilable u)
    : std::runtime_error("region cannot be tiled (" + std::string(untilable_name(u.reason)) + ")"), info_(u) {}

long long Unsolvable::total_weight() const {
  long long w = 0;
  for (const WitnessArc& a : witness) w += a.weight;
  return w;
}

long long reference_height(const Region& region) {
  const GridVertex p = region.boundary().front().from;
  return static_cast<long long>(p.u) + p.v;
}

std::variant<Untilable, Extremes> thurston_extremes(const Region& region, TieOrder order) {
  const ProjectedGraph g = build_projected_graph(region, {});

  std::map<GridVertex, long long> contour;
  long long h = reference_height(region);
  for (const BoundaryStep& b : region.boundary()) {
    const auto [it, fresh] = contour.emplace(b.from, h);
    if (!fresh && it->second != h) return Untilable{UntilableReason::Decimation, 0, b.from};
    h += b.step.positive ? 1 : -1;
  }
  const long long closure = h - reference_height(region);
  if (closure != 0) return Untilable{UntilableReason::BoundaryClosure, closure, region.boundary().front().from};

  std::vector<std::pair<int, long long>> seeds;
  for (const auto& [p, hp] : contour) seeds.emplace_back(g.index_of(p), hp);

  const auto hi = propagate(g, seeds, true, order);
  const auto lo = propagate(g, seeds, false, order);
  for (const auto& [p, hp] : contour) {
    const auto i = static_cast<std::size_t>(g.index_of(p));
    if (hi[i] != hp || lo[i] != hp) return Untilable{UntilableReason::Decimation, 0, p};
  }

  Extremes ex;
  ex.max_heights = to_field(g, hi);
  ex.min_heights = to_field(g, lo);
  try {
    ex.max = tiling_from_distances(region, ex.max_heights);
    ex.min = tiling_from_distances(region, ex.min_heights);
  } catch (const TilingError&) {
    return Untilable{UntilableReason::Decimation, 0, region.boundary().front().from};
  }
  return ex;
}

std::size_t CubeSlab::interior_size() const {
  std::size_t n = 0;
  for (const auto& [p, l] : lo) n += static_cast<std::size_t>((hi.at(p) - l) / 3);
  return n;
}

CubeSlab build_slab(const Region& region) {
  auto ex = thurston_extremes(region);
  if (auto* u = std::get_if<Untilable>(&ex)) throw UntilableRegionError(*u);
  auto& e = std::get<Extremes>(ex);
  return CubeSlab{&region, std::move(e.min_heights), std::move(e.max_heights)};
}

SolveOutcome advancing_surface(const CubeSlab& slab, const ProjectedGraph& g, Direction direction) {
  const int n = static_cast<int>(g.size());
  const auto lo = to_vector(g, slab.lo);
  const auto hi = to_vector(g, slab.hi);
  const bool forward = direction == Direction::FromFront;

  std::vector<std::size_t> base(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    if (hi[u] < lo[u] || (hi[u] - lo[u]) % 3 != 0) throw std::invalid_argument("malformed cube slab");
    base[u + 1] = base[u] + static_cast<std::size_t>((hi[u] - lo[u]) / 3);
  }
  auto cube_id = [&](int i, long long h) {
    return base[static_cast<std::size_t>(i)] + static_cast<std::size_t>((h - lo[static_cast<std::size_t>(i)]) / 3);
  };

  // Parent links: the cube we came from (or none for seeds) and the arc
  // used; arc -2 is a move along the vertical stack.
  struct Link {
    long long parent = -1;
    int arc = -1;
  };
  std::vector<Link> link(base.back());
  std::vector<char> seen(base.back(), 0);
  std::vector<std::pair<int, long long>> cube_of(base.back());
  std::deque<std::size_t> queue;
  auto visit = [&](int i, long long h, long long parent, int arc) {
    const std::size_t id = cube_id(i, h);
    if (seen[id]) return;
    seen[id] = 1;
    link[id] = {parent, arc};
    cube_of[id] = {i, h};
    queue.push_back(id);
  };

  const auto& arcs = g.arcs();
  auto lifted = [&](int a, long long from_h) {
    const Arc& arc = arcs[static_cast<std::size_t>(a)];
    return WitnessArc{g.vertex(arc.from), from_h, g.vertex(arc.to), from_h + arc.weight, arc.weight, arc.tag};
  };
  const auto cycles = stack_cycles(*slab.region, g);
  // Forward-oriented arcs joining a visited cube to its parent (or to the
  // seeding sentinel cube).
  auto step_arcs = [&](std::size_t id, std::vector<WitnessArc>& out) {
    const auto [i, h] = cube_of[id];
    const Link& l = link[id];
    if (l.arc == -2) {
      // Stack move: up one triangle cycle, from h - 3 (or to h + 3 when
      // exploring backwards).
      long long hh = forward ? h - 3 : h;
      for (int a : cycles[static_cast<std::size_t>(i)]) out.push_back(lifted(a, hh++));
      return;
    }
    const Arc& arc = arcs[static_cast<std::size_t>(l.arc)];
    if (forward) {
      out.push_back(lifted(l.arc, h - arc.weight));
    } else {
      out.push_back(lifted(l.arc, h));
    }
  };

  auto unsolvable = [&](std::vector<WitnessArc> w) {
    return Unsolvable{UnsolvableReason::FrontMeetsBack, std::nullopt, std::move(w)};
  };

  // Witness from the sentinel through the chain ending at id, then the final arc.
  auto chain = [&](std::size_t id) {
    std::vector<std::vector<WitnessArc>> parts;
    for (long long cur = static_cast<long long>(id); cur >= 0; cur = link[static_cast<std::size_t>(cur)].parent) {
      std::vector<WitnessArc> seg;
      step_arcs(static_cast<std::size_t>(cur), seg);
      parts.push_back(std::move(seg));
    }
    std::vector<WitnessArc> out;
    if (forward) std::reverse(parts.begin(), parts.end());
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
  };

  if (forward) {
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      const Arc& arc = arcs[a];
      const auto p = static_cast<std::size_t>(arc.from);
      const auto q = static_cast<std::size_t>(arc.to);
      const long long h = hi[p] + arc.weight;
      if (h < lo[q]) return unsolvable({lifted(static_cast<int>(a), hi[p])});
      if (h < hi[q]) visit(arc.to, h, -1, static_cast<int>(a));
    }
    while (!queue.empty()) {
      const std::size_t id = queue.front();
      queue.pop_front();
      const auto [i, h] = cube_of[id];
      const auto ui = static_cast<std::size_t>(i);
      if (h + 3 < hi[ui]) visit(i, h + 3, static_cast<long long>(id), -2);
      for (int a : g.out_arcs(i)) {
        const Arc& arc = arcs[static_cast<std::size_t>(a)];
        const auto q = static_cast<std::size_t>(arc.to);
        const long long hq = h + arc.weight;
        if (hq < lo[q]) {
          auto w = chain(id);
          w.push_back(lifted(a, h));
          return unsolvable(std::move(w));
        }
        if (hq < hi[q]) visit(arc.to, hq, static_cast<long long>(id), a);
      }
    }
  } else {
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      const Arc& arc = arcs[a];
      const auto p = static_cast<std::size_t>(arc.from);
      const auto q = static_cast<std::size_t>(arc.to);
      const long long h = lo[q] - 3 - arc.weight;
      if (h >= hi[p]) return unsolvable({lifted(static_cast<int>(a), h)});
      if (h >= lo[p]) visit(arc.from, h, -1, static_cast<int>(a));
    }
    while (!queue.empty()) {
      const std::size_t id = queue.front();
      queue.pop_front();
      const auto [i, h] = cube_of[id];
      const auto ui = static_cast<std::size_t>(i);
      if (h - 3 >= lo[ui]) visit(i, h - 3, static_cast<long long>(id), -2);
      for (int a : g.in_arcs(i)) {
        const Arc& arc = arcs[static_cast<std::size_t>(a)];
        const auto p = static_cast<std::size_t>(arc.from);
        const long long hp = h - arc.weight;
        if (hp >= hi[p]) {
          std::vector<WitnessArc> w{lifted(a, hp)};
          auto rest = chain(id);
          w.insert(w.end(), rest.begin(), rest.end());
          return unsolvable(std::move(w));
        }
        if (hp >= lo[p]) visit(arc.from, hp, static_cast<long long>(id), a);
      }
    }
  }

  std::vector<long long> H(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    H[u] = forward ? hi[u] : lo[u];
    for (long long h = lo[u]; h < hi[u]; h += 3) {
      if (!seen[cube_id(i, h)]) continue;
      if (forward) {
        H[u] = std::min(H[u], h);
      } else {
        H[u] = std::max(H[u], h + 3);
      }
    }
  }
  Solution s;
  s.heights = to_field(g, H);
  const auto frontier = cut_frontier(*slab.region, s.heights);
  s.tiling = tiling_from_cut(*slab.region, frontier);
  s.extremal = forward ? Extremal::Highest : Extremal::Lowest;
  return s;
}

SolveOutcome solve_finite(const Region& region, std::span<const GridEdge> X, Extremal extremal) {
  const ProjectedGraph g = build_projected_graph(region, X);
  auto ex = thurston_extremes(region);
  if (auto* u = std::get_if<Untilable>(&ex)) return Unsolvable{UnsolvableReason::UntilableRegion, *u, {}};
  auto& e = std::get<Extremes>(ex);
  const CubeSlab slab{&region, std::move(e.min_heights), std::move(e.max_heights)};
  return advancing_surface(slab, g, extremal == Extremal::Highest ? Direction::FromFront : Direction::FromBack);
}

SolveOutcome solve_finite_bf(const Region& region, std::span<const GridEdge> X, Extremal extremal) {
  const ProjectedGraph g = build_projected_graph(region, X);
  const bool highest = extremal == Extremal::Highest;
  std::vector<WeightedArc> w;
  w.reserve(g.arcs().size());
  for (const Arc& a : g.arcs()) {
    if (highest) {
      w.push_back({a.from, a.to, a.weight});
    } else {
      w.push_back({a.to, a.from, a.weight});
    }
  }
  const int source = g.index_of(region.boundary().front().from);
  if (source < 0) throw std::invalid_argument("source vertex outside region");
  const long long h0 = reference_height(region);
  const std::pair<int, long long> src{source, 0};
  const ShortestPaths sp = bellman_ford(static_cast<int>(g.size()), w, std::span(&src, 1));

  if (sp.has_negative_cycle()) {
    std::vector<int> cycle = sp.cycle;
    // Arc indices coincide with g.arcs(); undo the reversal for the lowest pass.
    if (!highest) std::reverse(cycle.begin(), cycle.end());
    Unsolvable u{UnsolvableReason::AbsorbingCycle, std::nullopt, {}};
    long long h = 0;
    for (int a : cycle) {
      const Arc& arc = g.arcs()[static_cast<std::size_t>(a)];
      u.witness.push_back({g.vertex(arc.from), h, g.vertex(arc.to), h + arc.weight, arc.weight, arc.tag});
      h += arc.weight;
    }
    return u;
  }

  std::vector<long long> H(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (sp.dist[i] == kUnreached) throw std::logic_error("projected graph is not strongly connected");
    H[i] = highest ? h0 + sp.dist[i] : h0 - sp.dist[i];
  }
  Solution s;
  s.heights = to_field(g, H);
  s.tiling = tiling_from_distances(region, s.heights);
  s.extremal = extremal;
  return s;
}

}  // namespace calissons
