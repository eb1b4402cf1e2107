#include "calissons/tiling.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <unordered_map>

namespace calissons {

namespace {

std::string describe(const GridVertex& p) {
  std::string s = "(" + std::to_string(p.u) + "," + std::to_string(p.v);
  if (p.copy != 0) s += "#" + std::to_string(p.copy);
  return s + ")";
}

std::string describe(const Triangle& t) {
  return std::string(t.chirality == Chirality::Left ? "left" : "right") + " triangle at " + describe(t.anchor);
}

// Owner calisson of each region triangle, or TilingError if the tiling
// leaves a gap or overlaps itself.
std::unordered_map<Triangle, Calisson, TriangleHash> owners(const Region& region, const Tiling& t) {
  std::unordered_map<Triangle, Calisson, TriangleHash> own;
  for (const Calisson& c : t) {
    if (!region.admits(c)) throw TilingError("calisson does not fit in the region");
    for (const Triangle& tri : c.triangles()) {
      if (!own.emplace(tri, c).second) throw TilingError("calissons overlap on " + describe(tri));
    }
  }
  for (const Triangle& tri : region.triangles()) {
    if (own.count(tri) == 0) throw TilingError("gap at " + describe(tri));
  }
  return own;
}

std::vector<Violation> check_impl(const Region& region, std::span<const GridEdge> X, const Tiling& t,
                                  bool saliency) {
  std::set<Violation> out;
  std::map<Triangle, std::vector<const Calisson*>> cover;
  for (const Calisson& c : t) {
    bool off = false;
    for (const Triangle& tri : c.triangles()) {
      if (!region.contains(tri)) {
        out.insert({ViolationKind::OffRegion, tri});
        off = true;
      }
    }
    if (!off && region.is_slit(c.covered_edge())) out.insert({ViolationKind::OffRegion, c.covered_edge()});
    for (const Triangle& tri : c.triangles()) {
      if (region.contains(tri)) cover[tri].push_back(&c);
    }
  }
  for (const Triangle& tri : region.triangles()) {
    const auto it = cover.find(tri);
    if (it == cover.end()) {
      out.insert({ViolationKind::Gap, tri});
    } else if (it->second.size() > 1) {
      out.insert({ViolationKind::Overlap, tri});
    }
  }

  const std::set<Calisson> placed(t.begin(), t.end());
  for (const GridEdge& raw : X) {
    const GridEdge e{raw.origin.raw(), raw.axis};
    if (placed.count(Calisson::covering(e)) != 0) out.insert({ViolationKind::XOverlapped, e});
    if (!saliency) continue;
    const auto sides = incident_triangles(e);
    const auto a = cover.find(sides[0]);
    const auto b = cover.find(sides[1]);
    if (a == cover.end() || b == cover.end() || a->second.size() != 1 || b->second.size() != 1) continue;
    const Calisson& ca = *a->second.front();
    const Calisson& cb = *b->second.front();
    if (ca != cb && ca.color() == cb.color()) out.insert({ViolationKind::SaliencySameColor, e});
  }
  return {out.begin(), out.end()};
}

}  // namespace

Tiling normalized(Tiling t) {
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t;
}

std::string_view violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::Gap: return "gap";
    case ViolationKind::Overlap: return "overlap";
    case ViolationKind::XOverlapped: return "x_overlapped";
    case ViolationKind::SaliencySameColor: return "saliency_same_color";
    case ViolationKind::OffRegion: return "off_region";
  }
  return "";
}

ViolationKind parse_violation_kind(std::string_view s) {
  for (ViolationKind k : {ViolationKind::Gap, ViolationKind::Overlap, ViolationKind::XOverlapped,
                          ViolationKind::SaliencySameColor, ViolationKind::OffRegion}) {
    if (violation_name(k) == s) return k;
  }
  throw std::invalid_argument("unknown violation kind '" + std::string(s) + "'");
}

std::vector<Violation> check(const Region& region, std::span<const GridEdge> X, const Tiling& t) {
  return check_impl(region, X, t, true);
}

std::vector<Violation> check_non_overlap(const Region& region, std::span<const GridEdge> X, const Tiling& t) {
  return check_impl(region, X, t, false);
}

HeightField heights_from_tiling(const Region& region, const Tiling& t, GridVertex source, long long source_height) {
  const auto own = owners(region, t);

  struct Step {
    GridVertex to;
    long long delta;
  };
  std::map<GridVertex, std::vector<Step>> adj;
  for (const Triangle& tri : region.triangles()) {
    const GridEdge covered = own.at(tri).covered_edge();
    for (const GridEdge& e : tri.edges()) {
      if (e == covered) continue;
      const GridVertex p = region.vertex_copy(e.origin, tri);
      const GridVertex q = region.vertex_copy(e.end(), tri);
      adj[p].push_back({q, 1});
      adj[q].push_back({p, -1});
    }
  }
  if (adj.count(source) == 0) throw std::invalid_argument("source " + describe(source) + " is not a region vertex");

  HeightField h;
  h[source] = source_height;
  std::deque<GridVertex> queue{source};
  while (!queue.empty()) {
    const GridVertex p = queue.front();
    queue.pop_front();
    const long long hp = h.at(p);
    for (const Step& s : adj[p]) {
      const auto [it, fresh] = h.emplace(s.to, hp + s.delta);
      if (fresh) {
        queue.push_back(s.to);
      } else if (it->second != hp + s.delta) {
        throw TilingError("inconsistent heights at " + describe(s.to));
      }
    }
  }
  if (h.size() != adj.size()) throw TilingError("tiling edges do not connect the region");
  return h;
}

Tiling tiling_from_cut(const Region& region, std::span<const FrontierArc> frontier) {
  Tiling t;
  t.reserve(frontier.size());
  for (const FrontierArc& f : frontier) t.push_back({f.from.raw() + step_vector(f.axis), f.axis});
  t = normalized(std::move(t));
  owners(region, t);
  return t;
}

std::vector<FrontierArc> cut_frontier(const Region& region, const HeightField& h) {
  std::set<FrontierArc> out;
  for (const Triangle& tri : region.triangles()) {
    for (const GridEdge& e : tri.edges()) {
      const GridVertex p = region.vertex_copy(e.origin, tri);
      const GridVertex q = region.vertex_copy(e.end(), tri);
      const long long hp = h.at(p);
      if (h.at(q) - hp == -2) out.insert({p, hp - 3, e.axis});
    }
  }
  return {out.begin(), out.end()};
}

Tiling tiling_from_distances(const Region& region, const HeightField& h) {
  auto value = [&](const GridVertex& p) {
    const auto it = h.find(p);
    if (it == h.end()) throw TilingError("no value at " + describe(p));
    return it->second;
  };
  std::set<Calisson> found;
  for (const Triangle& tri : region.triangles()) {
    int rises = 0;
    const GridEdge* covered = nullptr;
    const auto edges = tri.edges();
    for (const GridEdge& e : edges) {
      const long long d = value(region.vertex_copy(e.end(), tri)) - value(region.vertex_copy(e.origin, tri));
      if (d == 1) {
        ++rises;
      } else if (d == -2) {
        covered = &e;
      }
    }
    if (rises != 2 || covered == nullptr) throw TilingError("distance field is not a height function on " + describe(tri));
    if (region.classify(*covered) != EdgeKind::Interior) {
      throw TilingError("distance field covers a contour edge of " + describe(tri));
    }
    found.insert(Calisson::covering(*covered));
  }
  Tiling t(found.begin(), found.end());
  owners(region, t);
  return t;
}

}  // namespace calissons
