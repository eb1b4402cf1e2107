#include "calissons/region.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace calissons {

namespace {

struct Cell {
  const std::unordered_set<Triangle, TriangleHash>& tris;
  const std::set<GridEdge>& slits;

  bool has(const Triangle& t) const { return tris.count(t) != 0; }
  bool slit(const GridEdge& e) const { return slits.count(e) != 0; }

  // Edge of t is on the contour: nothing across it, or cut by a slit.
  bool boundary_side(const Triangle& t, Axis a) const {
    return slit(t.edge(a)) || !has(t.neighbor(a));
  }

  // Rotation rule: the contour step leaving q after arriving by (p -> q).
  SignedAxis next_step(GridVertex p, SignedAxis in) const {
    const GridVertex q = p.moved(in);
    const Triangle t = left_of(p, in);
    int j = slot_of(q, t);
    for (int guard = 0; guard < 6; ++guard) {
      const SignedAxis out = kSpokes[j];
      const GridEdge e = GridEdge::from_step(q, out);
      if (slit(e) || !has(slot_triangle(q, (j + 5) % 6))) return out;
      j = (j + 5) % 6;
    }
    throw std::logic_error("vertex has no outgoing contour step");
  }

  // Fans around v as slot bitmasks.
  std::vector<unsigned> fans(GridVertex v) const {
    std::array<bool, 6> in{};
    for (int s = 0; s < 6; ++s) in[s] = has(slot_triangle(v, s));
    auto joined = [&](int s) {  // slots s-1 and s across spoke s
      const int prev = (s + 5) % 6;
      return in[prev] && in[s] && !slit(GridEdge::from_step(v, kSpokes[s]));
    };
    std::vector<unsigned> out;
    int start = -1;
    for (int s = 0; s < 6; ++s) {
      if (in[s] && !joined(s)) {
        start = s;
        break;
      }
    }
    if (start < 0) {
      unsigned all = 0;
      for (int s = 0; s < 6; ++s) {
        if (in[s]) all |= 1u << s;
      }
      if (all != 0) out.push_back(all);
      return out;
    }
    for (int k = 0; k < 6; ++k) {
      const int s = (start + k) % 6;
      if (!in[s]) continue;
      if (!joined(s) || out.empty()) out.push_back(0);
      out.back() |= 1u << s;
    }
    return out;
  }
};

std::array<BoundaryStep, 3> ccw_half_edges(const Triangle& t) {
  const auto vs = t.vertices();
  return {BoundaryStep{vs[0], step_between(vs[0], vs[1])},
          BoundaryStep{vs[1], step_between(vs[1], vs[2])},
          BoundaryStep{vs[2], step_between(vs[2], vs[0])}};
}

}  // namespace

Region Region::hexagon(int n) {
  if (n < 1) throw std::invalid_argument("hexagon size must be positive");
  std::vector<SignedAxis> steps;
  steps.reserve(6 * static_cast<std::size_t>(n));
  const std::array<SignedAxis, 6> sides{SignedAxis{Axis::Y, false}, SignedAxis{Axis::Z, true},
                                        SignedAxis{Axis::X, false}, SignedAxis{Axis::Y, true},
                                        SignedAxis{Axis::Z, false}, SignedAxis{Axis::X, true}};
  for (const SignedAxis& s : sides) steps.insert(steps.end(), static_cast<std::size_t>(n), s);
  return from_boundary(GridVertex{n, n, 0}, steps);
}

Region Region::from_boundary(GridVertex start, std::span<const SignedAxis> steps) {
  if (steps.empty()) throw RegionError("empty contour encloses no triangles");
  start = start.raw();

  GridVertex p = start;
  int umin = p.u, umax = p.u, vmin = p.v, vmax = p.v;
  std::set<GridEdge> positive_edges, negative_edges;
  for (const SignedAxis& s : steps) {
    const GridEdge e = GridEdge::from_step(p, s);
    auto& bucket = s.positive ? positive_edges : negative_edges;
    if (!bucket.insert(e).second) throw RegionError("contour walks the same directed edge twice");
    p = p.moved(s);
    umin = std::min(umin, p.u), umax = std::max(umax, p.u);
    vmin = std::min(vmin, p.v), vmax = std::max(vmax, p.v);
  }
  if (p != start) throw RegionError("contour is not closed");

  std::set<GridEdge> slits;
  std::set<GridEdge> walls;
  for (const GridEdge& e : positive_edges) {
    walls.insert(e);
    if (negative_edges.count(e)) slits.insert(e);
  }
  walls.insert(negative_edges.begin(), negative_edges.end());

  auto inside_box = [&](const Triangle& t) {
    for (const GridVertex& q : t.vertices()) {
      if (q.u < umin || q.u > umax || q.v < vmin || q.v > vmax) return false;
    }
    return true;
  };

  // Flood the interior from the left side of every step without crossing the
  // contour.
  std::unordered_set<Triangle, TriangleHash> tris;
  std::vector<Triangle> stack;
  p = start;
  for (const SignedAxis& s : steps) {
    stack.push_back(left_of(p, s));
    p = p.moved(s);
  }
  while (!stack.empty()) {
    const Triangle t = stack.back();
    stack.pop_back();
    if (!tris.insert(t).second) continue;
    if (!inside_box(t)) {
      throw RegionError("contour is not counterclockwise or does not enclose a bounded interior");
    }
    for (Axis a : kAxes) {
      if (walls.count(t.edge(a))) continue;
      const Triangle n = t.neighbor(a);
      if (!tris.count(n)) stack.push_back(n);
    }
  }

  const Cell cell{tris, slits};
  p = start;
  for (const SignedAxis& s : steps) {
    const GridEdge e = GridEdge::from_step(p, s);
    const Triangle right = left_of(p.moved(s), s.reversed());
    if (!slits.count(e) && tris.count(right)) throw RegionError("contour crosses the interior");
    p = p.moved(s);
  }

  std::size_t boundary_sides = 0;
  for (const Triangle& t : tris) {
    for (Axis a : kAxes) boundary_sides += cell.boundary_side(t, a) ? 1 : 0;
  }
  if (boundary_sides != steps.size()) {
    throw RegionError("contour leaves part of the region boundary untraced (hole or crossing)");
  }

  {
    std::unordered_set<Triangle, TriangleHash> seen;
    std::vector<Triangle> todo{*tris.begin()};
    while (!todo.empty()) {
      const Triangle t = todo.back();
      todo.pop_back();
      if (!seen.insert(t).second) continue;
      for (Axis a : kAxes) {
        if (!cell.boundary_side(t, a)) todo.push_back(t.neighbor(a));
      }
    }
    if (seen.size() != tris.size()) throw RegionError("region triangles are not edge-connected");
  }

  // A touching contour must turn back into the same fan at every visit.
  p = start;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const SignedAxis expected = steps[(i + 1) % steps.size()];
    if (cell.next_step(p, steps[i]) != expected) throw RegionError("contour crosses itself");
    p = p.moved(steps[i]);
  }

  Region r;
  r.triangles_.assign(tris.begin(), tris.end());
  std::sort(r.triangles_.begin(), r.triangles_.end());
  r.lookup_ = tris;
  r.slits_.assign(slits.begin(), slits.end());

  p = start;
  std::map<GridVertex, std::vector<unsigned>> candidate;
  for (const SignedAxis& s : steps) {
    if (!candidate.count(p)) candidate.emplace(p, cell.fans(p));
    p = p.moved(s);
  }
  p = start;
  for (const SignedAxis& s : steps) {
    auto& fans = candidate.at(p);
    if (fans.size() > 1) {
      auto& ordered = r.fans_[p];
      const unsigned bit = 1u << slot_of(p, left_of(p, s));
      const auto it = std::find_if(fans.begin(), fans.end(), [&](unsigned f) { return f & bit; });
      if (std::find(ordered.begin(), ordered.end(), *it) == ordered.end()) ordered.push_back(*it);
    }
    p = p.moved(s);
  }

  p = start;
  for (const SignedAxis& s : steps) {
    r.boundary_.push_back({r.vertex_copy(p, left_of(p, s)), s});
    p = p.moved(s);
  }
  return r;
}

Region Region::from_triangles(std::span<const Triangle> triangles, std::span<const GridEdge> slits) {
  if (triangles.empty()) throw RegionError("empty triangle set");
  std::unordered_set<Triangle, TriangleHash> tris(triangles.begin(), triangles.end());
  std::set<GridEdge> cut(slits.begin(), slits.end());
  const Cell cell{tris, cut};
  for (const GridEdge& e : cut) {
    const auto pair = incident_triangles(e);
    if (!cell.has(pair[0]) || !cell.has(pair[1])) {
      throw RegionError("slit edge must separate two region triangles");
    }
  }

  std::set<BoundaryStep> sides;
  for (const Triangle& t : tris) {
    for (const BoundaryStep& h : ccw_half_edges(t)) {
      const GridEdge e = GridEdge::from_step(h.from, h.step);
      const auto pair = incident_triangles(e);
      const Triangle other = pair[0] == t ? pair[1] : pair[0];
      if (cell.slit(e) || !cell.has(other)) sides.insert(h);
    }
  }

  const BoundaryStep first = *sides.begin();
  std::vector<SignedAxis> steps{first.step};
  GridVertex p = first.from;
  SignedAxis s = first.step;
  while (steps.size() <= sides.size()) {
    const SignedAxis next = cell.next_step(p, s);
    p = p.moved(s);
    s = next;
    if (p == first.from && s == first.step) break;
    steps.push_back(s);
  }
  if (steps.size() != sides.size()) {
    throw RegionError("triangle set is disconnected or has holes");
  }

  Region r = from_boundary(first.from, steps);
  std::vector<Triangle> sorted(tris.begin(), tris.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted != r.triangles_) throw RegionError("triangle set is not simply connected");
  return r;
}

std::vector<SignedAxis> Region::boundary_steps() const {
  std::vector<SignedAxis> out;
  out.reserve(boundary_.size());
  for (const BoundaryStep& b : boundary_) out.push_back(b.step);
  return out;
}

bool Region::is_slit(const GridEdge& e) const {
  return std::binary_search(slits_.begin(), slits_.end(), e);
}

EdgeKind Region::classify(const GridEdge& e) const {
  const auto pair = incident_triangles(e);
  const bool a = contains(pair[0]);
  const bool b = contains(pair[1]);
  if (!a && !b) return EdgeKind::Outside;
  if (a && b && !is_slit(e)) return EdgeKind::Interior;
  return EdgeKind::Boundary;
}

bool Region::admits(const Calisson& c) const {
  return classify(c.covered_edge()) == EdgeKind::Interior;
}

GridVertex Region::vertex_copy(GridVertex p, const Triangle& t) const {
  const auto it = fans_.find(p.raw());
  if (it == fans_.end()) return p.raw();
  const int slot = slot_of(p, t);
  if (slot < 0) throw std::logic_error("triangle does not contain vertex");
  for (std::size_t i = 0; i < it->second.size(); ++i) {
    if (it->second[i] & (1u << slot)) return {p.u, p.v, static_cast<int>(i) + 1};
  }
  throw std::logic_error("triangle is not in any fan of vertex");
}

std::vector<GridVertex> Region::vertices() const {
  std::set<GridVertex> raw;
  for (const Triangle& t : triangles_) {
    for (const GridVertex& p : t.vertices()) raw.insert(p);
  }
  std::vector<GridVertex> out;
  out.reserve(raw.size() + fans_.size());
  for (const GridVertex& p : raw) {
    const auto more = copies_of(p);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

std::vector<GridVertex> Region::copies_of(GridVertex p) const {
  const auto it = fans_.find(p.raw());
  if (it == fans_.end()) return {p.raw()};
  std::vector<GridVertex> out;
  for (std::size_t i = 0; i < it->second.size(); ++i) out.push_back({p.u, p.v, static_cast<int>(i) + 1});
  return out;
}

std::size_t Region::left_count() const {
  return static_cast<std::size_t>(std::count_if(triangles_.begin(), triangles_.end(), [](const Triangle& t) {
    return t.chirality == Chirality::Left;
  }));
}

std::size_t Region::right_count() const { return triangles_.size() - left_count(); }

}  // namespace calissons
