#include "calissons/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace calissons {

char axis_char(Axis a) {
  switch (a) {
    case Axis::X: return 'x';
    case Axis::Y: return 'y';
    case Axis::Z: return 'z';
  }
  return '?';
}

Axis parse_axis(std::string_view s) {
  if (s == "x" || s == "X") return Axis::X;
  if (s == "y" || s == "Y") return Axis::Y;
  if (s == "z" || s == "Z") return Axis::Z;
  throw std::invalid_argument("unknown axis '" + std::string(s) + "'");
}

std::string to_string(SignedAxis s) {
  return std::string(1, s.positive ? '+' : '-') + axis_char(s.axis);
}

SignedAxis parse_signed_axis(std::string_view s) {
  if (s.size() != 2 || (s[0] != '+' && s[0] != '-')) {
    throw std::invalid_argument("malformed step '" + std::string(s) + "'");
  }
  return {parse_axis(s.substr(1)), s[0] == '+'};
}

GridVertex canonicalize(long long x, long long y, long long z) {
  return {static_cast<int>(x - z), static_cast<int>(y - z), 0};
}

int height_delta(SignedAxis step) { return step.positive ? -1 : 1; }

std::vector<int> path_heights(int start_height, std::span<const SignedAxis> steps) {
  std::vector<int> out;
  out.reserve(steps.size() + 1);
  out.push_back(start_height);
  for (const SignedAxis& s : steps) out.push_back(out.back() + height_delta(s));
  return out;
}

GridEdge GridEdge::from_step(GridVertex from, SignedAxis s) {
  if (s.positive) return {from.raw(), s.axis};
  return {from.raw() - step_vector(s.axis), s.axis};
}

std::array<GridVertex, 3> Triangle::vertices() const {
  const GridVertex a = anchor.raw();
  if (chirality == Chirality::Left) return {a, a + Offset{0, 1}, a + Offset{1, 1}};
  return {a, a + Offset{1, 1}, a + Offset{1, 0}};
}

GridEdge Triangle::edge(Axis ax) const {
  const GridVertex a = anchor.raw();
  const bool left = chirality == Chirality::Left;
  switch (ax) {
    case Axis::X: return {left ? a + Offset{0, 1} : a, Axis::X};
    case Axis::Y: return {left ? a : a + Offset{1, 0}, Axis::Y};
    case Axis::Z: return {a + Offset{1, 1}, Axis::Z};
  }
  return {};
}

std::array<GridEdge, 3> Triangle::edges() const {
  return {edge(Axis::X), edge(Axis::Y), edge(Axis::Z)};
}

std::array<Triangle, 2> incident_triangles(const GridEdge& e) {
  const GridVertex p = e.origin.raw();
  switch (e.axis) {
    case Axis::X: return {Triangle{p - Offset{0, 1}, Chirality::Left}, Triangle{p, Chirality::Right}};
    case Axis::Y: return {Triangle{p, Chirality::Left}, Triangle{p - Offset{1, 0}, Chirality::Right}};
    case Axis::Z:
      return {Triangle{p - Offset{1, 1}, Chirality::Left}, Triangle{p - Offset{1, 1}, Chirality::Right}};
  }
  return {};
}

Triangle Triangle::neighbor(Axis a) const {
  const auto pair = incident_triangles(edge(a));
  return pair[0] == *this ? pair[1] : pair[0];
}

Triangle left_of(GridVertex from, SignedAxis s) {
  // Left triangles are traversed counterclockwise with positive steps only.
  const auto pair = incident_triangles(GridEdge::from_step(from, s));
  return s.positive ? pair[0] : pair[1];
}

Triangle triangle_from_vertices(std::array<GridVertex, 3> vs) {
  for (auto& p : vs) p = p.raw();
  std::sort(vs.begin(), vs.end());
  const GridVertex a = vs[0];
  if (vs[1] == a + Offset{0, 1} && vs[2] == a + Offset{1, 1}) return {a, Chirality::Left};
  if (vs[1] == a + Offset{1, 0} && vs[2] == a + Offset{1, 1}) return {a, Chirality::Right};
  throw std::invalid_argument("vertex triple is not a grid triangle");
}

SignedAxis step_between(GridVertex p, GridVertex q) {
  const Offset d{q.u - p.u, q.v - p.v};
  for (Axis a : kAxes) {
    if (step_vector(a) == d) return {a, true};
    if (Offset{-step_vector(a).du, -step_vector(a).dv} == d) return {a, false};
  }
  throw std::logic_error("vertices are not adjacent");
}

int spoke_index(SignedAxis s) {
  for (int i = 0; i < 6; ++i) {
    if (kSpokes[i] == s) return i;
  }
  return -1;
}

Triangle slot_triangle(GridVertex v, int slot) {
  const GridVertex c = v.raw();
  return triangle_from_vertices({c, c.moved(kSpokes[slot % 6]), c.moved(kSpokes[(slot + 1) % 6])});
}

int slot_of(GridVertex v, const Triangle& t) {
  for (int s = 0; s < 6; ++s) {
    if (slot_triangle(v, s) == t) return s;
  }
  return -1;
}

Color color_of(Axis normal) {
  switch (normal) {
    case Axis::X: return Color::Blue;
    case Axis::Y: return Color::Red;
    case Axis::Z: return Color::Yellow;
  }
  return Color::Blue;
}

std::string_view color_name(Color c) {
  switch (c) {
    case Color::Blue: return "blue";
    case Color::Red: return "red";
    case Color::Yellow: return "yellow";
  }
  return "";
}

Calisson Calisson::from_cube(const Cube& c, Axis normal) {
  return {canonicalize(c.x, c.y, c.z), normal};
}

Calisson Calisson::covering(const GridEdge& e) { return {e.end(), e.axis}; }

GridEdge Calisson::covered_edge() const { return {anchor.raw() - step_vector(normal), normal}; }

std::array<Triangle, 2> Calisson::triangles() const { return incident_triangles(covered_edge()); }

std::array<GridVertex, 4> Calisson::corners() const {
  // The quad is the union of its two triangles; walk each triangle's
  // counterclockwise cycle and splice at the shared edge.
  const GridEdge e = covered_edge();
  const auto [left, right] = triangles();
  const GridVertex a = e.origin;
  const GridVertex b = e.end();
  auto apex = [&](const Triangle& t) {
    for (const GridVertex& p : t.vertices()) {
      if (p != a && p != b) return p;
    }
    return a;
  };
  // Left triangle runs a -> b along +axis, so its apex follows b.
  return {a, apex(right), b, apex(left)};
}

}  // namespace calissons
