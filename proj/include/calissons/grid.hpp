#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace calissons {

// Points of the triangular grid are projections phi(x,y,z) along (1,1,1).
// We store the representative with z = 0: (u, v) = (x - z, y - z).
// Step vectors in these coordinates: d_x = (1,0), d_y = (0,1), d_z = (-1,-1).

enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<Axis, 3> kAxes{Axis::X, Axis::Y, Axis::Z};

struct Offset {
  int du = 0;
  int dv = 0;
  constexpr auto operator<=>(const Offset&) const = default;
};

constexpr Offset step_vector(Axis a) {
  switch (a) {
    case Axis::X: return {1, 0};
    case Axis::Y: return {0, 1};
    case Axis::Z: return {-1, -1};
  }
  return {};
}

/// A signed unit step along one axis (+x, -y, ...).
struct SignedAxis {
  Axis axis = Axis::X;
  bool positive = true;
  constexpr auto operator<=>(const SignedAxis&) const = default;
  constexpr SignedAxis reversed() const { return {axis, !positive}; }
  constexpr Offset offset() const {
    const Offset d = step_vector(axis);
    return positive ? d : Offset{-d.du, -d.dv};
  }
};

char axis_char(Axis a);
Axis parse_axis(std::string_view s);
std::string to_string(SignedAxis s);
SignedAxis parse_signed_axis(std::string_view s);

/// Vertex of the triangular grid. copy > 0 only for boundary vertices that a
/// pinched contour visits more than once.
struct GridVertex {
  int u = 0;
  int v = 0;
  int copy = 0;

  constexpr auto operator<=>(const GridVertex&) const = default;
  constexpr GridVertex raw() const { return {u, v, 0}; }
  constexpr GridVertex operator+(Offset d) const { return {u + d.du, v + d.dv, 0}; }
  constexpr GridVertex operator-(Offset d) const { return {u - d.du, v - d.dv, 0}; }
  constexpr GridVertex moved(SignedAxis s) const { return *this + s.offset(); }
};

GridVertex canonicalize(long long x, long long y, long long z);

/// Height change of one step, with the path convention where a +axis step
/// lowers the height by one.
int height_delta(SignedAxis step);

/// Prefix sums of height_delta; the result has steps.size() + 1 entries.
std::vector<int> path_heights(int start_height, std::span<const SignedAxis> steps);

/// Undirected edge {origin, origin + d_axis}.
struct GridEdge {
  GridVertex origin;
  Axis axis = Axis::X;

  constexpr auto operator<=>(const GridEdge&) const = default;
  constexpr GridVertex end() const { return origin + step_vector(axis); }
  /// Normalizes an edge given as a directed step.
  static GridEdge from_step(GridVertex from, SignedAxis s);
};

enum class Chirality : std::uint8_t { Left = 0, Right = 1 };

/// Right(a) = {a, a+d_x, a+d_x+d_y}; Left(a) = {a, a+d_y, a+d_x+d_y}.
struct Triangle {
  GridVertex anchor;
  Chirality chirality = Chirality::Left;

  constexpr auto operator<=>(const Triangle&) const = default;

  /// Vertices in counterclockwise screen order, starting at the anchor.
  std::array<GridVertex, 3> vertices() const;
  /// The three edges, in axis order X, Y, Z.
  std::array<GridEdge, 3> edges() const;
  GridEdge edge(Axis a) const;
  /// The triangle sharing edge(a).
  Triangle neighbor(Axis a) const;
};

/// The two triangles incident to an edge: {Left, Right}.
std::array<Triangle, 2> incident_triangles(const GridEdge& e);

/// Triangle on the left of a directed step when walking counterclockwise.
Triangle left_of(GridVertex from, SignedAxis s);

/// Recovers a triangle from its (raw) vertex set. Throws if not a triangle.
Triangle triangle_from_vertices(std::array<GridVertex, 3> vs);

/// Spoke directions around a vertex in counterclockwise screen order.
inline constexpr std::array<SignedAxis, 6> kSpokes{
    SignedAxis{Axis::X, true},  SignedAxis{Axis::Y, false}, SignedAxis{Axis::Z, true},
    SignedAxis{Axis::X, false}, SignedAxis{Axis::Y, true},  SignedAxis{Axis::Z, false}};

/// The unit step from p to q. Throws if they are not adjacent.
SignedAxis step_between(GridVertex p, GridVertex q);

int spoke_index(SignedAxis s);
/// Triangle lying between spoke s and spoke s+1 around v.
Triangle slot_triangle(GridVertex v, int slot);
/// Inverse of slot_triangle. Returns -1 if t does not contain v.
int slot_of(GridVertex v, const Triangle& t);

struct Cube {
  long long x = 0;
  long long y = 0;
  long long z = 0;
  constexpr auto operator<=>(const Cube&) const = default;
  constexpr long long height() const { return x + y + z; }
  constexpr Cube operator+(const Cube& o) const { return {x + o.x, y + o.y, z + o.z}; }
};

enum class Color : std::uint8_t { Blue, Red, Yellow };
Color color_of(Axis normal);
std::string_view color_name(Color c);

/// Projection of the lower face of a cube with the given normal. Stored in
/// canonical form: anchor = phi(cube).
struct Calisson {
  GridVertex anchor;
  Axis normal = Axis::X;

  constexpr auto operator<=>(const Calisson&) const = default;

  static Calisson from_cube(const Cube& c, Axis normal);
  /// The calisson whose interior overlaps edge e.
  static Calisson covering(const GridEdge& e);

  Cube cube() const { return {anchor.u, anchor.v, 0}; }
  Color color() const { return color_of(normal); }
  GridEdge covered_edge() const;
  std::array<Triangle, 2> triangles() const;
  /// Quadrilateral corners in counterclockwise screen order.
  std::array<GridVertex, 4> corners() const;
};

struct VertexHash {
  std::size_t operator()(const GridVertex& p) const noexcept {
    std::uint64_t h = static_cast<std::uint32_t>(p.u);
    h = h * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint32_t>(p.v);
    h = h * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint32_t>(p.copy);
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

struct TriangleHash {
  std::size_t operator()(const Triangle& t) const noexcept {
    return VertexHash{}(t.anchor) * 3 + static_cast<std::size_t>(t.chirality);
  }
};

struct EdgeHash {
  std::size_t operator()(const GridEdge& e) const noexcept {
    return VertexHash{}(e.origin) * 5 + static_cast<std::size_t>(e.axis);
  }
};

}  // namespace calissons
