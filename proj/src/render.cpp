#include "calissons/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace calissons {

namespace {

// Screen position of a grid vertex: unit edges, y pointing down.
struct Point {
  double x;
  double y;
};

Point screen(const GridVertex& p) {
  return {std::sqrt(3.0) / 2.0 * (p.u - p.v), (p.u + p.v) / 2.0};
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s(buf);
  if (s == "-0.0000") s = "0.0000";
  return s;
}

std::string_view fill(Color c) {
  switch (c) {
    case Color::Blue: return "#3a66c4";
    case Color::Red: return "#d2453a";
    case Color::Yellow: return "#f1c232";
  }
  return "#000000";
}

void validate(const PuzzleDocument& d, const Tiling& t) {
  if (!d.region) return;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!d.region->admits(t[i])) {
      throw RuleError("tiling_mismatch", "calisson does not fit in the document's region", "/tiling/" + std::to_string(i));
    }
  }
}

// Grid edges to draw: region edges, or for infinite documents the edges of
// the triangles near X and the tiling.
std::set<GridEdge> grid_edges(const PuzzleDocument& d, const std::optional<Tiling>& t) {
  std::set<GridEdge> out;
  if (d.region) {
    for (const Triangle& tri : d.region->triangles()) {
      for (const GridEdge& e : tri.edges()) out.insert(e);
    }
    return out;
  }
  std::set<Triangle> tris;
  for (const GridEdge& e : d.edges) {
    for (const Triangle& tri : incident_triangles(e)) tris.insert(tri);
  }
  if (t) {
    for (const Calisson& c : *t) {
      for (const Triangle& tri : c.triangles()) tris.insert(tri);
    }
  }
  for (const Triangle& tri : tris) {
    for (const GridEdge& e : tri.edges()) out.insert(e);
  }
  return out;
}

}  // namespace

std::string render_svg(const PuzzleDocument& d, const std::optional<Tiling>& t) {
  if (t) validate(d, *t);
  const std::set<GridEdge> edges = grid_edges(d, t);

  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  bool first = true;
  auto extend = [&](const GridVertex& p) {
    const Point s = screen(p);
    if (first) {
      x0 = x1 = s.x;
      y0 = y1 = s.y;
      first = false;
    }
    x0 = std::min(x0, s.x);
    x1 = std::max(x1, s.x);
    y0 = std::min(y0, s.y);
    y1 = std::max(y1, s.y);
  };
  for (const GridEdge& e : edges) {
    extend(e.origin);
    extend(e.end());
  }
  const double margin = 0.5;
  x0 -= margin;
  y0 -= margin;
  x1 += margin;
  y1 += margin;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(x0) << ' ' << num(y0) << ' ' << num(x1 - x0)
     << ' ' << num(y1 - y0) << "\" width=\"" << num(40 * (x1 - x0)) << "\" height=\"" << num(40 * (y1 - y0))
     << "\">\n";
  if (d.title) {
    std::string title;
    for (char c : *d.title) {
      switch (c) {
        case '<': title += "&lt;"; break;
        case '>': title += "&gt;"; break;
        case '&': title += "&amp;"; break;
        default: title += c;
      }
    }
    os << "  <title>" << title << "</title>\n";
  }

  auto line = [&](const GridEdge& e, std::string_view stroke, std::string_view width) {
    const Point a = screen(e.origin);
    const Point b = screen(e.end());
    os << "  <line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x) << "\" y2=\"" << num(b.y)
       << "\" stroke=\"" << stroke << "\" stroke-width=\"" << width << "\" stroke-linecap=\"round\"/>\n";
  };

  os << "  <g id=\"grid\">\n";
  for (const GridEdge& e : edges) line(e, "#c8c8c8", "0.02");
  os << "  </g>\n";

  if (t) {
    os << "  <g id=\"tiling\">\n";
    for (const Calisson& c : *t) {
      os << "    <polygon fill=\"" << fill(c.color()) << "\" stroke=\"#202020\" stroke-width=\"0.03\" points=\"";
      const auto corners = c.corners();
      for (std::size_t i = 0; i < corners.size(); ++i) {
        const Point s = screen(corners[i]);
        os << (i ? " " : "") << num(s.x) << ',' << num(s.y);
      }
      os << "\"/>\n";
    }
    os << "  </g>\n";
  }

  if (d.region) {
    os << "  <g id=\"contour\">\n";
    for (const BoundaryStep& b : d.region->boundary()) line(GridEdge::from_step(b.from, b.step), "#000000", "0.06");
    os << "  </g>\n";
  }

  os << "  <g id=\"constraints\">\n";
  for (const GridEdge& e : d.edges) line(e, "#000000", "0.14");
  os << "  </g>\n";
  os << "</svg>\n";
  return os.str();
}

std::string render_ascii(const PuzzleDocument& d, const std::optional<Tiling>& t) {
  if (t) validate(d, *t);
  std::set<GridEdge> edges = grid_edges(d, t);

  // Vertex (u, v) sits at column 2(u - v), row 2(u + v).
  int c0 = 0, c1 = 0, r0 = 0, r1 = 0;
  bool first = true;
  for (const GridEdge& e : edges) {
    for (const GridVertex& p : {e.origin, e.end()}) {
      const int c = 2 * (p.u - p.v);
      const int r = 2 * (p.u + p.v);
      if (first) {
        c0 = c1 = c;
        r0 = r1 = r;
        first = false;
      }
      c0 = std::min(c0, c);
      c1 = std::max(c1, c);
      r0 = std::min(r0, r);
      r1 = std::max(r1, r);
    }
  }
  if (first) return "\n";
  std::vector<std::string> canvas(static_cast<std::size_t>(r1 - r0 + 1), std::string(static_cast<std::size_t>(c1 - c0 + 1), ' '));
  auto put = [&](int r, int c, char ch) { canvas[static_cast<std::size_t>(r - r0)][static_cast<std::size_t>(c - c0)] = ch; };

  std::set<GridEdge> covered;
  if (t) {
    for (const Calisson& c : *t) covered.insert(c.covered_edge());
  }
  auto draw = [&](const GridEdge& e, char mark) {
    const int c = 2 * (e.origin.u - e.origin.v);
    const int r = 2 * (e.origin.u + e.origin.v);
    switch (e.axis) {
      case Axis::X: put(r + 1, c + 1, mark ? mark : '\\'); break;
      case Axis::Y: put(r + 1, c - 1, mark ? mark : '/'); break;
      case Axis::Z:
        for (int k = 1; k <= 3; ++k) put(r - k, c, mark ? mark : '|');
        break;
    }
  };
  for (const GridEdge& e : edges) {
    if (covered.count(e) == 0) draw(e, 0);
  }
  for (const GridEdge& e : d.edges) draw(e, '*');
  for (const GridEdge& e : edges) {
    put(2 * (e.origin.u + e.origin.v), 2 * (e.origin.u - e.origin.v), '.');
    put(2 * (e.end().u + e.end().v), 2 * (e.end().u - e.end().v), '.');
  }
  if (t) {
    for (const Calisson& c : *t) {
      const GridEdge e = c.covered_edge();
      const int col = 2 * (e.origin.u - e.origin.v);
      const int row = 2 * (e.origin.u + e.origin.v);
      const char letter = color_name(c.color())[0];
      switch (e.axis) {
        case Axis::X: put(row + 1, col + 1, letter); break;
        case Axis::Y: put(row + 1, col - 1, letter); break;
        case Axis::Z: put(row - 2, col, letter); break;
      }
    }
  }

  std::string out;
  for (std::string& row : canvas) {
    row.erase(row.find_last_not_of(' ') + 1);
    out += row;
    out += '\n';
  }
  return out;
}

}  // namespace calissons
