#include "calissons/constraints.hpp"

#include <algorithm>

namespace calissons {

bool cube_leq(const Cube& a, const Cube& b) { return a.x <= b.x && a.y <= b.y && a.z <= b.z; }

UnbreakableFamily unbreakable_family(const GridEdge& e) {
  const Cube o{e.origin.u, e.origin.v, 0};
  UnbreakableFamily f;
  f.source_edge = {e.origin.raw(), e.axis};
  f.front0 = o;
  switch (e.axis) {
    case Axis::Z:
      f.left0 = o + Cube{0, -1, 0};
      f.right0 = o + Cube{-1, 0, 0};
      f.back0 = o + Cube{-1, -1, 0};
      break;
    case Axis::X:
      f.left0 = o + Cube{0, -1, 0};
      f.right0 = o + Cube{0, 0, -1};
      f.back0 = o + Cube{0, -1, -1};
      break;
    case Axis::Y:
      f.left0 = o + Cube{-1, 0, 0};
      f.right0 = o + Cube{0, 0, -1};
      f.back0 = o + Cube{-1, 0, -1};
      break;
  }
  return f;
}

bool UnbreakableFamily::binds(const Cube& a, const Cube& b) const {
  auto k_of = [](const Cube& c, const Cube& base) { return c.x - base.x; };
  auto matches = [&](const Cube& p, const Cube& q) {
    long long k = k_of(p, front0);
    if (p == front(k) && q == back(k + 1)) return true;
    k = k_of(p, left0);
    return p == left(k) && q == right(k);
  };
  return matches(a, b) || matches(b, a);
}

std::string_view tag_name(ArcTag t) {
  switch (t) {
    case ArcTag::Ascending: return "ascending";
    case ArcTag::BoundaryReverse: return "boundary_rev";
    case ArcTag::XReverse: return "x_rev";
    case ArcTag::Saliency: return "saliency";
  }
  return "";
}

ProjectedGraph::ProjectedGraph(std::vector<GridVertex> vertices, std::vector<Arc> arcs)
    : vertices_(std::move(vertices)), arcs_(std::move(arcs)) {
  index_.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) index_.emplace(vertices_[i], static_cast<int>(i));

  const std::size_t n = vertices_.size();
  out_offsets_.assign(n + 1, 0);
  in_offsets_.assign(n + 1, 0);
  for (const Arc& a : arcs_) {
    ++out_offsets_[static_cast<std::size_t>(a.from) + 1];
    ++in_offsets_[static_cast<std::size_t>(a.to) + 1];
  }
  for (std::size_t i = 0; i < n; ++i) {
    out_offsets_[i + 1] += out_offsets_[i];
    in_offsets_[i + 1] += in_offsets_[i];
  }
  out_list_.resize(arcs_.size());
  in_list_.resize(arcs_.size());
  std::vector<int> out_fill(out_offsets_.begin(), out_offsets_.end() - 1);
  std::vector<int> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
  for (std::size_t k = 0; k < arcs_.size(); ++k) {
    out_list_[static_cast<std::size_t>(out_fill[static_cast<std::size_t>(arcs_[k].from)]++)] = static_cast<int>(k);
    in_list_[static_cast<std::size_t>(in_fill[static_cast<std::size_t>(arcs_[k].to)]++)] = static_cast<int>(k);
  }
}

int ProjectedGraph::index_of(const GridVertex& p) const {
  const auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

std::span<const int> ProjectedGraph::out_arcs(int i) const {
  const auto b = static_cast<std::size_t>(out_offsets_[static_cast<std::size_t>(i)]);
  const auto e = static_cast<std::size_t>(out_offsets_[static_cast<std::size_t>(i) + 1]);
  return std::span<const int>(out_list_).subspan(b, e - b);
}

std::span<const int> ProjectedGraph::in_arcs(int i) const {
  const auto b = static_cast<std::size_t>(in_offsets_[static_cast<std::size_t>(i)]);
  const auto e = static_cast<std::size_t>(in_offsets_[static_cast<std::size_t>(i) + 1]);
  return std::span<const int>(in_list_).subspan(b, e - b);
}

std::size_t ProjectedGraph::count(ArcTag tag) const {
  return static_cast<std::size_t>(
      std::count_if(arcs_.begin(), arcs_.end(), [tag](const Arc& a) { return a.tag == tag; }));
}

std::array<GridVertex, 2> saliency_diagonal(const GridEdge& e) {
  const GridVertex p = e.origin.raw();
  switch (e.axis) {
    case Axis::X: return {p - step_vector(Axis::Y), p - step_vector(Axis::Z)};
    case Axis::Y: return {p - step_vector(Axis::X), p - step_vector(Axis::Z)};
    case Axis::Z: return {p - step_vector(Axis::X), p - step_vector(Axis::Y)};
  }
  return {};
}

ProjectedGraph build_projected_graph(const Region& region, std::span<const GridEdge> constraints) {
  std::vector<GridVertex> vertices = region.vertices();
  std::unordered_map<GridVertex, int, VertexHash> index;
  index.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], static_cast<int>(i));

  std::vector<Arc> arcs;
  arcs.reserve(region.triangles().size() * 3 + region.boundary().size() + constraints.size() * 3);
  auto copy_index = [&](GridVertex p, const Triangle& t) { return index.at(region.vertex_copy(p, t)); };

  for (const Triangle& t : region.triangles()) {
    for (const GridEdge& e : t.edges()) {
      arcs.push_back({copy_index(e.origin, t), copy_index(e.end(), t), 1, ArcTag::Ascending});
    }
  }
  for (const BoundaryStep& b : region.boundary()) {
    const GridEdge e = GridEdge::from_step(b.from, b.step);
    const Triangle t = left_of(b.from.raw(), b.step);
    arcs.push_back({copy_index(e.end(), t), copy_index(e.origin, t), -1, ArcTag::BoundaryReverse});
  }
  for (const GridEdge& raw : constraints) {
    const GridEdge e{raw.origin.raw(), raw.axis};
    switch (region.classify(e)) {
      case EdgeKind::Outside: throw ConstraintError("constraint edge lies outside the region", e);
      case EdgeKind::Boundary: throw ConstraintError("constraint edge lies on the region contour", e);
      case EdgeKind::Interior: break;
    }
    const Triangle t = incident_triangles(e)[0];
    arcs.push_back({copy_index(e.end(), t), copy_index(e.origin, t), -1, ArcTag::XReverse});
    const auto diag = saliency_diagonal(e);
    const Triangle t0 = triangle_from_vertices({e.origin, e.end(), diag[0]});
    const Triangle t1 = triangle_from_vertices({e.origin, e.end(), diag[1]});
    const int a = copy_index(diag[0], t0);
    const int b = copy_index(diag[1], t1);
    arcs.push_back({a, b, 0, ArcTag::Saliency});
    arcs.push_back({b, a, 0, ArcTag::Saliency});
  }

  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return ProjectedGraph(std::move(vertices), std::move(arcs));
}

}  // namespace calissons
