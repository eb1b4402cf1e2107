#include <doctest.h>

#include <random>
#include <set>

#include "calissons/constraints.hpp"
#include "calissons/generator.hpp"
#include "calissons/shortest_paths.hpp"

using namespace calissons;

TEST_CASE("cube order") {
  CHECK(cube_leq({0, 0, 0}, {1, 1, 1}));
  CHECK_FALSE(cube_leq({0, 1, 0}, {1, 0, 2}));
  CHECK_FALSE(cube_leq({1, 0, 2}, {0, 1, 0}));
}

TEST_CASE("unbreakable families") {
  const auto z = unbreakable_family({{0, 0}, Axis::Z});
  CHECK(z.front(0) == Cube{0, 0, 0});
  CHECK(z.back(1) == Cube{0, 0, 1});
  CHECK(z.left(0) == Cube{0, -1, 0});
  CHECK(z.right(0) == Cube{-1, 0, 0});

  const auto x = unbreakable_family({{0, 0}, Axis::X});
  CHECK(x.left(0) == Cube{0, -1, 0});
  CHECK(x.right(0) == Cube{0, 0, -1});
  CHECK(x.front(0) == Cube{0, 0, 0});
  CHECK(x.back(0) == Cube{0, -1, -1});

  for (Axis a : kAxes) {
    const auto f = unbreakable_family({{2, -3}, a});
    for (int k = -2; k <= 2; ++k) {
      CAPTURE(k);
      CHECK(cube_leq(f.front(k - 1), f.back(k)));
      CHECK(cube_leq(f.back(k), f.left(k)));
      CHECK(cube_leq(f.back(k), f.right(k)));
      CHECK(cube_leq(f.left(k), f.front(k)));
      CHECK(cube_leq(f.right(k), f.front(k)));
      CHECK_FALSE(cube_leq(f.left(k), f.right(k)));
      CHECK_FALSE(cube_leq(f.right(k), f.left(k)));
      CHECK(f.binds(f.front(k), f.back(k + 1)));
      CHECK(f.binds(f.back(k + 1), f.front(k)));
      CHECK(f.binds(f.left(k), f.right(k)));
      CHECK_FALSE(f.binds(f.left(k), f.front(k)));
      CHECK_FALSE(f.binds(f.front(k), f.back(k)));
      // Every family cube sits over a corner of the constrained edge's
      // calisson or its saliency diagonal.
      const auto diag = saliency_diagonal({{2, -3}, a});
      const std::set<GridVertex> ends{diag[0], diag[1]};
      CHECK(ends.count(canonicalize(f.left(k).x, f.left(k).y, f.left(k).z)) == 1);
      CHECK(ends.count(canonicalize(f.right(k).x, f.right(k).y, f.right(k).z)) == 1);
    }
  }
}

TEST_CASE("projected graph of the unit hexagon") {
  const Region h = Region::hexagon(1);
  const ProjectedGraph g = build_projected_graph(h, {});
  CHECK(g.size() == 7);
  CHECK(g.count(ArcTag::BoundaryReverse) == 6);
  CHECK(g.count(ArcTag::Saliency) == 0);
  CHECK(g.count(ArcTag::XReverse) == 0);
  CHECK(g.count(ArcTag::Ascending) == 12);
}

TEST_CASE("saliency arcs of a vertical edge") {
  const Region h = Region::hexagon(2);
  const std::vector<GridEdge> X{{{0, 0}, Axis::Z}};
  const ProjectedGraph g = build_projected_graph(h, X);
  const int a = g.index_of({0, -1});
  const int b = g.index_of({-1, 0});
  int found = 0;
  for (const Arc& arc : g.arcs()) {
    if (arc.tag != ArcTag::Saliency) continue;
    CHECK(arc.weight == 0);
    if ((arc.from == a && arc.to == b) || (arc.from == b && arc.to == a)) ++found;
  }
  CHECK(found == 2);
  CHECK(g.count(ArcTag::XReverse) == 1);
}

TEST_CASE("constraint edges off the interior are rejected") {
  const Region h = Region::hexagon(2);
  const std::vector<GridEdge> on_contour{{{2, 1}, Axis::Y}};
  CHECK_THROWS_AS(build_projected_graph(h, on_contour), ConstraintError);
  const std::vector<GridEdge> outside{{{5, 5}, Axis::X}};
  try {
    build_projected_graph(h, outside);
    FAIL("expected rejection");
  } catch (const ConstraintError& e) {
    CHECK(e.edge() == outside[0]);
  }
}

TEST_CASE("projected graph invariants on random instances") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = random_instance(rng);
    const ProjectedGraph g = build_projected_graph(inst.region, inst.X);
    std::set<std::tuple<int, int, int>> plus;
    for (const Arc& a : g.arcs()) {
      if (a.weight == 1) plus.insert({a.from, a.to, 1});
    }
    for (const Arc& a : g.arcs()) {
      switch (a.tag) {
        case ArcTag::Ascending: CHECK(a.weight == 1); break;
        case ArcTag::BoundaryReverse:
        case ArcTag::XReverse:
          CHECK(a.weight == -1);
          CHECK(plus.count({a.to, a.from, 1}) == 1);
          break;
        case ArcTag::Saliency: CHECK(a.weight == 0); break;
      }
    }
    CHECK(g.arcs().size() <= 3 * g.size() + 2 * inst.region.boundary().size() + 4 * inst.X.size());

    // Translation covariance.
    const Offset t{3, -2};
    std::vector<Triangle> moved;
    for (const Triangle& tri : inst.region.triangles()) moved.push_back({tri.anchor + t, tri.chirality});
    std::vector<GridEdge> slits, xs;
    for (const GridEdge& e : inst.region.slits()) slits.push_back({e.origin + t, e.axis});
    for (const GridEdge& e : inst.X) xs.push_back({e.origin + t, e.axis});
    const ProjectedGraph g2 = build_projected_graph(Region::from_triangles(moved, slits), xs);
    REQUIRE(g2.size() == g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      const GridVertex p = g.vertex(static_cast<int>(i));
      CHECK(g2.vertex(static_cast<int>(i)) == GridVertex{p.u + t.du, p.v + t.dv, p.copy});
    }
    CHECK(g2.arcs() == g.arcs());

    // Along every X edge the distances differ by exactly one.
    std::vector<WeightedArc> w;
    for (const Arc& a : g.arcs()) w.push_back({a.from, a.to, a.weight});
    const std::pair<int, long long> src{0, 0};
    const ShortestPaths sp = bellman_ford(static_cast<int>(g.size()), w, std::span(&src, 1));
    if (sp.has_negative_cycle()) continue;
    for (const GridEdge& e : inst.X) {
      const auto tri = incident_triangles(e)[0];
      const int p = g.index_of(inst.region.vertex_copy(e.origin, tri));
      const int q = g.index_of(inst.region.vertex_copy(e.end(), tri));
      CHECK(sp.dist[static_cast<std::size_t>(q)] == sp.dist[static_cast<std::size_t>(p)] + 1);
    }
  }
}

TEST_CASE("negative cycle extraction") {
  // 0 -> 1 -> 2 -> 0 with total weight -1, plus a tail 3 -> 0.
  const std::vector<WeightedArc> arcs{{0, 1, 2}, {1, 2, -4}, {2, 0, 1}, {3, 0, 5}};
  const std::pair<int, long long> src{3, 0};
  const ShortestPaths sp = bellman_ford(4, arcs, std::span(&src, 1));
  REQUIRE(sp.has_negative_cycle());
  CHECK(path_weight(arcs, sp.cycle) < 0);
  for (std::size_t i = 0; i < sp.cycle.size(); ++i) {
    const auto& a = arcs[static_cast<std::size_t>(sp.cycle[i])];
    const auto& b = arcs[static_cast<std::size_t>(sp.cycle[(i + 1) % sp.cycle.size()])];
    CHECK(a.to == b.from);
  }
  const std::vector<WeightedArc> fine{{0, 1, 2}, {1, 2, -1}, {2, 0, 1}};
  const std::pair<int, long long> s0{0, 0};
  const ShortestPaths ok = bellman_ford(3, fine, std::span(&s0, 1));
  CHECK_FALSE(ok.has_negative_cycle());
  CHECK(ok.dist == std::vector<long long>{0, 2, 1});
}
