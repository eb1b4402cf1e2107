#pragma once

#include <random>
#include <vector>

#include "calissons/region.hpp"

namespace calissons {

struct InstanceOptions {
  int min_triangles = 2;
  int max_triangles = 40;
  double slit_probability = 0.15;
  // Share of instances whose X is drawn from the salient edges of a hidden
  // random tiling (hence solvable); the rest use uniformly random edges.
  double planted_share = 0.5;
};

struct Instance {
  Region region;
  std::vector<GridEdge> X;
};

/// Random simply connected region with a random interior constraint set.
Instance random_instance(std::mt19937_64& rng, const InstanceOptions& options = {});

/// Random edge-grown region with enclosed holes filled, so the size may end
/// up above target. Cavities open at a single vertex are kept.
Region random_region(std::mt19937_64& rng, int target_triangles, double slit_probability);

/// Random interior edges of a region, each kept with probability p.
std::vector<GridEdge> random_interior_edges(std::mt19937_64& rng, const Region& region, double p);

/// Up to count random salient edges of a random tiling of the region, so the
/// instance is solvable. Empty if the region has no tiling.
std::vector<GridEdge> planted_constraints(std::mt19937_64& rng, const Region& region, std::size_t count);

/// Random distinct grid edges with both endpoints within Euclidean distance
/// radius of the origin (unit edge length).
std::vector<GridEdge> random_disc_edges(std::mt19937_64& rng, int radius, std::size_t count);

}  // namespace calissons
