#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "calissons/region.hpp"
#include "calissons/tiling.hpp"

namespace calissons {

struct EnumerateOptions {
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  bool saliency = true;  // false: only rule (i) is enforced
};

struct Enumeration {
  std::vector<Tiling> tilings;
  bool truncated = false;
};

/// Exhaustive backtracking over the lexicographically first uncovered
/// triangle. Intended for small regions only.
Enumeration enumerate(const Region& region, std::span<const GridEdge> X, EnumerateOptions options = {});

/// Perfect matching between left and right triangles, pairs separated by an
/// X edge excluded. The result respects rule (i) but not necessarily (ii).
std::optional<Tiling> matching_solve(const Region& region, std::span<const GridEdge> X);

struct Cnf {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
  std::vector<Calisson> variables;  // variable i is variables[i - 1]
};

Cnf sat_encode(const Region& region, std::span<const GridEdge> X);
std::string to_dimacs(const Cnf& f);

/// Complete search with unit propagation. Throws std::length_error above
/// max_vars variables. Index 0 of the assignment is unused.
std::optional<std::vector<bool>> dpll_solve(const Cnf& f, int max_vars = 120);

Tiling decode(const Cnf& f, const std::vector<bool>& assignment);

}  // namespace calissons
