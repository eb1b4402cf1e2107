#include "calissons/baselines.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace calissons {

namespace {

std::set<GridEdge> normalized_edges(std::span<const GridEdge> X) {
  std::set<GridEdge> out;
  for (const GridEdge& e : X) out.insert({e.origin.raw(), e.axis});
  return out;
}

}  // namespace

Enumeration enumerate(const Region& region, std::span<const GridEdge> X, EnumerateOptions options) {
  const std::set<GridEdge> xs = normalized_edges(X);
  std::vector<Triangle> tris = region.triangles();
  std::sort(tris.begin(), tris.end());
  std::map<Triangle, std::size_t> index;
  for (std::size_t i = 0; i < tris.size(); ++i) index.emplace(tris[i], i);

  Enumeration out;
  std::vector<char> covered(tris.size(), 0);
  std::vector<int> color(tris.size(), -1);
  Tiling current;

  // Saliency is checked as soon as both sides of an X edge are covered, so
  // dead branches are cut early; the full check at the leaves stays.
  auto clashes = [&](std::size_t i, int c) {
    for (Axis a : kAxes) {
      if (xs.count(tris[i].edge(a)) == 0) continue;
      const auto it = index.find(tris[i].neighbor(a));
      if (it != index.end() && color[it->second] == c) return true;
    }
    return false;
  };
  bool stop = false;

  std::function<void(std::size_t)> go = [&](std::size_t from) {
    if (stop) return;
    while (from < tris.size() && covered[from]) ++from;
    if (from == tris.size()) {
      Tiling t = normalized(current);
      const auto bad = options.saliency ? check(region, X, t) : check_non_overlap(region, X, t);
      if (!bad.empty()) return;
      if (out.tilings.size() == options.limit) {
        out.truncated = true;
        stop = true;
        return;
      }
      out.tilings.push_back(std::move(t));
      return;
    }
    const Triangle& t = tris[from];
    for (Axis a : kAxes) {
      const GridEdge e = t.edge(a);
      if (xs.count(e) != 0 || region.classify(e) != EdgeKind::Interior) continue;
      const std::size_t j = index.at(t.neighbor(a));
      if (covered[j]) continue;
      const Calisson c = Calisson::covering(e);
      const int col = static_cast<int>(c.color());
      if (options.saliency && (clashes(from, col) || clashes(j, col))) continue;
      covered[from] = covered[j] = 1;
      color[from] = color[j] = col;
      current.push_back(c);
      go(from + 1);
      current.pop_back();
      covered[from] = covered[j] = 0;
      color[from] = color[j] = -1;
      if (stop) return;
    }
  };
  go(0);
  return out;
}

std::optional<Tiling> matching_solve(const Region& region, std::span<const GridEdge> X) {
  const std::set<GridEdge> xs = normalized_edges(X);
  std::vector<Triangle> left, right;
  for (const Triangle& t : region.triangles()) (t.chirality == Chirality::Left ? left : right).push_back(t);
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  if (left.size() != right.size()) return std::nullopt;
  std::map<Triangle, int> right_index;
  for (std::size_t i = 0; i < right.size(); ++i) right_index.emplace(right[i], static_cast<int>(i));

  const int n = static_cast<int>(left.size());
  std::vector<std::vector<std::pair<int, GridEdge>>> adj(left.size());
  for (int i = 0; i < n; ++i) {
    const Triangle& t = left[static_cast<std::size_t>(i)];
    for (Axis a : kAxes) {
      const GridEdge e = t.edge(a);
      if (xs.count(e) != 0 || region.classify(e) != EdgeKind::Interior) continue;
      adj[static_cast<std::size_t>(i)].push_back({right_index.at(t.neighbor(a)), e});
    }
  }

  // Hopcroft-Karp.
  constexpr int kFree = -1;
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> match_l(left.size(), kFree), match_r(right.size(), kFree), dist(left.size());
  auto bfs = [&] {
    std::deque<int> q;
    bool found = false;
    for (int i = 0; i < n; ++i) {
      if (match_l[static_cast<std::size_t>(i)] == kFree) {
        dist[static_cast<std::size_t>(i)] = 0;
        q.push_back(i);
      } else {
        dist[static_cast<std::size_t>(i)] = kInf;
      }
    }
    while (!q.empty()) {
      const int i = q.front();
      q.pop_front();
      for (const auto& [j, e] : adj[static_cast<std::size_t>(i)]) {
        const int k = match_r[static_cast<std::size_t>(j)];
        if (k == kFree) {
          found = true;
        } else if (dist[static_cast<std::size_t>(k)] == kInf) {
          dist[static_cast<std::size_t>(k)] = dist[static_cast<std::size_t>(i)] + 1;
          q.push_back(k);
        }
      }
    }
    return found;
  };
  std::function<bool(int)> dfs = [&](int i) {
    for (const auto& [j, e] : adj[static_cast<std::size_t>(i)]) {
      const int k = match_r[static_cast<std::size_t>(j)];
      if (k == kFree || (dist[static_cast<std::size_t>(k)] == dist[static_cast<std::size_t>(i)] + 1 && dfs(k))) {
        match_l[static_cast<std::size_t>(i)] = j;
        match_r[static_cast<std::size_t>(j)] = i;
        return true;
      }
    }
    dist[static_cast<std::size_t>(i)] = kInf;
    return false;
  };
  int size = 0;
  while (bfs()) {
    for (int i = 0; i < n; ++i) {
      if (match_l[static_cast<std::size_t>(i)] == kFree && dfs(i)) ++size;
    }
  }
  if (size != n) return std::nullopt;

  Tiling t;
  for (int i = 0; i < n; ++i) {
    for (const auto& [j, e] : adj[static_cast<std::size_t>(i)]) {
      if (j == match_l[static_cast<std::size_t>(i)]) {
        t.push_back(Calisson::covering(e));
        break;
      }
    }
  }
  return normalized(std::move(t));
}

Cnf sat_encode(const Region& region, std::span<const GridEdge> X) {
  std::set<Calisson> admissible;
  for (const Triangle& t : region.triangles()) {
    for (const GridEdge& e : t.edges()) {
      const Calisson c = Calisson::covering(e);
      if (region.admits(c)) admissible.insert(c);
    }
  }
  Cnf f;
  f.variables.assign(admissible.begin(), admissible.end());
  f.num_vars = static_cast<int>(f.variables.size());
  auto var = [&](const Calisson& c) {
    const auto it = std::lower_bound(f.variables.begin(), f.variables.end(), c);
    if (it == f.variables.end() || *it != c) return 0;
    return static_cast<int>(it - f.variables.begin()) + 1;
  };
  // Candidate variable of the calisson through edge e of triangle t, or 0.
  auto through = [&](const Triangle& t, Axis a) { return var(Calisson::covering(t.edge(a))); };

  std::vector<Triangle> tris = region.triangles();
  std::sort(tris.begin(), tris.end());
  for (const Triangle& t : tris) {
    std::vector<int> cover;
    for (Axis a : kAxes) {
      if (const int v = through(t, a)) cover.push_back(v);
    }
    f.clauses.push_back(cover);  // empty when the triangle cannot be covered
    for (std::size_t i = 0; i < cover.size(); ++i) {
      for (std::size_t j = i + 1; j < cover.size(); ++j) f.clauses.push_back({-cover[i], -cover[j]});
    }
  }
  for (const GridEdge& e : normalized_edges(X)) {
    if (const int v = var(Calisson::covering(e))) f.clauses.push_back({-v});
  }
  for (const GridEdge& e : normalized_edges(X)) {
    const auto sides = incident_triangles(e);
    if (!region.contains(sides[0]) || !region.contains(sides[1])) continue;
    std::array<Axis, 2> other{};
    std::size_t k = 0;
    for (Axis a : kAxes) {
      if (a != e.axis) other[k++] = a;
    }
    // A calisson of color b on one side forces color c on the other.
    for (std::size_t s = 0; s < 2; ++s) {
      for (std::size_t c = 0; c < 2; ++c) {
        const int premise = through(sides[s], other[c]);
        if (premise == 0) continue;
        const int forced = through(sides[1 - s], other[1 - c]);
        if (forced == 0) {
          f.clauses.push_back({-premise});
        } else {
          f.clauses.push_back({-premise, forced});
        }
      }
    }
  }
  return f;
}

std::string to_dimacs(const Cnf& f) {
  std::ostringstream os;
  for (int i = 0; i < f.num_vars; ++i) {
    const Calisson& c = f.variables[static_cast<std::size_t>(i)];
    const Cube q = c.cube();
    os << "c " << i + 1 << " cube " << q.x << ' ' << q.y << ' ' << q.z << " normal " << axis_char(c.normal) << '\n';
  }
  os << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& cl : f.clauses) {
    for (int lit : cl) os << lit << ' ';
    os << "0\n";
  }
  return os.str();
}

std::optional<std::vector<bool>> dpll_solve(const Cnf& f, int max_vars) {
  if (f.num_vars > max_vars) throw std::length_error("formula has too many variables for the internal solver");
  // 0 unknown, 1 true, -1 false.
  std::vector<signed char> val(static_cast<std::size_t>(f.num_vars) + 1, 0);
  auto lit_value = [&](int lit) {
    const signed char v = val[static_cast<std::size_t>(std::abs(lit))];
    return lit > 0 ? v : static_cast<signed char>(-v);
  };

  // Returns false on conflict; records assigned variables in trail.
  auto propagate = [&](std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& cl : f.clauses) {
        int unknown = 0;
        int last = 0;
        bool sat = false;
        for (int lit : cl) {
          const signed char v = lit_value(lit);
          if (v > 0) {
            sat = true;
            break;
          }
          if (v == 0) {
            ++unknown;
            last = lit;
          }
        }
        if (sat) continue;
        if (unknown == 0) return false;
        if (unknown == 1) {
          val[static_cast<std::size_t>(std::abs(last))] = last > 0 ? 1 : -1;
          trail.push_back(std::abs(last));
          changed = true;
        }
      }
    }
    return true;
  };

  std::function<bool()> search = [&]() {
    std::vector<int> trail;
    if (!propagate(trail)) {
      for (int v : trail) val[static_cast<std::size_t>(v)] = 0;
      return false;
    }
    int pick = 0;
    for (int v = 1; v <= f.num_vars; ++v) {
      if (val[static_cast<std::size_t>(v)] == 0) {
        pick = v;
        break;
      }
    }
    if (pick == 0) return true;
    for (signed char choice : {static_cast<signed char>(1), static_cast<signed char>(-1)}) {
      val[static_cast<std::size_t>(pick)] = choice;
      if (search()) return true;
    }
    val[static_cast<std::size_t>(pick)] = 0;
    for (int v : trail) val[static_cast<std::size_t>(v)] = 0;
    return false;
  };

  if (!search()) return std::nullopt;
  std::vector<bool> out(static_cast<std::size_t>(f.num_vars) + 1, false);
  for (int v = 1; v <= f.num_vars; ++v) out[static_cast<std::size_t>(v)] = val[static_cast<std::size_t>(v)] > 0;
  return out;
}

Tiling decode(const Cnf& f, const std::vector<bool>& assignment) {
  Tiling t;
  for (int v = 1; v <= f.num_vars; ++v) {
    if (assignment.at(static_cast<std::size_t>(v))) t.push_back(f.variables[static_cast<std::size_t>(v) - 1]);
  }
  return normalized(std::move(t));
}

}  // namespace calissons
