#pragma once

#include <random>

#include "bperf/family.hpp"
#include "bperf/graph.hpp"
#include "bperf/structure.hpp"

namespace bperf::testing {

inline std::mt19937_64 rng(uint64_t seed) { return std::mt19937_64(seed); }

inline Graph random_graph(int n, double p, std::mt19937_64& gen) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(gen)) edges.push_back({i, j});
  return Graph(n, edges);
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& gen) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), gen);
  return perm;
}

struct BoatSample {
  Graph graph;
  int clique_number;
};

// A random special boat with shuffled labels: q matched pairs of parts plus
// the two apex parts at index 0, each part of size at most 3, side parts
// pairwise complete, matched parts complete across, nothing else.
inline BoatSample random_special_boat(std::mt19937_64& gen) {
  std::uniform_int_distribution<int> qd(2, 4), size(1, 3), opt(0, 3);
  int q = qd(gen);
  std::vector<int> a_sizes(q + 1), b_sizes(q + 1);
  a_sizes[0] = q == 2 ? size(gen) : std::max(0, opt(gen) - 1);
  b_sizes[0] = q == 2 ? size(gen) : std::max(0, opt(gen) - 1);
  for (int j = 1; j <= q; ++j) {
    a_sizes[j] = size(gen);
    b_sizes[j] = size(gen);
  }
  int n = 0;
  std::vector<std::vector<int>> a_part(q + 1), b_part(q + 1);
  for (int j = 0; j <= q; ++j)
    for (int i = 0; i < a_sizes[j]; ++i) a_part[j].push_back(n++);
  for (int j = 0; j <= q; ++j)
    for (int i = 0; i < b_sizes[j]; ++i) b_part[j].push_back(n++);
  std::vector<int> relabel = random_permutation(n, gen);
  std::vector<std::pair<int, int>> edges;
  auto connect = [&](const std::vector<int>& xs, const std::vector<int>& ys) {
    for (int x : xs)
      for (int y : ys) edges.push_back({relabel[x], relabel[y]});
  };
  auto fill = [&](const std::vector<std::vector<int>>& parts) {
    for (int j = 0; j <= q; ++j) {
      for (size_t s = 0; s + 1 < parts[j].size(); ++s)
        for (size_t t = s + 1; t < parts[j].size(); ++t)
          edges.push_back({relabel[parts[j][s]], relabel[parts[j][t]]});
      for (int k = j + 1; k <= q; ++k) connect(parts[j], parts[k]);
    }
  };
  fill(a_part);
  fill(b_part);
  for (int j = 1; j <= q; ++j) connect(a_part[j], b_part[j]);
  int side_a = 0, side_b = 0, best_pair = 0;
  for (int j = 0; j <= q; ++j) {
    side_a += a_sizes[j];
    side_b += b_sizes[j];
    if (j >= 1) best_pair = std::max(best_pair, a_sizes[j] + b_sizes[j]);
  }
  return {Graph(n, edges), std::max({side_a, side_b, best_pair})};
}

struct IntervalSample {
  Graph graph;
  int clique_number;
};

// Random interval graph; interval graphs are chordal, hence weakly chordal,
// and the clique number is the maximum interval overlap.
inline IntervalSample random_interval_graph(int n, std::mt19937_64& gen) {
  std::uniform_int_distribution<int> point(0, 2 * n);
  std::vector<std::pair<int, int>> iv(n);
  for (auto& [lo, hi] : iv) {
    lo = point(gen);
    hi = point(gen);
    if (lo > hi) std::swap(lo, hi);
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (iv[i].first <= iv[j].second && iv[j].first <= iv[i].second) edges.push_back({i, j});
  int best = 0;
  for (int x = 0; x <= 2 * n; ++x) {
    int overlap = 0;
    for (const auto& [lo, hi] : iv) overlap += lo <= x && x <= hi;
    best = std::max(best, overlap);
  }
  return {Graph(n, edges), best};
}

// Grows a graph by random edge additions, keeping only those that stay clear
// of the forbidden family.
inline Graph random_family_free_graph(int n, int attempts, std::mt19937_64& gen) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<std::pair<int, int>> edges;
  Graph g(n, {});
  for (int t = 0; t < attempts; ++t) {
    int u = pick(gen), v = pick(gen);
    if (u == v || g.adjacent(u, v)) continue;
    auto trial = edges;
    trial.push_back({u, v});
    Graph h(n, trial);
    if (!find_forbidden(h)) {
      edges = std::move(trial);
      g = std::move(h);
    }
  }
  return g;
}

// Certifies a two-pair from the definition: every chordless path between the
// two vertices has exactly two edges.
inline bool certified_two_pair(const Graph& g, int x, int y) {
  if (x == y || g.adjacent(x, y)) return false;
  bool ok = true;
  std::vector<int> path{x};
  std::vector<bool> used(g.n(), false);
  used[x] = true;
  auto chordless_extension = [&](int w) {
    for (size_t i = 0; i + 1 < path.size(); ++i)
      if (g.adjacent(path[i], w)) return false;
    return true;
  };
  auto dfs = [&](auto&& self, int last) -> void {
    if (!ok) return;
    for (int w = 0; w < g.n(); ++w) {
      if (used[w] || !g.adjacent(last, w)) continue;
      if (!chordless_extension(w)) continue;
      if (w == y) {
        if (path.size() != 2) ok = false;
        continue;
      }
      used[w] = true;
      path.push_back(w);
      self(self, w);
      path.pop_back();
      used[w] = false;
    }
  };
  dfs(dfs, x);
  return ok;
}

}  // namespace bperf::testing
