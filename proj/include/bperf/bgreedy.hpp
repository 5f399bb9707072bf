#pragma once

#include "bperf/oracles.hpp"

namespace bperf {

class bad_order : public std::runtime_error {
 public:
  explicit bad_order(const std::string& what) : std::runtime_error(what) {}
};

class has_b_vertex : public std::runtime_error {
 public:
  explicit has_b_vertex(const std::string& what) : std::runtime_error(what) {}
};

// Greedy coloring along the given vertex order, smallest absent color first.
inline Coloring initial_coloring(const Graph& g, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.n()) throw bad_order("order must list every vertex exactly once");
  {
    std::vector<char> seen(g.n(), 0);
    for (int v : order) {
      if (v < 0 || v >= g.n() || seen[v]) throw bad_order("order must be a permutation of 0..n-1");
      seen[v] = 1;
    }
  }
  std::vector<int> colors(g.n(), 0);
  for (int v : order) {
    std::vector<char> taken(g.n() + 2, 0);
    for (int u : g.neighbors(v))
      if (colors[u] > 0) taken[colors[u]] = 1;
    int c = 1;
    while (taken[c]) ++c;
    colors[v] = c;
  }
  return Coloring(colors);
}

struct EliminationRound {
  int eliminated_color;
  // (vertex, new color) per recolored vertex, colors as in the renumbered
  // result coloring.
  std::vector<std::pair<int, int>> recolored;
};

// Dissolve color class `dead` (which must have no b-vertex): every vertex of
// that class moves to the smallest other color absent from its neighborhood,
// then colors above `dead` shift down. The dead class is independent and no
// neighbor of a dead vertex is itself recolored, so the sweep order does not
// matter.
inline std::pair<Coloring, EliminationRound> eliminate_color(const Graph& g, const Coloring& c, int dead) {
  if (dead < 1 || dead > c.k) throw std::invalid_argument("color " + std::to_string(dead) + " out of range");
  auto bv = b_vertices(g, c);
  if (!bv[dead].empty())
    throw has_b_vertex("color " + std::to_string(dead) + " has a b-vertex, vertex " + std::to_string(bv[dead][0]));

  std::vector<int> colors = c.assignment;
  EliminationRound round{dead, {}};
  for (int v = 0; v < g.n(); ++v) {
    if (colors[v] != dead) continue;
    std::vector<char> taken(c.k + 1, 0);
    for (int u : g.neighbors(v)) taken[c.assignment[u]] = 1;
    int to = 0;
    for (int j = 1; j <= c.k; ++j)
      if (j != dead && !taken[j]) {
        to = j;
        break;
      }
    if (to == 0) throw std::logic_error("no free color for a vertex of a class without b-vertices");
    colors[v] = to;
    round.recolored.emplace_back(v, to > dead ? to - 1 : to);
  }
  for (int& col : colors)
    if (col > dead) --col;
  return {Coloring(colors), round};
}

struct EliminationTrace {
  Coloring initial;
  std::vector<EliminationRound> rounds;
};

struct BGreedyResult {
  Coloring coloring;
  EliminationTrace trace;
};

// Start from the greedy coloring along `order` and repeatedly dissolve the
// smallest color class without a b-vertex until every class has one. The
// result is always a b-coloring.
inline BGreedyResult b_greedy(const Graph& g, const std::vector<int>& order) {
  Coloring c = initial_coloring(g, order);
  EliminationTrace trace{c, {}};
  for (;;) {
    auto bv = b_vertices(g, c);
    int dead = 0;
    for (int color = 1; color <= c.k; ++color)
      if (bv[color].empty()) {
        dead = color;
        break;
      }
    if (dead == 0) break;
    auto [next, round] = eliminate_color(g, c, dead);
    trace.rounds.push_back(std::move(round));
    c = std::move(next);
  }
  return {c, trace};
}

inline std::vector<int> default_order(const Graph& g) {
  return detail::degree_desc_order(g);
}

inline BGreedyResult b_greedy(const Graph& g) { return b_greedy(g, default_order(g)); }

}  // namespace bperf
