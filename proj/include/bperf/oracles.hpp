#pragma once

#include <functional>
#include <map>

#include "bperf/graph.hpp"
#include "bperf/iso.hpp"

namespace bperf {

class size_mismatch : public std::runtime_error {
 public:
  explicit size_mismatch(const std::string& what) : std::runtime_error(what) {}
};

class improper_coloring : public std::runtime_error {
 public:
  explicit improper_coloring(const std::string& what) : std::runtime_error(what) {}
};

// Assignment of colors 1..k to vertices 0..n-1; every color in 1..k is used.
// Properness is not part of the type.
struct Coloring {
  int n = 0;
  std::vector<int> assignment;
  int k = 0;

  Coloring() = default;

  explicit Coloring(std::vector<int> colors) : n(static_cast<int>(colors.size())), assignment(std::move(colors)) {
    for (int c : assignment) {
      if (c < 1) throw std::invalid_argument("colors are 1-based");
      k = std::max(k, c);
    }
    std::vector<char> used(k + 1, 0);
    for (int c : assignment) used[c] = 1;
    for (int c = 1; c <= k; ++c)
      if (!used[c]) throw std::invalid_argument("color " + std::to_string(c) + " unused");
  }
};

inline bool is_proper(const Graph& g, const Coloring& c) {
  if (c.n != g.n())
    throw size_mismatch("coloring has " + std::to_string(c.n) + " vertices, graph has " + std::to_string(g.n()));
  for (auto [u, v] : g.edges())
    if (c.assignment[u] == c.assignment[v]) return false;
  return true;
}

namespace detail {

inline bool is_b_vertex(const Graph& g, const Coloring& c, int v) {
  std::vector<char> seen(c.k + 1, 0);
  seen[c.assignment[v]] = 1;
  int missing = c.k - 1;
  for (int u : g.neighbors(v))
    if (!seen[c.assignment[u]]) {
      seen[c.assignment[u]] = 1;
      if (--missing == 0) return true;
    }
  return missing == 0;
}

struct budget_counter {
  long long remaining;
  void tick() {
    if (--remaining < 0) throw too_large("node budget exceeded");
  }
};

}  // namespace detail

// Map from each color 1..k to its b-vertices (vertices seeing all other colors).
inline std::map<int, VertexSet> b_vertices(const Graph& g, const Coloring& c) {
  if (!is_proper(g, c)) throw improper_coloring("b-vertices are defined for proper colorings only");
  std::map<int, VertexSet> out;
  for (int color = 1; color <= c.k; ++color) out[color] = {};
  for (int v = 0; v < g.n(); ++v)
    if (detail::is_b_vertex(g, c, v)) out[c.assignment[v]].push_back(v);
  return out;
}

inline bool is_b_coloring(const Graph& g, const Coloring& c) {
  if (!is_proper(g, c)) return false;
  std::vector<char> has(c.k + 1, 0);
  int missing = c.k;
  for (int v = 0; v < g.n(); ++v) {
    int color = c.assignment[v];
    if (!has[color] && detail::is_b_vertex(g, c, v)) {
      has[color] = 1;
      if (--missing == 0) return true;
    }
  }
  return missing == 0;
}

constexpr long long kDefaultBudget = 10'000'000;

namespace detail {

inline std::vector<int> degree_desc_order(const Graph& g) {
  std::vector<int> order(g.n());
  for (int i = 0; i < g.n(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int da = g.degree(a), db = g.degree(b);
    return da != db ? da > db : a < b;
  });
  return order;
}

inline bool colorable(const Graph& g, int k, const std::vector<int>& order, std::vector<int>& colors,
                      budget_counter& budget) {
  auto rec = [&](auto&& self, int depth, int used) -> bool {
    if (depth == g.n()) return true;
    int v = order[depth];
    int limit = std::min(used + 1, k);
    for (int c = 1; c <= limit; ++c) {
      budget.tick();
      bool ok = true;
      for (int u : g.neighbors(v))
        if (colors[u] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      colors[v] = c;
      if (self(self, depth + 1, std::max(used, c))) return true;
      colors[v] = 0;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

}  // namespace detail

// Exact chromatic number by iterative deepening over k with a greedy clique
// lower bound. Witness variant returns an optimal proper coloring.
inline Coloring optimal_coloring(const Graph& g, long long budget = kDefaultBudget) {
  if (g.n() > 16) throw too_large("chromatic number limited to 16 vertices, got " + std::to_string(g.n()));
  if (g.n() == 0) return Coloring{};
  detail::budget_counter counter{budget};
  auto order = detail::degree_desc_order(g);

  int lb = 1;
  {
    VertexSet clique;
    for (int v : order) {
      bool ok = true;
      for (int u : clique)
        if (!g.adjacent(u, v)) {
          ok = false;
          break;
        }
      if (ok) clique.push_back(v);
    }
    lb = std::max<int>(1, static_cast<int>(clique.size()));
  }

  for (int k = lb; k <= g.n(); ++k) {
    std::vector<int> colors(g.n(), 0);
    if (detail::colorable(g, k, order, colors, counter)) return Coloring(colors);
  }
  throw std::logic_error("unreachable: every graph is n-colorable");
}

inline int chromatic_number(const Graph& g, long long budget = kDefaultBudget) {
  return optimal_coloring(g, budget).k;
}

// Exact maximum clique, branch and bound with a greedy coloring bound.
inline VertexSet max_clique(const Graph& g, long long budget = kDefaultBudget) {
  if (g.n() > 20) throw too_large("clique number limited to 20 vertices, got " + std::to_string(g.n()));
  if (g.n() == 0) return {};
  detail::budget_counter counter{budget};
  int n = g.n();
  std::vector<uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  VertexSet best;
  std::vector<int> cur;
  auto rec = [&](auto&& self, uint32_t cand) -> void {
    if (cur.size() + static_cast<size_t>(__builtin_popcount(cand)) <= best.size()) return;
    if (cand == 0) {
      best = VertexSet(cur.begin(), cur.end());
      std::sort(best.begin(), best.end());
      return;
    }
    // Greedy coloring of the candidate set; the class index bounds how far
    // the clique can still grow.
    std::vector<std::pair<int, int>> ordered;  // (vertex, bound)
    uint32_t rest = cand;
    int color = 0;
    while (rest) {
      ++color;
      uint32_t avail = rest;
      while (avail) {
        int v = __builtin_ctz(avail);
        ordered.emplace_back(v, color);
        rest &= ~(1u << v);
        avail &= ~(1u << v);
        avail &= ~adj[v];
      }
    }
    uint32_t seen = cand;
    for (int i = static_cast<int>(ordered.size()) - 1; i >= 0; --i) {
      auto [v, b] = ordered[i];
      if (cur.size() + b <= best.size()) return;
      counter.tick();
      cur.push_back(v);
      self(self, seen & adj[v]);
      cur.pop_back();
      seen &= ~(1u << v);
    }
  };
  rec(rec, (1u << n) - 1);
  return best;
}

inline int clique_number(const Graph& g, long long budget = kDefaultBudget) {
  return static_cast<int>(max_clique(g, budget).size());
}

// m(G): the largest i such that at least i vertices have degree >= i-1.
// Upper bound on the b-chromatic number.
inline int m_degree(const Graph& g) {
  std::vector<int> degs(g.n());
  for (int v = 0; v < g.n(); ++v) degs[v] = g.degree(v);
  std::sort(degs.begin(), degs.end(), std::greater<>());
  int m = 0;
  for (int i = 1; i <= g.n(); ++i)
    if (degs[i - 1] >= i - 1) m = i;
  return m;
}

struct BChromaticResult {
  int value = 0;
  Coloring witness;
};

// Exact b-chromatic number over canonical ordered set partitions: vertices are
// colored in index order and each new color first appears at the smallest
// uncolored index. Any optimal proper coloring is a b-coloring, so chi(G)
// seeds the search and only k > chi(G) partitions are explored.
inline BChromaticResult b_chromatic_number(const Graph& g, long long budget = kDefaultBudget) {
  if (g.n() > 12) throw too_large("b-chromatic number limited to 12 vertices, got " + std::to_string(g.n()));
  if (g.n() == 0) return {};
  Coloring chi_witness = optimal_coloring(g, budget);
  int m = m_degree(g);
  BChromaticResult best{chi_witness.k, chi_witness};
  if (m == best.value) return best;

  detail::budget_counter counter{budget};
  std::vector<int> colors(g.n(), 0);
  auto rec = [&](auto&& self, int v, int used) -> void {
    if (best.value == m) return;
    if (v == g.n()) {
      if (used <= best.value) return;
      Coloring c(colors);
      if (is_b_coloring(g, c)) best = {c.k, c};
      return;
    }
    if (used + (g.n() - v) <= best.value) return;
    int limit = std::min(used + 1, m);
    for (int c = 1; c <= limit; ++c) {
      counter.tick();
      bool ok = true;
      for (int u : g.neighbors(v))
        if (u < v && colors[u] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      colors[v] = c;
      self(self, v + 1, std::max(used, c));
      colors[v] = 0;
    }
  };
  rec(rec, 0, 0);
  return best;
}

// chi(H) == b(H) for every induced subgraph H, by direct enumeration of all
// 2^n subsets with isomorphism-class deduplication.
inline bool is_b_perfect_oracle(const Graph& g, long long budget = kDefaultBudget) {
  if (g.n() > 9) throw too_large("b-perfection oracle limited to 9 vertices, got " + std::to_string(g.n()));
  std::map<std::string, std::vector<Graph>> seen;
  for (uint32_t mask = 1; mask < (1u << g.n()); ++mask) {
    VertexSet s;
    for (int v = 0; v < g.n(); ++v)
      if (mask >> v & 1) s.push_back(v);
    Graph h = induced_subgraph(g, s);
    std::string key = detail::iso_invariant_key(h);
    auto& bucket = seen[key];
    bool fresh = true;
    for (const Graph& rep : bucket)
      if (are_isomorphic(h, rep)) {
        fresh = false;
        break;
      }
    if (!fresh) continue;
    bucket.push_back(h);
    if (b_chromatic_number(h, budget).value != chromatic_number(h, budget)) return false;
  }
  return true;
}

// b(G) > chi(G) while every proper induced subgraph satisfies chi == b.
inline bool is_minimally_b_imperfect(const Graph& g, long long budget = kDefaultBudget) {
  if (g.n() > 10) throw too_large("minimality oracle limited to 10 vertices, got " + std::to_string(g.n()));
  if (g.n() == 0) return false;
  if (b_chromatic_number(g, budget).value <= chromatic_number(g, budget)) return false;
  for (int v = 0; v < g.n(); ++v)
    if (!is_b_perfect_oracle(remove_vertex(g, v), budget)) return false;
  return true;
}

}  // namespace bperf
