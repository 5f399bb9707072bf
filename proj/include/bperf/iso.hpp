#pragma once

#include <array>

#include "bperf/graph.hpp"

namespace bperf {

namespace detail {

inline std::vector<std::vector<int>> neighbor_degree_signature(const Graph& g) {
  std::vector<std::vector<int>> sig(g.n());
  for (int u = 0; u < g.n(); ++u) {
    for (int v : g.neighbors(u)) sig[u].push_back(g.degree(v));
    std::sort(sig[u].begin(), sig[u].end());
  }
  return sig;
}

// Cheap isomorphism-invariant bucket key for deduplication maps.
inline std::string iso_invariant_key(const Graph& g) {
  std::string key = std::to_string(g.n()) + "|" + std::to_string(g.edge_count()) + "|";
  auto sig = neighbor_degree_signature(g);
  std::sort(sig.begin(), sig.end());
  for (const auto& s : sig) {
    for (int d : s) key += static_cast<char>('0' + d);
    key += ',';
  }
  return key;
}

}  // namespace detail

// Backtracking isomorphism test with degree and neighborhood-degree pruning.
inline bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.n() > 12 || h.n() > 12)
    throw too_large("isomorphism test limited to 12 vertices, got " + std::to_string(std::max(g.n(), h.n())));
  if (g.n() != h.n() || g.edge_count() != h.edge_count()) return false;
  int n = g.n();
  if (n == 0) return true;

  std::vector<int> dg(n), dh(n);
  for (int v = 0; v < n; ++v) {
    dg[v] = g.degree(v);
    dh[v] = h.degree(v);
  }
  {
    auto sg = dg, sh = dh;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return false;
  }
  auto sig_g = detail::neighbor_degree_signature(g);
  auto sig_h = detail::neighbor_degree_signature(h);
  {
    auto sg = sig_g, sh = sig_h;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return false;
  }

  // Map vertices of g one at a time, always choosing an unmapped vertex with
  // the most already-mapped neighbors so adjacency constraints bite early.
  std::vector<int> order;
  {
    std::vector<char> placed(n, 0);
    for (int step = 0; step < n; ++step) {
      int best = -1, best_anch = -1, best_deg = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        int anch = 0;
        for (int u : g.neighbors(v))
          if (placed[u]) ++anch;
        if (anch > best_anch || (anch == best_anch && dg[v] > best_deg)) {
          best = v;
          best_anch = anch;
          best_deg = dg[v];
        }
      }
      placed[best] = 1;
      order.push_back(best);
    }
  }

  std::vector<int> map(n, -1), used(n, 0);
  auto rec = [&](auto&& self, size_t depth) -> bool {
    if (depth == order.size()) return true;
    int v = order[depth];
    for (int u = 0; u < n; ++u) {
      if (used[u] || dh[u] != dg[v] || sig_h[u] != sig_g[v]) continue;
      bool ok = true;
      for (size_t i = 0; i < depth && ok; ++i) {
        int w = order[i];
        if (g.adjacent(v, w) != h.adjacent(u, map[w])) ok = false;
      }
      if (!ok) continue;
      map[v] = u;
      used[u] = 1;
      if (self(self, depth + 1)) return true;
      map[v] = -1;
      used[u] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace bperf
