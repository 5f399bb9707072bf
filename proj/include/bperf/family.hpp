#pragma once

#include <optional>

#include "bperf/graph.hpp"

namespace bperf {

struct ForbiddenPattern {
  int index;         // 1..22
  std::string name;  // "F1".."F22"
  Graph graph;
  std::string alias;  // well-known alternate name, may be empty
};

// image[i] is the host vertex pattern vertex i maps to. Injective; edges and
// non-edges are both preserved (induced embedding).
struct Embedding {
  std::vector<int> image;
};

// The 22 minimal obstructions, fixed at build time.
inline const std::vector<ForbiddenPattern>& family() {
  static const std::vector<ForbiddenPattern> patterns = [] {
    using E = std::vector<std::pair<int, int>>;
    std::vector<ForbiddenPattern> out;
    auto add = [&](int n, const E& edges, const std::string& alias) {
      int index = static_cast<int>(out.size()) + 1;
      out.push_back({index, "F" + std::to_string(index), Graph(n, edges), alias});
    };
    add(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, "P5");
    add(7, {{0, 1}, {1, 2}, {3, 4}, {4, 6}, {5, 6}}, "P3 + P4");
    add(9, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {6, 7}, {7, 8}}, "3P3");
    add(6, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}, {3, 5}, {4, 5}}, "");
    add(7, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {3, 6}, {4, 6}, {5, 6}}, "");
    add(8, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {4, 7}, {5, 7}, {6, 7}}, "two diamonds");
    add(8, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {4, 7}, {5, 7}, {6, 7}}, "");
    add(8, {{0, 2}, {0, 3}, {1, 4}, {1, 6}, {2, 3}, {2, 5}, {3, 4}, {3, 5}, {3, 7}, {4, 6}, {5, 7}}, "");
    add(10, {{0, 1}, {0, 4}, {1, 3}, {1, 4}, {2, 5}, {2, 7}, {3, 4}, {4, 5}, {4, 6}, {4, 8}, {4, 9}, {5, 7}, {6, 8}, {8, 9}},
        "");
    add(6, {{0, 1}, {0, 2}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}, {3, 5}, {4, 5}}, "complement of P6");
    add(7, {{0, 1}, {0, 2}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {3, 6}, {4, 6}, {5, 6}}, "");
    add(8, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}}, "");
    add(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}},
        "");
    add(8,
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {1, 7}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}},
        "");
    add(8,
        {{0, 1}, {0, 2}, {0, 3}, {0, 6}, {1, 2}, {1, 3}, {1, 7}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}},
        "");
    add(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 3}, {2, 5}, {3, 5}, {4, 5}}, "");
    add(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 3}, {2, 4}, {2, 5}, {3, 5}, {4, 5}}, "");
    add(8, {{0, 1}, {0, 2}, {0, 4}, {0, 6}, {1, 2}, {1, 5}, {2, 3}, {2, 7}, {3, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}}, "");
    add(8, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {1, 6}, {2, 5}, {3, 6}, {3, 7}, {4, 6}, {4, 7}, {5, 6}, {5, 7}},
        "");
    add(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 5}, {2, 6}, {3, 7}, {4, 6}, {4, 7}, {5, 7}, {6, 7}},
        "");
    add(8,
        {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 5}, {1, 6}, {2, 3}, {2, 5}, {2, 6}, {3, 7}, {4, 6}, {4, 7}, {5, 7}, {6, 7}},
        "");
    add(8,
        {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 6}, {4, 5}, {4, 7}, {5, 7}, {6, 7}},
        "");
    return out;
  }();
  return patterns;
}

// The two smallest special boats. q=2: two triangles joined by a 2-matching,
// one unmatched apex per side (8 edges). q=3: two triangles joined by a
// perfect matching, the triangular prism (9 edges).
inline const std::vector<Graph>& small_boats() {
  static const std::vector<Graph> boats = {
      Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {1, 4}, {2, 5}}),
      Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}}),
  };
  return boats;
}

// First induced embedding of pattern into host, if any. Backtracking over a
// connectivity-aware pattern order with degree pruning; host candidates are
// tried in ascending order, so the result is deterministic.
inline std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern) {
  int pn = pattern.n(), hn = host.n();
  if (pn > hn) return std::nullopt;
  if (pn == 0) return Embedding{};

  std::vector<int> pdeg(pn), hdeg(hn);
  for (int v = 0; v < pn; ++v) pdeg[v] = pattern.degree(v);
  for (int v = 0; v < hn; ++v) hdeg[v] = host.degree(v);

  std::vector<int> order;
  {
    std::vector<char> placed(pn, 0);
    for (int step = 0; step < pn; ++step) {
      int best = -1, best_anch = -1, best_deg = -1;
      for (int v = 0; v < pn; ++v) {
        if (placed[v]) continue;
        int anch = 0;
        for (int u : pattern.neighbors(v))
          if (placed[u]) ++anch;
        if (anch > best_anch || (anch == best_anch && pdeg[v] > best_deg)) {
          best = v;
          best_anch = anch;
          best_deg = pdeg[v];
        }
      }
      placed[best] = 1;
      order.push_back(best);
    }
  }

  std::vector<int> image(pn, -1);
  std::vector<char> used(hn, 0);
  auto rec = [&](auto&& self, size_t depth) -> bool {
    if (depth == order.size()) return true;
    int v = order[depth];
    for (int u = 0; u < hn; ++u) {
      if (used[u] || hdeg[u] < pdeg[v]) continue;
      bool ok = true;
      for (size_t i = 0; i < depth && ok; ++i) {
        int w = order[i];
        if (pattern.adjacent(v, w) != host.adjacent(u, image[w])) ok = false;
      }
      if (!ok) continue;
      image[v] = u;
      used[u] = 1;
      if (self(self, depth + 1)) return true;
      image[v] = -1;
      used[u] = 0;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return Embedding{image};
}

struct ForbiddenWitness {
  int index;
  std::string name;
  Embedding embedding;
};

// Lowest-index family member induced in g, with its embedding.
inline std::optional<ForbiddenWitness> find_forbidden(const Graph& g) {
  for (const ForbiddenPattern& p : family())
    if (auto emb = find_induced(g, p.graph)) return ForbiddenWitness{p.index, p.name, *emb};
  return std::nullopt;
}

inline bool is_b_perfect(const Graph& g) { return !find_forbidden(g).has_value(); }

}  // namespace bperf
