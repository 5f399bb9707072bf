#pragma once

#include <cassert>

#include "bperf/structure.hpp"

namespace bperf {

class not_b_perfect : public std::runtime_error {
 public:
  explicit not_b_perfect(ForbiddenWitness w)
      : std::runtime_error("input contains " + w.name + " as an induced subgraph"), witness(std::move(w)) {}
  ForbiddenWitness witness;
};

class structure_violation : public std::runtime_error {
 public:
  explicit structure_violation(const std::string& what) : std::runtime_error(what) {}
};

struct CliqueStep {
  int step;             // 1..5
  std::string action;
  VertexSet vertices;   // original vertex ids involved
};

struct CliqueResult {
  VertexSet clique;
  std::vector<CliqueStep> trace;
};

namespace detail {

inline VertexSet map_labels(const VertexSet& local, const std::vector<int>& labels) {
  VertexSet out;
  for (int v : local) out.push_back(labels[v]);
  std::sort(out.begin(), out.end());
  return out;
}

inline VertexSet c5_clique(const Graph& h, const std::vector<int>& labels) {
  VertexSet edge{0, *h.neighbors(0).begin()};
  return map_labels(edge, labels);
}

// Shared tail of both clique procedures: the reduced graph has no
// non-adjacent comparable pair and no proper homogeneous non-clique set, so
// it is a C5, weakly chordal, or a special boat.
inline VertexSet clique_leaf(const Graph& h, const std::vector<int>& labels, std::vector<CliqueStep>& trace) {
  if (is_c5(h)) {
    VertexSet k = c5_clique(h, labels);
    trace.push_back({3, "C5, clique is an edge", k});
    return k;
  }
  if (is_weakly_chordal(h)) {
    VertexSet k = map_labels(weakly_chordal_max_clique(h), labels);
    trace.push_back({4, "weakly chordal, two-pair contraction", k});
    return k;
  }
  auto seed = find_small_boat(h);
  if (!seed)
    throw structure_violation("reduced graph is neither weakly chordal nor contains a small boat; input is not b-perfect");
  BoatPartition boat = extend_to_special_boat(h, *seed);
  VertexSet k = map_labels(special_boat_max_clique(h, boat), labels);
  trace.push_back({5, "special boat with q = " + std::to_string(boat.q), k});
  return k;
}

inline VertexSet clique_rec(Graph h, std::vector<int> labels, std::vector<CliqueStep>& trace) {
  // Step 1: drop dominated vertices as long as possible.
  while (auto pair = find_comparable_nonadjacent(h)) {
    auto [x, y] = *pair;
    trace.push_back({1, "vertex " + std::to_string(labels[x]) + " dominates " + std::to_string(labels[y]),
                     {labels[y]}});
    h = remove_vertex(h, y);
    labels.erase(labels.begin() + y);
  }
  // Step 2: contract proper homogeneous non-clique sets to cliques. The
  // reduced graph gains no comparable pair, so step 1 never reappears.
  while (auto hom = find_proper_homogeneous_nonclique(h)) {
    const VertexSet& H = *hom;
    std::vector<int> sub_labels;
    for (int v : H) sub_labels.push_back(labels[v]);
    VertexSet k_orig = clique_rec(induced_subgraph(h, H), sub_labels, trace);
    trace.push_back({2, "homogeneous set of size " + std::to_string(H.size()) + " reduced to its clique",
                     map_labels(H, labels)});
    std::vector<char> drop(h.n(), 0);
    for (int v : H) drop[v] = 1;
    for (int v : H) {
      int orig = labels[v];
      if (std::binary_search(k_orig.begin(), k_orig.end(), orig)) drop[v] = 0;
    }
    VertexSet keep;
    std::vector<int> new_labels;
    for (int v = 0; v < h.n(); ++v)
      if (!drop[v]) {
        keep.push_back(v);
        new_labels.push_back(labels[v]);
      }
    h = induced_subgraph(h, keep);
    labels = std::move(new_labels);
    assert(!find_comparable_nonadjacent(h).has_value());
  }
  return clique_leaf(h, labels, trace);
}

}  // namespace detail

// Largest clique of a b-perfect graph by structural reduction. The returned
// set is re-checked to be a clique of the input before returning.
inline CliqueResult clique(const Graph& g, bool check_b_perfect = true) {
  if (g.n() == 0) throw std::invalid_argument("clique requires a nonempty graph");
  if (check_b_perfect)
    if (auto w = find_forbidden(g)) throw not_b_perfect(*w);
  std::vector<int> labels(g.n());
  for (int v = 0; v < g.n(); ++v) labels[v] = v;
  CliqueResult result;
  result.clique = detail::clique_rec(g, labels, result.trace);
  if (!is_clique(g, result.clique)) throw structure_violation("computed set is not a clique of the input");
  return result;
}

// Same answer through the module tree: K_M is M at leaves, the largest child
// clique at parallel nodes, the union of child cliques at series nodes, and
// at prime nodes the clique of the subgraph induced by the union of child
// cliques, reduced of leftover comparable pairs first.
inline CliqueResult clique_via_module_tree(const Graph& g, bool check_b_perfect = true) {
  if (g.n() == 0) throw std::invalid_argument("clique requires a nonempty graph");
  if (check_b_perfect)
    if (auto w = find_forbidden(g)) throw not_b_perfect(*w);
  CliqueResult result;
  ModuleNode tree = modular_decomposition(g);

  auto km = [&](auto&& self, const ModuleNode& node) -> VertexSet {
    switch (node.kind) {
      case ModuleKind::leaf:
        return node.members;
      case ModuleKind::parallel: {
        VertexSet best;
        for (const ModuleNode& child : node.children) {
          VertexSet k = self(self, child);
          if (k.size() > best.size()) best = k;
        }
        return best;
      }
      case ModuleKind::series: {
        VertexSet all;
        for (const ModuleNode& child : node.children) {
          VertexSet k = self(self, child);
          all.insert(all.end(), k.begin(), k.end());
        }
        std::sort(all.begin(), all.end());
        return all;
      }
      case ModuleKind::prime: {
        // Keep one maximum clique per child; the result is an induced
        // subgraph with the same clique number, in the same hereditary
        // class, so the standard engine finishes it. Substituting a child
        // with a clique can create fresh homogeneous sets (a blown-up
        // universal child, say), which the engine dissolves itself.
        VertexSet union_k;
        for (const ModuleNode& child : node.children) {
          VertexSet k = self(self, child);
          union_k.insert(union_k.end(), k.begin(), k.end());
        }
        std::sort(union_k.begin(), union_k.end());
        return detail::clique_rec(induced_subgraph(g, union_k), union_k, result.trace);
      }
    }
    throw std::logic_error("unreachable module kind");
  };

  result.clique = km(km, tree);
  if (!is_clique(g, result.clique)) throw structure_violation("computed set is not a clique of the input");
  return result;
}

}  // namespace bperf
