#pragma once

#include <map>
#include <optional>

#include "bperf/family.hpp"
#include "bperf/oracles.hpp"

namespace bperf {

class not_weakly_chordal : public std::runtime_error {
 public:
  explicit not_weakly_chordal(const std::string& what) : std::runtime_error(what) {}
};

class not_a_boat : public std::runtime_error {
 public:
  explicit not_a_boat(const std::string& what) : std::runtime_error(what) {}
};

class not_special : public std::runtime_error {
 public:
  explicit not_special(const std::string& what) : std::runtime_error(what) {}
};

// Smallest (x, y) in lexicographic order such that x and y are non-adjacent
// and N(y) is contained in N(x); x is the dominator.
inline std::optional<std::pair<int, int>> find_comparable_nonadjacent(const Graph& g) {
  for (int x = 0; x < g.n(); ++x)
    for (int y = 0; y < g.n(); ++y) {
      if (x == y || g.adjacent(x, y)) continue;
      bool subset = true;
      for (int w = 0; w < g.words() && subset; ++w)
        if (g.row(y)[w] & ~g.row(x)[w]) subset = false;
      if (subset) return std::make_pair(x, y);
    }
  return std::nullopt;
}

enum class ModuleKind { leaf, parallel, series, prime };

struct ModuleNode {
  VertexSet members;  // original vertex ids, sorted
  ModuleKind kind = ModuleKind::leaf;
  std::vector<ModuleNode> children;  // ordered by smallest member
};

namespace detail {

// Splitter closure: the smallest homogeneous set of g containing both u and v.
inline std::vector<char> homogeneous_closure(const Graph& g, int u, int v) {
  std::vector<char> in(g.n(), 0);
  in[u] = in[v] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int w = 0; w < g.n(); ++w) {
      if (in[w]) continue;
      bool sees_some = false, misses_some = false;
      for (int a = 0; a < g.n(); ++a) {
        if (!in[a]) continue;
        (g.adjacent(w, a) ? sees_some : misses_some) = true;
        if (sees_some && misses_some) break;
      }
      if (sees_some && misses_some) {
        in[w] = 1;
        changed = true;
      }
    }
  }
  return in;
}

inline ModuleNode module_tree_rec(const Graph& g, const VertexSet& members) {
  ModuleNode node;
  node.members = members;
  if (members.size() == 1) {
    node.kind = ModuleKind::leaf;
    return node;
  }
  Graph h = induced_subgraph(g, members);
  auto attach = [&](const std::vector<VertexSet>& parts, ModuleKind kind) {
    node.kind = kind;
    for (const VertexSet& part : parts) {
      VertexSet orig;
      for (int v : part) orig.push_back(members[v]);
      node.children.push_back(module_tree_rec(g, orig));
    }
  };

  auto comps = components(h);
  if (comps.size() >= 2) {
    attach(comps, ModuleKind::parallel);
    return node;
  }
  auto co_comps = components(complement(h));
  if (co_comps.size() >= 2) {
    attach(co_comps, ModuleKind::series);
    return node;
  }

  // Prime: the child containing u is the union of all proper closures m(u, v).
  // (Any two homogeneous sets sharing u have a homogeneous union, and in the
  // prime case every proper homogeneous set lies inside a single child.)
  int m = h.n();
  std::vector<std::vector<char>> child_of(m);
  for (int u = 0; u < m; ++u) {
    child_of[u].assign(m, 0);
    child_of[u][u] = 1;
  }
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) {
      auto cl = homogeneous_closure(h, u, v);
      int size = 0;
      for (char c : cl) size += c;
      if (size == m) continue;
      for (int w = 0; w < m; ++w)
        if (cl[w]) {
          child_of[u][w] = 1;
          child_of[v][w] = 1;
        }
    }
  std::vector<VertexSet> parts;
  std::vector<char> done(m, 0);
  for (int u = 0; u < m; ++u) {
    if (done[u]) continue;
    VertexSet part;
    for (int w = 0; w < m; ++w)
      if (child_of[u][w]) {
        if (done[w] || child_of[w] != child_of[u])
          throw std::logic_error("prime children do not partition the module");
        done[w] = 1;
        part.push_back(w);
      }
    parts.push_back(part);
  }
  attach(parts, ModuleKind::prime);
  return node;
}

}  // namespace detail

inline ModuleNode modular_decomposition(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("modular decomposition requires a nonempty graph");
  VertexSet all(g.n());
  for (int v = 0; v < g.n(); ++v) all[v] = v;
  return detail::module_tree_rec(g, all);
}

// Proper homogeneous set that is not a clique, if one exists: either a
// non-root internal node of the module tree, or (parallel root with three or
// more components) the union of the two first components. Returns the
// lexicographically smallest candidate.
inline std::optional<VertexSet> find_proper_homogeneous_nonclique(const Graph& g) {
  if (g.n() < 2) return std::nullopt;
  ModuleNode root = modular_decomposition(g);
  std::vector<VertexSet> candidates;
  auto walk = [&](auto&& self, const ModuleNode& node, bool is_root) -> void {
    if (!is_root && node.kind != ModuleKind::leaf && !is_clique(g, node.members))
      candidates.push_back(node.members);
    for (const ModuleNode& child : node.children) self(self, child, false);
  };
  walk(walk, root, true);
  if (root.kind == ModuleKind::parallel && root.children.size() >= 3) {
    VertexSet u = root.children[0].members;
    u.insert(u.end(), root.children[1].members.begin(), root.children[1].members.end());
    std::sort(u.begin(), u.end());
    candidates.push_back(u);
  }
  if (candidates.empty()) return std::nullopt;
  return *std::min_element(candidates.begin(), candidates.end());
}

inline bool is_c5(const Graph& g) {
  if (g.n() != 5) return false;
  for (int v = 0; v < 5; ++v)
    if (g.degree(v) != 2) return false;
  return components(g).size() == 1;
}

namespace detail {

// First chordless cycle of length >= 5 found by extending chordless paths.
// The path start is the smallest cycle vertex and the first step goes to the
// smaller of its two cycle neighbors.
inline std::optional<std::vector<int>> find_hole(const Graph& g, budget_counter& budget) {
  int n = g.n();
  std::vector<int> path;
  std::vector<char> in_path(n, 0);
  auto dfs = [&](auto&& self) -> bool {
    budget.tick();
    int last = path.back();
    int p0 = path[0];
    for (int w = p0 + 1; w < n; ++w) {
      if (in_path[w] || !g.adjacent(last, w)) continue;
      bool chord = false;
      for (size_t i = 1; i + 1 < path.size() && !chord; ++i)
        if (g.adjacent(w, path[i])) chord = true;
      if (chord) continue;
      if (g.adjacent(w, p0)) {
        if (path.size() + 1 >= 5 && w > path[1]) {
          path.push_back(w);
          return true;
        }
        continue;
      }
      path.push_back(w);
      in_path[w] = 1;
      if (self(self)) return true;
      path.pop_back();
      in_path[w] = 0;
    }
    return false;
  };
  for (int p0 = 0; p0 < n; ++p0) {
    for (int p1 = p0 + 1; p1 < n; ++p1) {
      if (!g.adjacent(p0, p1)) continue;
      path = {p0, p1};
      std::fill(in_path.begin(), in_path.end(), 0);
      in_path[p0] = in_path[p1] = 1;
      if (dfs(dfs)) return path;
    }
  }
  return std::nullopt;
}

}  // namespace detail

struct HoleWitness {
  bool antihole;          // cycle lives in the complement
  std::vector<int> cycle;  // vertices in cycle order, length >= 5
};

inline std::optional<HoleWitness> find_hole_or_antihole(const Graph& g, long long budget = kDefaultBudget) {
  detail::budget_counter counter{budget};
  if (auto hole = detail::find_hole(g, counter)) return HoleWitness{false, *hole};
  if (auto hole = detail::find_hole(complement(g), counter)) return HoleWitness{true, *hole};
  return std::nullopt;
}

inline bool is_weakly_chordal(const Graph& g, long long budget = kDefaultBudget) {
  return !find_hole_or_antihole(g, budget).has_value();
}

// Smallest non-adjacent pair {x, y} such that every induced x-y path has
// length exactly two, i.e. x and y fall into different components once the
// common neighborhood is removed.
inline std::optional<std::pair<int, int>> find_two_pair(const Graph& g) {
  for (int x = 0; x < g.n(); ++x)
    for (int y = x + 1; y < g.n(); ++y) {
      if (g.adjacent(x, y)) continue;
      std::vector<char> blocked(g.n(), 0);
      for (int w = 0; w < g.n(); ++w)
        if (g.adjacent(x, w) && g.adjacent(y, w)) blocked[w] = 1;
      std::vector<int> stack{x};
      std::vector<char> seen(g.n(), 0);
      seen[x] = 1;
      bool reached = false;
      while (!stack.empty() && !reached) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u)) {
          if (blocked[w] || seen[w]) continue;
          if (w == y) {
            reached = true;
            break;
          }
          seen[w] = 1;
          stack.push_back(w);
        }
      }
      if (!reached) return std::make_pair(x, y);
    }
  return std::nullopt;
}

enum class WcCliqueMethod { contraction, branch_and_bound };

// Maximum clique of a weakly chordal graph by repeated two-pair contraction;
// contracting a two-pair preserves the clique number, and a weakly chordal
// graph that is not complete always has a two-pair. The branch-and-bound
// method answers through the generic exact solver for differential testing.
inline VertexSet weakly_chordal_max_clique(const Graph& g, WcCliqueMethod method = WcCliqueMethod::contraction,
                                           long long budget = kDefaultBudget) {
  if (method == WcCliqueMethod::branch_and_bound) return max_clique(g, budget);

  struct Step {
    int x, y;  // x < y, y merged into x
    Graph before;
  };
  std::vector<Step> steps;
  Graph cur = g;
  while (!is_complete(cur)) {
    auto tp = find_two_pair(cur);
    if (!tp)
      throw not_weakly_chordal("graph with " + std::to_string(cur.n()) +
                               " vertices is not complete and has no two-pair");
    auto [x, y] = *tp;
    steps.push_back({x, y, cur});
    auto relabel = [y = y](int v) { return v < y ? v : v - 1; };
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : cur.edges())
      if (u != y && v != y) edges.emplace_back(relabel(u), relabel(v));
    for (int u : cur.neighbors(y)) edges.emplace_back(relabel(x), relabel(u));
    cur = Graph(cur.n() - 1, edges);
  }

  VertexSet clique(cur.n());
  for (int v = 0; v < cur.n(); ++v) clique[v] = v;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    for (int& v : clique)
      if (v >= it->y) ++v;
    for (int& v : clique) {
      if (v != it->x) continue;
      bool fits_x = true;
      for (int u : clique)
        if (u != it->x && !it->before.adjacent(it->x, u)) fits_x = false;
      if (!fits_x) {
        v = it->y;
        for (int u : clique)
          if (u != it->y && !it->before.adjacent(it->y, u))
            throw std::logic_error("two-pair lift produced a non-clique");
      }
      break;
    }
  }
  std::sort(clique.begin(), clique.end());
  if (!is_clique(g, clique)) throw std::logic_error("contraction clique is not a clique of the input");
  return clique;
}

// ---- boats ----------------------------------------------------------------

// Partition V = A_0 u A_1 u .. u A_q u B_0 u .. u B_q with q >= 2:
// the A parts are pairwise complete, the B parts are pairwise complete,
// A_j is complete to B_j and anticomplete to the rest of B (j >= 1), A_0 is
// anticomplete to B and B_0 to A, and if q = 2 then A_0 and B_0 are nonempty.
// Special when every part is a clique.
struct BoatPartition {
  int q = 0;
  std::vector<VertexSet> A;  // A[0] may be empty when q >= 3
  std::vector<VertexSet> B;
  bool special = false;
};

struct SmallBoat {
  int q;  // 2 or 3
  Embedding embedding;  // into small_boats()[q - 2]
};

// Seed boat for extension; the prism (q = 3) is preferred since it has no
// apex vertices.
inline std::optional<SmallBoat> find_small_boat(const Graph& g) {
  if (auto emb = find_induced(g, small_boats()[1])) return SmallBoat{3, *emb};
  if (auto emb = find_induced(g, small_boats()[0])) return SmallBoat{2, *emb};
  return std::nullopt;
}

namespace detail {

inline void verify_boat_axioms(const Graph& g, const BoatPartition& p, bool finished, const char* stage) {
  auto fail = [&](const std::string& why) { throw not_a_boat(std::string(stage) + ": " + why); };
  if (static_cast<int>(p.A.size()) != p.q + 1 || static_cast<int>(p.B.size()) != p.q + 1)
    fail("part vectors do not match q");
  if (finished) {
    if (p.q < 2) fail("q must be at least 2");
    for (int j = 1; j <= p.q; ++j)
      if (p.A[j].empty() || p.B[j].empty()) fail("matched part " + std::to_string(j) + " is empty");
    if (p.q == 2 && (p.A[0].empty() || p.B[0].empty())) fail("q = 2 requires nonempty A0 and B0");
    std::vector<int> owner(g.n(), 0);
    for (const auto& side : {p.A, p.B})
      for (const VertexSet& part : side)
        for (int v : part) ++owner[v];
    for (int v = 0; v < g.n(); ++v)
      if (owner[v] != 1) fail("vertex " + std::to_string(v) + " covered " + std::to_string(owner[v]) + " times");
  }
  auto complete = [&](const VertexSet& s, const VertexSet& t, const std::string& what) {
    for (int a : s)
      for (int b : t)
        if (a != b && !g.adjacent(a, b)) fail(what + " misses edge " + std::to_string(a) + "-" + std::to_string(b));
  };
  auto anticomplete = [&](const VertexSet& s, const VertexSet& t, const std::string& what) {
    for (int a : s)
      for (int b : t)
        if (g.adjacent(a, b)) fail(what + " has edge " + std::to_string(a) + "-" + std::to_string(b));
  };
  for (int i = 0; i <= p.q; ++i)
    for (int j = i + 1; j <= p.q; ++j) {
      complete(p.A[i], p.A[j], "A" + std::to_string(i) + "/A" + std::to_string(j));
      complete(p.B[i], p.B[j], "B" + std::to_string(i) + "/B" + std::to_string(j));
    }
  for (int j = 1; j <= p.q; ++j) {
    complete(p.A[j], p.B[j], "A" + std::to_string(j) + "/B" + std::to_string(j));
    for (int k = 0; k <= p.q; ++k)
      if (k != j) anticomplete(p.A[j], p.B[k], "A" + std::to_string(j) + "/B" + std::to_string(k));
  }
  for (int k = 0; k <= p.q; ++k) anticomplete(p.A[0], p.B[k], "A0/B" + std::to_string(k));
  for (int j = 0; j <= p.q; ++j) {
    if (!is_clique(g, p.A[j])) fail("A" + std::to_string(j) + " is not a clique");
    if (!is_clique(g, p.B[j])) fail("B" + std::to_string(j) + " is not a clique");
  }
}

}  // namespace detail

// Grow the seed small boat into a special boat partition covering all of g.
// Matched seed pairs pin the first parts; every other vertex (including the
// q = 2 seed apexes, which may belong to a matched part of the host) is
// classified by its adjacency to the placed parts, either into an existing
// part or, when its cross neighborhood is empty, into A0/B0 or a fresh
// matched pair found by grouping the leftover pool.
inline BoatPartition extend_to_special_boat(const Graph& g, const SmallBoat& seed) {
  const auto& img = seed.embedding.image;
  if (static_cast<int>(img.size()) != 6) throw not_a_boat("seed embedding must cover six vertices");

  BoatPartition p;
  p.special = true;
  p.A.assign(1, {});
  p.B.assign(1, {});
  std::vector<char> placed(g.n(), 0);
  // Small boat vertex order: 0..2 is the A triangle, 3..5 the B triangle,
  // matched pairs (i, i+3); in the q=2 boat vertices 0 and 3 are the apexes.
  int first_matched = seed.q == 3 ? 0 : 1;
  for (int i = first_matched; i < 3; ++i) {
    p.A.push_back({img[i]});
    p.B.push_back({img[i + 3]});
    placed[img[i]] = placed[img[i + 3]] = 1;
  }
  p.q = 3 - first_matched;

  auto placed_side = [&](const std::vector<VertexSet>& side) {
    VertexSet out;
    for (const VertexSet& part : side) out.insert(out.end(), part.begin(), part.end());
    return out;
  };
  auto complete_to = [&](int v, const VertexSet& set) {
    for (int u : set)
      if (u != v && !g.adjacent(v, u)) return false;
    return true;
  };

  std::vector<int> pool;
  for (int v = 0; v < g.n(); ++v)
    if (!placed[v]) pool.push_back(v);

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> rest;
    for (int v : pool) {
      VertexSet pa = placed_side(p.A), pb = placed_side(p.B);
      bool ca = complete_to(v, pa), cb = complete_to(v, pb);
      if (ca == cb) {
        if (ca) throw not_a_boat("vertex " + std::to_string(v) + " is complete to both sides");
        throw not_a_boat("vertex " + std::to_string(v) + " is complete to neither side");
      }
      auto& other = ca ? p.B : p.A;
      auto& mine = ca ? p.A : p.B;
      VertexSet cross;
      for (int u : ca ? pb : pa)
        if (g.adjacent(v, u)) cross.push_back(u);
      if (cross.empty()) {
        rest.push_back(v);
        continue;
      }
      int slot = 0;
      for (int j = 1; j <= p.q; ++j)
        if (other[j] == cross) {
          slot = j;
          break;
        }
      if (slot == 0)
        throw not_a_boat("cross neighborhood of vertex " + std::to_string(v) + " is not a placed part");
      mine[slot].push_back(v);
      std::sort(mine[slot].begin(), mine[slot].end());
      placed[v] = 1;
      changed = true;
      detail::verify_boat_axioms(g, p, false, "extension");
    }
    pool = std::move(rest);
  }

  // Leftovers see nothing of the placed opposite side: group them into
  // A0/B0 and fresh matched pairs by their adjacency inside the pool.
  VertexSet ra, rb;
  for (int v : pool) {
    bool ca = complete_to(v, placed_side(p.A));
    (ca ? ra : rb).push_back(v);
  }
  auto group = [&](const VertexSet& mine, const VertexSet& opposite) {
    std::map<VertexSet, VertexSet> groups;
    for (int v : mine) {
      VertexSet key;
      for (int u : opposite)
        if (g.adjacent(v, u)) key.push_back(u);
      groups[key].push_back(v);
    }
    return groups;
  };
  auto ga = group(ra, rb);
  auto gb = group(rb, ra);
  p.A[0] = ga.count({}) ? ga[{}] : VertexSet{};
  p.B[0] = gb.count({}) ? gb[{}] : VertexSet{};
  std::vector<std::pair<VertexSet, VertexSet>> fresh;  // (A part, B part)
  for (auto& [key, members] : ga) {
    if (key.empty()) continue;
    auto it = gb.find(members);
    if (it == gb.end() || it->second != key)
      throw not_a_boat("pool group of vertex " + std::to_string(members[0]) + " has no matching partner group");
    fresh.emplace_back(members, key);
  }
  for (auto& [key, members] : gb) {
    if (key.empty()) continue;
    if (ga.find(members) == ga.end())
      throw not_a_boat("pool group of vertex " + std::to_string(members[0]) + " has no matching partner group");
  }
  std::sort(fresh.begin(), fresh.end(), [](const auto& l, const auto& r) { return l.first[0] < r.first[0]; });
  for (auto& [pa, pb] : fresh) {
    p.A.push_back(pa);
    p.B.push_back(pb);
    ++p.q;
  }

  detail::verify_boat_axioms(g, p, true, "final");
  return p;
}

// Largest of A, B, A_1 u B_1, ..., A_q u B_q; every clique of a special boat
// is contained in one of these. Ties go to the earliest candidate in that
// listing order.
inline VertexSet special_boat_max_clique(const Graph& g, const BoatPartition& p) {
  try {
    detail::verify_boat_axioms(g, p, true, "special boat");
  } catch (const not_a_boat& e) {
    throw not_special(e.what());
  }
  std::vector<VertexSet> candidates;
  VertexSet a, b;
  for (int j = 0; j <= p.q; ++j) {
    a.insert(a.end(), p.A[j].begin(), p.A[j].end());
    b.insert(b.end(), p.B[j].begin(), p.B[j].end());
  }
  candidates.push_back(a);
  candidates.push_back(b);
  for (int j = 1; j <= p.q; ++j) {
    VertexSet u = p.A[j];
    u.insert(u.end(), p.B[j].begin(), p.B[j].end());
    candidates.push_back(u);
  }
  VertexSet best;
  for (const VertexSet& c : candidates)
    if (c.size() > best.size()) best = c;
  std::sort(best.begin(), best.end());
  return best;
}

}  // namespace bperf
