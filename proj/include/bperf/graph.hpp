#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bperf {

// Sorted list of vertex indices, no duplicates.
using VertexSet = std::vector<int>;

class too_large : public std::runtime_error {
 public:
  explicit too_large(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline int popcount_words(const uint64_t* w, int words) {
  int c = 0;
  for (int i = 0; i < words; ++i) c += __builtin_popcountll(w[i]);
  return c;
}

template <typename F>
inline void for_each_bit(const uint64_t* w, int words, F f) {
  for (int i = 0; i < words; ++i) {
    uint64_t x = w[i];
    while (x) {
      int b = __builtin_ctzll(x);
      f(i * 64 + b);
      x &= x - 1;
    }
  }
}

}  // namespace detail

// Simple undirected graph on vertices 0..n-1. Immutable after construction:
// no self-loops, adjacency kept symmetric. Rows are bitsets.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
    bits_.assign(static_cast<size_t>(n_) * words_, 0);
  }

  Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge_(u, v);
  }

  int n() const { return n_; }
  int words() const { return words_; }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (row(u)[v / 64] >> (v % 64)) & 1;
  }

  const uint64_t* row(int u) const { return bits_.data() + static_cast<size_t>(u) * words_; }

  int degree(int u) const {
    check_vertex(u);
    return detail::popcount_words(row(u), words_);
  }

  VertexSet neighbors(int u) const {
    check_vertex(u);
    VertexSet out;
    detail::for_each_bit(row(u), words_, [&](int v) { out.push_back(v); });
    return out;
  }

  long long edge_count() const {
    long long twice = 0;
    for (int u = 0; u < n_; ++u) twice += detail::popcount_words(row(u), words_);
    return twice / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      detail::for_each_bit(row(u), words_, [&](int v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

  // Named constructor used by parsers and transforms within the library.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph(n, edges);
  }

 private:
  void check_vertex(int u) const {
    if (u < 0 || u >= n_) throw std::out_of_range("vertex " + std::to_string(u) + " out of range");
  }

  void add_edge_(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    bits_[static_cast<size_t>(u) * words_ + v / 64] |= uint64_t{1} << (v % 64);
    bits_[static_cast<size_t>(v) * words_ + u / 64] |= uint64_t{1} << (u % 64);
  }

  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> bits_;
};

inline Graph complement(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(g.n(), edges);
}

// Subgraph induced by s; vertices are relabeled 0..|s|-1 in ascending order
// of their original index.
inline Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  VertexSet sorted = s;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int v : sorted)
    if (v < 0 || v >= g.n()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < sorted.size(); ++i)
    for (size_t j = i + 1; j < sorted.size(); ++j)
      if (g.adjacent(sorted[i], sorted[j])) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return Graph(static_cast<int>(sorted.size()), edges);
}

inline Graph remove_vertex(const Graph& g, int v) {
  VertexSet keep;
  for (int u = 0; u < g.n(); ++u)
    if (u != v) keep.push_back(u);
  return induced_subgraph(g, keep);
}

// Connected components, ordered by smallest member; each component sorted.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(g.n(), 0);
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      detail::for_each_bit(g.row(u), g.words(), [&](int v) {
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

inline bool is_complete(const Graph& g) {
  return g.edge_count() == static_cast<long long>(g.n()) * (g.n() - 1) / 2;
}

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  if (n >= 3) e.emplace_back(n - 1, 0);
  return Graph(n, e);
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

}  // namespace bperf
