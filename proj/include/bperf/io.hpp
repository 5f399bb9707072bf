#pragma once

#include <cctype>
#include <sstream>
#include <string>

#include "bperf/graph.hpp"

namespace bperf {

class malformed_input : public std::runtime_error {
 public:
  malformed_input(size_t position, const std::string& reason)
      : std::runtime_error("malformed input at position " + std::to_string(position) + ": " + reason),
        position(position),
        reason(reason) {}
  size_t position;
  std::string reason;
};

class unsupported : public std::runtime_error {
 public:
  explicit unsupported(const std::string& what) : std::runtime_error(what) {}
};

enum class Format { graph6, dimacs, edgelist };

inline Graph parse_graph6(const std::string& text) {
  size_t start = 0;
  while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
  size_t end = start;
  while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
  for (size_t i = end; i < text.size(); ++i)
    if (!std::isspace(static_cast<unsigned char>(text[i])))
      throw malformed_input(i, "trailing content after graph6 string");
  if (start == end) throw malformed_input(start, "empty graph6 string");

  for (size_t i = start; i < end; ++i) {
    char c = text[i];
    if (c < 63 || c > 126) throw malformed_input(i, "byte outside graph6 alphabet");
  }
  if (text[start] == 126) throw malformed_input(start, "long-form order not supported");
  int n = text[start] - 63;
  size_t need = (static_cast<size_t>(n) * (n - 1) / 2 + 5) / 6;
  size_t have = end - start - 1;
  if (have < need) throw malformed_input(end, "graph6 string too short for order " + std::to_string(n));
  if (have > need) throw malformed_input(start + 1 + need, "graph6 string too long for order " + std::to_string(n));

  std::vector<std::pair<int, int>> edges;
  size_t bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      char c = text[start + 1 + bit / 6];
      if ((c - 63) >> (5 - bit % 6) & 1) edges.emplace_back(i, j);
    }
  size_t bits_total = static_cast<size_t>(n) * (n - 1) / 2;
  for (size_t b = bits_total; b < need * 6; ++b) {
    char c = text[start + 1 + b / 6];
    if ((c - 63) >> (5 - b % 6) & 1) throw malformed_input(start + 1 + b / 6, "nonzero padding bits");
  }
  return Graph(n, edges);
}

inline std::string encode_graph6(const Graph& g) {
  if (g.n() > 62) throw unsupported("graph6 encoding limited to 62 vertices, got " + std::to_string(g.n()));
  std::string out(1, static_cast<char>(g.n() + 63));
  size_t bits_total = static_cast<size_t>(g.n()) * (g.n() - 1) / 2;
  std::string body((bits_total + 5) / 6, 0);
  size_t bit = 0;
  for (int j = 1; j < g.n(); ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (g.adjacent(i, j)) body[bit / 6] |= static_cast<char>(1 << (5 - bit % 6));
  for (char& c : body) c += 63;
  return out + body;
}

inline Graph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  long long m = -1, seen = 0;
  std::vector<std::pair<int, int>> edges;
  size_t pos = 0;
  while (std::getline(in, line)) {
    size_t line_start = pos;
    pos += line.size() + 1;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      if (n != -1) throw malformed_input(line_start, "duplicate problem line");
      std::string kind;
      if (!(ls >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0)
        throw malformed_input(line_start, "expected 'p edge <n> <m>'");
      continue;
    }
    if (tag == "e") {
      if (n == -1) throw malformed_input(line_start, "edge before problem line");
      int u, v;
      if (!(ls >> u >> v)) throw malformed_input(line_start, "expected 'e <u> <v>'");
      if (u < 1 || u > n || v < 1 || v > n)
        throw malformed_input(line_start, "endpoint outside 1.." + std::to_string(n));
      if (u == v) throw malformed_input(line_start, "self-loop");
      edges.emplace_back(u - 1, v - 1);
      ++seen;
      continue;
    }
    throw malformed_input(line_start, "unknown line type '" + tag + "'");
  }
  if (n == -1) throw malformed_input(0, "missing problem line");
  if (seen != m)
    throw malformed_input(pos, "edge count " + std::to_string(seen) + " does not match header " + std::to_string(m));
  Graph g(n, edges);
  return g;
}

inline Graph parse_edgelist(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  bool first = true;
  std::vector<std::pair<int, int>> edges;
  int max_seen = -1;
  size_t pos = 0;
  while (std::getline(in, line)) {
    size_t line_start = pos;
    pos += line.size() + 1;
    std::istringstream ls(line);
    std::string a;
    if (!(ls >> a)) continue;
    if (a[0] == '#') continue;
    if (first && a == "n") {
      if (!(ls >> n) || n < 0) throw malformed_input(line_start, "expected 'n <count>'");
      first = false;
      continue;
    }
    first = false;
    int u, v;
    try {
      size_t used;
      u = std::stoi(a, &used);
      if (used != a.size()) throw std::invalid_argument(a);
    } catch (const std::exception&) {
      throw malformed_input(line_start, "expected vertex index, got '" + a + "'");
    }
    if (!(ls >> v)) throw malformed_input(line_start, "expected 'u v' pair");
    if (u < 0 || v < 0) throw malformed_input(line_start, "negative vertex index");
    if (u == v) throw malformed_input(line_start, "self-loop");
    edges.emplace_back(u, v);
    max_seen = std::max({max_seen, u, v});
  }
  if (n == -1) n = max_seen + 1;
  if (max_seen >= n)
    throw malformed_input(0, "vertex " + std::to_string(max_seen) + " outside declared order " + std::to_string(n));
  return Graph(n, edges);
}

inline Graph parse_graph(const std::string& text, Format format) {
  switch (format) {
    case Format::graph6:
      return parse_graph6(text);
    case Format::dimacs:
      return parse_dimacs(text);
    case Format::edgelist:
      return parse_edgelist(text);
  }
  throw std::invalid_argument("unknown format");
}

}  // namespace bperf
