#pragma once

#include <map>

#include "bperf/graph.hpp"
#include "bperf/iso.hpp"

namespace bperf {

// All non-isomorphic simple graphs with 1..max_n vertices, built by vertex
// augmentation with isomorphism rejection. Ordered by vertex count.
inline std::vector<Graph> enumerate_graphs(int max_n) {
  if (max_n < 1) throw std::invalid_argument("enumeration needs at least one vertex");
  if (max_n > 8) throw too_large("enumeration supported for 1..8 vertices, got " + std::to_string(max_n));
  std::vector<Graph> out{Graph(1)};
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k <= max_n; ++k) {
    std::vector<Graph> next;
    std::map<std::string, std::vector<size_t>> buckets;
    for (const Graph& g : level) {
      auto edges = g.edges();
      for (uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
        auto ext = edges;
        for (int v = 0; v < k - 1; ++v)
          if (mask >> v & 1) ext.emplace_back(v, k - 1);
        Graph cand(k, ext);
        std::string key = detail::iso_invariant_key(cand);
        auto& bucket = buckets[key];
        bool fresh = true;
        for (size_t idx : bucket)
          if (are_isomorphic(cand, next[idx])) {
            fresh = false;
            break;
          }
        if (fresh) {
          bucket.push_back(next.size());
          next.push_back(std::move(cand));
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

}  // namespace bperf
