#ifndef ATC_TESTS_NAIVE_POLY_HPP
#define ATC_TESTS_NAIVE_POLY_HPP

// Plain expansion of the graph polynomial with a std::map, used as an
// independent reference for the packed engine.

#include <cstdint>
#include <map>
#include <vector>

#include "atc/graph.hpp"

namespace atc::fixtures {

using Poly = std::map<std::vector<int>, std::int64_t>;

/// prod over edges of (x_max - x_min), no truncation.
inline Poly expand_graph_polynomial(const Problem& p) {
  Poly poly{{std::vector<int>(p.vertex_count(), 0), 1}};
  for (const auto& e : p.edges()) {
    const int tail = std::min(e.u, e.v), head = std::max(e.u, e.v);
    Poly next;
    for (const auto& [f, c] : poly) {
      auto g = f;
      ++g[head];
      next[g] += c;
      g = f;
      ++g[tail];
      next[g] -= c;
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    poly = std::move(next);
  }
  return poly;
}

inline int tight_count(const Problem& p, const std::vector<int>& f) {
  int t = 0;
  for (int v = 0; v < p.vertex_count(); ++v) {
    if (f[v] > p.list_size(v)) return -1;
    t += f[v] == p.list_size(v);
  }
  return t;
}

/// Monomials with f < s.
inline Poly below_s(const Problem& p, const Poly& poly) {
  Poly out;
  for (const auto& [f, c] : poly)
    if (tight_count(p, f) == 0) out[f] = c;
  return out;
}

/// Monomials with f <= s and equality at exactly one vertex.
inline Poly s_tight(const Problem& p, const Poly& poly) {
  Poly out;
  for (const auto& [f, c] : poly)
    if (tight_count(p, f) == 1) out[f] = c;
  return out;
}

}  // namespace atc::fixtures

#endif
