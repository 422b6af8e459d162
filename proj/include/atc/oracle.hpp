#ifndef ATC_ORACLE_HPP
#define ATC_ORACLE_HPP

// Ground-truth routines used to cross-check the polynomial engine and the
// decision pipeline on small instances. Nothing here depends on the packed
// term lists.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "atc/checked.hpp"
#include "atc/color_vector.hpp"
#include "atc/graph.hpp"
#include "atc/matching.hpp"
#include "atc/verdict.hpp"

namespace atc {

/// AsReference: the reference tail is the out-vertex (the factor contributes
/// -x_tail). Flipped: the head is the out-vertex (+x_head).
enum class EdgeState : std::uint8_t { Unoriented, AsReference, Flipped };

struct PartialOrientation {
  std::vector<EdgeState> state;
  std::vector<int> outdegree;

  static PartialOrientation empty(const Problem& p) {
    return {std::vector<EdgeState>(p.edges().size(), EdgeState::Unoriented),
            std::vector<int>(p.vertex_count(), 0)};
  }

  void orient(const Problem& p, std::size_t edge, EdgeState s) {
    if (state.at(edge) != EdgeState::Unoriented) throw std::logic_error("edge already oriented");
    state[edge] = s;
    const auto& e = p.edges()[edge];
    ++outdegree[s == EdgeState::AsReference ? e.u : e.v];
  }

  /// (-1)^(edges oriented as the reference). With P_G the product of
  /// (x_head - x_tail) this is the sign of the orientation's monomial.
  int sign() const {
    int as_reference = 0;
    for (auto s : state) as_reference += s == EdgeState::AsReference;
    return as_reference % 2 ? -1 : 1;
  }
};

namespace detail {

// Backtracking over orientations with every outdegree exactly f. Prunes when
// a vertex exceeds f(v) or can no longer reach it; prefers edges whose
// orientation is forced.
class OrientationCounter {
public:
  OrientationCounter(const Problem& p, const std::vector<int>& f, bool signed_sum)
      : p_(p), f_(f), signed_(signed_sum), out_(p.vertex_count(), 0), rem_(p.vertex_count(), 0),
        assigned_(p.edges().size(), 0), incident_(p.vertex_count()) {
    for (std::size_t i = 0; i < p.edges().size(); ++i) {
      const auto& e = p.edges()[i];
      incident_[e.u].push_back(i);
      incident_[e.v].push_back(i);
      ++rem_[e.u];
      ++rem_[e.v];
    }
  }

  std::int64_t run() {
    for (int v = 0; v < p_.vertex_count(); ++v)
      if (rem_[v] < f_[v]) return 0;
    return search(p_.edge_count(), 1);
  }

private:
  std::int64_t search(int left, int sign) {
    if (left == 0) return signed_ ? sign : 1;

    // Forced vertex: full (every remaining edge points away) or needing all.
    int pick = -1;
    int forced_out = -1;  // 1: pick is the out-vertex, 0: the other endpoint is
    int best_slack = std::numeric_limits<int>::max();
    for (int v = 0; v < p_.vertex_count(); ++v) {
      if (rem_[v] == 0) continue;
      if (out_[v] == f_[v]) {
        pick = v;
        forced_out = 0;
        break;
      }
      if (out_[v] + rem_[v] == f_[v]) {
        pick = v;
        forced_out = 1;
        break;
      }
      int slack = f_[v] - out_[v];
      if (slack < best_slack) {
        best_slack = slack;
        pick = v;
      }
    }
    std::size_t edge = 0;
    for (auto i : incident_[pick])
      if (!assigned_[i]) {
        edge = i;
        break;
      }
    const auto& e = p_.edges()[edge];
    const int other = e.u == pick ? e.v : e.u;

    std::int64_t total = 0;
    auto branch = [&](int out_vertex) {
      const int in_vertex = out_vertex == e.u ? e.v : e.u;
      assigned_[edge] = 1;
      --rem_[e.u];
      --rem_[e.v];
      ++out_[out_vertex];
      if (out_[out_vertex] <= f_[out_vertex] && out_[in_vertex] + rem_[in_vertex] >= f_[in_vertex] &&
          out_[out_vertex] + rem_[out_vertex] >= f_[out_vertex]) {
        // Choosing the tail as out-vertex takes the -x_tail term.
        int s = out_vertex == e.u ? -sign : sign;
        total = checked_add(total, search(left - 1, s));
      }
      --out_[out_vertex];
      ++rem_[e.u];
      ++rem_[e.v];
      assigned_[edge] = 0;
    };
    if (forced_out == 1) {
      branch(pick);
    } else if (forced_out == 0) {
      branch(other);
    } else {
      branch(pick);
      branch(other);
    }
    return total;
  }

  const Problem& p_;
  const std::vector<int>& f_;
  bool signed_;
  std::vector<int> out_;
  std::vector<int> rem_;
  std::vector<char> assigned_;
  std::vector<std::vector<std::size_t>> incident_;
};

inline bool valid_degree_vector(const Problem& p, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != p.vertex_count()) throw std::invalid_argument("degree vector has wrong length");
  long long total = 0;
  for (int x : f) {
    if (x < 0) return false;
    total += x;
  }
  return total == p.edge_count();
}

}  // namespace detail

/// [x^f] P_G as the signed count of f-orientations.
inline std::int64_t direct_coefficient(const Problem& p, const std::vector<int>& f) {
  if (!detail::valid_degree_vector(p, f)) return 0;
  return detail::OrientationCounter(p, f, true).run();
}

/// Number of orientations in which every vertex v has outdegree f(v).
inline std::int64_t count_f_orientations(const Problem& p, const std::vector<int>& f) {
  if (!detail::valid_degree_vector(p, f)) return 0;
  return detail::OrientationCounter(p, f, false).run();
}

/// Whether the unoriented edges can be oriented so that every vertex ends
/// with outdegree exactly f(v). Matching between the unoriented edges and
/// f(v) - outdegree(v) copies of each vertex.
inline bool extendable_to_f_orientation(const Problem& p, const PartialOrientation& partial,
                                        const std::vector<int>& f) {
  const int n = p.vertex_count();
  std::vector<int> first_slot(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    int spare = f.at(v) - partial.outdegree.at(v);
    if (spare < 0) return false;
    first_slot[v + 1] = first_slot[v] + spare;
  }
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < partial.state.size(); ++i)
    if (partial.state[i] == EdgeState::Unoriented) open.push_back(i);
  if (static_cast<std::size_t>(first_slot[n]) != open.size()) return false;

  CapacitatedMatching matching(static_cast<int>(open.size()), std::vector<int>(first_slot[n], 1));
  for (std::size_t k = 0; k < open.size(); ++k) {
    const auto& e = p.edges()[open[k]];
    for (int v : {e.u, e.v})
      for (int slot = first_slot[v]; slot < first_slot[v + 1]; ++slot) matching.add_edge(static_cast<int>(k), slot);
  }
  return matching.solve() == static_cast<int>(open.size());
}

/// Proper coloring with color(v) in lists[v], or nullopt. Backtracking that
/// always branches on the uncolored vertex with the fewest available colors.
inline std::optional<std::vector<int>> color_from_lists(const Problem& p, const std::vector<std::vector<int>>& lists) {
  const int n = p.vertex_count();
  std::vector<int> color(n, -1);
  std::function<bool(int)> solve = [&](int colored) -> bool {
    if (colored == n) return true;
    int best = -1;
    std::vector<int> best_options;
    for (int v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      std::vector<int> options;
      for (int c : lists[v]) {
        bool clash = false;
        for (int w : p.neighbors(v))
          if (color[w] == c) {
            clash = true;
            break;
          }
        if (!clash) options.push_back(c);
      }
      if (best < 0 || options.size() < best_options.size()) {
        best = v;
        best_options = std::move(options);
        if (best_options.empty()) return false;
      }
    }
    for (int c : best_options) {
      color[best] = c;
      if (solve(colored + 1)) return true;
    }
    color[best] = -1;
    return false;
  };
  if (!solve(0)) return std::nullopt;
  return color;
}

/// Colors 0..t-1 as in AssignmentPattern::lists.
inline std::optional<std::vector<int>> color_from_pattern(const Problem& p, const AssignmentPattern& pattern) {
  return color_from_lists(p, pattern.lists(p.vertex_count()));
}

/// Calls visit(pattern) for every multiset of non-zero characteristic
/// vectors whose sum is exactly `sizes`, i.e. every list assignment with
/// |L_v| = sizes[v] up to renaming colors. Stops when visit returns false.
/// Returns false if stopped.
inline bool for_each_list_pattern(const std::vector<int>& sizes,
                                  const std::function<bool(const AssignmentPattern&)>& visit) {
  const int n = static_cast<int>(sizes.size());
  if (n > 30) throw std::invalid_argument("too many vertices for list enumeration");
  std::vector<int> residual = sizes;
  AssignmentPattern current;

  // Vectors are chosen in decreasing bit order, each with its full
  // multiplicity, so every multiset is produced once.
  std::function<bool(std::uint64_t)> rec = [&](std::uint64_t below) -> bool {
    int high = -1;
    std::uint64_t support = 0;
    for (int v = 0; v < n; ++v)
      if (residual[v] > 0) {
        high = v;
        support |= 1ULL << v;
      }
    if (high < 0) return visit(current);
    const std::uint64_t low = 1ULL << high;
    // The highest uncovered vertex must be in the next vector.
    for (std::uint64_t m = std::min(below, (low << 1) - 1); m >= low; --m) {
      if ((m & ~support) != 0) continue;
      int most = std::numeric_limits<int>::max();
      for (int v = 0; v < n; ++v)
        if ((m >> v) & 1ULL) most = std::min(most, residual[v]);
      for (int k = 1; k <= most; ++k) {
        for (int v = 0; v < n; ++v)
          if ((m >> v) & 1ULL) --residual[v];
        current.entries.push_back({ColorVector(n, m), k});
        bool go_on = rec(m - 1);
        current.entries.pop_back();
        if (!go_on) {
          for (int v = 0; v < n; ++v)
            if ((m >> v) & 1ULL) residual[v] += k;
          return false;
        }
      }
      for (int v = 0; v < n; ++v)
        if ((m >> v) & 1ULL) residual[v] += most;
    }
    return true;
  };
  return rec((1ULL << n) - 1);
}

struct BruteForceLimits {
  int max_vertices = 8;
  int max_total_list_size = 24;
};

/// Decides s-choosability by trying every list assignment up to renaming.
/// Throws std::invalid_argument if the instance exceeds the limits.
inline Verdict brute_force_choosable(const Problem& p, BruteForceLimits limits = {}) {
  const auto& s = p.list_sizes();
  if (p.vertex_count() > limits.max_vertices ||
      std::accumulate(s.begin(), s.end(), 0) > limits.max_total_list_size)
    throw std::invalid_argument("instance too large for brute-force choosability");
  std::optional<AssignmentPattern> bad;
  std::size_t count = 0;
  for_each_list_pattern(s, [&](const AssignmentPattern& pattern) {
    ++count;
    if (!color_from_pattern(p, pattern)) {
      bad = pattern;
      return false;
    }
    return true;
  });
  if (bad) return Verdict::not_choosable(*bad);
  Certificate c;
  c.kind = CertificateKind::AllPatternsColorable;
  c.pattern_count = count;
  return Verdict::choosable(c);
}

/// Every list assignment (up to renaming) from which p is not colorable.
inline std::vector<AssignmentPattern> all_bad_patterns(const Problem& p) {
  std::vector<AssignmentPattern> bad;
  for_each_list_pattern(p.list_sizes(), [&](const AssignmentPattern& pattern) {
    if (!color_from_pattern(p, pattern)) bad.push_back(pattern);
    return true;
  });
  return bad;
}

}  // namespace atc

#endif  // ATC_ORACLE_HPP
