#ifndef ATC_ORDERING_HPP
#define ATC_ORDERING_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "atc/graph.hpp"

namespace atc {

enum class Heuristic { Input, Vsep, MinDegree, MinDegreeProcessed, Overhang, List, ListDegree, MinDegreeReversed };

inline constexpr std::array kAllHeuristics = {
    Heuristic::Input,    Heuristic::Vsep,       Heuristic::MinDegree,         Heuristic::MinDegreeProcessed,
    Heuristic::Overhang, Heuristic::List,       Heuristic::ListDegree,        Heuristic::MinDegreeReversed,
};

inline std::string_view to_string(Heuristic h) {
  switch (h) {
    case Heuristic::Input: return "INPUT";
    case Heuristic::Vsep: return "VSEP";
    case Heuristic::MinDegree: return "MD";
    case Heuristic::MinDegreeProcessed: return "MD+PROC";
    case Heuristic::Overhang: return "OVER";
    case Heuristic::List: return "LIST";
    case Heuristic::ListDegree: return "LIST+DEG";
    case Heuristic::MinDegreeReversed: return "MDR";
  }
  return "?";
}

/// Case-insensitive lookup of a heuristic by its display name.
inline std::optional<Heuristic> parse_heuristic(std::string_view name) {
  std::string upper;
  for (char c : name) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  for (auto h : kAllHeuristics)
    if (to_string(h) == upper) return h;
  return std::nullopt;
}

/// Processing order v_1..v_n: order[i] is the vertex processed i-th.
struct VertexOrdering {
  std::vector<int> order;
  Heuristic heuristic = Heuristic::Input;

  /// position[v] = index of v in order.
  std::vector<int> positions() const {
    std::vector<int> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    return pos;
  }

  bool is_permutation() const {
    std::vector<char> seen(order.size(), 0);
    for (int v : order) {
      if (v < 0 || v >= static_cast<int>(order.size()) || seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }
};

namespace detail {

// Greedy selection. `key(v)` returns a tuple compared lexicographically; the
// smallest key wins and remaining ties go to the smallest vertex index.
class GreedyState {
public:
  explicit GreedyState(const Problem& p)
      : p_(p), processed_(p.vertex_count(), 0), remaining_degree_(p.vertex_count()),
        processed_neighbors_(p.vertex_count(), 0), touched_(p.vertex_count(), 0) {
    for (int v = 0; v < p.vertex_count(); ++v) remaining_degree_[v] = p.degree(v);
  }

  bool processed(int v) const { return processed_[v] != 0; }
  int remaining_degree(int v) const { return remaining_degree_[v]; }
  int processed_neighbors(int v) const { return processed_neighbors_[v]; }

  // Unprocessed vertices with a processed neighbor if v were processed next.
  int frontier_after(int v) const {
    int count = frontier_size_ - (touched_[v] ? 1 : 0);
    for (int w : p_.neighbors(v))
      if (!processed_[w] && !touched_[w]) ++count;
    return count;
  }

  void take(int v) {
    processed_[v] = 1;
    if (touched_[v]) --frontier_size_;
    for (int w : p_.neighbors(v)) {
      --remaining_degree_[w];
      ++processed_neighbors_[w];
      if (!processed_[w] && !touched_[w]) {
        touched_[w] = 1;
        ++frontier_size_;
      }
    }
  }

  template <class Key>
  std::vector<int> run(Key key) {
    std::vector<int> order;
    const int n = p_.vertex_count();
    for (int step = 0; step < n; ++step) {
      int best = -1;
      decltype(key(0)) best_key{};
      for (int v = 0; v < n; ++v) {
        if (processed_[v]) continue;
        auto k = key(v);
        if (best < 0 || k < best_key) {
          best = v;
          best_key = k;
        }
      }
      if (best < 0) break;
      take(best);
      order.push_back(best);
    }
    return order;
  }

private:
  const Problem& p_;
  std::vector<char> processed_;
  std::vector<int> remaining_degree_;
  std::vector<int> processed_neighbors_;
  std::vector<char> touched_;
  int frontier_size_ = 0;
};

}  // namespace detail

/// Greedy vertex ordering. Degrees "in the remaining graph" count only
/// neighbors that are not yet processed; VSEP's secondary criterion uses the
/// degree in the whole graph.
inline VertexOrdering order_vertices(const Problem& p, Heuristic h) {
  const int n = p.vertex_count();
  VertexOrdering result;
  result.heuristic = h;
  detail::GreedyState st(p);
  switch (h) {
    case Heuristic::Input:
      for (int v = 0; v < n; ++v) result.order.push_back(v);
      break;
    case Heuristic::Vsep:
      result.order = st.run([&](int v) { return std::tuple{st.frontier_after(v), p.degree(v)}; });
      break;
    case Heuristic::MinDegree:
      result.order = st.run([&](int v) { return std::tuple{st.remaining_degree(v)}; });
      break;
    case Heuristic::MinDegreeProcessed:
      result.order =
          st.run([&](int v) { return std::tuple{st.remaining_degree(v), -st.processed_neighbors(v)}; });
      break;
    case Heuristic::Overhang:
      result.order =
          st.run([&](int v) { return std::tuple{st.remaining_degree(v) - st.processed_neighbors(v)}; });
      break;
    case Heuristic::List:
      result.order = st.run([&](int v) { return std::tuple{p.list_size(v), st.remaining_degree(v)}; });
      break;
    case Heuristic::ListDegree:
      result.order = st.run([&](int v) { return std::tuple{p.list_size(v) + st.remaining_degree(v)}; });
      break;
    case Heuristic::MinDegreeReversed:
      result.order = st.run([&](int v) { return std::tuple{st.remaining_degree(v)}; });
      std::reverse(result.order.begin(), result.order.end());
      break;
  }
  return result;
}

}  // namespace atc

#endif  // ATC_ORDERING_HPP
