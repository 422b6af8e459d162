#ifndef ATC_MATCHING_HPP
#define ATC_MATCHING_HPP

#include <vector>

namespace atc {

/// Maximum bipartite matching by augmenting paths, where right vertex r may
/// be matched up to capacity[r] times. Left vertices are matched at most
/// once.
class CapacitatedMatching {
public:
  CapacitatedMatching(int left, std::vector<int> capacity)
      : adjacency_(left), capacity_(std::move(capacity)), matched_(capacity_.size()) {}

  void add_edge(int l, int r) { adjacency_[l].push_back(r); }

  /// Size of a maximum matching. Stops early once `target` left vertices are
  /// matched, if a target is given.
  int solve(int target = -1) {
    const int left = static_cast<int>(adjacency_.size());
    assignment_.assign(left, -1);
    for (auto& m : matched_) m.clear();
    int size = 0;
    for (int l = 0; l < left; ++l) {
      visited_.assign(capacity_.size(), 0);
      if (augment(l)) ++size;
      if (target >= 0 && size >= target) break;
    }
    return size;
  }

  /// Right vertex matched to l, or -1.
  int partner(int l) const { return assignment_[l]; }

private:
  // A matched l is being re-routed: its caller holds l's current slot and
  // has already marked that right vertex visited.
  bool augment(int l) {
    for (int r : adjacency_[l]) {
      if (visited_[r]) continue;
      visited_[r] = 1;
      if (static_cast<int>(matched_[r].size()) < capacity_[r]) {
        matched_[r].push_back(l);
        assignment_[l] = r;
        return true;
      }
      for (auto& other : matched_[r]) {
        if (augment(other)) {
          other = l;
          assignment_[l] = r;
          return true;
        }
      }
    }
    return false;
  }

  std::vector<std::vector<int>> adjacency_;
  std::vector<int> capacity_;
  std::vector<std::vector<int>> matched_;
  std::vector<int> assignment_;
  std::vector<char> visited_;
};

}  // namespace atc

#endif  // ATC_MATCHING_HPP
