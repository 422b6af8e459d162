#ifndef ATC_DRIVER_HPP
#define ATC_DRIVER_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "atc/graph.hpp"
#include "atc/matching.hpp"
#include "atc/multiply.hpp"
#include "atc/ordering.hpp"
#include "atc/packed_degree.hpp"
#include "atc/term_list.hpp"

namespace atc {

struct RunOptions {
  /// Split the working list once it holds more than this many terms.
  std::size_t branch_limit = 100000;
  /// When false the whole product is computed in one list.
  bool sequentialize = true;
  /// Drop terms that cannot be completed within the truncation (bipartite
  /// matching test after every vertex).
  bool prune_matching = false;
};

struct RunStats {
  /// Non-zero terms produced over all edge multiplications.
  std::uint64_t monomials = 0;
  /// Largest number of terms held at once across the branch stack.
  std::uint64_t peak_live_terms = 0;
  /// Number of lists processed (the initial one included).
  std::uint64_t branches = 0;
};

/// A final term in original vertex indices. `degree` is f'; with a marker w
/// the monomial is x^(f' + 1_w).
struct FinalTerm {
  std::vector<int> degree;
  int marker = kNoMarker;
  std::int64_t coefficient = 0;

  std::vector<int> monomial() const {
    auto f = degree;
    if (marker != kNoMarker) ++f[marker];
    return f;
  }

  friend bool operator==(const FinalTerm&, const FinalTerm&) = default;
  friend auto operator<=>(const FinalTerm&, const FinalTerm&) = default;
};

enum class SinkAction { Continue, Stop };

struct RunResult {
  /// The sink asked to stop before all branches were finished.
  bool stopped = false;
  RunStats stats;
};

namespace detail {

struct PositionArc {
  int tail_pos;
  int head_pos;
};

template <std::size_t W, class Sink>
class ProductEngine {
public:
  ProductEngine(const Problem& p, const VertexOrdering& ordering, ProductMode mode, const RunOptions& options,
                Sink& sink)
      : p_(p), layout_(p, ordering), mode_(mode), options_(options), sink_(sink), arcs_(p.vertex_count()),
        later_edges_(p.vertex_count()) {
    const auto arcs = reference_orientation(p);
    for (const auto& a : arcs) {
      int pt = layout_.position_of(a.tail), ph = layout_.position_of(a.head);
      arcs_[std::min(pt, ph)].push_back({pt, ph});
    }
    for (auto& list : arcs_)
      std::sort(list.begin(), list.end(), [](const PositionArc& x, const PositionArc& y) {
        return std::max(x.tail_pos, x.head_pos) < std::max(y.tail_pos, y.head_pos);
      });
    if (options_.prune_matching) {
      // later_edges_[i]: edges with both endpoints after position i.
      for (int i = 0; i < p.vertex_count(); ++i)
        for (int j = i + 1; j < p.vertex_count(); ++j)
          for (const auto& a : arcs_[j]) later_edges_[i].push_back(a);
    }
  }

  RunResult run() {
    auto root = unit_term_list<W>();
    live_ = root.size();
    stats_.peak_live_terms = live_;
    stats_.branches = 1;
    bool stopped = process(root, 0) == SinkAction::Stop;
    return {stopped, stats_};
  }

private:
  SinkAction process(TermList<W>& terms, int start) {
    const int n = p_.vertex_count();
    TermList<W> scratch;
    for (int i = start; i < n; ++i) {
      for (const auto& arc : arcs_[i]) {
        multiply_edge(terms, scratch, layout_, arc.tail_pos, arc.head_pos, mode_);
        live_ = live_ - terms.size() + scratch.size();
        stats_.monomials += scratch.size();
        stats_.peak_live_terms = std::max<std::uint64_t>(stats_.peak_live_terms, live_);
        terms.swap(scratch);
        if (terms.empty()) return SinkAction::Continue;
      }
      if (options_.prune_matching) {
        prune(terms, i);
        if (terms.empty()) return SinkAction::Continue;
      }
      if (options_.sequentialize && terms.size() > options_.branch_limit && i + 1 < n)
        return split(terms, i);
    }
    return deliver(terms);
  }

  // Partitions by the degrees of positions 0..i and recurses on each part,
  // lexicographically largest part first. Parts are cut off the end of the
  // list so the parent shrinks as children are created.
  SinkAction split(TermList<W>& terms, int i) {
    const auto mask = layout_.template prefix_mask<W>(i + 1);
    auto same_prefix = [&](const Term<W>& a, const Term<W>& b) {
      for (std::size_t w = 0; w < W; ++w)
        if ((a.degree.words[w] & mask[w]) != (b.degree.words[w] & mask[w])) return false;
      return true;
    };
    while (!terms.empty()) {
      std::size_t begin = terms.size() - 1;
      while (begin > 0 && same_prefix(terms[begin - 1], terms.back())) --begin;
      TermList<W> part(terms.begin() + static_cast<std::ptrdiff_t>(begin), terms.end());
      terms.resize(begin);
      ++stats_.branches;
      if (process(part, i + 1) == SinkAction::Stop) return SinkAction::Stop;
      live_ -= part.size();
    }
    return SinkAction::Continue;
  }

  // A term survives if the unprocessed edges can still be given endpoints
  // without exceeding the truncation.
  void prune(TermList<W>& terms, int i) {
    const auto& remaining = later_edges_[i];
    if (remaining.empty()) return;
    const int n = p_.vertex_count();
    const int needed = static_cast<int>(remaining.size());
    std::size_t kept = 0;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const auto& t = terms[k];
      std::vector<int> capacity(n, 0);
      for (int pos = i + 1; pos < n; ++pos) capacity[pos] = layout_.limit_at(pos) - 1 - t.degree.get(layout_, pos);
      CapacitatedMatching matching(needed, std::move(capacity));
      for (int e = 0; e < needed; ++e) {
        matching.add_edge(e, remaining[e].tail_pos);
        matching.add_edge(e, remaining[e].head_pos);
      }
      // An untight term in extended mode may still raise one vertex to s.
      int target = (mode_ == ProductMode::Extended && t.marker == kNoMarker) ? needed - 1 : needed;
      if (matching.solve(target) >= target) terms[kept++] = t;
    }
    live_ -= terms.size() - kept;
    terms.resize(kept);
  }

  SinkAction deliver(const TermList<W>& terms) {
    std::vector<FinalTerm> out;
    out.reserve(terms.size());
    for (const auto& t : terms) {
      FinalTerm f;
      f.degree = unpack(layout_, t.degree);
      f.marker = t.marker == kNoMarker ? kNoMarker : layout_.vertex_at(t.marker);
      f.coefficient = t.coefficient;
      out.push_back(std::move(f));
    }
    return sink_(std::span<const FinalTerm>(out));
  }

  const Problem& p_;
  DegreeLayout layout_;
  ProductMode mode_;
  RunOptions options_;
  Sink& sink_;
  std::vector<std::vector<PositionArc>> arcs_;
  std::vector<std::vector<PositionArc>> later_edges_;
  RunStats stats_;
  std::uint64_t live_ = 0;
};

template <std::size_t W, class Sink>
RunResult run_with_width(const Problem& p, const VertexOrdering& ordering, ProductMode mode,
                         const RunOptions& options, Sink& sink) {
  ProductEngine<W, Sink> engine(p, ordering, mode, options, sink);
  return engine.run();
}

}  // namespace detail

/// Computes the truncated graph polynomial, processing vertices in the given
/// order: the edges from the i-th vertex to later vertices are multiplied in
/// by increasing position. When the working list grows past the branch limit
/// at a vertex boundary, it is split by the degrees of the processed
/// vertices and each part continues independently.
///
/// `sink` is called once per finished part with its final terms, sorted by
/// (f', marker) in processing order, and returns whether to continue. Within
/// a part, terms sharing f' are adjacent; different parts share no f'.
template <class Sink>
RunResult run_truncated_product(const Problem& p, const VertexOrdering& ordering, ProductMode mode,
                                const RunOptions& options, Sink&& sink) {
  if (options.branch_limit < 1) throw std::invalid_argument("branch limit must be positive");
  DegreeLayout layout(p, ordering);
  switch (layout.words()) {
    case 1: return detail::run_with_width<1>(p, ordering, mode, options, sink);
    case 2: return detail::run_with_width<2>(p, ordering, mode, options, sink);
    case 3: return detail::run_with_width<3>(p, ordering, mode, options, sink);
    case 4: return detail::run_with_width<4>(p, ordering, mode, options, sink);
    case 5: return detail::run_with_width<5>(p, ordering, mode, options, sink);
    case 6: return detail::run_with_width<6>(p, ordering, mode, options, sink);
    case 7: return detail::run_with_width<7>(p, ordering, mode, options, sink);
    case 8: return detail::run_with_width<8>(p, ordering, mode, options, sink);
  }
  throw std::length_error("graph too large for packed degree vectors");
}

/// Collects every final term, sorted by (degree, marker) in original vertex
/// order.
inline std::vector<FinalTerm> all_final_terms(const Problem& p, const VertexOrdering& ordering, ProductMode mode,
                                              const RunOptions& options, RunStats* stats = nullptr) {
  std::vector<FinalTerm> all;
  auto result = run_truncated_product(p, ordering, mode, options, [&](std::span<const FinalTerm> part) {
    all.insert(all.end(), part.begin(), part.end());
    return SinkAction::Continue;
  });
  if (stats) *stats = result.stats;
  std::sort(all.begin(), all.end(), [](const FinalTerm& a, const FinalTerm& b) {
    return std::tie(a.degree, a.marker) < std::tie(b.degree, b.marker);
  });
  return all;
}

}  // namespace atc

#endif  // ATC_DRIVER_HPP
