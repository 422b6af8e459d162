#ifndef ATC_DECIDE_HPP
#define ATC_DECIDE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "atc/checked.hpp"
#include "atc/color_vector.hpp"
#include "atc/constraints.hpp"
#include "atc/driver.hpp"
#include "atc/graph.hpp"
#include "atc/oracle.hpp"
#include "atc/ordering.hpp"
#include "atc/verdict.hpp"

namespace atc {

struct DecideConfig {
  Heuristic heuristic = Heuristic::MinDegreeProcessed;
  RunOptions run;
  /// Give up after this many candidate list assignments.
  std::size_t pattern_cap = 100;
  /// Largest vertex count for the exhaustive 0/1 search.
  int feasible_cap = 25;
};

/// First monomial x^f with f < s and a non-zero coefficient, if any.
inline std::optional<WitnessMonomial> standard_alon_tarsi(const Problem& p, const DecideConfig& cfg,
                                                          RunStats* stats = nullptr) {
  std::optional<WitnessMonomial> witness;
  auto result = run_truncated_product(p, order_vertices(p, cfg.heuristic), ProductMode::Standard, cfg.run,
                                      [&](std::span<const FinalTerm> part) {
                                        if (part.empty()) return SinkAction::Continue;
                                        witness = WitnessMonomial{part.front().degree, part.front().coefficient};
                                        return SinkAction::Stop;
                                      });
  if (stats) *stats = result.stats;
  return witness;
}

struct ConstraintCollection {
  ConstraintBasis basis;
  /// Set when an untight monomial survived, so the graph is choosable.
  std::optional<WitnessMonomial> witness;
  /// Number of s-bases with at least one non-zero tight coefficient.
  std::size_t groups = 0;
  RunStats stats;
};

/// Runs the extended product and turns every s-base group of tight
/// monomials into a constraint row.
inline ConstraintCollection collect_constraints(const Problem& p, const DecideConfig& cfg) {
  const int n = p.vertex_count();
  ConstraintCollection out{ConstraintBasis(n), std::nullopt, 0, {}};
  auto result = run_truncated_product(
      p, order_vertices(p, cfg.heuristic), ProductMode::Extended, cfg.run, [&](std::span<const FinalTerm> part) {
        std::size_t i = 0;
        while (i < part.size()) {
          if (part[i].marker == kNoMarker) {
            out.witness = WitnessMonomial{part[i].degree, part[i].coefficient};
            return SinkAction::Stop;
          }
          ConstraintRow row{std::vector<std::int64_t>(n, 0), part[i].degree};
          std::size_t j = i;
          for (; j < part.size() && part[j].degree == part[i].degree && part[j].marker != kNoMarker; ++j)
            row.coefficients[part[j].marker] = part[j].coefficient;
          ++out.groups;
          out.basis.add(row);
          i = j;
        }
        return SinkAction::Continue;
      });
  out.stats = result.stats;
  return out;
}

/// All chi in {0,1}^n satisfying every kept row exactly, in increasing bit
/// order (the zero vector first). nullopt if n exceeds the cap.
inline std::optional<std::vector<ColorVector>> enumerate_feasible_vectors(const ConstraintBasis& basis, int cap) {
  const int n = basis.vertex_count();
  if (n > cap || n > 62) return std::nullopt;
  const auto& rows = basis.rows();
  std::vector<__int128> sums(rows.size(), 0);
  std::vector<ColorVector> found;
  auto all_zero = [&] { return std::all_of(sums.begin(), sums.end(), [](__int128 x) { return x == 0; }); };

  // Gray code walk: one coordinate flips per step.
  std::uint64_t gray = 0;
  const std::uint64_t total = 1ULL << n;
  for (std::uint64_t i = 0; i < total; ++i) {
    if (i > 0) {
      int bit = std::countr_zero(i);
      gray ^= 1ULL << bit;
      const bool on = (gray >> bit) & 1ULL;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        auto c = rows[r].coefficients[bit];
        sums[r] += on ? c : -static_cast<__int128>(c);
      }
    }
    if (all_zero()) found.emplace_back(n, gray);
  }
  std::sort(found.begin(), found.end(), [](const ColorVector& a, const ColorVector& b) { return a.bits() < b.bits(); });
  return found;
}

/// Edges uv such that no feasible vector contains both u and v.
inline std::vector<Edge> find_deletable_edges(const std::vector<ColorVector>& vectors, const Problem& p) {
  std::vector<Edge> out;
  for (const auto& e : p.edges()) {
    bool shared = std::any_of(vectors.begin(), vectors.end(), [&](const ColorVector& chi) { return chi[e.u] && chi[e.v]; });
    if (!shared) out.push_back(e);
  }
  return out;
}

struct PatternSearch {
  std::vector<AssignmentPattern> patterns;
  /// More than `cap` patterns exist; `patterns` holds the first cap.
  bool too_many = false;
};

/// Ways to write s as a non-negative integer combination of the non-zero
/// vectors. Depth-first over multiplicities; a branch dies as soon as some
/// vertex's residual cannot be covered by the remaining vectors.
inline PatternSearch enumerate_assignment_patterns(std::vector<ColorVector> vectors, const std::vector<int>& s,
                                                   std::size_t cap) {
  const int n = static_cast<int>(s.size());
  std::erase_if(vectors, [](const ColorVector& v) { return v.empty(); });
  std::sort(vectors.begin(), vectors.end(), [](const ColorVector& a, const ColorVector& b) {
    int la = std::countr_zero(a.bits()), lb = std::countr_zero(b.bits());
    return la != lb ? la < lb : a.bits() < b.bits();
  });
  std::vector<std::uint64_t> reach(vectors.size() + 1, 0);
  for (std::size_t k = vectors.size(); k-- > 0;) reach[k] = reach[k + 1] | vectors[k].bits();

  PatternSearch out;
  std::vector<int> residual = s;
  AssignmentPattern current;

  auto support = [&] {
    std::uint64_t m = 0;
    for (int v = 0; v < n; ++v)
      if (residual[v] > 0) m |= 1ULL << v;
    return m;
  };

  // Returns false to abort (cap exceeded).
  auto dfs = [&](auto&& self, std::size_t k) -> bool {
    const std::uint64_t need = support();
    if (need == 0) {
      if (out.patterns.size() == cap) {
        out.too_many = true;
        return false;
      }
      out.patterns.push_back(current);
      return true;
    }
    if (k == vectors.size() || (need & ~reach[k]) != 0) return true;
    const std::uint64_t bits = vectors[k].bits();
    int most = std::numeric_limits<int>::max();
    for (int v = 0; v < n; ++v)
      if ((bits >> v) & 1ULL) most = std::min(most, residual[v]);
    for (int m = most; m >= 0; --m) {
      for (int v = 0; v < n; ++v)
        if ((bits >> v) & 1ULL) residual[v] -= m;
      if (m > 0) current.entries.push_back({vectors[k], m});
      bool go_on = self(self, k + 1);
      if (m > 0) current.entries.pop_back();
      for (int v = 0; v < n; ++v)
        if ((bits >> v) & 1ULL) residual[v] += m;
      if (!go_on) return false;
    }
    return true;
  };
  dfs(dfs, 0);
  return out;
}

namespace detail {

inline Verdict pipeline_impl(const Problem& p, const DecideConfig& cfg, int restarts_left) {
  Findings findings;

  RunStats standard_stats;
  auto witness = standard_alon_tarsi(p, cfg, &standard_stats);
  findings.standard_stats = standard_stats;
  auto finish = [&](Verdict v) {
    v.findings = findings;
    return v;
  };
  if (witness) return finish(Verdict::choosable({CertificateKind::WitnessMonomial, witness, 0, {}, nullptr}));

  auto collected = collect_constraints(p, cfg);
  findings.extended_stats = collected.stats;
  findings.constraint_rank = collected.basis.rank();
  if (collected.witness)
    return finish(Verdict::choosable({CertificateKind::WitnessMonomial, collected.witness, 0, {}, nullptr}));
  if (collected.basis.rank() == 0) return finish(Verdict::unknown(UnknownReason::NoConstraints));

  auto feasible = enumerate_feasible_vectors(collected.basis, cfg.feasible_cap);
  if (!feasible)
    return finish(Verdict::unknown(UnknownReason::FeasibleSearchTooLarge, static_cast<std::size_t>(cfg.feasible_cap)));
  findings.feasible_vectors = *feasible;
  findings.feasible_vector_count = feasible->size();
  if (std::none_of(feasible->begin(), feasible->end(), [](const ColorVector& v) { return !v.empty(); }))
    return finish(Verdict::choosable({CertificateKind::NoFeasibleVectors, std::nullopt, 0, {}, nullptr}));

  findings.deletable_edges = find_deletable_edges(*feasible, p);

  auto search = enumerate_assignment_patterns(*feasible, p.list_sizes(), cfg.pattern_cap);
  findings.pattern_count = search.patterns.size();
  if (!search.too_many) {
    if (search.patterns.empty())
      return finish(Verdict::choosable({CertificateKind::NoComposition, std::nullopt, 0, {}, nullptr}));
    for (const auto& pattern : search.patterns)
      if (!color_from_pattern(p, pattern)) return finish(Verdict::not_choosable(pattern));
    return finish(
        Verdict::choosable({CertificateKind::AllPatternsColorable, std::nullopt, search.patterns.size(), {}, nullptr}));
  }

  // Too many candidates: G is L-colorable iff G minus the deletable edges is,
  // for every bad L, so decide the reduced graph instead.
  if (!findings.deletable_edges.empty() && restarts_left > 0) {
    auto reduced = pipeline_impl(p.without_edges(findings.deletable_edges), cfg, restarts_left - 1);
    if (reduced.kind == VerdictKind::Choosable) {
      Certificate c{CertificateKind::EdgeDeletion, std::nullopt, 0, findings.deletable_edges,
                    std::make_shared<const Certificate>(*reduced.certificate)};
      return finish(Verdict::choosable(std::move(c)));
    }
    // A bad assignment for a subgraph is bad for the whole graph.
    if (reduced.kind == VerdictKind::NotChoosable) return finish(Verdict::not_choosable(*reduced.witness));
  }
  return finish(Verdict::unknown(UnknownReason::TooManyPatterns, cfg.pattern_cap));
}

}  // namespace detail

/// Full decision procedure: standard test, constraint extraction, feasible
/// characteristic vectors, candidate list assignments checked by coloring,
/// and edge deletion when the candidates are too many.
inline Verdict pipeline_decide(const Problem& p, const DecideConfig& cfg = {}) {
  try {
    return detail::pipeline_impl(p, cfg, p.edge_count());
  } catch (const OverflowError&) {
    return Verdict::unknown(UnknownReason::Overflow);
  }
}

}  // namespace atc

#endif  // ATC_DECIDE_HPP
