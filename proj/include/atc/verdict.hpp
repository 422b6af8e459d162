#ifndef ATC_VERDICT_HPP
#define ATC_VERDICT_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "atc/color_vector.hpp"
#include "atc/driver.hpp"
#include "atc/graph.hpp"

namespace atc {

enum class VerdictKind { Choosable, NotChoosable, Unknown };

enum class CertificateKind { WitnessMonomial, NoFeasibleVectors, NoComposition, AllPatternsColorable, EdgeDeletion };

enum class UnknownReason { TooManyPatterns, NoConstraints, Overflow, FeasibleSearchTooLarge };

/// A monomial x^f with f < s componentwise and non-zero coefficient.
struct WitnessMonomial {
  std::vector<int> degree;
  std::int64_t coefficient = 0;

  friend bool operator==(const WitnessMonomial&, const WitnessMonomial&) = default;
};

struct Certificate {
  CertificateKind kind = CertificateKind::WitnessMonomial;
  std::optional<WitnessMonomial> witness;   // WitnessMonomial
  std::size_t pattern_count = 0;            // AllPatternsColorable
  std::vector<Edge> deleted_edges;          // EdgeDeletion
  std::shared_ptr<const Certificate> inner;  // EdgeDeletion: certificate for the reduced graph

  friend bool operator==(const Certificate& a, const Certificate& b) {
    if (a.kind != b.kind || a.witness != b.witness || a.pattern_count != b.pattern_count ||
        a.deleted_edges != b.deleted_edges)
      return false;
    if (!a.inner || !b.inner) return !a.inner && !b.inner;
    return *a.inner == *b.inner;
  }
};

/// Everything learned along the way, reported with every verdict.
struct Findings {
  std::vector<Edge> deletable_edges;
  std::optional<std::size_t> constraint_rank;
  std::optional<std::size_t> feasible_vector_count;
  std::optional<std::size_t> pattern_count;
  std::vector<ColorVector> feasible_vectors;
  std::optional<RunStats> standard_stats;
  std::optional<RunStats> extended_stats;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::optional<Certificate> certificate;       // Choosable
  std::optional<AssignmentPattern> witness;     // NotChoosable
  std::optional<UnknownReason> reason;          // Unknown
  std::size_t reason_cap = 0;                   // TooManyPatterns / FeasibleSearchTooLarge
  Findings findings;

  static Verdict choosable(Certificate c) {
    Verdict v;
    v.kind = VerdictKind::Choosable;
    v.certificate = std::move(c);
    return v;
  }
  static Verdict not_choosable(AssignmentPattern w) {
    Verdict v;
    v.kind = VerdictKind::NotChoosable;
    v.witness = std::move(w);
    return v;
  }
  static Verdict unknown(UnknownReason r, std::size_t cap = 0) {
    Verdict v;
    v.kind = VerdictKind::Unknown;
    v.reason = r;
    v.reason_cap = cap;
    return v;
  }

  bool decisive() const { return kind != VerdictKind::Unknown; }
};

/// Process exit code for a verdict: 0 choosable, 1 not choosable, 2 unknown.
inline int exit_code(const Verdict& v) {
  switch (v.kind) {
    case VerdictKind::Choosable: return 0;
    case VerdictKind::NotChoosable: return 1;
    case VerdictKind::Unknown: return 2;
  }
  return 2;
}

inline std::string_view to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Choosable: return "CHOOSABLE";
    case VerdictKind::NotChoosable: return "NOT_CHOOSABLE";
    case VerdictKind::Unknown: return "UNKNOWN";
  }
  return "?";
}

inline std::string_view to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::WitnessMonomial: return "WitnessMonomial";
    case CertificateKind::NoFeasibleVectors: return "NoFeasibleVectors";
    case CertificateKind::NoComposition: return "NoComposition";
    case CertificateKind::AllPatternsColorable: return "AllPatternsColorable";
    case CertificateKind::EdgeDeletion: return "EdgeDeletion";
  }
  return "?";
}

inline std::string_view to_string(UnknownReason r) {
  switch (r) {
    case UnknownReason::TooManyPatterns: return "TooManyPatterns";
    case UnknownReason::NoConstraints: return "NoConstraints";
    case UnknownReason::Overflow: return "Overflow";
    case UnknownReason::FeasibleSearchTooLarge: return "FeasibleSearchTooLarge";
  }
  return "?";
}

}  // namespace atc

#endif  // ATC_VERDICT_HPP
