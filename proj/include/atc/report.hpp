#ifndef ATC_REPORT_HPP
#define ATC_REPORT_HPP

#include <array>
#include <memory>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "atc/decide.hpp"
#include "atc/verdict.hpp"

namespace atc {

using json = nlohmann::json;

namespace detail {

template <class Enum, std::size_t K>
Enum enum_from_string(const std::string& s, const std::array<Enum, K>& all) {
  for (auto e : all)
    if (to_string(e) == s) return e;
  throw std::invalid_argument("unknown enum value '" + s + "'");
}

inline constexpr std::array kVerdictKinds = {VerdictKind::Choosable, VerdictKind::NotChoosable, VerdictKind::Unknown};
inline constexpr std::array kCertificateKinds = {CertificateKind::WitnessMonomial, CertificateKind::NoFeasibleVectors,
                                                 CertificateKind::NoComposition,
                                                 CertificateKind::AllPatternsColorable, CertificateKind::EdgeDeletion};
inline constexpr std::array kUnknownReasons = {UnknownReason::TooManyPatterns, UnknownReason::NoConstraints,
                                               UnknownReason::Overflow, UnknownReason::FeasibleSearchTooLarge};

inline json edges_to_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back({e.u, e.v});
  return out;
}

inline std::vector<Edge> edges_from_json(const json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) out.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  return out;
}

}  // namespace detail

inline void to_json(json& j, const RunStats& s) {
  j = {{"monomials", s.monomials}, {"peak_live_terms", s.peak_live_terms}, {"branches", s.branches}};
}

inline void from_json(const json& j, RunStats& s) {
  j.at("monomials").get_to(s.monomials);
  j.at("peak_live_terms").get_to(s.peak_live_terms);
  j.at("branches").get_to(s.branches);
}

inline void to_json(json& j, const WitnessMonomial& w) { j = {{"degree", w.degree}, {"coefficient", w.coefficient}}; }

inline void from_json(const json& j, WitnessMonomial& w) {
  j.at("degree").get_to(w.degree);
  j.at("coefficient").get_to(w.coefficient);
}

inline void to_json(json& j, const ColorVector& v) { j = v.entries(); }

inline void from_json(const json& j, ColorVector& v) { v = ColorVector::from_entries(j.get<std::vector<int>>()); }

inline void to_json(json& j, const AssignmentPattern& p) {
  j = json::array();
  for (const auto& e : p.entries) j.push_back({{"vector", e.vector}, {"multiplicity", e.multiplicity}});
}

inline void from_json(const json& j, AssignmentPattern& p) {
  p.entries.clear();
  for (const auto& e : j) p.entries.push_back({e.at("vector").get<ColorVector>(), e.at("multiplicity").get<int>()});
}

inline void to_json(json& j, const Certificate& c) {
  j = {{"kind", std::string(to_string(c.kind))}};
  if (c.witness) j["witness"] = *c.witness;
  if (c.kind == CertificateKind::AllPatternsColorable) j["pattern_count"] = c.pattern_count;
  if (c.kind == CertificateKind::EdgeDeletion) j["deleted_edges"] = detail::edges_to_json(c.deleted_edges);
  if (c.inner) j["inner"] = *c.inner;
}

inline void from_json(const json& j, Certificate& c) {
  c = Certificate{};
  c.kind = detail::enum_from_string(j.at("kind").get<std::string>(), detail::kCertificateKinds);
  if (j.contains("witness")) c.witness = j["witness"].get<WitnessMonomial>();
  if (j.contains("pattern_count")) j["pattern_count"].get_to(c.pattern_count);
  if (j.contains("deleted_edges")) c.deleted_edges = detail::edges_from_json(j["deleted_edges"]);
  if (j.contains("inner")) c.inner = std::make_shared<const Certificate>(j["inner"].get<Certificate>());
}

inline void to_json(json& j, const Verdict& v) {
  j = {{"verdict", std::string(to_string(v.kind))}};
  if (v.certificate) j["certificate"] = *v.certificate;
  if (v.witness) j["witness"] = *v.witness;
  if (v.reason) {
    j["reason"] = {{"kind", std::string(to_string(*v.reason))}};
    if (v.reason_cap) j["reason"]["cap"] = v.reason_cap;
  }
  const auto& f = v.findings;
  j["deletable_edges"] = detail::edges_to_json(f.deletable_edges);
  j["constraint_rank"] = f.constraint_rank ? json(*f.constraint_rank) : json(nullptr);
  j["feasible_vector_count"] = f.feasible_vector_count ? json(*f.feasible_vector_count) : json(nullptr);
  j["pattern_count"] = f.pattern_count ? json(*f.pattern_count) : json(nullptr);
  j["feasible_vectors"] = f.feasible_vectors;
  j["stats"] = json::object();
  if (f.standard_stats) j["stats"]["standard"] = *f.standard_stats;
  if (f.extended_stats) j["stats"]["extended"] = *f.extended_stats;
}

inline void from_json(const json& j, Verdict& v) {
  v = Verdict{};
  v.kind = detail::enum_from_string(j.at("verdict").get<std::string>(), detail::kVerdictKinds);
  if (j.contains("certificate")) v.certificate = j["certificate"].get<Certificate>();
  if (j.contains("witness")) v.witness = j["witness"].get<AssignmentPattern>();
  if (j.contains("reason")) {
    v.reason = detail::enum_from_string(j["reason"].at("kind").get<std::string>(), detail::kUnknownReasons);
    v.reason_cap = j["reason"].value("cap", std::size_t{0});
  }
  auto& f = v.findings;
  if (j.contains("deletable_edges")) f.deletable_edges = detail::edges_from_json(j["deletable_edges"]);
  auto opt = [&](const char* key, std::optional<std::size_t>& out) {
    if (j.contains(key) && !j[key].is_null()) out = j[key].get<std::size_t>();
  };
  opt("constraint_rank", f.constraint_rank);
  opt("feasible_vector_count", f.feasible_vector_count);
  opt("pattern_count", f.pattern_count);
  if (j.contains("feasible_vectors")) j["feasible_vectors"].get_to(f.feasible_vectors);
  if (j.contains("stats")) {
    const auto& s = j["stats"];
    if (s.contains("standard")) f.standard_stats = s["standard"].get<RunStats>();
    if (s.contains("extended")) f.extended_stats = s["extended"].get<RunStats>();
  }
}

inline json config_to_json(const DecideConfig& cfg) {
  return {{"heuristic", std::string(to_string(cfg.heuristic))},
          {"branch_limit", cfg.run.branch_limit},
          {"sequentialize", cfg.run.sequentialize},
          {"prune_matching", cfg.run.prune_matching},
          {"pattern_cap", cfg.pattern_cap},
          {"feasible_cap", cfg.feasible_cap}};
}

}  // namespace atc

#endif  // ATC_REPORT_HPP
