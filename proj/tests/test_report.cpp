#include <gtest/gtest.h>

#include "atc/report.hpp"
#include "support/corpus.hpp"

using namespace atc;

namespace {

void expect_round_trip(const Verdict& v) {
  const json j = v;
  const auto back = json::parse(j.dump()).get<Verdict>();
  EXPECT_EQ(back.kind, v.kind);
  EXPECT_EQ(back.certificate, v.certificate);
  EXPECT_EQ(back.witness, v.witness);
  EXPECT_EQ(back.reason, v.reason);
  EXPECT_EQ(back.reason_cap, v.reason_cap);
  EXPECT_EQ(back.findings.deletable_edges, v.findings.deletable_edges);
  EXPECT_EQ(back.findings.constraint_rank, v.findings.constraint_rank);
  EXPECT_EQ(back.findings.feasible_vectors, v.findings.feasible_vectors);
  EXPECT_EQ(back.findings.pattern_count, v.findings.pattern_count);
  EXPECT_EQ(json(back), j);
}

}  // namespace

TEST(Report, FieldNames) {
  const json j = pipeline_decide(fixtures::fan());
  EXPECT_EQ(j.at("verdict"), "NOT_CHOOSABLE");
  EXPECT_EQ(j.at("witness").size(), 2u);
  EXPECT_EQ(j.at("witness")[0].at("multiplicity"), 2);
  EXPECT_EQ(j.at("deletable_edges"), json::parse("[[2,3]]"));
  EXPECT_EQ(j.at("constraint_rank"), 3);
  EXPECT_EQ(j.at("feasible_vector_count"), 3);
  EXPECT_EQ(j.at("pattern_count"), 1);
  EXPECT_TRUE(j.at("stats").contains("standard"));
  EXPECT_TRUE(j.at("stats").contains("extended"));
}

TEST(Report, RoundTrips) {
  expect_round_trip(pipeline_decide(fixtures::cycle(5)));
  expect_round_trip(pipeline_decide(fixtures::cycle(6)));
  expect_round_trip(pipeline_decide(fixtures::wheel()));
  expect_round_trip(pipeline_decide(fixtures::wheel_with_ears()));
  expect_round_trip(pipeline_decide(Problem(4, {{0, 1}, {2, 3}}, {1, 1, 1, 1})));
  expect_round_trip(Verdict::unknown(UnknownReason::TooManyPatterns, 100));
  Certificate inner{CertificateKind::WitnessMonomial, WitnessMonomial{{1, 0, 2}, -3}, 0, {}, nullptr};
  expect_round_trip(Verdict::choosable(
      {CertificateKind::EdgeDeletion, std::nullopt, 0, {{0, 2}, {1, 2}}, std::make_shared<const Certificate>(inner)}));
  for (const auto& p : fixtures::random_corpus(5, 40, 6, 12, 1, 3)) expect_round_trip(pipeline_decide(p));
}

TEST(Report, RejectsUnknownNames) {
  EXPECT_THROW(json::parse(R"({"verdict": "MAYBE"})").get<Verdict>(), std::invalid_argument);
}

TEST(Report, ConfigEcho) {
  DecideConfig cfg;
  cfg.heuristic = Heuristic::Vsep;
  cfg.pattern_cap = 7;
  const auto j = config_to_json(cfg);
  EXPECT_EQ(j.at("heuristic"), "VSEP");
  EXPECT_EQ(j.at("pattern_cap"), 7);
  EXPECT_EQ(j.at("branch_limit"), 100000);
  EXPECT_EQ(j.at("feasible_cap"), 25);
  EXPECT_EQ(j.at("prune_matching"), false);
}
