#include <gtest/gtest.h>

#include "atc/decide.hpp"
#include "atc/generators.hpp"
#include "support/corpus.hpp"
#include "support/theorem_rows.hpp"

using namespace atc;

namespace {

ColorVector cv(std::vector<int> entries) { return ColorVector::from_entries(entries); }

std::vector<ColorVector> pipeline_feasible(const Problem& p) {
  auto c = collect_constraints(p, {});
  EXPECT_FALSE(c.witness);
  auto f = enumerate_feasible_vectors(c.basis, 25);
  EXPECT_TRUE(f);
  return f.value_or(std::vector<ColorVector>{});
}

std::vector<ColorVector> nonzero(std::vector<ColorVector> v) {
  std::erase_if(v, [](const ColorVector& x) { return x.empty(); });
  return v;
}

}  // namespace

TEST(StandardTest, Examples) {
  auto c6 = standard_alon_tarsi(fixtures::cycle(6), {});
  ASSERT_TRUE(c6);
  EXPECT_EQ(c6->degree, std::vector<int>(6, 1));
  EXPECT_EQ(std::abs(c6->coefficient), 2);
  EXPECT_FALSE(standard_alon_tarsi(fixtures::complete(4, 3), {}));
  auto edge = standard_alon_tarsi(Problem(2, {{0, 1}}, {2, 1}), {});
  ASSERT_TRUE(edge);
  EXPECT_EQ(edge->degree, (std::vector<int>{1, 0}));
  EXPECT_EQ(edge->coefficient, -1);
  EXPECT_FALSE(standard_alon_tarsi(fixtures::wheel(), {}));
}

TEST(StandardTest, WitnessExistsIffOracleFindsOne) {
  for (const auto& p : fixtures::random_corpus(71, 80, 7, 12, 1, 3)) {
    auto w = standard_alon_tarsi(p, {});
    EXPECT_EQ(w.has_value(), fixtures::oracle_has_witness(p));
    if (w) {
      EXPECT_EQ(direct_coefficient(p, w->degree), w->coefficient);
      for (int v = 0; v < p.vertex_count(); ++v) EXPECT_LT(w->degree[v], p.list_size(v));
    }
  }
}

TEST(Constraints, BasisIndependence) {
  ConstraintBasis b(3);
  EXPECT_TRUE(b.add({{1, -1, 0}, {}}));
  EXPECT_FALSE(b.add({{2, -2, 0}, {}}));
  EXPECT_FALSE(b.add({{0, 0, 0}, {}}));
  EXPECT_TRUE(b.add({{0, 1, -1}, {}}));
  EXPECT_FALSE(b.add({{1, 0, -1}, {}}));
  EXPECT_TRUE(b.add({{1, 1, 1}, {}}));
  EXPECT_EQ(b.rank(), 3u);
  EXPECT_THROW(b.add({{1, 1}, {}}), std::invalid_argument);
  // Dependence is tested modulo p, the kept rows stay exact.
  ConstraintBasis big(2);
  EXPECT_TRUE(big.add({{ConstraintBasis::kPrime + 1, 1}, {}}));
  EXPECT_EQ(big.rows()[0].coefficients[0], static_cast<std::int64_t>(ConstraintBasis::kPrime + 1));
}

TEST(Constraints, Triangle) {
  auto c = collect_constraints(fixtures::complete(3, 2), {});
  EXPECT_FALSE(c.witness);
  EXPECT_EQ(c.basis.rank(), 2u);
  auto f = enumerate_feasible_vectors(c.basis, 25);
  ASSERT_TRUE(f);
  EXPECT_EQ(*f, (std::vector<ColorVector>{cv({0, 0, 0}), cv({1, 1, 1})}));
}

TEST(Constraints, FiveCycle) {
  auto c = collect_constraints(fixtures::cycle(5), {});
  EXPECT_EQ(c.basis.rank(), 4u);
  EXPECT_EQ(c.groups, 5u);
  EXPECT_EQ(pipeline_feasible(fixtures::cycle(5)), fixtures::oracle_feasible(fixtures::cycle(5)));
}

TEST(Constraints, EvenCycleShortCircuits) {
  auto c = collect_constraints(fixtures::cycle(4), {});
  EXPECT_TRUE(c.witness);
}

TEST(Constraints, RowsMatchOracleRows) {
  for (const auto& p : fixtures::random_corpus(73, 60, 6, 12, 1, 3)) {
    auto c = collect_constraints(p, {});
    if (c.witness) continue;
    const auto rows = fixtures::oracle_rows(p);
    EXPECT_EQ(c.groups, rows.size());
    // Every kept row is one of the oracle rows.
    for (const auto& r : c.basis.rows())
      EXPECT_NE(std::find(rows.begin(), rows.end(), r.coefficients), rows.end());
    auto feasible = enumerate_feasible_vectors(c.basis, 25);
    ASSERT_TRUE(feasible);
    EXPECT_EQ(*feasible, fixtures::oracle_feasible(p));
  }
}

TEST(FeasibleVectors, EmptyBasisAndCap) {
  auto all = enumerate_feasible_vectors(ConstraintBasis(2), 25);
  ASSERT_TRUE(all);
  EXPECT_EQ(all->size(), 4u);
  EXPECT_FALSE(enumerate_feasible_vectors(ConstraintBasis(30), 25));
  EXPECT_FALSE(enumerate_feasible_vectors(ConstraintBasis(5), 4));
}

TEST(FeasibleVectors, Fan) {
  EXPECT_EQ(nonzero(pipeline_feasible(fixtures::fan())),
            (std::vector<ColorVector>{cv({1, 1, 1, 0, 0}), cv({1, 0, 0, 1, 1})}));
}

TEST(DeletableEdges, Examples) {
  EXPECT_EQ(find_deletable_edges(pipeline_feasible(fixtures::fan()), fixtures::fan()), (std::vector<Edge>{{2, 3}}));
  auto wheel = find_deletable_edges(pipeline_feasible(fixtures::wheel()), fixtures::wheel());
  std::sort(wheel.begin(), wheel.end());
  EXPECT_EQ(wheel, (std::vector<Edge>{{1, 5}, {3, 4}}));
  EXPECT_TRUE(find_deletable_edges(pipeline_feasible(fixtures::cycle(5)), fixtures::cycle(5)).empty());
}

TEST(Patterns, Examples) {
  auto fan = enumerate_assignment_patterns(pipeline_feasible(fixtures::fan()), {4, 2, 2, 2, 2}, 100);
  ASSERT_EQ(fan.patterns.size(), 1u);
  EXPECT_FALSE(fan.too_many);
  EXPECT_EQ(fan.patterns[0].sorted(),
            (AssignmentPattern{{{cv({1, 0, 0, 1, 1}), 2}, {cv({1, 1, 1, 0, 0}), 2}}}).sorted());
  EXPECT_EQ(enumerate_assignment_patterns(pipeline_feasible(fixtures::wheel()), fixtures::wheel().list_sizes(), 100)
                .patterns.size(),
            1u);
  const auto ears = fixtures::wheel_with_ears();
  EXPECT_TRUE(enumerate_assignment_patterns(pipeline_feasible(ears), ears.list_sizes(), 100).patterns.empty());
}

TEST(Patterns, CapAndExactSums) {
  std::vector<ColorVector> all;
  for (std::uint64_t b = 0; b < 8; ++b) all.emplace_back(3, b);
  auto capped = enumerate_assignment_patterns(all, {2, 2, 2}, 5);
  EXPECT_TRUE(capped.too_many);
  EXPECT_EQ(capped.patterns.size(), 5u);
  auto full = enumerate_assignment_patterns(all, {2, 2, 2}, 100000);
  EXPECT_FALSE(full.too_many);
  std::size_t brute = 0;
  for_each_list_pattern({2, 2, 2}, [&](const AssignmentPattern&) { return ++brute, true; });
  EXPECT_EQ(full.patterns.size(), brute);
  for (const auto& pat : full.patterns) EXPECT_EQ(pat.list_sizes(3), (std::vector<int>{2, 2, 2}));
}

TEST(Pipeline, FiveCycle) {
  auto v = pipeline_decide(fixtures::cycle(5));
  EXPECT_EQ(v.kind, VerdictKind::NotChoosable);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(*v.witness, (AssignmentPattern{{{cv({1, 1, 1, 1, 1}), 2}}}));
  EXPECT_EQ(exit_code(v), 1);
}

TEST(Pipeline, Fan) {
  auto v = pipeline_decide(fixtures::fan());
  EXPECT_EQ(v.kind, VerdictKind::NotChoosable);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->sorted(), (AssignmentPattern{{{cv({1, 0, 0, 1, 1}), 2}, {cv({1, 1, 1, 0, 0}), 2}}}).sorted());
  EXPECT_EQ(v.findings.deletable_edges, (std::vector<Edge>{{2, 3}}));
}

TEST(Pipeline, Wheel) {
  auto v = pipeline_decide(fixtures::wheel());
  EXPECT_EQ(v.kind, VerdictKind::Choosable);
  ASSERT_TRUE(v.certificate);
  EXPECT_EQ(v.certificate->kind, CertificateKind::AllPatternsColorable);
  EXPECT_EQ(v.certificate->pattern_count, 1u);
}

TEST(Pipeline, WheelWithEars) {
  auto v = pipeline_decide(fixtures::wheel_with_ears());
  EXPECT_EQ(v.kind, VerdictKind::Choosable);
  ASSERT_TRUE(v.certificate);
  EXPECT_EQ(v.certificate->kind, CertificateKind::NoComposition);
}

TEST(Pipeline, EvenCyclesAndGrid) {
  for (int n = 4; n <= 12; n += 2) {
    auto v = pipeline_decide(fixtures::cycle(n));
    EXPECT_EQ(v.kind, VerdictKind::Choosable);
    EXPECT_EQ(v.certificate->kind, CertificateKind::WitnessMonomial);
  }
}

TEST(Pipeline, Caps) {
  DecideConfig small;
  small.feasible_cap = 4;
  auto v = pipeline_decide(fixtures::cycle(5), small);
  EXPECT_EQ(v.kind, VerdictKind::Unknown);
  EXPECT_EQ(v.reason, UnknownReason::FeasibleSearchTooLarge);
  EXPECT_EQ(exit_code(v), 2);
  // A graph with no edges and lists of size 1 has no constraint rows.
  auto none = pipeline_decide(Problem(2, {}, {1, 1}));
  EXPECT_EQ(none.kind, VerdictKind::Choosable);
}

TEST(Pipeline, NoConstraintsIsUnknown) {
  // Two disjoint edges with single-color lists: every monomial of
  // (x1 - x0)(x3 - x2) reaches s at two vertices.
  const auto p = Problem(4, {{0, 1}, {2, 3}}, {1, 1, 1, 1});
  ASSERT_TRUE(fixtures::oracle_rows(p).empty());
  auto v = pipeline_decide(p);
  EXPECT_EQ(v.kind, VerdictKind::Unknown);
  EXPECT_EQ(v.reason, UnknownReason::NoConstraints);
  EXPECT_EQ(v.findings.constraint_rank, 0u);
}

TEST(Pipeline, AgreesWithBruteForce) {
  int decisive = 0;
  for (const auto& p : fixtures::random_corpus(79, 150, 6, 15, 1, 3)) {
    auto v = pipeline_decide(p);
    if (!v.decisive()) continue;
    ++decisive;
    auto truth = brute_force_choosable(p);
    EXPECT_EQ(v.kind, truth.kind);
    if (v.kind == VerdictKind::NotChoosable) {
      EXPECT_FALSE(color_from_pattern(p, *v.witness));
    }
  }
  EXPECT_GT(decisive, 100);
}

TEST(Pipeline, EdgeDeletionRestarts) {
  DecideConfig cfg;
  cfg.pattern_cap = 1;
  for (const auto& p : fixtures::random_corpus(83, 200, 6, 15, 1, 3)) {
    auto v = pipeline_decide(p, cfg);
    if (v.decisive()) {
      EXPECT_EQ(v.kind, brute_force_choosable(p).kind);
    }
  }
  // More than one candidate assignment, and deleting the edges with disjoint
  // lists leaves a graph with a witness monomial.
  const auto p = parse_problem(
      "8 14\n3 2 2 3 4 2 4 2\n3 5\n4 5\n2 7\n0 4\n6 7\n0 6\n5 7\n0 1\n1 6\n3 6\n1 7\n0 2\n0 5\n1 3\n");
  auto v = pipeline_decide(p, cfg);
  ASSERT_EQ(v.kind, VerdictKind::Choosable);
  ASSERT_EQ(v.certificate->kind, CertificateKind::EdgeDeletion);
  ASSERT_TRUE(v.certificate->inner);
  EXPECT_FALSE(v.certificate->deleted_edges.empty());
  EXPECT_EQ(v.certificate->deleted_edges, v.findings.deletable_edges);
  const auto reduced = p.without_edges(v.certificate->deleted_edges);
  EXPECT_EQ(pipeline_decide(reduced, cfg).certificate, *v.certificate->inner);
  cfg.pattern_cap = 100;
  EXPECT_NE(pipeline_decide(p, cfg).certificate->kind, CertificateKind::EdgeDeletion);
}

TEST(TheoremRows, HoldForEveryBadAssignment) {
  for (const auto& p : fixtures::random_corpus(89, 120, 6, 15, 1, 3)) {
    const auto bad = all_bad_patterns(p);
    if (bad.empty()) continue;
    auto c = collect_constraints(p, {});
    ASSERT_FALSE(c.witness);
    const auto rows = fixtures::oracle_rows(p);
    for (const auto& pat : bad)
      for (const auto& e : pat.entries) {
        EXPECT_TRUE(c.basis.satisfied_by(e.vector));
        for (const auto& r : rows) EXPECT_TRUE(fixtures::satisfies(r, e.vector));
      }
  }
}

TEST(TheoremRows, DeletableEdgesAndPatternsCoverBadAssignments) {
  for (const auto& p : fixtures::random_corpus(97, 120, 6, 15, 1, 3)) {
    const auto bad = all_bad_patterns(p);
    if (bad.empty()) continue;
    const auto feasible = pipeline_feasible(p);
    const auto deletable = find_deletable_edges(feasible, p);
    for (const auto& pat : bad)
      for (const auto& e : pat.entries)
        for (const auto& d : deletable) EXPECT_FALSE(e.vector[d.u] && e.vector[d.v]);
    auto search = enumerate_assignment_patterns(feasible, p.list_sizes(), 1000000);
    ASSERT_FALSE(search.too_many);
    std::vector<AssignmentPattern> found;
    for (const auto& pat : search.patterns) found.push_back(pat.sorted());
    for (const auto& pat : bad) EXPECT_NE(std::find(found.begin(), found.end(), pat.sorted()), found.end());
  }
}

TEST(Pipeline, Deterministic) {
  for (const auto& p : fixtures::random_corpus(101, 30, 6, 12, 1, 3)) {
    auto a = pipeline_decide(p), b = pipeline_decide(p);
    EXPECT_EQ(a.kind, b.kind);
    EXPECT_EQ(a.certificate, b.certificate);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.findings.feasible_vectors, b.findings.feasible_vectors);
  }
}

TEST(Pipeline, GluedCliques) {
  for (auto [a, b] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{2, 4}}) {
    auto p = glued_cliques(a, b);
    auto v = pipeline_decide(p);
    EXPECT_EQ(v.kind, VerdictKind::NotChoosable);
    ASSERT_TRUE(v.witness);
    EXPECT_EQ(v.witness->list_sizes(p.vertex_count()), p.list_sizes());
    EXPECT_FALSE(color_from_pattern(p, *v.witness));
  }
}
