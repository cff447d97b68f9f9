#include <gtest/gtest.h>

#include "isolab/bounds.hpp"
#include "isolab/constructions.hpp"
#include "isolab/errors.hpp"
#include "isolab/johnson.hpp"
#include "isolab/kernels.hpp"
#include "isolab/search.hpp"

using namespace isolab;

namespace {

SearchOptions with(SearchStrategy s) {
  SearchOptions o;
  o.strategy = s;
  return o;
}

void expect_valid(const MinBoundaryResult& res, int n, int r, std::uint64_t m) {
  EXPECT_EQ(res.witness.n(), n);
  EXPECT_EQ(res.witness.r(), r);
  EXPECT_EQ(res.witness.size(), m);
  EXPECT_EQ(vertex_boundary(res.witness).size(), res.value);
}

}  // namespace

TEST(ExactMin, FourTwoThree) {
  const auto res = exact_min_boundary(4, 2, 3);
  EXPECT_EQ(res.value, 3U);
  EXPECT_TRUE(res.exact);
  expect_valid(res, 4, 2, 3);
  // The star {12,13,14} is one of the optimal triples.
  EXPECT_EQ(vertex_boundary(Family::from_lists(4, 2, {{1, 2}, {1, 3}, {1, 4}})).size(), 3U);
}

TEST(ExactMin, TrivialSizes) {
  for (auto s : {SearchStrategy::Auto, SearchStrategy::FullScan, SearchStrategy::Combinations,
                 SearchStrategy::BranchAndBound}) {
    EXPECT_EQ(exact_min_boundary(6, 3, 0, with(s)).value, 0U);
    EXPECT_EQ(exact_min_boundary(6, 3, 20, with(s)).value, 0U);
    EXPECT_EQ(exact_min_boundary(6, 3, 20, with(s)).witness, Family::full(6, 3));
  }
  EXPECT_THROW(exact_min_boundary(4, 2, 7), RangeError);
}

TEST(ExactMin, AutoStrategySelection) {
  EXPECT_EQ(exact_min_boundary(6, 3, 5).strategy, SearchStrategy::FullScan);
  EXPECT_EQ(exact_min_boundary(7, 2, 3).strategy, SearchStrategy::Combinations);
  SearchOptions tight;
  tight.combination_cap = 10;
  EXPECT_EQ(exact_min_boundary(7, 2, 3, tight).strategy, SearchStrategy::BranchAndBound);
  EXPECT_THROW(exact_min_boundary(10, 5, 3), ParameterError);
}

TEST(ExactMin, StrategiesAgreeWhereFullScanIsFeasible) {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {5, 3}, {6, 2}, {6, 3}, {6, 4}, {4, 1}, {6, 5}}) {
    const auto full = vertex_profile_scan(johnson_small_graph(n, r));
    for (std::uint64_t m = 0; m < full.value.size(); ++m) {
      const auto bb = exact_min_boundary(n, r, m, with(SearchStrategy::BranchAndBound));
      const auto comb = exact_min_boundary(n, r, m, with(SearchStrategy::Combinations));
      const auto fs = exact_min_boundary(n, r, m, with(SearchStrategy::FullScan));
      EXPECT_EQ(bb.value, full.value[m]) << n << " " << r << " " << m;
      EXPECT_TRUE(bb.exact);
      EXPECT_EQ(comb.value, full.value[m]);
      EXPECT_EQ(fs.value, full.value[m]);
      expect_valid(bb, n, r, m);
      expect_valid(comb, n, r, m);
    }
  }
}

TEST(ExactMin, BranchAndBoundAgreesWithCombinationsBeyondFullScan) {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{7, 2}, {8, 2}, {7, 3}}) {
    const std::uint64_t v = binom64(n, r);
    for (std::uint64_t m : {std::uint64_t{2}, std::uint64_t{3}, std::uint64_t{4}, v / 2, v - 3, v - 2, v - 1}) {
      if (binomial(static_cast<int>(v), static_cast<int>(m)) > 20'000'000) continue;
      const auto comb = exact_min_boundary(n, r, m, with(SearchStrategy::Combinations));
      const auto bb = exact_min_boundary(n, r, m, with(SearchStrategy::BranchAndBound));
      EXPECT_EQ(bb.value, comb.value) << n << " " << r << " " << m;
      EXPECT_TRUE(bb.exact);
      expect_valid(bb, n, r, m);
    }
  }
}

TEST(ExactMin, BudgetExhaustionIsReported) {
  SearchOptions o = with(SearchStrategy::BranchAndBound);
  o.node_budget = 5;
  const auto res = exact_min_boundary(7, 3, 12, o);
  EXPECT_FALSE(res.exact);
  expect_valid(res, 7, 3, 12);
  const auto full = exact_min_boundary(7, 3, 12);
  EXPECT_GE(res.value, full.value);
}

TEST(ExactMin, DeterministicAcrossRuns) {
  const auto a = exact_min_boundary(7, 2, 9, with(SearchStrategy::BranchAndBound));
  const auto b = exact_min_boundary(7, 2, 9, with(SearchStrategy::BranchAndBound));
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.nodes, b.nodes);
}

TEST(Profile, FourTwo) {
  const Profile p = isoperimetric_profile(4, 2);
  EXPECT_EQ(p.values(), (std::vector<std::uint64_t>{0, 4, 4, 3, 2, 1, 0}));
  EXPECT_TRUE(p.exact());
}

TEST(Profile, SingletonLayers) {
  for (int n = 2; n <= 8; ++n) {
    const Profile p = isoperimetric_profile(n, 1);
    for (int m = 1; m <= n - 1; ++m) EXPECT_EQ(p.minima[m].min_boundary, static_cast<std::uint64_t>(n - m));
    EXPECT_EQ(p.minima[0].min_boundary, 0U);
    EXPECT_EQ(p.minima[n].min_boundary, 0U);
  }
}

TEST(Profile, ComplementDuality) {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{5, 2}, {6, 2}, {6, 1}, {4, 1}}) {
    EXPECT_EQ(isoperimetric_profile(n, r).values(), isoperimetric_profile(n, n - r).values()) << n << " " << r;
  }
}

TEST(Profile, WitnessesHaveClaimedSizeAndBoundary) {
  const Profile p = isoperimetric_profile(6, 3);
  for (std::uint64_t m = 0; m < p.minima.size(); ++m) {
    EXPECT_EQ(p.minima[m].witness.size(), m);
    EXPECT_EQ(vertex_boundary(p.minima[m].witness).size(), p.minima[m].min_boundary);
  }
}

TEST(Profile, CapRefusalAndBudgetedMode) {
  EXPECT_THROW(isoperimetric_profile(7, 2), ParameterError);
  const Profile p = isoperimetric_profile(7, 2, {}, true);
  EXPECT_EQ(p.minima.size(), 22U);
  EXPECT_TRUE(p.exact());
  EXPECT_EQ(p.values(), isoperimetric_profile(7, 5, {}, true).values());
}

TEST(Sandwich, Examples) {
  const auto a = min_sandwiched_boundary(4, 2, 5);
  EXPECT_EQ(a.value, 1U);
  EXPECT_EQ(a.spec.k, 2);
  EXPECT_EQ(a.spec.l, 1);
  EXPECT_EQ(a.witness, b_kl(4, 2, 2, 1));
  const auto b = min_sandwiched_boundary(4, 2, 1);
  EXPECT_EQ(b.value, 4U);
  EXPECT_EQ(b.witness, Family::from_lists(4, 2, {{1, 2}}));
  EXPECT_EQ(min_sandwiched_boundary(4, 2, 3).value, 3U);
  EXPECT_TRUE(min_sandwiched_boundary(4, 2, 0).trivial);
}

TEST(Sandwich, WitnessReproducibleFromSpec) {
  for (std::uint64_t m = 1; m <= 20; ++m) {
    const auto s = min_sandwiched_boundary(6, 3, m);
    EXPECT_EQ(sandwiched_family(s.spec), s.witness);
    EXPECT_EQ(vertex_boundary(s.witness).size(), s.value);
  }
}

TEST(Sandwich, ComplementSideForLargeR) {
  for (std::uint64_t m = 1; m <= 10; ++m) {
    const auto s = min_sandwiched_boundary(5, 3, m);
    EXPECT_TRUE(s.via_complement);
    EXPECT_EQ(s.witness.r(), 3);
    EXPECT_EQ(s.witness.size(), m);
    EXPECT_EQ(vertex_boundary(s.witness).size(), s.value);
    EXPECT_EQ(s.value, min_sandwiched_boundary(5, 2, m).value);
  }
}

TEST(Sandwich, NeverBelowExactMinimum) {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{5, 2}, {6, 2}, {6, 3}, {7, 2}, {7, 3}, {8, 2}}) {
    const std::uint64_t v = binom64(n, r);
    for (std::uint64_t m = 1; m <= v; m += (v > 20 ? 5 : 1)) {
      EXPECT_GE(min_sandwiched_boundary(n, r, m).value, exact_min_boundary(n, r, m).value) << n << " " << r << " " << m;
    }
  }
}

TEST(ConjectureAudit, SmallInstancesPass) {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{4, 2}, {3, 1}, {4, 1}, {5, 1}, {6, 1}}) {
    const auto rep = conjecture_audit(n, r);
    EXPECT_TRUE(rep.pass()) << n << " " << r;
    EXPECT_EQ(rep.rows.size(), binom64(n, r) + 1);
    EXPECT_EQ(rep.witnesses.size(), rep.rows.size());
  }
}

TEST(ConjectureAudit, RowsRecomputable) {
  const auto rep = conjecture_audit(5, 2);
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const auto exact = std::get<std::int64_t>(rep.at(i, "exact_min"));
    const auto sandwich = std::get<std::int64_t>(rep.at(i, "sandwich_min"));
    EXPECT_EQ(rep.row_pass[i], exact == sandwich);
  }
  EXPECT_FALSE(rep.notes.empty());
}

TEST(Theorem1Audit, FourTwo) {
  const auto rep = theorem1_audit(4, 2, 0.2);
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(std::get<std::int64_t>(rep.at(3, "min_boundary")), 3);
  EXPECT_NEAR(std::get<double>(rep.at(3, "bound")), 0.3, 1e-15);
}

TEST(Theorem1Audit, SixThreeFullScan) {
  const auto rep = theorem1_audit(6, 3, 0.2, {}, true);
  EXPECT_TRUE(rep.pass());
  const auto m10 = std::get<std::int64_t>(rep.at(10, "min_boundary"));
  EXPECT_GE(m10, 1);
  EXPECT_LE(m10, 9);
  EXPECT_GE(static_cast<double>(m10), 0.8165);
  ASSERT_EQ(rep.checks.size(), 1U);
  EXPECT_TRUE(rep.checks[0].second);
}

TEST(Theorem1Audit, ZeroConstantAlwaysPasses) { EXPECT_TRUE(theorem1_audit(5, 2, 0.0).pass()); }

TEST(Theorem1Audit, RejectsLargeConstant) { EXPECT_THROW(theorem1_audit(5, 2, 0.5), DomainError); }

TEST(HarperAudit, ThreeCubeBall) {
  const auto rep = harper_audit(3);
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(std::get<std::int64_t>(rep.at(4, "min_vertex_boundary")), 3);
  EXPECT_EQ(std::get<std::int64_t>(rep.at(0, "min_vertex_boundary")), 0);
  EXPECT_EQ(std::get<std::int64_t>(rep.at(8, "min_vertex_boundary")), 0);
}

TEST(HarperAudit, AllSmallDimensions) {
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(harper_audit(n).pass()) << n;
  EXPECT_THROW(harper_audit(5), RangeError);
}

TEST(ProfileReport, Columns) {
  const auto rep = profile_report(isoperimetric_profile(4, 2));
  EXPECT_EQ(rep.columns, (std::vector<std::string>{"m", "min_boundary", "exact", "bound_c_over_5"}));
  EXPECT_EQ(rep.rows.size(), 7U);
  EXPECT_NEAR(std::get<double>(rep.at(3, "bound_c_over_5")), 0.3, 1e-15);
}
