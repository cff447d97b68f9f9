#include <gtest/gtest.h>

#include <bit>

#include "isolab/combinatorics.hpp"
#include "isolab/errors.hpp"
#include "isolab/family.hpp"
#include "isolab/johnson.hpp"
#include "support/generators.hpp"

using namespace isolab;
using isolab::testing::Gen;

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(4, 2), 6);
  EXPECT_EQ(binomial(6, 3), 20);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(5, 6), 0);
}

TEST(Binomial, LargeValuesAreExact) {
  EXPECT_EQ(binomial(100, 50), BigInt("100891344545564193334812497256"));
  EXPECT_EQ(binomial(64, 32), BigInt("1832624140942590534"));
  const BigInt big = binomial(1000, 500);
  EXPECT_EQ(big.str().size(), 300U);
  EXPECT_EQ(big.str().substr(0, 20), "27028824094543656951");
  EXPECT_EQ(big % 1000000007, 159835829);
}

TEST(Binomial, RejectsLargeN) { EXPECT_THROW(binomial(1001, 3), RangeError); }

TEST(Binomial, PascalRule) {
  for (int n = 1; n <= 60; ++n) {
    for (int k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k) + binomial(n - 1, k - 1)) << n << " " << k;
  }
}

TEST(Binomial, TableAgreesWithExact) {
  for (int n = 0; n <= 64; ++n) {
    for (int k = 0; k <= n; ++k) EXPECT_EQ(BigInt(binom64(n, k)), binomial(n, k));
  }
}

TEST(RationalFormat, PrintsLowestTerms) {
  EXPECT_EQ(to_string(Rational(2, 6)), "1/3");
  EXPECT_EQ(to_string(Rational(4, 2)), "2/1");
  EXPECT_EQ(to_string(Rational(0)), "0/1");
}

TEST(RSet, Validation) {
  EXPECT_THROW(RSet::of(4, {1, 1}), ParameterError);
  EXPECT_THROW(RSet::of(4, {0, 2}), ParameterError);
  EXPECT_THROW(RSet::of(4, {2, 5}), ParameterError);
  const RSet x = RSet::of(6, {5, 2, 3});
  EXPECT_EQ(x.r(), 3);
  EXPECT_EQ(x.elements(), (std::vector<int>{2, 3, 5}));
}

TEST(Colex, EndpointsInFourTwo) {
  EXPECT_EQ(colex_rank(RSet::of(4, {1, 2})), 0U);
  EXPECT_EQ(colex_rank(RSet::of(4, {3, 4})), 5U);
  EXPECT_EQ(colex_unrank(1, 4, 2), RSet::of(4, {1, 3}));
}

TEST(Colex, RoundTripSixThree) {
  for (std::uint64_t i = 0; i < 20; ++i) EXPECT_EQ(colex_rank(colex_unrank(i, 6, 3)), i);
}

TEST(Colex, BijectionAndOrderForSmallN) {
  for (int n = 1; n <= 10; ++n) {
    for (int r = 0; r <= n; ++r) {
      const std::uint64_t total = binom64(n, r);
      std::uint64_t prev = 0;
      for (std::uint64_t i = 0; i < total; ++i) {
        const std::uint64_t bits = colex_unrank_bits(i, n, r);
        ASSERT_EQ(std::popcount(bits), r);
        ASSERT_LT(bits, std::uint64_t{1} << n);
        ASSERT_EQ(colex_rank_bits(bits), i);
        if (i > 0) {
          // x < y iff max(x Δ y) ∈ y
          const std::uint64_t diff = prev ^ bits;
          ASSERT_TRUE(bits & (std::uint64_t{1} << (63 - std::countl_zero(diff))));
        }
        prev = bits;
      }
      EXPECT_THROW(colex_unrank_bits(total, n, r), RangeError);
    }
  }
}

TEST(Permutation, Validation) {
  EXPECT_THROW(GroundPermutation({1, 1, 3}), ParameterError);
  EXPECT_THROW(GroundPermutation({1, 2, 4}), ParameterError);
}

TEST(Permutation, IdentityLeavesFamilyUnchanged) {
  Gen gen(1);
  for (int t = 0; t < 20; ++t) {
    const Family a = gen.family(6, 3);
    EXPECT_EQ(apply_permutation(a, GroundPermutation::identity(6)), a);
  }
}

TEST(Permutation, RelabelsSingletons) {
  const Family a = Family::from_lists(4, 1, {{1}, {2}});
  const auto p = GroundPermutation::from_cycles(4, {{1, 3}, {2, 4}});
  EXPECT_EQ(apply_permutation(a, p), Family::from_lists(4, 1, {{3}, {4}}));
}

TEST(Permutation, MismatchedGroundSetThrows) {
  EXPECT_THROW(apply_permutation(Family(4, 2), GroundPermutation::identity(5)), ParameterError);
}

TEST(Permutation, InverseUndoes) {
  Gen gen(2);
  for (int t = 0; t < 50; ++t) {
    const Family a = gen.family(7, 3);
    const auto p = gen.permutation(7);
    EXPECT_EQ(apply_permutation(apply_permutation(a, p), p.inverse()), a);
  }
}

TEST(Permutation, BoundaryCommutesWithRelabelling) {
  Gen gen(3);
  for (int t = 0; t < 100; ++t) {
    const int n = gen.integer(2, 8);
    const int r = gen.integer(1, n - 1);
    const Family a = gen.family(n, r);
    const auto p = gen.permutation(n);
    const Family pa = apply_permutation(a, p);
    EXPECT_EQ(pa.size(), a.size());
    EXPECT_EQ(vertex_boundary(pa), apply_permutation(vertex_boundary(a), p));
  }
}

TEST(Permutation, HalfSwapPreservesBoundarySize) {
  Gen gen(4);
  const auto p = GroundPermutation::from_cycles(4, {{1, 3}, {2, 4}});
  for (int t = 0; t < 100; ++t) {
    const Family a = gen.family(4, 2);
    EXPECT_EQ(vertex_boundary(apply_permutation(a, p)).size(), vertex_boundary(a).size());
  }
}

namespace {

// Orbit minimum by trying all n! relabellings.
Family brute_canonical(const Family& a) {
  std::vector<int> image(a.n());
  std::iota(image.begin(), image.end(), 1);
  Family best = a;
  bool first = true;
  do {
    const Family b = apply_permutation(a, GroundPermutation(image));
    if (first || rank_sequence_less(b, best)) best = b;
    first = false;
  } while (std::next_permutation(image.begin(), image.end()));
  return best;
}

}  // namespace

TEST(Canonical, MatchesBruteForceOrbitMinimum) {
  Gen gen(5);
  for (int t = 0; t < 60; ++t) {
    const int n = gen.integer(2, 6);
    const int r = gen.integer(0, n);
    const Family a = gen.family(n, r);
    EXPECT_EQ(canonical_form(a), brute_canonical(a));
  }
}

TEST(Canonical, IdempotentOnFiveTwo) {
  Gen gen(6);
  for (int t = 0; t < 100; ++t) {
    const Family c = canonical_form(gen.family(5, 2));
    EXPECT_EQ(canonical_form(c), c);
  }
}

TEST(Canonical, ConstantOnOrbits) {
  Gen gen(7);
  for (int t = 0; t < 100; ++t) {
    const int r = gen.integer(1, 4);
    const Family a = gen.family(5, r);
    EXPECT_EQ(canonical_form(apply_permutation(a, gen.permutation(5))), canonical_form(a));
  }
}

TEST(Canonical, TwoSingletons) {
  EXPECT_EQ(canonical_form(Family::from_lists(4, 1, {{2}, {4}})), canonical_form(Family::from_lists(4, 1, {{1}, {3}})));
  EXPECT_EQ(canonical_form(Family::from_lists(4, 1, {{2}, {4}})), Family::from_lists(4, 1, {{1}, {2}}));
}

TEST(Canonical, LargerGroundSetWithinGuard) {
  Gen gen(8);
  for (int t = 0; t < 5; ++t) {
    const Family a = gen.family_of_size(10, 2, 6);
    EXPECT_EQ(canonical_form(apply_permutation(a, gen.permutation(10))), canonical_form(a));
  }
}

TEST(Canonical, GuardRefusesWithoutOverride) {
  const Family a = Family::from_lists(17, 1, {{3}});
  EXPECT_THROW(canonical_form(a), ParameterError);
  EXPECT_EQ(canonical_form(a, true), Family::from_lists(17, 1, {{1}}));
}
