#include <gtest/gtest.h>

#include <bit>

#include "isolab/errors.hpp"
#include "isolab/johnson.hpp"
#include "support/generators.hpp"

using namespace isolab;
using isolab::testing::Gen;
using isolab::testing::naive_boundary_size;

namespace {

Family naive_lower_shadow(const Family& a) {
  Family out(a.n(), a.r() - 1);
  for (std::uint64_t i = 0; i < out.universe(); ++i) {
    const auto x = colex_unrank_bits(i, a.n(), a.r() - 1);
    for (const auto& y : a.members()) {
      if ((x & y.bits()) == x) {
        out.insert(i);
        break;
      }
    }
  }
  return out;
}

Family naive_upper_shadow(const Family& a) {
  Family out(a.n(), a.r() + 1);
  for (std::uint64_t i = 0; i < out.universe(); ++i) {
    const auto x = colex_unrank_bits(i, a.n(), a.r() + 1);
    for (const auto& y : a.members()) {
      if ((x & y.bits()) == y.bits()) {
        out.insert(i);
        break;
      }
    }
  }
  return out;
}

}  // namespace

TEST(Boundary, SingleVertexInFourTwo) {
  const Family b = vertex_boundary(Family::from_lists(4, 2, {{1, 2}}));
  EXPECT_EQ(b, Family::from_lists(4, 2, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
}

TEST(Boundary, SingletonsAreMutuallyAdjacent) {
  EXPECT_EQ(vertex_boundary(Family::from_lists(4, 1, {{1}, {2}})), Family::from_lists(4, 1, {{3}, {4}}));
}

TEST(Boundary, EmptyAndFull) {
  EXPECT_TRUE(vertex_boundary(Family(6, 3)).empty());
  EXPECT_TRUE(vertex_boundary(Family::full(6, 3)).empty());
}

TEST(Boundary, DegreeIsRTimesNMinusR) {
  for (int n = 2; n <= 12; ++n) {
    for (int r = 1; r < n; ++r) {
      Family a(n, r);
      a.insert(0);
      EXPECT_EQ(vertex_boundary(a).size(), static_cast<std::uint64_t>(r * (n - r)));
    }
  }
}

TEST(Boundary, MatchesDefinition) {
  Gen gen(21);
  for (int t = 0; t < 200; ++t) {
    const int n = gen.integer(1, 9);
    const int r = gen.integer(0, n);
    const Family a = gen.family(n, r);
    const Family b = vertex_boundary(a);
    EXPECT_EQ(b.size(), naive_boundary_size(a));
    EXPECT_TRUE((b & a).empty());
    EXPECT_EQ(neighborhood(a), a | b);
  }
}

TEST(Boundary, SerialAndParallelAgree) {
  Gen gen(22);
  for (int t = 0; t < 20; ++t) {
    const int n = gen.integer(8, 16);
    const int r = gen.integer(1, n - 1);
    if (binom64(n, r) > 20000) continue;
    const Family a = gen.family(n, r);
    EXPECT_EQ(vertex_boundary(a), vertex_boundary_serial(a));
  }
}

TEST(Boundary, ComplementDuality) {
  Gen gen(23);
  for (int n = 1; n <= 7; ++n) {
    for (int r = 0; r <= n; ++r) {
      for (int t = 0; t < 10; ++t) {
        const Family a = gen.family(n, r);
        const Family c = complement_image(a);
        ASSERT_EQ(c.r(), n - r);
        EXPECT_EQ(vertex_boundary(c).size(), vertex_boundary(a).size());
        EXPECT_EQ(complement_image(vertex_boundary(a)), vertex_boundary(c));
      }
    }
  }
}

TEST(Shadows, Examples) {
  const auto s = shadows(Family::from_lists(4, 2, {{1, 2}}));
  EXPECT_EQ(*s.lower, Family::from_lists(4, 1, {{1}, {2}}));
  EXPECT_EQ(*s.upper, Family::from_lists(4, 3, {{1, 2, 3}, {1, 2, 4}}));
  const auto e = shadows(Family(4, 2));
  EXPECT_TRUE(e.lower->empty());
  EXPECT_TRUE(e.upper->empty());
  const auto f = shadows(Family::full(5, 2));
  EXPECT_EQ(*f.lower, Family::full(5, 1));
  EXPECT_EQ(*f.upper, Family::full(5, 3));
}

TEST(Shadows, RangeGuards) {
  EXPECT_THROW(lower_shadow(Family(4, 0)), RangeError);
  EXPECT_THROW(upper_shadow(Family(4, 4)), RangeError);
  EXPECT_FALSE(shadows(Family(4, 0)).lower.has_value());
  EXPECT_FALSE(shadows(Family(4, 4)).upper.has_value());
}

TEST(Shadows, MatchDefinition) {
  Gen gen(24);
  for (int t = 0; t < 100; ++t) {
    const int n = gen.integer(2, 8);
    const int r = gen.integer(1, n - 1);
    const Family a = gen.family(n, r);
    EXPECT_EQ(lower_shadow(a), naive_lower_shadow(a));
    EXPECT_EQ(upper_shadow(a), naive_upper_shadow(a));
  }
}

TEST(Sections, Example) {
  const auto s = sections(Family::from_lists(4, 2, {{1, 2}, {2, 4}}));
  EXPECT_EQ(s.lower, Family::from_lists(3, 2, {{1, 2}}));
  EXPECT_EQ(s.upper, Family::from_lists(3, 1, {{2}}));
  EXPECT_EQ(s.alpha0, Rational(1, 3));
  EXPECT_EQ(s.alpha1, Rational(1, 3));
}

TEST(Sections, EmptyFamily) {
  const auto s = sections(Family(5, 2));
  EXPECT_TRUE(s.lower.empty());
  EXPECT_TRUE(s.upper.empty());
  EXPECT_EQ(s.alpha0, 0);
  EXPECT_EQ(s.alpha1, 0);
}

TEST(Sections, RangeGuards) {
  EXPECT_THROW(sections(Family(4, 4)), RangeError);
  EXPECT_THROW(sections(Family(4, 0)), RangeError);
}

TEST(Sections, DensityIdentityExact) {
  Gen gen(25);
  for (int t = 0; t < 500; ++t) {
    const Family a = gen.family(7, 3);
    const auto s = sections(a);
    EXPECT_EQ(s.lower.size() + s.upper.size(), a.size());
    const Rational alpha = a.density();
    EXPECT_EQ(alpha * 35, s.alpha0 * 20 + s.alpha1 * 15);
    EXPECT_EQ(alpha, (1 - Rational(3, 7)) * s.alpha0 + Rational(3, 7) * s.alpha1);
    EXPECT_EQ(join_sections(s.lower, s.upper), a);
  }
}

TEST(LocalLym, Example) {
  const auto m = local_lym_margins(Family::from_lists(4, 2, {{1, 2}}));
  EXPECT_EQ(*m.lower, Rational(1, 3));
  EXPECT_EQ(*m.upper, Rational(2, 4) - Rational(1, 6));
  const auto f = local_lym_margins(Family::full(6, 3));
  EXPECT_EQ(*f.lower, 0);
  EXPECT_EQ(*f.upper, 0);
  EXPECT_THROW(local_lym_margins(Family(4, 2)), DomainError);
}

TEST(LocalLym, ExhaustiveFiveTwo) {
  for (std::uint64_t mask = 1; mask < (1U << 10); ++mask) {
    const auto m = local_lym_margins(Family::from_mask(5, 2, mask));
    ASSERT_GE(*m.lower, 0) << mask;
    ASSERT_GE(*m.upper, 0) << mask;
  }
}

TEST(LocalLym, SectionForms) {
  Gen gen(26);
  for (int t = 0; t < 300; ++t) {
    const int n = gen.integer(3, 9);
    const int r = gen.integer(1, n - 2);
    const auto m = section_lym_margins(gen.family(n, r));
    EXPECT_GE(m.lower_section, 0);
    EXPECT_GE(m.upper_section, 0);
  }
}

TEST(SectionIdentity, Examples) {
  EXPECT_TRUE(section_identity_check(Family(4, 2)));
  EXPECT_TRUE(section_identity_check(Family::from_lists(4, 2, {{1, 2}, {2, 4}})));
  EXPECT_THROW(section_identity_check(Family(4, 3)), RangeError);
}

TEST(SectionIdentity, RandomFamilies) {
  Gen gen(27);
  for (int t = 0; t < 1000; ++t) ASSERT_TRUE(section_identity_check(gen.family(7, 3)));
}

TEST(SectionIdentity, NeighbourhoodDominatesSectionBounds) {
  for (int n = 3; n <= 5; ++n) {
    for (int r = 1; r <= n - 2; ++r) {
      const std::uint64_t total = std::uint64_t{1} << binom64(n, r);
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        const auto d = neighborhood_decomposition(Family::from_mask(n, r, mask));
        ASSERT_TRUE(d.holds()) << n << " " << r << " " << mask;
      }
    }
  }
}
