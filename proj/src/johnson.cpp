#include "isolab/johnson.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "isolab/errors.hpp"

namespace isolab {

namespace {

std::uint64_t ground_mask(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

void set_bit(std::span<std::uint64_t> words, std::uint64_t i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }

// Marks every neighbour of the members stored in words [w_begin, w_end).
void mark_neighbors(const Family& a, std::size_t w_begin, std::size_t w_end, std::span<std::uint64_t> out) {
  const auto words = a.words();
  const std::uint64_t all = ground_mask(a.n());
  for (std::size_t w = w_begin; w < w_end; ++w) {
    for (std::uint64_t b = words[w]; b; b &= b - 1) {
      const std::uint64_t x = colex_unrank_bits(w * 64 + std::countr_zero(b), a.n(), a.r());
      for (std::uint64_t in = x; in; in &= in - 1) {
        const std::uint64_t dropped = x & ~(in & -in);
        for (std::uint64_t outside = all & ~x; outside; outside &= outside - 1) {
          set_bit(out, colex_rank_bits(dropped | (outside & -outside)));
        }
      }
    }
  }
}

Family boundary_from_marks(const Family& a, std::vector<std::uint64_t> marks) {
  Family out(a.n(), a.r());
  auto words = out.words();
  const auto member_words = a.words();
  for (std::size_t i = 0; i < words.size(); ++i) words[i] = marks[i] & ~member_words[i];
  return out;
}

void require_sectionable(const Family& a, const char* what) {
  if (a.n() < 3 || a.r() < 1 || a.r() > a.n() - 2) {
    throw RangeError(std::string(what) + ": requires n >= 3 and 1 <= r <= n-2");
  }
}

}  // namespace

Family vertex_boundary_serial(const Family& a) {
  std::vector<std::uint64_t> marks(a.words().size(), 0);
  mark_neighbors(a, 0, marks.size(), marks);
  return boundary_from_marks(a, std::move(marks));
}

Family vertex_boundary(const Family& a) {
  const std::size_t nwords = a.words().size();
  std::vector<std::uint64_t> marks(nwords, 0);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(nwords, 0);
#pragma omp for schedule(dynamic, 16) nowait
    for (std::int64_t w = 0; w < static_cast<std::int64_t>(nwords); ++w) {
      mark_neighbors(a, static_cast<std::size_t>(w), static_cast<std::size_t>(w) + 1, local);
    }
#pragma omp critical(isolab_boundary_merge)
    for (std::size_t i = 0; i < nwords; ++i) marks[i] |= local[i];
  }
  return boundary_from_marks(a, std::move(marks));
}

Family neighborhood(const Family& a) { return a | vertex_boundary(a); }

Family lower_shadow(const Family& a) {
  if (a.r() == 0) throw RangeError("lower_shadow: undefined at r = 0");
  Family out(a.n(), a.r() - 1);
  for (auto i : a.ranks()) {
    const std::uint64_t x = colex_unrank_bits(i, a.n(), a.r());
    for (std::uint64_t in = x; in; in &= in - 1) out.insert(colex_rank_bits(x & ~(in & -in)));
  }
  return out;
}

Family upper_shadow(const Family& a) {
  if (a.r() == a.n()) throw RangeError("upper_shadow: undefined at r = n");
  Family out(a.n(), a.r() + 1);
  const std::uint64_t all = ground_mask(a.n());
  for (auto i : a.ranks()) {
    const std::uint64_t x = colex_unrank_bits(i, a.n(), a.r());
    for (std::uint64_t o = all & ~x; o; o &= o - 1) out.insert(colex_rank_bits(x | (o & -o)));
  }
  return out;
}

Shadows shadows(const Family& a) {
  Shadows s;
  if (a.r() >= 1) s.lower = lower_shadow(a);
  if (a.r() <= a.n() - 1) s.upper = upper_shadow(a);
  return s;
}

Family complement_image(const Family& a) {
  Family out(a.n(), a.n() - a.r());
  const std::uint64_t all = ground_mask(a.n());
  for (auto i : a.ranks()) out.insert(colex_rank_bits(all & ~colex_unrank_bits(i, a.n(), a.r())));
  return out;
}

SectionPair sections(const Family& a) {
  const int n = a.n();
  const int r = a.r();
  if (n < 2 || r < 1 || r > n - 1) throw RangeError("sections: requires n >= 2 and 1 <= r <= n-1");
  Family lower(n - 1, r);
  Family upper(n - 1, r - 1);
  const std::uint64_t top = std::uint64_t{1} << (n - 1);
  for (auto i : a.ranks()) {
    const std::uint64_t x = colex_unrank_bits(i, n, r);
    // Colex ranks of sets avoiding n are unchanged in [n−1]^(r).
    if (x & top) {
      upper.insert(colex_rank_bits(x & ~top));
    } else {
      lower.insert(i);
    }
  }
  SectionPair s{std::move(lower), std::move(upper), 0, 0};
  s.alpha0 = s.lower.density();
  s.alpha1 = s.upper.density();
  return s;
}

Family join_sections(const Family& lower, const Family& upper) {
  if (lower.n() != upper.n() || lower.r() != upper.r() + 1) {
    throw ParameterError("join_sections: expected sections over [m]^(r) and [m]^(r-1)");
  }
  const int n = lower.n() + 1;
  Family out(n, lower.r());
  for (auto i : lower.ranks()) out.insert(i);
  const std::uint64_t top = std::uint64_t{1} << (n - 1);
  for (auto i : upper.ranks()) out.insert(colex_rank_bits(colex_unrank_bits(i, n - 1, upper.r()) | top));
  return out;
}

LymMargins local_lym_margins(const Family& a) {
  if (a.empty()) throw DomainError("local_lym_margins: margins undefined for the empty family");
  LymMargins m;
  const Rational density = a.density();
  if (a.r() >= 1) m.lower = lower_shadow(a).density() - density;
  if (a.r() <= a.n() - 1) m.upper = upper_shadow(a).density() - density;
  return m;
}

SectionLymMargins section_lym_margins(const Family& a) {
  require_sectionable(a, "section_lym_margins");
  const int n = a.n();
  const int r = a.r();
  const auto s = sections(a);
  const Rational down_ratio(r, n - r);
  const Rational up_ratio(n - r, r);
  return {Rational(BigInt(lower_shadow(s.lower).size())) - down_ratio * BigInt(s.lower.size()),
          Rational(BigInt(upper_shadow(s.upper).size())) - up_ratio * BigInt(s.upper.size())};
}

bool section_identity_check(const Family& a) {
  require_sectionable(a, "section_identity_check");
  const auto s = sections(a);
  const auto full = sections(neighborhood(a));
  const Family expect_lower = neighborhood(s.lower) | upper_shadow(s.upper);
  const Family expect_upper = neighborhood(s.upper) | lower_shadow(s.lower);
  return full.lower == expect_lower && full.upper == expect_upper;
}

bool NeighborhoodDecomposition::holds() const {
  return neighborhood >= std::max({via_lower_shadow, via_upper_shadow, via_sections});
}

NeighborhoodDecomposition neighborhood_decomposition(const Family& a) {
  require_sectionable(a, "neighborhood_decomposition");
  const auto s = sections(a);
  const auto n0 = neighborhood(s.lower).size();
  const auto n1 = neighborhood(s.upper).size();
  NeighborhoodDecomposition d;
  d.neighborhood = neighborhood(a).size();
  d.via_lower_shadow = n0 + lower_shadow(s.lower).size();
  d.via_upper_shadow = n1 + upper_shadow(s.upper).size();
  d.via_sections = n0 + n1;
  return d;
}

}  // namespace isolab
