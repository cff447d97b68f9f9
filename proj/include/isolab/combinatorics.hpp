#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace isolab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Largest ground set accepted by the exact big-integer binomial.
inline constexpr int kMaxBinomialN = 1000;
/// Largest ground set representable by RSet (one machine word).
inline constexpr int kMaxGround = 64;

/// Exact C(n, k); zero when k < 0 or k > n. Throws RangeError for n outside
/// [0, kMaxBinomialN].
BigInt binomial(int n, int k);

/// C(n, k) from a precomputed table, for 0 <= n <= 64. Every entry fits in
/// 64 bits (the largest is C(64, 32)).
std::uint64_t binom64(int n, int k);

/// Renders a rational as `p/q` (or `p` when q = 1).
std::string to_string(const Rational& q);

/// An r-subset of [n], stored as a bit mask with element i at bit i-1.
class RSet {
 public:
  RSet() = default;

  /// Builds from 1-based ground elements. Throws ParameterError on
  /// duplicates or elements outside [1, n].
  static RSet of(int n, std::initializer_list<int> elements);
  static RSet of(int n, std::span<const int> elements);
  static RSet from_bits(int n, std::uint64_t bits);

  int n() const { return n_; }
  int r() const;
  std::uint64_t bits() const { return bits_; }
  bool contains(int element) const { return (bits_ >> (element - 1)) & 1U; }
  std::vector<int> elements() const;

  friend bool operator==(const RSet&, const RSet&) = default;

 private:
  RSet(int n, std::uint64_t bits) : n_(n), bits_(bits) {}

  int n_ = 0;
  std::uint64_t bits_ = 0;
};

/// Colexicographic rank of the r-set with the given bit mask. Colex order:
/// x < y iff max(x Δ y) ∈ y.
std::uint64_t colex_rank_bits(std::uint64_t bits);
std::uint64_t colex_rank(const RSet& x);

/// Inverse of colex_rank over [n]^(r). Throws RangeError when
/// i >= C(n, r).
std::uint64_t colex_unrank_bits(std::uint64_t i, int n, int r);
RSet colex_unrank(std::uint64_t i, int n, int r);

/// A bijection on {1..n}, stored 1-based: image()[i-1] is the image of i.
class GroundPermutation {
 public:
  /// Throws ParameterError unless `image` is a permutation of 1..n.
  explicit GroundPermutation(std::vector<int> image);

  static GroundPermutation identity(int n);
  /// Product of disjoint cycles, e.g. {{1,3},{2,4}} for (1 3)(2 4).
  static GroundPermutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int n() const { return static_cast<int>(image_.size()); }
  int operator()(int element) const { return image_[element - 1]; }
  const std::vector<int>& image() const { return image_; }

  std::uint64_t apply_bits(std::uint64_t bits) const;
  RSet apply(const RSet& x) const;
  GroundPermutation inverse() const;

 private:
  std::vector<int> image_;
};

}  // namespace isolab
