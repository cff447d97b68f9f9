#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "isolab/combinatorics.hpp"

namespace isolab {

/// Largest vertex count a Family may index (C(n, r) bits).
inline constexpr std::uint64_t kMaxFamilyUniverse = std::uint64_t{1} << 32;

/// A subset of [n]^(r), stored as a bit vector indexed by colex rank.
///
/// Families over different (n, r) are different spaces; mixing them in a set
/// operation throws ParameterError. r = 0 (the single empty set) is allowed
/// so that upper sections of r = 1 families are well typed.
class Family {
 public:
  Family() = default;
  Family(int n, int r);

  static Family full(int n, int r);
  static Family from_ranks(int n, int r, std::span<const std::uint64_t> ranks);
  static Family from_sets(int n, int r, std::span<const RSet> sets);
  /// Convenience for tests and examples: members given as 1-based element lists.
  static Family from_lists(int n, int r, const std::vector<std::vector<int>>& lists);
  /// Bit i of `mask` selects the vertex of colex rank i; requires C(n,r) <= 64.
  static Family from_mask(int n, int r, std::uint64_t mask);

  int n() const { return n_; }
  int r() const { return r_; }
  std::uint64_t universe() const { return universe_; }
  std::uint64_t size() const;
  bool empty() const { return size() == 0; }
  /// |A| / C(n, r) as an exact rational.
  Rational density() const;

  bool contains(std::uint64_t rank) const { return (words_[rank >> 6] >> (rank & 63)) & 1U; }
  bool contains(const RSet& x) const;
  void insert(std::uint64_t rank);
  void insert(const RSet& x);
  void erase(std::uint64_t rank);

  std::vector<std::uint64_t> ranks() const;
  std::vector<RSet> members() const;
  /// Member bits as one word; requires C(n,r) <= 64.
  std::uint64_t mask() const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  Family operator|(const Family& other) const;
  Family operator&(const Family& other) const;
  /// Set difference.
  Family operator-(const Family& other) const;
  /// Complement within [n]^(r).
  Family complement() const;
  bool subset_of(const Family& other) const;

  friend bool operator==(const Family&, const Family&) = default;

 private:
  void require_same_space(const Family& other) const;
  void clear_tail();

  int n_ = 0;
  int r_ = 0;
  std::uint64_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Orders families of one space by their ascending member-rank sequences
/// (shorter prefix first). Used for canonical forms and witness tie-breaks.
bool rank_sequence_less(const Family& a, const Family& b);

/// {p(x) : x ∈ A}. Throws ParameterError when p acts on a different n.
Family apply_permutation(const Family& a, const GroundPermutation& p);

/// Largest n canonical_form accepts without `allow_large`.
inline constexpr int kCanonicalGuard = 16;

/// Orbit representative of A under all n! ground permutations: the image
/// whose ascending member-rank sequence is lexicographically least
/// (equivalently, the member bit vector read from rank 0 with a member
/// ordering before a non-member). Found by branch-and-prune over partial
/// preimage assignments: fixing the preimages of ground elements 1..k fixes
/// the first C(k, r) bits, so a worse prefix prunes the subtree.
Family canonical_form(const Family& a, bool allow_large = false);

}  // namespace isolab
