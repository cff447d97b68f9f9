#pragma once

#include <cstdint>
#include <vector>

#include "isolab/combinatorics.hpp"
#include "isolab/family.hpp"

namespace isolab {

/// B_{k,ℓ} = {x ∈ [n]^(r) : |x ∩ [k]| >= ℓ}. ℓ = 0 gives the full layer.
/// Throws RangeError for k outside [1, n] or ℓ outside [0, r].
Family b_kl(int n, int r, int k, int l);

/// Σ_{i=ℓ}^{min(r,k)} C(k,i) C(n−k, r−i).
BigInt b_kl_size(int n, int r, int k, int l);

/// True when r <= k <= n−r and 1 <= ℓ <= r (the conjectured extremal window).
bool in_conjecture_window(int n, int r, int k, int l);

enum class CompletionRule { ColexFirst, ExhaustiveIndex };

/// A family C with B_{k,ℓ} ⊆ C ⊆ B_{k,ℓ−1} and |C| = target_size; the
/// extra members come from the middle layer {x : |x ∩ [k]| = ℓ−1}.
struct SandwichSpec {
  int n = 0;
  int r = 0;
  int k = 0;
  int l = 0;
  std::uint64_t target_size = 0;
  CompletionRule rule = CompletionRule::ColexFirst;
  /// For ExhaustiveIndex: colex index of the chosen subset of the middle layer.
  std::uint64_t completion_index = 0;
};

/// Colex ranks (ascending) of {x ∈ [n]^(r) : |x ∩ [k]| = ℓ−1}.
std::vector<std::uint64_t> middle_layer(int n, int r, int k, int l);

/// Number of distinct completions for a SandwichSpec's sizes: C(|M|, m − |B_{k,ℓ}|).
BigInt completion_count(const SandwichSpec& spec);

/// Throws RangeError when target_size is outside [|B_{k,ℓ}|, |B_{k,ℓ−1}|] or
/// the completion index is out of range; ParameterError when ℓ < 1.
Family sandwiched_family(const SandwichSpec& spec);

/// {x : |x ∩ [n/2]| > r/2}; throws ParameterError unless n is even and r odd.
Family halfspace_set(int n, int r);
/// The layer {x : |x ∩ [n/2]| = (r−1)/2}, which is b(halfspace_set(n, r)).
Family halfspace_boundary_layer(int n, int r);
/// The involution exchanging i and i + n/2 for i ∈ [n/2].
GroundPermutation half_swap(int n);

struct SharpnessRatio {
  Rational ratio;            ///< C(n/2,(r−1)/2) C(n/2,(r+1)/2) / C(n,r)
  Rational alternate_ratio;  ///< C(r,(r−1)/2) C(n−r,(n−r+1)/2) / C(n,n/2)
  BigInt lhs;                ///< C(n,n/2) C(n/2,(r−1)/2) C(n/2,(r+1)/2)
  BigInt rhs;                ///< C(n,r) C(r,(r−1)/2) C(n−r,(n−r+1)/2)
  bool identity_ok = false;  ///< lhs == rhs and ratio == alternate_ratio
};
/// Exact boundary density of the half-space set, by both closed forms.
SharpnessRatio sharpness_ratio(int n, int r);

struct BetaBall {
  Family inner;  ///< B_{⌊n/2⌋, ⌈r/2 + β√r⌉}
  Family outer;  ///< B_{⌊n/2⌋, ⌊r/2 + β√r⌋}
  int l_inner = 0;
  int l_outer = 0;
  bool clamped = false;  ///< an ℓ was clamped into [0, r]
};
BetaBall beta_ball(int n, int r, double beta);

}  // namespace isolab
