#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "isolab/constructions.hpp"
#include "isolab/family.hpp"
#include "isolab/report.hpp"

namespace isolab {

enum class SearchStrategy { Auto, FullScan, Combinations, BranchAndBound };
std::string_view to_string(SearchStrategy s);

struct SearchOptions {
  /// Branch-and-bound node budget, split evenly across the root branches.
  std::uint64_t node_budget = 50'000'000;
  /// Largest C(C(n,r), m) enumerated combination by combination.
  std::uint64_t combination_cap = 100'000'000;
  /// Largest C(n, r) handled by the 2^C(n,r) full scan.
  int full_scan_cap = 20;
  SearchStrategy strategy = SearchStrategy::Auto;
  double tolerance = 1e-12;
};

struct MinBoundaryResult {
  std::uint64_t value = 0;
  Family witness;
  /// False when the budget ran out; value is then an upper bound.
  bool exact = true;
  SearchStrategy strategy = SearchStrategy::Auto;
  std::uint64_t nodes = 0;
};

/// min |b(A)| over A ⊂ [n]^(r) with |A| = m. Strategy under Auto: full scan
/// when C(n,r) <= full_scan_cap, combination enumeration when
/// C(C(n,r), m) <= combination_cap, else symmetry-reduced branch-and-bound.
/// The mask-based strategies require C(n, r) <= 64.
MinBoundaryResult exact_min_boundary(int n, int r, std::uint64_t m, const SearchOptions& options = {});

struct ProfileEntry {
  std::uint64_t min_boundary = 0;
  Family witness;
  bool exact = true;
};

struct Profile {
  int n = 0;
  int r = 0;
  std::vector<ProfileEntry> minima;  ///< indexed by m = 0..C(n, r)

  bool exact() const;
  std::vector<std::uint64_t> values() const;
};

/// Minimum boundary for every size. Exact by full scan when
/// C(n,r) <= full_scan_cap; otherwise per-size searches under the budget when
/// `budgeted`, and a ParameterError when not.
Profile isoperimetric_profile(int n, int r, const SearchOptions& options = {}, bool budgeted = false);

struct SandwichResult {
  std::uint64_t value = 0;
  SandwichSpec spec;  ///< over (n, n−r) when via_complement
  Family witness;     ///< over (n, r)
  /// r > n/2: the window is empty, so the dual instance was searched and
  /// its witness mapped back through x ↦ [n] ∖ x.
  bool via_complement = false;
  /// m = 0: the empty family, outside every sandwich.
  bool trivial = false;
};

/// min |b(C)| over all sandwiched C with |C| = m, every (k, ℓ) in the
/// window and every completion from the middle layer. The completion's first
/// member is fixed to the middle layer's colex-least set, which is harmless
/// because permutations of [k] × [n]∖[k] act transitively on that layer.
SandwichResult min_sandwiched_boundary(int n, int r, std::uint64_t m);

/// Conjecture audit under the |C| = |A| reading: per size, exact minimum
/// versus best sandwiched family. Rows with a strictly smaller exact minimum
/// are counterexample candidates and carry the witness.
AuditReport conjecture_audit(int n, int r, const SearchOptions& options = {});

/// Theorem 1 audit: minima[m] >= c θ α(1−α) C(n,r) − tolerance for every
/// proper nonempty size. With `full_scan`, also counts violating families
/// directly over all 2^C(n,r) families.
AuditReport theorem1_audit(int n, int r, double c, const SearchOptions& options = {}, bool full_scan = false);

/// Harper audit for Q_n, n <= 4: exhaustive minimum vertex boundary versus
/// simplicial segments and minimum edge boundary versus binary segments.
AuditReport harper_audit(int n);

/// Isoperimetric profile as a report with the CSV column set
/// m,min_boundary,exact,bound_c_over_5.
AuditReport profile_report(const Profile& profile);

}  // namespace isolab
