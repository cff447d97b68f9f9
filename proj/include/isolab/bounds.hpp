#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string_view>

#include "isolab/combinatorics.hpp"

namespace isolab {

inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr double kDefaultC = 0.2;

/// θ_n^(r) = √(n / (r(n−r))). Throws RangeError unless 1 <= r <= n−1.
double theta(int n, int r);
/// θ² as an exact rational.
Rational theta_squared(int n, int r);

/// The three comparisons θ_n^(r) <= θ_{n−1}^(r), θ_n^(r) <= θ_{n−1}^(r−1) and
/// θ_n^(r) <= 1, decided exactly on squares. Requires n >= 4, 2 <= r <= n/2.
struct ThetaMonotonicity {
  bool below_lower_section = false;
  bool below_upper_section = false;
  bool at_most_one = false;
  bool all() const { return below_lower_section && below_upper_section && at_most_one; }
};
ThetaMonotonicity theta_monotonicity(int n, int r);

struct BoundPoint {
  int n = 0;
  int r = 0;
  double alpha = 0.0;
  double c = kDefaultC;

  /// Throws RangeError / DomainError on 1 <= r <= n−1, α ∈ [0,1], c ∈ [0,1/5].
  static BoundPoint make(int n, int r, double alpha, double c = kDefaultC);
};

/// c θ_n^(r) α(1−α) C(n, r).
double main_bound(const BoundPoint& p);

enum class Region { LargePositive, LargeNegative, SmallModulus };
std::string_view to_string(Region region);

/// A point of the inductive inequality: α₀ = α+δ, α₁ = α − ((n−r)/r)δ.
struct Prop3Point {
  int n = 0;
  int r = 0;
  double alpha = 0.0;
  double delta = 0.0;
  double c = kDefaultC;
  double alpha0 = 0.0;
  double alpha1 = 0.0;
  double epsilon = 0.0;  ///< −((n−r)/r)δ

  /// Throws RangeError on n < 4 or r outside [2, n/2]; DomainError when α,
  /// α₀ or α₁ leaves [0, 1] (by more than `slack`) or c leaves [0, 1/5].
  static Prop3Point make(int n, int r, double alpha, double delta, double c = kDefaultC,
                         double slack = kDefaultTolerance);
};

/// The feasible δ interval: α₀, α₁ ∈ [0, 1].
struct DeltaRange {
  double lo = 0.0;
  double hi = 0.0;
};
DeltaRange feasible_delta_range(int n, int r, double alpha);

/// 2c(r/n)α(1−α)θ_n^(r): the |δ| cut between the three regions.
double region_threshold(int n, int r, double alpha, double c);

/// |δ| equal to the threshold is SmallModulus.
Region classify_region(const Prop3Point& q);

struct Prop3Eval {
  double t1 = 0.0;  ///< lower-section term plus δ
  double t2 = 0.0;  ///< upper-section term minus ((n−r)/r)δ
  double t3 = 0.0;  ///< both section terms
  double rhs = 0.0;
  Region region = Region::SmallModulus;
  bool holds = false;             ///< max(t1,t2,t3) >= rhs − tolerance
  double margin = 0.0;            ///< max(t1,t2,t3) − rhs
  bool region_claim_holds = false;  ///< designated term (and adjacent term at ties) >= rhs − tolerance
  double region_margin = 0.0;
};
Prop3Eval prop3_evaluate(const Prop3Point& q, double tolerance = kDefaultTolerance);

/// Exact region classification for rational inputs (compares squares so θ
/// never needs to be evaluated).
Region classify_region_exact(int n, int r, const Rational& alpha, const Rational& delta, const Rational& c);

/// Both sides of the Claim 5 hypothesis rewrite, evaluated exactly:
/// ε >= 2c(1−r/n)α(1−α)θ versus δ <= −2c(r/n)α(1−α)θ.
struct ThresholdEquivalence {
  bool epsilon_side = false;
  bool delta_side = false;
};
ThresholdEquivalence negative_threshold_equivalence(int n, int r, const Rational& alpha, const Rational& delta,
                                                    const Rational& c);

/// (f(α+δ) + f(α−δ)) / (2f(α)) with f(x) = √2 x(1−x). Throws DomainError
/// for α ∉ (0,1) or δ outside [0, min(f(α)/√n, α, 1−α)].
double warmup_ratio(int n, double alpha, double delta);
/// Upper end of the admissible δ range for warmup_ratio.
double warmup_delta_max(int n, double alpha);

struct Claim6Decomposition {
  double w_direct = 0.0;    ///< from the two weighted section products
  double w_identity = 0.0;  ///< 1 + 1/n − T1 − T2
  double t1 = 0.0;
  double t2 = 0.0;
};
/// Throws DomainError for α ∈ {0, 1}.
Claim6Decomposition claim6_decomposition(const Prop3Point& q);

/// |(α+η)(1−α−η) − α(1−α)|; throws DomainError unless α, α+η ∈ [0, 1].
double mvi_gap(double alpha, double eta);

/// Aggregate of a grid or sampled scan. `failures` counts points where the
/// primary inequality fails; `secondary_failures` the scan's second check
/// (region claims, closed-form identity, or T/W bounds).
struct ScanSummary {
  std::uint64_t points = 0;
  std::uint64_t failures = 0;
  std::uint64_t secondary_failures = 0;
  std::array<std::uint64_t, 3> region_counts{};  ///< prop3 only, indexed by Region
  double min_margin = std::numeric_limits<double>::infinity();
  double min_secondary_margin = std::numeric_limits<double>::infinity();
  double max_identity_error = 0.0;
  int worst_n = 0;
  int worst_r = 0;
  double worst_alpha = 0.0;
  double worst_delta = 0.0;

  bool pass() const { return failures == 0 && secondary_failures == 0; }
  /// Folds `other` in; keeps the first worst point on ties so merges in a
  /// fixed order are deterministic.
  void merge(const ScanSummary& other);

  friend bool operator==(const ScanSummary&, const ScanSummary&) = default;
};

struct Prop3Grid {
  int n_min = 4;
  int n_max = 64;
  int alpha_steps = 64;  ///< α = i / alpha_steps, i = 0..alpha_steps
  int delta_steps = 64;  ///< δ = lo + j (hi − lo) / delta_steps over the feasible range
  double c = kDefaultC;
  double tolerance = kDefaultTolerance;
};
/// Evaluates every grid point; (n, r) pairs are distributed over OpenMP workers.
ScanSummary prop3_scan(const Prop3Grid& grid);
ScanSummary prop3_scan_serial(const Prop3Grid& grid);

struct Claim2Grid {
  int n_max = 128;
  int alpha_steps = 64;  ///< α = i / alpha_steps, i = 1..alpha_steps−1
  int delta_steps = 64;  ///< δ = j δ_max / delta_steps, j = 0..delta_steps
  double tolerance = kDefaultTolerance;
};
/// failures: ratio < √(1−1/n) − tol; secondary: |ratio − (1 − δ²/(α(1−α)))| > tol.
ScanSummary claim2_scan(const Claim2Grid& grid);
ScanSummary claim2_scan_serial(const Claim2Grid& grid);

struct Claim6Sampling {
  std::uint64_t samples = 100000;
  int n_max = 64;
  double c = kDefaultC;
  std::uint64_t seed = 20120301;
  double identity_tolerance = 1e-10;
  double tolerance = kDefaultTolerance;
};
/// Random feasible points with |δ| inside the small-modulus region.
/// failures: the two W expressions disagree beyond identity_tolerance;
/// secondary: one of |T1| <= c/(√2 n), |T2| <= 13c²/(4n), W >= 1 + 1/(2(n−1)) fails.
ScanSummary claim6_audit(const Claim6Sampling& sampling);
ScanSummary claim6_audit_serial(const Claim6Sampling& sampling);

}  // namespace isolab
