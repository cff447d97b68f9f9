#include "isolab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "isolab/errors.hpp"

namespace isolab {

namespace {

void require_prop3_range(int n, int r) {
  if (n < 4) throw RangeError("prop3: requires n >= 4");
  if (r < 2 || 2 * r > n) throw RangeError("prop3: requires 2 <= r <= n/2");
}

// x >= k√t for k, t >= 0, decided on squares.
bool at_least_scaled_root(const Rational& x, const Rational& k, const Rational& t) {
  if (x < 0) return false;
  return x * x >= k * k * t;
}

bool above_scaled_root(const Rational& x, const Rational& k, const Rational& t) {
  if (x <= 0) return false;
  return x * x > k * k * t;
}

double section_product(double a) { return a * (1.0 - a); }

std::vector<std::pair<int, int>> prop3_tasks(const Prop3Grid& grid) {
  std::vector<std::pair<int, int>> tasks;
  for (int n = std::max(grid.n_min, 4); n <= grid.n_max; ++n) {
    for (int r = 2; 2 * r <= n; ++r) tasks.emplace_back(n, r);
  }
  return tasks;
}

ScanSummary prop3_scan_pair(const Prop3Grid& grid, int n, int r) {
  ScanSummary s;
  for (int i = 0; i <= grid.alpha_steps; ++i) {
    const double alpha = static_cast<double>(i) / grid.alpha_steps;
    const auto range = feasible_delta_range(n, r, alpha);
    for (int j = 0; j <= grid.delta_steps; ++j) {
      const double delta = range.lo + (range.hi - range.lo) * j / grid.delta_steps;
      const auto q = Prop3Point::make(n, r, alpha, delta, grid.c, grid.tolerance);
      const auto e = prop3_evaluate(q, grid.tolerance);
      ++s.points;
      ++s.region_counts[static_cast<int>(e.region)];
      if (!e.holds) ++s.failures;
      if (!e.region_claim_holds) ++s.secondary_failures;
      s.min_secondary_margin = std::min(s.min_secondary_margin, e.region_margin);
      if (e.margin < s.min_margin) {
        s.min_margin = e.margin;
        s.worst_n = n;
        s.worst_r = r;
        s.worst_alpha = alpha;
        s.worst_delta = delta;
      }
    }
  }
  return s;
}

ScanSummary claim2_scan_n(const Claim2Grid& grid, int n) {
  ScanSummary s;
  const double target = std::sqrt(1.0 - 1.0 / n);
  for (int i = 1; i < grid.alpha_steps; ++i) {
    const double alpha = static_cast<double>(i) / grid.alpha_steps;
    const double delta_max = warmup_delta_max(n, alpha);
    for (int j = 0; j <= grid.delta_steps; ++j) {
      const double delta = std::min(delta_max * j / grid.delta_steps, delta_max);
      const double ratio = warmup_ratio(n, alpha, delta);
      const double closed = 1.0 - delta * delta / section_product(alpha);
      const double err = std::abs(ratio - closed);
      ++s.points;
      if (ratio < target - grid.tolerance) ++s.failures;
      if (err > grid.tolerance) ++s.secondary_failures;
      s.max_identity_error = std::max(s.max_identity_error, err);
      if (ratio - target < s.min_margin) {
        s.min_margin = ratio - target;
        s.worst_n = n;
        s.worst_alpha = alpha;
        s.worst_delta = delta;
      }
    }
  }
  return s;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t kClaim6Block = 1024;

// Samples of one block come from a generator seeded by (seed, block), so the
// result does not depend on how blocks are spread over threads.
ScanSummary claim6_block(const Claim6Sampling& sampling, std::uint64_t block) {
  ScanSummary s;
  std::mt19937_64 rng(splitmix64(sampling.seed ^ splitmix64(block)));
  const std::uint64_t begin = block * kClaim6Block;
  const std::uint64_t end = std::min(sampling.samples, begin + kClaim6Block);
  const double c = sampling.c;
  for (std::uint64_t k = begin; k < end; ++k) {
    const int n = std::uniform_int_distribution<int>(4, sampling.n_max)(rng);
    const int r = std::uniform_int_distribution<int>(2, n / 2)(rng);
    double alpha = 0.0;
    while (alpha <= 0.0 || alpha >= 1.0) alpha = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const double thr = region_threshold(n, r, alpha, c);
    const auto range = feasible_delta_range(n, r, alpha);
    const double lo = std::max(range.lo, -thr);
    const double hi = std::min(range.hi, thr);
    const double delta = lo + (hi - lo) * std::uniform_real_distribution<double>(0.0, 1.0)(rng);

    const auto d = claim6_decomposition(Prop3Point::make(n, r, alpha, delta, c));
    const double err = std::abs(d.w_direct - d.w_identity);
    const double w_slack = d.w_direct - (1.0 + 1.0 / (2.0 * (n - 1)));
    const double t1_slack = c / (std::sqrt(2.0) * n) - std::abs(d.t1);
    const double t2_slack = 13.0 * c * c / (4.0 * n) - std::abs(d.t2);
    ++s.points;
    if (err > sampling.identity_tolerance) ++s.failures;
    if (w_slack < -sampling.tolerance || t1_slack < -sampling.tolerance || t2_slack < -sampling.tolerance) {
      ++s.secondary_failures;
    }
    s.max_identity_error = std::max(s.max_identity_error, err);
    s.min_secondary_margin = std::min({s.min_secondary_margin, t1_slack, t2_slack});
    if (w_slack < s.min_margin) {
      s.min_margin = w_slack;
      s.worst_n = n;
      s.worst_r = r;
      s.worst_alpha = alpha;
      s.worst_delta = delta;
    }
  }
  return s;
}

template <class Task, class Run>
ScanSummary merged_parallel(const std::vector<Task>& tasks, Run run) {
  std::vector<ScanSummary> parts(tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(tasks.size()); ++t) parts[t] = run(tasks[t]);
  ScanSummary total;
  for (const auto& p : parts) total.merge(p);
  return total;
}

template <class Task, class Run>
ScanSummary merged_serial(const std::vector<Task>& tasks, Run run) {
  ScanSummary total;
  for (const auto& t : tasks) total.merge(run(t));
  return total;
}

std::vector<int> claim2_tasks(const Claim2Grid& grid) {
  std::vector<int> ns;
  for (int n = 1; n <= grid.n_max; ++n) ns.push_back(n);
  return ns;
}

std::vector<std::uint64_t> claim6_tasks(const Claim6Sampling& sampling) {
  if (sampling.n_max < 4) throw RangeError("claim6_audit: n_max must be >= 4");
  std::vector<std::uint64_t> blocks;
  for (std::uint64_t b = 0; b * kClaim6Block < sampling.samples; ++b) blocks.push_back(b);
  return blocks;
}

}  // namespace

double theta(int n, int r) {
  if (r < 1 || r > n - 1) throw RangeError("theta: requires 1 <= r <= n-1");
  return std::sqrt(static_cast<double>(n) / (static_cast<double>(r) * (n - r)));
}

Rational theta_squared(int n, int r) {
  if (r < 1 || r > n - 1) throw RangeError("theta_squared: requires 1 <= r <= n-1");
  return Rational(BigInt(n), BigInt(r) * (n - r));
}

ThetaMonotonicity theta_monotonicity(int n, int r) {
  require_prop3_range(n, r);
  const Rational t = theta_squared(n, r);
  return {t <= theta_squared(n - 1, r), t <= theta_squared(n - 1, r - 1), t <= 1};
}

BoundPoint BoundPoint::make(int n, int r, double alpha, double c) {
  if (r < 1 || r > n - 1) throw RangeError("BoundPoint: requires 1 <= r <= n-1");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("BoundPoint: alpha outside [0, 1]");
  if (!(c >= 0.0 && c <= kDefaultC)) throw DomainError("BoundPoint: c outside [0, 1/5]");
  return {n, r, alpha, c};
}

double main_bound(const BoundPoint& p) {
  const double count = binomial(p.n, p.r).convert_to<double>();
  return p.c * theta(p.n, p.r) * p.alpha * (1.0 - p.alpha) * count;
}

std::string_view to_string(Region region) {
  switch (region) {
    case Region::LargePositive:
      return "large_positive";
    case Region::LargeNegative:
      return "large_negative";
    case Region::SmallModulus:
      return "small_modulus";
  }
  return "unknown";
}

Prop3Point Prop3Point::make(int n, int r, double alpha, double delta, double c, double slack) {
  require_prop3_range(n, r);
  if (!(c >= 0.0 && c <= kDefaultC)) throw DomainError("Prop3Point: c outside [0, 1/5]");
  const double k = static_cast<double>(n - r) / r;
  Prop3Point q{n, r, alpha, delta, c, alpha + delta, alpha - k * delta, -k * delta};
  auto inside = [slack](double v) { return v >= -slack && v <= 1.0 + slack; };
  if (!inside(alpha)) throw DomainError("Prop3Point: alpha outside [0, 1]");
  if (!inside(q.alpha0) || !inside(q.alpha1)) {
    throw DomainError("Prop3Point: infeasible delta (alpha0 = " + std::to_string(q.alpha0) +
                      ", alpha1 = " + std::to_string(q.alpha1) + ")");
  }
  return q;
}

DeltaRange feasible_delta_range(int n, int r, double alpha) {
  const double s = static_cast<double>(r) / (n - r);
  return {std::max(-alpha, (alpha - 1.0) * s), std::min(1.0 - alpha, alpha * s)};
}

double region_threshold(int n, int r, double alpha, double c) {
  return 2.0 * c * (static_cast<double>(r) / n) * section_product(alpha) * theta(n, r);
}

Region classify_region(const Prop3Point& q) {
  const double thr = region_threshold(q.n, q.r, q.alpha, q.c);
  if (q.delta > thr) return Region::LargePositive;
  if (q.delta < -thr) return Region::LargeNegative;
  return Region::SmallModulus;
}

Prop3Eval prop3_evaluate(const Prop3Point& q, double tolerance) {
  const double frac = static_cast<double>(q.r) / q.n;
  const double k = static_cast<double>(q.n - q.r) / q.r;
  const double lower = q.c * (1.0 - frac) * section_product(q.alpha0) * theta(q.n - 1, q.r);
  const double upper = q.c * frac * section_product(q.alpha1) * theta(q.n - 1, q.r - 1);

  Prop3Eval e;
  e.t1 = lower + q.delta;
  e.t2 = upper - k * q.delta;
  e.t3 = lower + upper;
  e.rhs = q.c * section_product(q.alpha) * theta(q.n, q.r);
  e.margin = std::max({e.t1, e.t2, e.t3}) - e.rhs;
  e.holds = e.margin >= -tolerance;
  e.region = classify_region(q);

  const double thr = region_threshold(q.n, q.r, q.alpha, q.c);
  switch (e.region) {
    case Region::LargePositive:
      e.region_margin = e.t1 - e.rhs;
      break;
    case Region::LargeNegative:
      e.region_margin = e.t2 - e.rhs;
      break;
    case Region::SmallModulus:
      e.region_margin = e.t3 - e.rhs;
      // At the cut the neighbouring claim's hypothesis also holds.
      if (q.delta == thr) e.region_margin = std::min(e.region_margin, e.t1 - e.rhs);
      if (q.delta == -thr) e.region_margin = std::min(e.region_margin, e.t2 - e.rhs);
      break;
  }
  e.region_claim_holds = e.region_margin >= -tolerance;
  return e;
}

Region classify_region_exact(int n, int r, const Rational& alpha, const Rational& delta, const Rational& c) {
  require_prop3_range(n, r);
  const Rational k = 2 * c * Rational(r, n) * alpha * (1 - alpha);
  const Rational t = theta_squared(n, r);
  if (above_scaled_root(delta, k, t)) return Region::LargePositive;
  if (above_scaled_root(-delta, k, t)) return Region::LargeNegative;
  return Region::SmallModulus;
}

ThresholdEquivalence negative_threshold_equivalence(int n, int r, const Rational& alpha, const Rational& delta,
                                                    const Rational& c) {
  require_prop3_range(n, r);
  const Rational t = theta_squared(n, r);
  const Rational p = alpha * (1 - alpha);
  const Rational epsilon = -Rational(n - r, r) * delta;
  return {at_least_scaled_root(epsilon, 2 * c * (1 - Rational(r, n)) * p, t),
          at_least_scaled_root(-delta, 2 * c * Rational(r, n) * p, t)};
}

double warmup_delta_max(int n, double alpha) {
  if (n < 1) throw RangeError("warmup_ratio: n must be >= 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("warmup_ratio: alpha must lie in (0, 1)");
  const double f = std::sqrt(2.0) * section_product(alpha);
  return std::min({f / std::sqrt(static_cast<double>(n)), alpha, 1.0 - alpha});
}

double warmup_ratio(int n, double alpha, double delta) {
  const double delta_max = warmup_delta_max(n, alpha);
  if (!(delta >= 0.0 && delta <= delta_max)) throw DomainError("warmup_ratio: delta outside [0, f(alpha)/sqrt(n)]");
  auto f = [](double x) { return std::sqrt(2.0) * x * (1.0 - x); };
  return (f(alpha + delta) + f(alpha - delta)) / (2.0 * f(alpha));
}

Claim6Decomposition claim6_decomposition(const Prop3Point& q) {
  if (!(q.alpha > 0.0 && q.alpha < 1.0)) throw DomainError("claim6_decomposition: alpha must lie in (0, 1)");
  const double n = q.n;
  const double r = q.r;
  const double p = section_product(q.alpha);
  const double k = (n - r) / r;
  Claim6Decomposition d;
  d.w_direct = (1.0 + 1.0 / (2.0 * (n - r))) * (1.0 - r / n) * section_product(q.alpha + q.delta) / p +
               (1.0 + 1.0 / (2.0 * r)) * (r / n) * section_product(q.alpha - k * q.delta) / p;
  d.t1 = ((1.0 - 2.0 * q.alpha) / p) * ((n - 2.0 * r) / (2.0 * r * n)) * q.delta;
  const double coeff = 1.0 - r / n + 1.0 / (2.0 * n) + (n - r) * (n - r) / (r * n) + (n - r) * (n - r) / (2.0 * r * r * n);
  d.t2 = coeff * q.delta * q.delta / p;
  d.w_identity = 1.0 + 1.0 / n - d.t1 - d.t2;
  return d;
}

double mvi_gap(double alpha, double eta) {
  if (!(alpha >= 0.0 && alpha <= 1.0) || !(alpha + eta >= 0.0 && alpha + eta <= 1.0)) {
    throw DomainError("mvi_gap: alpha and alpha + eta must lie in [0, 1]");
  }
  return std::abs(section_product(alpha + eta) - section_product(alpha));
}

void ScanSummary::merge(const ScanSummary& other) {
  points += other.points;
  failures += other.failures;
  secondary_failures += other.secondary_failures;
  for (std::size_t i = 0; i < region_counts.size(); ++i) region_counts[i] += other.region_counts[i];
  min_secondary_margin = std::min(min_secondary_margin, other.min_secondary_margin);
  max_identity_error = std::max(max_identity_error, other.max_identity_error);
  if (other.min_margin < min_margin) {
    min_margin = other.min_margin;
    worst_n = other.worst_n;
    worst_r = other.worst_r;
    worst_alpha = other.worst_alpha;
    worst_delta = other.worst_delta;
  }
}

ScanSummary prop3_scan(const Prop3Grid& grid) {
  return merged_parallel(prop3_tasks(grid), [&](const auto& t) { return prop3_scan_pair(grid, t.first, t.second); });
}

ScanSummary prop3_scan_serial(const Prop3Grid& grid) {
  return merged_serial(prop3_tasks(grid), [&](const auto& t) { return prop3_scan_pair(grid, t.first, t.second); });
}

ScanSummary claim2_scan(const Claim2Grid& grid) {
  return merged_parallel(claim2_tasks(grid), [&](int n) { return claim2_scan_n(grid, n); });
}

ScanSummary claim2_scan_serial(const Claim2Grid& grid) {
  return merged_serial(claim2_tasks(grid), [&](int n) { return claim2_scan_n(grid, n); });
}

ScanSummary claim6_audit(const Claim6Sampling& sampling) {
  return merged_parallel(claim6_tasks(sampling), [&](std::uint64_t b) { return claim6_block(sampling, b); });
}

ScanSummary claim6_audit_serial(const Claim6Sampling& sampling) {
  return merged_serial(claim6_tasks(sampling), [&](std::uint64_t b) { return claim6_block(sampling, b); });
}

}  // namespace isolab
