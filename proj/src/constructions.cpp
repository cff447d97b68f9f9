#include "isolab/constructions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "isolab/errors.hpp"

namespace isolab {

namespace {

std::uint64_t prefix_mask(int k) { return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1; }

template <class Keep>
Family filter_layer(int n, int r, Keep keep) {
  Family out(n, r);
  for (std::uint64_t i = 0; i < out.universe(); ++i) {
    if (keep(colex_unrank_bits(i, n, r))) out.insert(i);
  }
  return out;
}

void require_half_parity(int n, int r, const char* what) {
  if (n % 2 != 0 || r % 2 != 1 || r < 1 || r > n - 1) {
    throw ParameterError(std::string(what) + ": requires n even and r odd with 1 <= r <= n-1");
  }
}

}  // namespace

Family b_kl(int n, int r, int k, int l) {
  if (k < 1 || k > n) throw RangeError("b_kl: k outside [1, n]");
  if (l < 0 || l > r) throw RangeError("b_kl: l outside [0, r]");
  const std::uint64_t cut = prefix_mask(k);
  return filter_layer(n, r, [&](std::uint64_t x) { return std::popcount(x & cut) >= l; });
}

BigInt b_kl_size(int n, int r, int k, int l) {
  BigInt total = 0;
  for (int i = std::max(l, 0); i <= std::min(r, k); ++i) total += binomial(k, i) * binomial(n - k, r - i);
  return total;
}

bool in_conjecture_window(int n, int r, int k, int l) { return r <= k && k <= n - r && 1 <= l && l <= r; }

std::vector<std::uint64_t> middle_layer(int n, int r, int k, int l) {
  if (k < 1 || k > n) throw RangeError("middle_layer: k outside [1, n]");
  if (l < 1 || l > r) throw RangeError("middle_layer: l outside [1, r]");
  const std::uint64_t cut = prefix_mask(k);
  std::vector<std::uint64_t> out;
  const std::uint64_t total = binom64(n, r);
  for (std::uint64_t i = 0; i < total; ++i) {
    if (std::popcount(colex_unrank_bits(i, n, r) & cut) == l - 1) out.push_back(i);
  }
  return out;
}

BigInt completion_count(const SandwichSpec& spec) {
  const BigInt base = b_kl_size(spec.n, spec.r, spec.k, spec.l);
  const BigInt middle = b_kl_size(spec.n, spec.r, spec.k, spec.l - 1) - base;
  const BigInt extra = BigInt(spec.target_size) - base;
  if (extra < 0 || extra > middle) return 0;
  return binomial(middle.convert_to<int>(), extra.convert_to<int>());
}

Family sandwiched_family(const SandwichSpec& spec) {
  if (spec.l < 1) throw ParameterError("sandwiched_family: l must be >= 1");
  Family c = b_kl(spec.n, spec.r, spec.k, spec.l);
  const std::uint64_t base = c.size();
  const auto middle = middle_layer(spec.n, spec.r, spec.k, spec.l);
  if (spec.target_size < base || spec.target_size > base + middle.size()) {
    throw RangeError("sandwiched_family: target size " + std::to_string(spec.target_size) + " outside [" +
                     std::to_string(base) + ", " + std::to_string(base + middle.size()) + "]");
  }
  const int extra = static_cast<int>(spec.target_size - base);
  if (spec.rule == CompletionRule::ColexFirst) {
    for (int j = 0; j < extra; ++j) c.insert(middle[j]);
    return c;
  }
  if (middle.size() > 64) throw ParameterError("sandwiched_family: exhaustive completions need a middle layer of <= 64 sets");
  const int width = static_cast<int>(middle.size());
  if (spec.completion_index >= binom64(width, extra)) throw RangeError("sandwiched_family: completion index out of range");
  for (std::uint64_t pick = colex_unrank_bits(spec.completion_index, std::max(width, 1), extra); pick; pick &= pick - 1) {
    c.insert(middle[std::countr_zero(pick)]);
  }
  return c;
}

Family halfspace_set(int n, int r) {
  require_half_parity(n, r, "halfspace_set");
  const std::uint64_t half = prefix_mask(n / 2);
  return filter_layer(n, r, [&](std::uint64_t x) { return 2 * std::popcount(x & half) > r; });
}

Family halfspace_boundary_layer(int n, int r) {
  require_half_parity(n, r, "halfspace_boundary_layer");
  const std::uint64_t half = prefix_mask(n / 2);
  return filter_layer(n, r, [&](std::uint64_t x) { return std::popcount(x & half) == (r - 1) / 2; });
}

GroundPermutation half_swap(int n) {
  if (n % 2 != 0) throw ParameterError("half_swap: n must be even");
  std::vector<std::vector<int>> cycles;
  for (int i = 1; i <= n / 2; ++i) cycles.push_back({i, i + n / 2});
  return GroundPermutation::from_cycles(n, cycles);
}

SharpnessRatio sharpness_ratio(int n, int r) {
  require_half_parity(n, r, "sharpness_ratio");
  const int h = n / 2;
  const int lo = (r - 1) / 2;
  const int hi = (r + 1) / 2;
  const BigInt layer = binomial(h, lo) * binomial(h, hi);
  const BigInt alt = binomial(r, lo) * binomial(n - r, (n - r + 1) / 2);
  SharpnessRatio s;
  s.ratio = Rational(layer, binomial(n, r));
  s.alternate_ratio = Rational(alt, binomial(n, h));
  s.lhs = binomial(n, h) * layer;
  s.rhs = binomial(n, r) * alt;
  s.identity_ok = s.lhs == s.rhs && s.ratio == s.alternate_ratio;
  return s;
}

BetaBall beta_ball(int n, int r, double beta) {
  if (n < 2) throw RangeError("beta_ball: requires n >= 2");
  const double centre = r / 2.0 + beta * std::sqrt(static_cast<double>(r));
  const double raw_inner = std::ceil(centre);
  const double raw_outer = std::floor(centre);
  BetaBall b;
  b.l_inner = static_cast<int>(std::clamp(raw_inner, 0.0, static_cast<double>(r)));
  b.l_outer = static_cast<int>(std::clamp(raw_outer, 0.0, static_cast<double>(r)));
  b.clamped = raw_inner != b.l_inner || raw_outer != b.l_outer;
  const int k = n / 2;
  b.inner = b_kl(n, r, k, b.l_inner);
  b.outer = b_kl(n, r, k, b.l_outer);
  return b;
}

}  // namespace isolab
