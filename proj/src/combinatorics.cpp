#include "isolab/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>

#include "isolab/errors.hpp"

namespace isolab {

namespace {

using BinomTable = std::array<std::array<std::uint64_t, kMaxGround + 1>, kMaxGround + 1>;

constexpr BinomTable make_binom_table() {
  BinomTable t{};
  for (int n = 0; n <= kMaxGround; ++n) {
    t[n][0] = 1;
    for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
  }
  return t;
}

constexpr BinomTable kBinom = make_binom_table();
static_assert(kBinom[4][2] == 6);
static_assert(kBinom[64][32] == 1832624140942590534ULL);

}  // namespace

BigInt binomial(int n, int k) {
  if (n < 0 || n > kMaxBinomialN) {
    throw RangeError("binomial: n = " + std::to_string(n) + " outside [0, " +
                     std::to_string(kMaxBinomialN) + "]");
  }
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  // Each partial product C(n-k+i, i) is an integer, so the division is exact.
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::uint64_t binom64(int n, int k) {
  if (n < 0 || n > kMaxGround) throw RangeError("binom64: n outside [0, 64]");
  if (k < 0 || k > n) return 0;
  return kBinom[n][k];
}

std::string to_string(const Rational& q) {
  std::ostringstream out;
  out << boost::multiprecision::numerator(q) << '/' << boost::multiprecision::denominator(q);
  return out.str();
}

RSet RSet::of(int n, std::initializer_list<int> elements) {
  return of(n, std::span<const int>(elements.begin(), elements.size()));
}

RSet RSet::of(int n, std::span<const int> elements) {
  if (n < 1 || n > kMaxGround) throw ParameterError("RSet: n must lie in [1, 64]");
  std::uint64_t bits = 0;
  for (int e : elements) {
    if (e < 1 || e > n) {
      throw ParameterError("RSet: element " + std::to_string(e) + " outside [1, " + std::to_string(n) + "]");
    }
    const std::uint64_t bit = std::uint64_t{1} << (e - 1);
    if (bits & bit) throw ParameterError("RSet: duplicate element " + std::to_string(e));
    bits |= bit;
  }
  return RSet(n, bits);
}

RSet RSet::from_bits(int n, std::uint64_t bits) {
  if (n < 1 || n > kMaxGround) throw ParameterError("RSet: n must lie in [1, 64]");
  if (n < 64 && (bits >> n) != 0) throw ParameterError("RSet: bits set beyond ground set");
  return RSet(n, bits);
}

int RSet::r() const { return std::popcount(bits_); }

std::vector<int> RSet::elements() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::uint64_t colex_rank_bits(std::uint64_t bits) {
  // rank = Σ_i C(e_i - 1, i) over elements e_1 < ... < e_r (1-based).
  std::uint64_t rank = 0;
  int i = 1;
  for (std::uint64_t b = bits; b; b &= b - 1, ++i) rank += kBinom[std::countr_zero(b)][i];
  return rank;
}

std::uint64_t colex_rank(const RSet& x) { return colex_rank_bits(x.bits()); }

std::uint64_t colex_unrank_bits(std::uint64_t i, int n, int r) {
  if (n < 0 || n > kMaxGround || r < 0 || r > n) throw RangeError("colex_unrank: bad (n, r)");
  if (i >= kBinom[n][r]) {
    throw RangeError("colex_unrank: index " + std::to_string(i) + " >= C(" + std::to_string(n) + "," +
                     std::to_string(r) + ")");
  }
  std::uint64_t bits = 0;
  int pos = n - 1;
  for (int k = r; k >= 1; --k) {
    while (kBinom[pos][k] > i) --pos;
    bits |= std::uint64_t{1} << pos;
    i -= kBinom[pos][k];
    --pos;
  }
  return bits;
}

RSet colex_unrank(std::uint64_t i, int n, int r) {
  return RSet::from_bits(n, colex_unrank_bits(i, n, r));
}

GroundPermutation::GroundPermutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = static_cast<int>(image_.size());
  if (n < 1 || n > kMaxGround) throw ParameterError("GroundPermutation: n must lie in [1, 64]");
  std::vector<bool> seen(n + 1, false);
  for (int v : image_) {
    if (v < 1 || v > n || seen[v]) throw ParameterError("GroundPermutation: image is not a permutation of 1..n");
    seen[v] = true;
  }
}

GroundPermutation GroundPermutation::identity(int n) {
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[i] = i + 1;
  return GroundPermutation(std::move(image));
}

GroundPermutation GroundPermutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[i] = i + 1;
  std::vector<bool> touched(n + 1, false);
  for (const auto& cycle : cycles) {
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      const int from = cycle[j];
      if (from < 1 || from > n || touched[from]) throw ParameterError("GroundPermutation: cycles not disjoint in 1..n");
      touched[from] = true;
      image[from - 1] = cycle[(j + 1) % cycle.size()];
    }
  }
  return GroundPermutation(std::move(image));
}

std::uint64_t GroundPermutation::apply_bits(std::uint64_t bits) const {
  std::uint64_t out = 0;
  for (std::uint64_t b = bits; b; b &= b - 1) out |= std::uint64_t{1} << (image_[std::countr_zero(b)] - 1);
  return out;
}

RSet GroundPermutation::apply(const RSet& x) const {
  if (x.n() != n()) throw ParameterError("GroundPermutation: RSet over a different ground set");
  return RSet::from_bits(n(), apply_bits(x.bits()));
}

GroundPermutation GroundPermutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i] - 1] = static_cast<int>(i) + 1;
  return GroundPermutation(std::move(inv));
}

}  // namespace isolab
