#include "isolab/family.hpp"

#include <algorithm>
#include <bit>

#include "isolab/errors.hpp"

namespace isolab {

Family::Family(int n, int r) : n_(n), r_(r) {
  if (n < 1 || n > kMaxGround) throw ParameterError("Family: n must lie in [1, 64]");
  if (r < 0 || r > n) throw ParameterError("Family: r must lie in [0, n]");
  universe_ = binom64(n, r);
  if (universe_ > kMaxFamilyUniverse) throw ParameterError("Family: C(n, r) exceeds 2^32 vertices");
  words_.assign((universe_ + 63) / 64, 0);
}

Family Family::full(int n, int r) {
  Family f(n, r);
  std::fill(f.words_.begin(), f.words_.end(), ~std::uint64_t{0});
  f.clear_tail();
  return f;
}

Family Family::from_ranks(int n, int r, std::span<const std::uint64_t> ranks) {
  Family f(n, r);
  for (auto i : ranks) f.insert(i);
  return f;
}

Family Family::from_sets(int n, int r, std::span<const RSet> sets) {
  Family f(n, r);
  for (const auto& x : sets) f.insert(x);
  return f;
}

Family Family::from_lists(int n, int r, const std::vector<std::vector<int>>& lists) {
  Family f(n, r);
  for (const auto& l : lists) f.insert(RSet::of(n, l));
  return f;
}

Family Family::from_mask(int n, int r, std::uint64_t mask) {
  Family f(n, r);
  if (f.universe_ > 64) throw ParameterError("Family::from_mask: C(n, r) > 64");
  if (f.universe_ < 64 && (mask >> f.universe_) != 0) throw RangeError("Family::from_mask: bits beyond C(n, r)");
  if (!f.words_.empty()) f.words_[0] = mask;
  return f;
}

std::uint64_t Family::size() const {
  std::uint64_t s = 0;
  for (auto w : words_) s += std::popcount(w);
  return s;
}

Rational Family::density() const { return Rational(BigInt(size()), BigInt(universe_)); }

bool Family::contains(const RSet& x) const {
  if (x.n() != n_ || x.r() != r_) return false;
  return contains(colex_rank(x));
}

void Family::insert(std::uint64_t rank) {
  if (rank >= universe_) throw RangeError("Family::insert: rank beyond C(n, r)");
  words_[rank >> 6] |= std::uint64_t{1} << (rank & 63);
}

void Family::insert(const RSet& x) {
  if (x.n() != n_ || x.r() != r_) throw ParameterError("Family::insert: RSet of the wrong (n, r)");
  insert(colex_rank(x));
}

void Family::erase(std::uint64_t rank) {
  if (rank >= universe_) throw RangeError("Family::erase: rank beyond C(n, r)");
  words_[rank >> 6] &= ~(std::uint64_t{1} << (rank & 63));
}

std::vector<std::uint64_t> Family::ranks() const {
  std::vector<std::uint64_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::uint64_t b = words_[w]; b; b &= b - 1) out.push_back(w * 64 + std::countr_zero(b));
  }
  return out;
}

std::vector<RSet> Family::members() const {
  std::vector<RSet> out;
  for (auto i : ranks()) out.push_back(colex_unrank(i, n_, r_));
  return out;
}

std::uint64_t Family::mask() const {
  if (universe_ > 64) throw ParameterError("Family::mask: C(n, r) > 64");
  return words_.empty() ? 0 : words_[0];
}

void Family::require_same_space(const Family& other) const {
  if (n_ != other.n_ || r_ != other.r_) throw ParameterError("Family: operands live over different (n, r)");
}

void Family::clear_tail() {
  if (const auto rem = universe_ % 64; rem != 0) words_.back() &= (std::uint64_t{1} << rem) - 1;
}

Family Family::operator|(const Family& other) const {
  require_same_space(other);
  Family out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] |= other.words_[i];
  return out;
}

Family Family::operator&(const Family& other) const {
  require_same_space(other);
  Family out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= other.words_[i];
  return out;
}

Family Family::operator-(const Family& other) const {
  require_same_space(other);
  Family out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~other.words_[i];
  return out;
}

Family Family::complement() const {
  Family out = *this;
  for (auto& w : out.words_) w = ~w;
  out.clear_tail();
  return out;
}

bool Family::subset_of(const Family& other) const {
  require_same_space(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool rank_sequence_less(const Family& a, const Family& b) {
  const auto ra = a.ranks();
  const auto rb = b.ranks();
  return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
}

Family apply_permutation(const Family& a, const GroundPermutation& p) {
  if (p.n() != a.n()) throw ParameterError("apply_permutation: permutation acts on a different ground set");
  Family out(a.n(), a.r());
  for (auto i : a.ranks()) out.insert(colex_rank_bits(p.apply_bits(colex_unrank_bits(i, a.n(), a.r()))));
  return out;
}

namespace {

class Canonicalizer {
 public:
  explicit Canonicalizer(const Family& a)
      : a_(a), n_(a.n()), r_(a.r()), size_(a.size()), cur_(a.universe(), 0), preimage_(a.n(), 0), twin_class_(a.n()) {
    // Elements e, f are twins when the transposition (e f) fixes A; twins are
    // interchangeable, so each search node tries one element per class.
    for (int e = 0; e < n_; ++e) {
      twin_class_[e] = e;
      for (int f = 0; f < e; ++f) {
        if (twin_class_[f] == f && swap_fixes(e, f)) {
          twin_class_[e] = f;
          break;
        }
      }
    }
    // Image vertices whose largest element is k have ranks [C(k-1,r), C(k,r)).
    level_vertices_.resize(n_ + 1);
    for (int k = 1; k <= n_; ++k) {
      for (std::uint64_t i = binom64(k - 1, r_); i < binom64(k, r_); ++i) {
        level_vertices_[k].push_back(colex_unrank_bits(i, n_, r_));
      }
    }
  }

  Family run() {
    search(0, 0, 0);
    Family out(n_, r_);
    for (std::uint64_t i = 0; i < best_.size(); ++i) {
      if (best_[i]) out.insert(i);
    }
    return out;
  }

 private:
  // prefix_cmp: 0 when the assigned prefix equals best_'s, -1 when strictly better.
  bool swap_fixes(int e, int f) const {
    const std::uint64_t be = std::uint64_t{1} << e;
    const std::uint64_t bf = std::uint64_t{1} << f;
    for (auto i : a_.ranks()) {
      std::uint64_t x = colex_unrank_bits(i, n_, r_);
      if (((x >> e) & 1U) != ((x >> f) & 1U)) x ^= be | bf;
      if (!a_.contains(colex_rank_bits(x))) return false;
    }
    return true;
  }

  // Once the prefix holds every member (or every non-member) the rest of the
  // bit vector is forced.
  void finish(std::uint64_t prefix_end, std::uint64_t ones, int prefix_cmp) {
    const std::uint8_t fill = ones == size_ ? 0 : 1;
    std::fill(cur_.begin() + static_cast<std::ptrdiff_t>(prefix_end), cur_.end(), fill);
    if (!have_best_ || prefix_cmp < 0) {
      best_ = cur_;
      have_best_ = true;
      ++generation_;
    }
  }

  void search(int assigned, int prefix_cmp, std::uint64_t ones) {
    const std::uint64_t prefix_end = binom64(assigned, r_);
    if (assigned == n_ || ones == size_ || prefix_end - ones == cur_.size() - size_) {
      finish(prefix_end, ones, prefix_cmp);
      return;
    }
    const int level = assigned + 1;
    const std::uint64_t lo = binom64(level - 1, r_);
    std::uint64_t tried_classes = 0;
    for (int e = 0; e < n_; ++e) {
      if ((used_ >> e) & 1U) continue;
      if ((tried_classes >> twin_class_[e]) & 1U) continue;
      tried_classes |= std::uint64_t{1} << twin_class_[e];
      preimage_[assigned] = e;
      used_ |= std::uint64_t{1} << e;

      int child_cmp = have_best_ ? prefix_cmp : -1;
      bool prune = false;
      std::uint64_t child_ones = ones;
      const auto& verts = level_vertices_[level];
      for (std::size_t j = 0; j < verts.size(); ++j) {
        std::uint64_t pre = 0;
        for (std::uint64_t b = verts[j]; b; b &= b - 1) pre |= std::uint64_t{1} << preimage_[std::countr_zero(b)];
        const std::uint8_t bit = a_.contains(colex_rank_bits(pre)) ? 1 : 0;
        cur_[lo + j] = bit;
        child_ones += bit;
        if (child_cmp == 0 && bit != best_[lo + j]) {
          if (bit) {
            child_cmp = -1;
          } else {
            prune = true;
            break;
          }
        }
      }
      if (!prune) {
        const auto gen = generation_;
        search(level, child_cmp, child_ones);
        // A new best found below shares this whole prefix.
        if (generation_ != gen) prefix_cmp = 0;
      }
      used_ &= ~(std::uint64_t{1} << e);
    }
  }

  const Family& a_;
  int n_;
  int r_;
  std::uint64_t size_;
  std::vector<std::vector<std::uint64_t>> level_vertices_;
  std::vector<std::uint8_t> cur_;
  std::vector<std::uint8_t> best_;
  std::vector<int> preimage_;
  std::vector<int> twin_class_;
  std::uint64_t used_ = 0;
  bool have_best_ = false;
  std::uint64_t generation_ = 0;
};

}  // namespace

Family canonical_form(const Family& a, bool allow_large) {
  if (a.n() > kCanonicalGuard && !allow_large) {
    throw ParameterError("canonical_form: n = " + std::to_string(a.n()) + " exceeds the guard of " +
                         std::to_string(kCanonicalGuard) + " (pass allow_large to override)");
  }
  const auto size = a.size();
  if (size == 0 || size == a.universe()) return a;
  return Canonicalizer(a).run();
}

}  // namespace isolab
