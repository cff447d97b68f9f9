#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace isolab {

inline constexpr int kMaxCubeDimension = 24;

/// A ⊂ P([n]); vertex v encodes the subset with element i at bit i−1.
class CubeFamily {
 public:
  CubeFamily() = default;
  explicit CubeFamily(int n);

  static CubeFamily full(int n);
  static CubeFamily from_vertices(int n, std::span<const std::uint32_t> vertices);
  /// Bit v of `mask` selects vertex v; requires n <= 6.
  static CubeFamily from_mask(int n, std::uint64_t mask);

  int n() const { return n_; }
  std::uint64_t universe() const { return std::uint64_t{1} << n_; }
  std::uint64_t size() const;
  double density() const { return static_cast<double>(size()) / static_cast<double>(universe()); }

  bool contains(std::uint32_t v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void insert(std::uint32_t v);
  std::vector<std::uint32_t> vertices() const;
  std::span<const std::uint64_t> words() const { return words_; }

  CubeFamily operator|(const CubeFamily& other) const;

  friend bool operator==(const CubeFamily&, const CubeFamily&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Vertex boundary in Q_n: non-members at Hamming distance 1 from a member.
CubeFamily cube_vertex_boundary(const CubeFamily& a);
CubeFamily cube_neighborhood(const CubeFamily& a);

/// Edges of Q_n with exactly one endpoint in A.
std::uint64_t cube_edge_boundary(const CubeFamily& a);

/// Simplicial order: |x| < |y|, or |x| = |y| and min(x Δ y) ∈ x.
bool simplicial_less(std::uint32_t x, std::uint32_t y);

/// First k subsets of [n] in simplicial order. Throws RangeError unless 0 <= k <= 2^n.
CubeFamily simplicial_segment(int n, std::uint64_t k);
/// First k subsets in binary order (characteristic integers 0..k−1).
CubeFamily binary_segment(int n, std::uint64_t k);
/// Hamming ball {x : |x| <= radius} around ∅.
CubeFamily hamming_ball(int n, int radius);

/// h_A(x): number of coordinate flips leaving A when x ∈ A, else 0.
int talagrand_h(const CubeFamily& a, std::uint32_t x);
/// 2^{−n} Σ_x √h_A(x).
double talagrand_functional(const CubeFamily& a);

/// √2 α(1−α) 2^n / √n. Throws DomainError for α outside [0, 1], RangeError for n < 1.
double cube_bound(int n, double alpha);

/// Lower/upper n-sections over P([n−1]); requires n >= 2.
struct CubeSections {
  CubeFamily lower;
  CubeFamily upper;
};
CubeSections cube_sections(const CubeFamily& a);

}  // namespace isolab
