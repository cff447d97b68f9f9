#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace isolab {

/// A graph on at most 64 vertices; bit u of adjacency[v] marks the edge uv.
struct SmallGraph {
  int vertices = 0;
  std::vector<std::uint64_t> adjacency;

  std::uint64_t all() const { return vertices == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << vertices) - 1; }

  std::uint64_t neighbors_of(std::uint64_t mask) const {
    std::uint64_t out = 0;
    for (std::uint64_t b = mask; b; b &= b - 1) out |= adjacency[std::countr_zero(b)];
    return out;
  }
  int boundary_size(std::uint64_t mask) const { return std::popcount(neighbors_of(mask) & ~mask); }
  int edge_boundary_size(std::uint64_t mask) const {
    int edges = 0;
    for (std::uint64_t b = mask; b; b &= b - 1) edges += std::popcount(adjacency[std::countr_zero(b)] & ~mask);
    return edges;
  }
};

/// Γ_n^(r) with vertices in colex order; edges found by testing |x Δ y| = 2
/// on every pair. Requires C(n, r) <= 64.
SmallGraph johnson_small_graph(int n, int r);
/// Q_n with the natural vertex encoding; requires n <= 6.
SmallGraph cube_small_graph(int n);

/// Largest vertex count accepted by the 2^V exhaustive kernels.
inline constexpr int kMaxFullScanVertices = 26;

/// Per family size m = 0..V: the least boundary and the smallest mask attaining it.
struct SizeMinima {
  std::vector<std::uint64_t> value;
  std::vector<std::uint64_t> witness;

  friend bool operator==(const SizeMinima&, const SizeMinima&) = default;
};

/// Minimum vertex boundary for every size, over all 2^V families.
SizeMinima vertex_profile_scan(const SmallGraph& g);
SizeMinima vertex_profile_scan_serial(const SmallGraph& g);

/// Minimum edge boundary for every size, over all 2^V families.
SizeMinima edge_profile_scan(const SmallGraph& g);
SizeMinima edge_profile_scan_serial(const SmallGraph& g);

/// Number of families A with |b(A)| < lower_bound[|A|] − tolerance.
std::uint64_t count_below_bound(const SmallGraph& g, std::span<const double> lower_bound, double tolerance);
std::uint64_t count_below_bound_serial(const SmallGraph& g, std::span<const double> lower_bound, double tolerance);

/// Exhaustive hypercube checks over all 2^(2^n) families, n <= 4: the
/// vertex-boundary bound √2α(1−α)2^n/√n and the h-functional bound √2α(1−α).
struct CubeScan {
  std::uint64_t families = 0;
  std::uint64_t vertex_bound_failures = 0;
  std::uint64_t functional_failures = 0;
  double min_vertex_margin = 0.0;
  double min_functional_margin = 0.0;

  friend bool operator==(const CubeScan&, const CubeScan&) = default;
};
CubeScan cube_exhaustive_scan(int n, double tolerance);
CubeScan cube_exhaustive_scan_serial(int n, double tolerance);

/// Minimum boundary over all size-m families by enumerating m-combinations.
/// Work is split by the smallest member; the witness is the smallest mask.
struct CombinationResult {
  std::uint64_t value = 0;
  std::uint64_t witness = 0;
  std::uint64_t families = 0;
};
CombinationResult combination_min_boundary(const SmallGraph& g, int m);
CombinationResult combination_min_boundary_serial(const SmallGraph& g, int m);

}  // namespace isolab
