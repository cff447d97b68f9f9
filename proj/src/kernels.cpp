#include "isolab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "isolab/combinatorics.hpp"
#include "isolab/errors.hpp"
#include "isolab/hypercube.hpp"

namespace isolab {

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
constexpr int kLowBits = 12;

void require_full_scan(const SmallGraph& g) {
  if (g.vertices > kMaxFullScanVertices) {
    throw ParameterError("exhaustive scan over 2^" + std::to_string(g.vertices) + " families exceeds the cap of 2^" +
                         std::to_string(kMaxFullScanVertices));
  }
}

SizeMinima empty_minima(int vertices) {
  return {std::vector<std::uint64_t>(vertices + 1, kNone), std::vector<std::uint64_t>(vertices + 1, kNone)};
}

void offer(SizeMinima& s, int size, std::uint64_t value, std::uint64_t mask) {
  if (value < s.value[size] || (value == s.value[size] && mask < s.witness[size])) {
    s.value[size] = value;
    s.witness[size] = mask;
  }
}

void merge_into(SizeMinima& total, const SizeMinima& part) {
  for (std::size_t i = 0; i < part.value.size(); ++i) {
    if (part.value[i] != kNone) offer(total, static_cast<int>(i), part.value[i], part.witness[i]);
  }
}

// Splits every mask into a high part (fixed per outer step) and a low part
// whose neighbourhoods are tabulated once, so each family costs one OR.
struct SplitTable {
  int low_bits;
  std::uint64_t high_count;
  std::vector<std::uint64_t> low_neighbors;

  explicit SplitTable(const SmallGraph& g) : low_bits(std::min(g.vertices, kLowBits)) {
    high_count = std::uint64_t{1} << (g.vertices - low_bits);
    low_neighbors.assign(std::size_t{1} << low_bits, 0);
    for (std::uint64_t s = 1; s < low_neighbors.size(); ++s) {
      low_neighbors[s] = low_neighbors[s & (s - 1)] | g.adjacency[std::countr_zero(s)];
    }
  }
};

template <class Visit>
void visit_high_block(const SmallGraph& g, const SplitTable& t, std::uint64_t high, Visit&& visit) {
  const std::uint64_t high_mask = high << t.low_bits;
  const std::uint64_t high_neighbors = g.neighbors_of(high_mask);
  for (std::uint64_t s = 0; s < t.low_neighbors.size(); ++s) {
    const std::uint64_t mask = high_mask | s;
    visit(mask, std::popcount((high_neighbors | t.low_neighbors[s]) & ~mask));
  }
}

template <class Value>
SizeMinima profile_serial(const SmallGraph& g, Value value) {
  require_full_scan(g);
  SizeMinima total = empty_minima(g.vertices);
  const std::uint64_t count = std::uint64_t{1} << g.vertices;
  for (std::uint64_t mask = 0; mask < count; ++mask) offer(total, std::popcount(mask), value(mask), mask);
  return total;
}

template <class Value>
SizeMinima profile_parallel(const SmallGraph& g, Value value) {
  require_full_scan(g);
  SizeMinima total = empty_minima(g.vertices);
  const std::int64_t count = std::int64_t{1} << g.vertices;
  constexpr std::int64_t kChunk = 4096;
#pragma omp parallel
  {
    SizeMinima local = empty_minima(g.vertices);
#pragma omp for schedule(static) nowait
    for (std::int64_t chunk = 0; chunk < (count + kChunk - 1) / kChunk; ++chunk) {
      const std::int64_t end = std::min(count, (chunk + 1) * kChunk);
      for (std::int64_t m = chunk * kChunk; m < end; ++m) {
        const auto mask = static_cast<std::uint64_t>(m);
        offer(local, std::popcount(mask), value(mask), mask);
      }
    }
#pragma omp critical(isolab_profile_merge)
    merge_into(total, local);
  }
  return total;
}

// Gosper's hack over `width` bits: every (m−1)-subset, shifted above `first`.
template <class Visit>
std::uint64_t for_each_with_lowest(int width, int rest, int first, Visit&& visit) {
  const std::uint64_t lowest = std::uint64_t{1} << first;
  if (rest == 0) {
    visit(lowest);
    return 1;
  }
  std::uint64_t visited = 0;
  const std::uint64_t limit = std::uint64_t{1} << width;
  for (std::uint64_t s = (std::uint64_t{1} << rest) - 1; s < limit;) {
    visit(lowest | (s << (first + 1)));
    ++visited;
    const std::uint64_t c = s & -s;
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return visited;
}

CombinationResult combination_task(const SmallGraph& g, int m, int first) {
  CombinationResult best{kNone, kNone, 0};
  best.families = for_each_with_lowest(g.vertices - first - 1, m - 1, first, [&](std::uint64_t mask) {
    const std::uint64_t v = g.boundary_size(mask);
    if (v < best.value || (v == best.value && mask < best.witness)) {
      best.value = v;
      best.witness = mask;
    }
  });
  return best;
}

void merge_combination(CombinationResult& total, const CombinationResult& part) {
  total.families += part.families;
  if (part.value < total.value || (part.value == total.value && part.witness < total.witness)) {
    total.value = part.value;
    total.witness = part.witness;
  }
}

void require_combination(const SmallGraph& g, int m) {
  if (m < 0 || m > g.vertices) throw RangeError("combination_min_boundary: m outside [0, V]");
}

CubeScan cube_scan_mask(int n, const SmallGraph& g, std::uint64_t mask, double tolerance,
                        const std::vector<double>& sqrt_table) {
  const double universe = static_cast<double>(g.vertices);
  const double alpha = std::popcount(mask) / universe;
  CubeScan s;
  s.families = 1;
  s.min_vertex_margin = g.boundary_size(mask) - cube_bound(n, alpha);
  double functional = 0.0;
  for (std::uint64_t b = mask; b; b &= b - 1) {
    functional += sqrt_table[std::popcount(g.adjacency[std::countr_zero(b)] & ~mask)];
  }
  s.min_functional_margin = functional / universe - std::sqrt(2.0) * alpha * (1.0 - alpha);
  s.vertex_bound_failures = s.min_vertex_margin < -tolerance ? 1 : 0;
  s.functional_failures = s.min_functional_margin < -tolerance ? 1 : 0;
  return s;
}

void merge_cube(CubeScan& total, const CubeScan& part) {
  if (part.families == 0) return;
  if (total.families == 0) {
    total = part;
    return;
  }
  total.families += part.families;
  total.vertex_bound_failures += part.vertex_bound_failures;
  total.functional_failures += part.functional_failures;
  total.min_vertex_margin = std::min(total.min_vertex_margin, part.min_vertex_margin);
  total.min_functional_margin = std::min(total.min_functional_margin, part.min_functional_margin);
}

std::vector<double> sqrt_table(int n) {
  std::vector<double> t(n + 1);
  for (int h = 0; h <= n; ++h) t[h] = std::sqrt(static_cast<double>(h));
  return t;
}

void require_cube_scan(int n) {
  if (n < 1 || n > 4) throw RangeError("cube_exhaustive_scan: requires 1 <= n <= 4");
}

}  // namespace

SmallGraph johnson_small_graph(int n, int r) {
  if (n < 1 || n > kMaxGround || r < 0 || r > n) throw RangeError("johnson_small_graph: bad (n, r)");
  const std::uint64_t count = binom64(n, r);
  if (count > 64) throw ParameterError("johnson_small_graph: C(n, r) = " + std::to_string(count) + " exceeds 64");
  SmallGraph g{static_cast<int>(count), std::vector<std::uint64_t>(count, 0)};
  std::vector<std::uint64_t> sets(count);
  for (std::uint64_t i = 0; i < count; ++i) sets[i] = colex_unrank_bits(i, n, r);
  for (std::uint64_t i = 0; i < count; ++i) {
    for (std::uint64_t j = 0; j < count; ++j) {
      if (std::popcount(sets[i] ^ sets[j]) == 2) g.adjacency[i] |= std::uint64_t{1} << j;
    }
  }
  return g;
}

SmallGraph cube_small_graph(int n) {
  if (n < 0 || n > 6) throw RangeError("cube_small_graph: requires 0 <= n <= 6");
  const int count = 1 << n;
  SmallGraph g{count, std::vector<std::uint64_t>(count, 0)};
  for (int v = 0; v < count; ++v) {
    for (int i = 0; i < n; ++i) g.adjacency[v] |= std::uint64_t{1} << (v ^ (1 << i));
  }
  return g;
}

SizeMinima vertex_profile_scan_serial(const SmallGraph& g) {
  return profile_serial(g, [&](std::uint64_t mask) -> std::uint64_t { return g.boundary_size(mask); });
}

SizeMinima vertex_profile_scan(const SmallGraph& g) {
  require_full_scan(g);
  const SplitTable table(g);
  SizeMinima total = empty_minima(g.vertices);
#pragma omp parallel
  {
    SizeMinima local = empty_minima(g.vertices);
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t high = 0; high < static_cast<std::int64_t>(table.high_count); ++high) {
      visit_high_block(g, table, static_cast<std::uint64_t>(high),
                       [&](std::uint64_t mask, int b) { offer(local, std::popcount(mask), b, mask); });
    }
#pragma omp critical(isolab_profile_merge)
    merge_into(total, local);
  }
  return total;
}

SizeMinima edge_profile_scan_serial(const SmallGraph& g) {
  return profile_serial(g, [&](std::uint64_t mask) -> std::uint64_t { return g.edge_boundary_size(mask); });
}

SizeMinima edge_profile_scan(const SmallGraph& g) {
  return profile_parallel(g, [&](std::uint64_t mask) -> std::uint64_t { return g.edge_boundary_size(mask); });
}

std::uint64_t count_below_bound_serial(const SmallGraph& g, std::span<const double> lower_bound, double tolerance) {
  require_full_scan(g);
  std::uint64_t below = 0;
  const std::uint64_t count = std::uint64_t{1} << g.vertices;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (g.boundary_size(mask) < lower_bound[std::popcount(mask)] - tolerance) ++below;
  }
  return below;
}

std::uint64_t count_below_bound(const SmallGraph& g, std::span<const double> lower_bound, double tolerance) {
  require_full_scan(g);
  const SplitTable table(g);
  std::uint64_t below = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : below)
  for (std::int64_t high = 0; high < static_cast<std::int64_t>(table.high_count); ++high) {
    visit_high_block(g, table, static_cast<std::uint64_t>(high), [&](std::uint64_t mask, int b) {
      if (b < lower_bound[std::popcount(mask)] - tolerance) ++below;
    });
  }
  return below;
}

CubeScan cube_exhaustive_scan_serial(int n, double tolerance) {
  require_cube_scan(n);
  const SmallGraph g = cube_small_graph(n);
  const auto roots = sqrt_table(n);
  CubeScan total;
  const std::uint64_t count = std::uint64_t{1} << g.vertices;
  for (std::uint64_t mask = 0; mask < count; ++mask) merge_cube(total, cube_scan_mask(n, g, mask, tolerance, roots));
  return total;
}

CubeScan cube_exhaustive_scan(int n, double tolerance) {
  require_cube_scan(n);
  const SmallGraph g = cube_small_graph(n);
  const auto roots = sqrt_table(n);
  CubeScan total;
  const std::int64_t count = std::int64_t{1} << g.vertices;
#pragma omp parallel
  {
    CubeScan local;
#pragma omp for schedule(static) nowait
    for (std::int64_t m = 0; m < count; ++m) {
      merge_cube(local, cube_scan_mask(n, g, static_cast<std::uint64_t>(m), tolerance, roots));
    }
#pragma omp critical(isolab_cube_merge)
    merge_cube(total, local);
  }
  return total;
}

CombinationResult combination_min_boundary_serial(const SmallGraph& g, int m) {
  require_combination(g, m);
  if (m == 0) return {0, 0, 1};
  CombinationResult total{kNone, kNone, 0};
  for (int first = 0; first + m <= g.vertices; ++first) merge_combination(total, combination_task(g, m, first));
  return total;
}

CombinationResult combination_min_boundary(const SmallGraph& g, int m) {
  require_combination(g, m);
  if (m == 0) return {0, 0, 1};
  const int tasks = g.vertices - m + 1;
  std::vector<CombinationResult> parts(tasks);
#pragma omp parallel for schedule(dynamic, 1)
  for (int first = 0; first < tasks; ++first) parts[first] = combination_task(g, m, first);
  CombinationResult total{kNone, kNone, 0};
  for (const auto& p : parts) merge_combination(total, p);
  return total;
}

}  // namespace isolab
