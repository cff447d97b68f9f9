#include "isolab/hypercube.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "isolab/errors.hpp"

namespace isolab {

CubeFamily::CubeFamily(int n) : n_(n) {
  if (n < 0 || n > kMaxCubeDimension) {
    throw ParameterError("CubeFamily: n must lie in [0, " + std::to_string(kMaxCubeDimension) + "]");
  }
  words_.assign((universe() + 63) / 64, 0);
}

CubeFamily CubeFamily::full(int n) {
  CubeFamily f(n);
  for (std::uint32_t v = 0; v < f.universe(); ++v) f.insert(v);
  return f;
}

CubeFamily CubeFamily::from_vertices(int n, std::span<const std::uint32_t> vertices) {
  CubeFamily f(n);
  for (auto v : vertices) f.insert(v);
  return f;
}

CubeFamily CubeFamily::from_mask(int n, std::uint64_t mask) {
  if (n > 6) throw ParameterError("CubeFamily::from_mask: n > 6");
  CubeFamily f(n);
  if (n < 6 && (mask >> f.universe()) != 0) throw RangeError("CubeFamily::from_mask: bits beyond 2^n");
  f.words_[0] = mask;
  return f;
}

std::uint64_t CubeFamily::size() const {
  std::uint64_t s = 0;
  for (auto w : words_) s += std::popcount(w);
  return s;
}

void CubeFamily::insert(std::uint32_t v) {
  if (v >= universe()) throw RangeError("CubeFamily::insert: vertex beyond 2^n");
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

std::vector<std::uint32_t> CubeFamily::vertices() const {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::uint64_t b = words_[w]; b; b &= b - 1) out.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(b)));
  }
  return out;
}

CubeFamily CubeFamily::operator|(const CubeFamily& other) const {
  if (n_ != other.n_) throw ParameterError("CubeFamily: operands over different n");
  CubeFamily out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] |= other.words_[i];
  return out;
}

CubeFamily cube_vertex_boundary(const CubeFamily& a) {
  CubeFamily out(a.n());
  for (auto v : a.vertices()) {
    for (int i = 0; i < a.n(); ++i) {
      const std::uint32_t u = v ^ (std::uint32_t{1} << i);
      if (!a.contains(u)) out.insert(u);
    }
  }
  return out;
}

CubeFamily cube_neighborhood(const CubeFamily& a) { return a | cube_vertex_boundary(a); }

std::uint64_t cube_edge_boundary(const CubeFamily& a) {
  std::uint64_t edges = 0;
  for (auto v : a.vertices()) {
    for (int i = 0; i < a.n(); ++i) edges += a.contains(v ^ (std::uint32_t{1} << i)) ? 0 : 1;
  }
  return edges;
}

bool simplicial_less(std::uint32_t x, std::uint32_t y) {
  const int sx = std::popcount(x);
  const int sy = std::popcount(y);
  if (sx != sy) return sx < sy;
  const std::uint32_t diff = x ^ y;
  if (diff == 0) return false;
  return (x & (diff & -diff)) != 0;
}

CubeFamily simplicial_segment(int n, std::uint64_t k) {
  CubeFamily out(n);
  if (k > out.universe()) throw RangeError("simplicial_segment: k > 2^n");
  std::vector<std::uint32_t> order(out.universe());
  std::iota(order.begin(), order.end(), 0U);
  std::sort(order.begin(), order.end(), simplicial_less);
  for (std::uint64_t i = 0; i < k; ++i) out.insert(order[i]);
  return out;
}

CubeFamily binary_segment(int n, std::uint64_t k) {
  CubeFamily out(n);
  if (k > out.universe()) throw RangeError("binary_segment: k > 2^n");
  for (std::uint64_t v = 0; v < k; ++v) out.insert(static_cast<std::uint32_t>(v));
  return out;
}

CubeFamily hamming_ball(int n, int radius) {
  CubeFamily out(n);
  for (std::uint32_t v = 0; v < out.universe(); ++v) {
    if (std::popcount(v) <= radius) out.insert(v);
  }
  return out;
}

int talagrand_h(const CubeFamily& a, std::uint32_t x) {
  if (!a.contains(x)) return 0;
  int h = 0;
  for (int i = 0; i < a.n(); ++i) h += a.contains(x ^ (std::uint32_t{1} << i)) ? 0 : 1;
  return h;
}

double talagrand_functional(const CubeFamily& a) {
  double sum = 0.0;
  for (auto v : a.vertices()) sum += std::sqrt(static_cast<double>(talagrand_h(a, v)));
  return sum / static_cast<double>(a.universe());
}

double cube_bound(int n, double alpha) {
  if (n < 1) throw RangeError("cube_bound: n must be >= 1");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("cube_bound: alpha outside [0, 1]");
  return std::sqrt(2.0) * alpha * (1.0 - alpha) * std::ldexp(1.0, n) / std::sqrt(static_cast<double>(n));
}

CubeSections cube_sections(const CubeFamily& a) {
  if (a.n() < 2) throw RangeError("cube_sections: requires n >= 2");
  CubeSections s{CubeFamily(a.n() - 1), CubeFamily(a.n() - 1)};
  const std::uint32_t top = std::uint32_t{1} << (a.n() - 1);
  for (auto v : a.vertices()) {
    if (v & top) {
      s.upper.insert(v & ~top);
    } else {
      s.lower.insert(v);
    }
  }
  return s;
}

}  // namespace isolab
