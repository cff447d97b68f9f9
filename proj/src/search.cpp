#include "isolab/search.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

#include "isolab/bounds.hpp"
#include "isolab/errors.hpp"
#include "isolab/hypercube.hpp"
#include "isolab/johnson.hpp"
#include "isolab/kernels.hpp"

namespace isolab {

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

// Witness ties resolve to the lower canonical form; canonicalisation is only
// attempted for small ground sets where it is cheap.
constexpr int kCanonicalTieBreakN = 8;

bool witness_less(const Family& a, const Family& b) {
  if (a.n() <= kCanonicalTieBreakN) {
    const Family ca = canonical_form(a);
    const Family cb = canonical_form(b);
    if (ca != cb) return rank_sequence_less(ca, cb);
  }
  return rank_sequence_less(a, b);
}

struct Candidate {
  std::uint64_t value = kNone;
  std::uint64_t mask = 0;
};

// Cheap upper bound for branch-and-bound: colex-first sandwiches and the
// colex initial segment.
Candidate heuristic_incumbent(int n, int r, std::uint64_t m, const SmallGraph& g) {
  Candidate best;
  auto offer = [&](std::uint64_t mask) {
    const std::uint64_t v = g.boundary_size(mask);
    if (v < best.value) best = {v, mask};
  };
  offer(m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
  const int rr = std::min(r, n - r);
  for (int k = rr; k <= n - rr; ++k) {
    for (int l = 1; l <= rr; ++l) {
      const auto lo = b_kl_size(n, rr, k, l);
      const auto hi = b_kl_size(n, rr, k, l - 1);
      if (lo > m || hi < m) continue;
      Family c = sandwiched_family({n, rr, k, l, m, CompletionRule::ColexFirst, 0});
      if (rr != r) c = complement_image(c);
      offer(c.mask());
    }
  }
  return best;
}

class BranchSearch {
 public:
  BranchSearch(const SmallGraph& g, std::uint64_t m, const std::vector<std::uint64_t>& conflicts,
               std::uint64_t budget, Candidate incumbent)
      : g_(g), m_(m), conflicts_(conflicts), budget_(budget), best_(incumbent) {}

  void run(std::uint64_t chosen) {
    std::uint64_t available = g_.all() & ~chosen;
    for (std::uint64_t b = chosen; b; b &= b - 1) available &= ~conflicts_[std::countr_zero(b)];
    search(chosen, g_.neighbors_of(chosen), available, std::popcount(chosen));
  }

  Candidate best() const { return best_; }
  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void search(std::uint64_t chosen, std::uint64_t reach, std::uint64_t available, std::uint64_t count) {
    if (aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    const std::uint64_t remaining = m_ - count;
    if (remaining == 0) {
      const std::uint64_t v = std::popcount(reach & ~chosen);
      if (v < best_.value) best_ = {v, chosen};
      return;
    }
    const std::uint64_t open = std::popcount(available);
    if (open < remaining) return;
    // Excluded neighbours are certainly boundary; of the open neighbours at
    // most `remaining` can still join A.
    const std::uint64_t excluded = g_.all() & ~chosen & ~available;
    const std::uint64_t open_reach = std::popcount(reach & available);
    const std::uint64_t bound =
        std::popcount(reach & excluded) + (open_reach > remaining ? open_reach - remaining : 0);
    if (bound >= best_.value) return;

    const int v = std::countr_zero(available);
    const std::uint64_t bit = std::uint64_t{1} << v;
    search(chosen | bit, reach | g_.adjacency[v], available & ~bit & ~conflicts_[v], count + 1);
    search(chosen, reach, available & ~bit, count);
  }

  const SmallGraph& g_;
  std::uint64_t m_;
  const std::vector<std::uint64_t>& conflicts_;
  std::uint64_t budget_;
  Candidate best_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

// Any family with two or more members can be moved so that it contains the
// colex-first set x0 and, among all pairs of members, a pair meeting in the
// largest intersection j is (x0, rep_j). Branch j then only admits members
// meeting x0, rep_j and one another in at most j elements.
MinBoundaryResult branch_and_bound(int n, int r, std::uint64_t m, const SmallGraph& g, const SearchOptions& options) {
  MinBoundaryResult result;
  result.strategy = SearchStrategy::BranchAndBound;
  if (m == 1) {
    result.value = std::popcount(g.adjacency[0]);
    result.witness = Family::from_mask(n, r, 1);
    return result;
  }
  const Candidate incumbent = heuristic_incumbent(n, r, m, g);
  std::vector<std::uint64_t> sets(g.vertices);
  for (int i = 0; i < g.vertices; ++i) sets[i] = colex_unrank_bits(i, n, r);

  const int j_min = std::max(0, 2 * r - n);
  const int branches = r - j_min;
  const std::uint64_t per_branch = std::max<std::uint64_t>(1, options.node_budget / std::max(branches, 1));
  std::vector<Candidate> found(branches);
  std::vector<std::uint64_t> nodes(branches, 0);
  std::vector<char> aborted(branches, 0);

#pragma omp parallel for schedule(dynamic, 1)
  for (int b = 0; b < branches; ++b) {
    const int j = j_min + b;
    std::vector<std::uint64_t> conflicts(g.vertices, 0);
    for (int u = 0; u < g.vertices; ++u) {
      for (int v = 0; v < g.vertices; ++v) {
        if (std::popcount(sets[u] & sets[v]) > j) conflicts[u] |= std::uint64_t{1} << v;
      }
    }
    const std::uint64_t rep = ((std::uint64_t{1} << j) - 1) | (((std::uint64_t{1} << (r - j)) - 1) << r);
    BranchSearch search(g, m, conflicts, per_branch, incumbent);
    search.run(std::uint64_t{1} | (std::uint64_t{1} << colex_rank_bits(rep)));
    found[b] = search.best();
    nodes[b] = search.nodes();
    aborted[b] = search.aborted() ? 1 : 0;
  }

  std::optional<Family> witness;
  result.value = kNone;
  for (int b = 0; b < branches; ++b) {
    result.nodes += nodes[b];
    if (aborted[b]) result.exact = false;
    const Family w = Family::from_mask(n, r, found[b].mask);
    if (found[b].value < result.value || (found[b].value == result.value && witness_less(w, *witness))) {
      result.value = found[b].value;
      witness = w;
    }
  }
  result.witness = *witness;
  return result;
}

void require_layer(int n, int r, const char* what) {
  if (n < 1 || r < 1 || r > n - 1) throw RangeError(std::string(what) + ": requires 1 <= r <= n-1");
}

Profile profile_from_minima(int n, int r, const SizeMinima& minima) {
  Profile p{n, r, {}};
  for (std::size_t m = 0; m < minima.value.size(); ++m) {
    p.minima.push_back({minima.value[m], Family::from_mask(n, r, minima.witness[m]), true});
  }
  return p;
}

}  // namespace

std::string_view to_string(SearchStrategy s) {
  switch (s) {
    case SearchStrategy::Auto:
      return "auto";
    case SearchStrategy::FullScan:
      return "full_scan";
    case SearchStrategy::Combinations:
      return "combinations";
    case SearchStrategy::BranchAndBound:
      return "branch_and_bound";
  }
  return "unknown";
}

MinBoundaryResult exact_min_boundary(int n, int r, std::uint64_t m, const SearchOptions& options) {
  const Family space(n, r);
  const std::uint64_t universe = space.universe();
  if (m > universe) throw RangeError("exact_min_boundary: m = " + std::to_string(m) + " exceeds C(n, r)");

  SearchStrategy strategy = options.strategy;
  if (strategy == SearchStrategy::Auto) {
    if (universe <= static_cast<std::uint64_t>(std::min(options.full_scan_cap, kMaxFullScanVertices))) {
      strategy = SearchStrategy::FullScan;
    } else if (universe <= 64 && binomial(static_cast<int>(universe), static_cast<int>(m)) <= options.combination_cap) {
      strategy = SearchStrategy::Combinations;
    } else {
      strategy = SearchStrategy::BranchAndBound;
    }
  }
  if (m == 0 || m == universe) {
    MinBoundaryResult trivial{0, m == 0 ? space : Family::full(n, r), true, strategy, 0};
    return trivial;
  }
  if (universe > 64) {
    throw ParameterError("exact_min_boundary: C(n, r) = " + std::to_string(universe) +
                         " exceeds the 64-vertex limit of the exact search");
  }
  const SmallGraph g = johnson_small_graph(n, r);
  switch (strategy) {
    case SearchStrategy::FullScan: {
      const auto minima = vertex_profile_scan(g);
      return {minima.value[m], Family::from_mask(n, r, minima.witness[m]), true, strategy,
              std::uint64_t{1} << g.vertices};
    }
    case SearchStrategy::Combinations: {
      const auto c = combination_min_boundary(g, static_cast<int>(m));
      return {c.value, Family::from_mask(n, r, c.witness), true, strategy, c.families};
    }
    default:
      return branch_and_bound(n, r, m, g, options);
  }
}

bool Profile::exact() const {
  return std::all_of(minima.begin(), minima.end(), [](const ProfileEntry& e) { return e.exact; });
}

std::vector<std::uint64_t> Profile::values() const {
  std::vector<std::uint64_t> out;
  for (const auto& e : minima) out.push_back(e.min_boundary);
  return out;
}

Profile isoperimetric_profile(int n, int r, const SearchOptions& options, bool budgeted) {
  const Family space(n, r);
  const std::uint64_t universe = space.universe();
  if (universe <= static_cast<std::uint64_t>(std::min(options.full_scan_cap, kMaxFullScanVertices))) {
    return profile_from_minima(n, r, vertex_profile_scan(johnson_small_graph(n, r)));
  }
  if (!budgeted) {
    throw ParameterError("isoperimetric_profile: C(n, r) = " + std::to_string(universe) +
                         " exceeds the exact-mode cap of " + std::to_string(options.full_scan_cap) +
                         "; supply a node budget for a budgeted profile");
  }
  Profile p{n, r, {}};
  for (std::uint64_t m = 0; m <= universe; ++m) {
    auto res = exact_min_boundary(n, r, m, options);
    p.minima.push_back({res.value, std::move(res.witness), res.exact});
  }
  return p;
}

SandwichResult min_sandwiched_boundary(int n, int r, std::uint64_t m) {
  require_layer(n, r, "min_sandwiched_boundary");
  const Family space(n, r);
  if (m > space.universe()) throw RangeError("min_sandwiched_boundary: m exceeds C(n, r)");
  if (m == 0) {
    SandwichResult res;
    res.witness = space;
    res.trivial = true;
    return res;
  }
  if (2 * r > n) {
    SandwichResult res = min_sandwiched_boundary(n, n - r, m);
    res.witness = complement_image(res.witness);
    res.via_complement = true;
    return res;
  }
  if (space.universe() > 64) {
    throw ParameterError("min_sandwiched_boundary: completions are enumerated only for C(n, r) <= 64");
  }
  const SmallGraph g = johnson_small_graph(n, r);

  SandwichResult best;
  best.value = kNone;
  // Ascending l: at m = |B_{k,l}| the bare B_{k,l} is met before the full
  // completion one level up, so ties keep the simpler description.
  for (int k = r; k <= n - r; ++k) {
    for (int l = 1; l <= r; ++l) {
      const std::uint64_t lo = b_kl_size(n, r, k, l).convert_to<std::uint64_t>();
      const std::uint64_t hi = b_kl_size(n, r, k, l - 1).convert_to<std::uint64_t>();
      if (l < r && lo != b_kl_size(n, r, k, l + 1).convert_to<std::uint64_t>() +
                            middle_layer(n, r, k, l + 1).size()) {
        throw std::logic_error("min_sandwiched_boundary: sandwich ranges do not tile");
      }
      if (m < lo || m > hi) continue;
      const std::uint64_t base = b_kl(n, r, k, l).mask();
      const auto middle = middle_layer(n, r, k, l);
      const int extra = static_cast<int>(m - lo);
      auto consider = [&](std::uint64_t pick) {
        std::uint64_t mask = base;
        for (std::uint64_t p = pick; p; p &= p - 1) mask |= std::uint64_t{1} << middle[std::countr_zero(p)];
        const std::uint64_t v = g.boundary_size(mask);
        if (v < best.value) {
          best.value = v;
          best.spec = {n, r, k, l, m, CompletionRule::ExhaustiveIndex, colex_rank_bits(pick)};
          best.witness = Family::from_mask(n, r, mask);
        }
      };
      if (extra == 0) {
        consider(0);
        continue;
      }
      // First chosen middle-layer set fixed to middle[0]; the rest range over
      // (extra−1)-subsets of middle[1..].
      const int width = static_cast<int>(middle.size()) - 1;
      const int rest = extra - 1;
      if (rest == 0) {
        consider(1);
        continue;
      }
      for (std::uint64_t s = (std::uint64_t{1} << rest) - 1; s < (std::uint64_t{1} << width);) {
        consider(1 | (s << 1));
        const std::uint64_t c = s & -s;
        const std::uint64_t t = s + c;
        s = (((t ^ s) >> 2) / c) | t;
      }
    }
  }
  if (best.value == kNone) throw std::logic_error("min_sandwiched_boundary: no sandwiched candidate of this size");
  return best;
}

namespace {

Profile audit_profile(int n, int r, const SearchOptions& options) {
  const std::uint64_t universe = Family(n, r).universe();
  return isoperimetric_profile(n, r, options, universe > static_cast<std::uint64_t>(options.full_scan_cap));
}

}  // namespace

AuditReport conjecture_audit(int n, int r, const SearchOptions& options) {
  require_layer(n, r, "conjecture_audit");
  const Profile profile = audit_profile(n, r, options);
  AuditReport rep;
  rep.name = "conjecture";
  rep.parameters = {{"n", std::int64_t{n}}, {"r", std::int64_t{r}}};
  rep.notes.push_back("sandwiched families are compared at equal size: |C| = |A|");
  rep.notes.push_back("m = 0 is trivial: the empty family has empty boundary and no sandwich of size 0 exists");
  if (2 * r > n) {
    rep.notes.push_back("r > n/2 has an empty (k, l) window; sandwiches are taken in [n]^(n-r) and complemented");
  }
  rep.columns = {"m", "exact_min", "sandwich_min", "k", "l", "completion_index", "exact", "verdict"};
  rep.exact = profile.exact();
  for (std::uint64_t m = 0; m < profile.minima.size(); ++m) {
    const auto& entry = profile.minima[m];
    const auto s = min_sandwiched_boundary(n, r, m);
    std::string verdict = "equal";
    bool ok = entry.min_boundary == s.value;
    if (s.trivial) {
      verdict = "trivial";
      ok = entry.min_boundary == 0;
    } else if (entry.min_boundary < s.value) {
      verdict = "counterexample_candidate";
    } else if (entry.min_boundary > s.value) {
      if (entry.exact) throw std::logic_error("conjecture_audit: sandwiched family beats the exact minimum");
      verdict = "search_incomplete";
    }
    rep.rows.push_back({static_cast<std::int64_t>(m), static_cast<std::int64_t>(entry.min_boundary),
                        static_cast<std::int64_t>(s.value), std::int64_t{s.spec.k}, std::int64_t{s.spec.l},
                        static_cast<std::int64_t>(s.spec.completion_index), entry.exact, verdict});
    rep.row_pass.push_back(ok);
    rep.witnesses.emplace_back(entry.witness);
  }
  return rep;
}

AuditReport theorem1_audit(int n, int r, double c, const SearchOptions& options, bool full_scan) {
  require_layer(n, r, "theorem1_audit");
  BoundPoint::make(n, r, 0.0, c);
  const Profile profile = audit_profile(n, r, options);
  const std::uint64_t universe = profile.minima.size() - 1;

  AuditReport rep;
  rep.name = "theorem1";
  rep.parameters = {{"n", std::int64_t{n}}, {"r", std::int64_t{r}}, {"c", c}, {"tolerance", options.tolerance}};
  rep.columns = {"m", "alpha", "min_boundary", "bound", "exact"};
  rep.exact = profile.exact();
  std::vector<double> bound_by_size;
  for (std::uint64_t m = 0; m <= universe; ++m) {
    const double alpha = static_cast<double>(m) / static_cast<double>(universe);
    const double bound = main_bound(BoundPoint::make(n, r, alpha, c));
    bound_by_size.push_back(bound);
    const auto& entry = profile.minima[m];
    rep.rows.push_back({static_cast<std::int64_t>(m), alpha, static_cast<std::int64_t>(entry.min_boundary), bound,
                        entry.exact});
    rep.row_pass.push_back(static_cast<double>(entry.min_boundary) >= bound - options.tolerance);
    rep.witnesses.emplace_back(entry.witness);
  }
  if (full_scan) {
    const SmallGraph g = johnson_small_graph(n, r);
    const auto below = count_below_bound(g, bound_by_size, options.tolerance);
    rep.parameters.emplace_back("families_checked", static_cast<std::int64_t>(std::uint64_t{1} << g.vertices));
    rep.parameters.emplace_back("families_below_bound", static_cast<std::int64_t>(below));
    rep.checks.emplace_back("every family meets the bound", below == 0);
  }
  return rep;
}

AuditReport harper_audit(int n) {
  if (n < 1 || n > 4) throw RangeError("harper_audit: exhaustive mode requires 1 <= n <= 4");
  const SmallGraph g = cube_small_graph(n);
  const auto vertex = vertex_profile_scan(g);
  const auto edge = edge_profile_scan(g);
  AuditReport rep;
  rep.name = "harper";
  rep.parameters = {{"n", std::int64_t{n}}};
  rep.columns = {"k", "min_vertex_boundary", "simplicial_boundary", "min_edge_boundary", "binary_edge_boundary"};
  for (int k = 0; k <= g.vertices; ++k) {
    const auto simplicial = cube_vertex_boundary(simplicial_segment(n, k)).size();
    const auto binary = cube_edge_boundary(binary_segment(n, k));
    rep.rows.push_back({std::int64_t{k}, static_cast<std::int64_t>(vertex.value[k]),
                        static_cast<std::int64_t>(simplicial), static_cast<std::int64_t>(edge.value[k]),
                        static_cast<std::int64_t>(binary)});
    rep.row_pass.push_back(vertex.value[k] == simplicial && edge.value[k] == binary);
  }
  return rep;
}

AuditReport profile_report(const Profile& profile) {
  AuditReport rep;
  rep.name = "profile";
  rep.parameters = {{"n", std::int64_t{profile.n}}, {"r", std::int64_t{profile.r}}};
  rep.columns = {"m", "min_boundary", "exact", "bound_c_over_5"};
  rep.exact = profile.exact();
  const std::uint64_t universe = profile.minima.size() - 1;
  const bool has_bound = profile.r >= 1 && profile.r <= profile.n - 1;
  for (std::uint64_t m = 0; m <= universe; ++m) {
    const double alpha = static_cast<double>(m) / static_cast<double>(universe);
    const double bound = has_bound ? main_bound(BoundPoint::make(profile.n, profile.r, alpha)) : 0.0;
    const auto& e = profile.minima[m];
    rep.rows.push_back({static_cast<std::int64_t>(m), static_cast<std::int64_t>(e.min_boundary), e.exact, bound});
    rep.witnesses.emplace_back(e.witness);
  }
  return rep;
}

}  // namespace isolab
