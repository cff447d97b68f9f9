#include "isolab/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "isolab/constructions.hpp"
#include "isolab/errors.hpp"
#include "isolab/hypercube.hpp"
#include "isolab/johnson.hpp"
#include "isolab/kernels.hpp"
#include "isolab/parallel.hpp"
#include "isolab/search.hpp"

namespace isolab {

namespace {

using Params = std::map<std::string, std::string>;

bool has(const Params& p, const std::string& key) { return p.count(key) != 0; }

const std::string& raw(const Params& p, const std::string& key) {
  const auto it = p.find(key);
  if (it == p.end()) throw ParameterError("missing required option --" + key);
  return it->second;
}

template <class Int>
Int parse_integer(const std::string& text, const std::string& what) {
  Int value{};
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ParameterError(what + ": expected an integer, got '" + text + "'");
  }
  return value;
}

double parse_real(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(value)) {
    throw ParameterError(what + ": expected a real number, got '" + text + "'");
  }
  return value;
}

int get_int(const Params& p, const std::string& key) { return parse_integer<int>(raw(p, key), "--" + key); }
int get_int(const Params& p, const std::string& key, int fallback) { return has(p, key) ? get_int(p, key) : fallback; }
std::uint64_t get_u64(const Params& p, const std::string& key) {
  return parse_integer<std::uint64_t>(raw(p, key), "--" + key);
}
std::uint64_t get_u64(const Params& p, const std::string& key, std::uint64_t fallback) {
  return has(p, key) ? get_u64(p, key) : fallback;
}
double get_real(const Params& p, const std::string& key) { return parse_real(raw(p, key), "--" + key); }
double get_real(const Params& p, const std::string& key, double fallback) {
  return has(p, key) ? get_real(p, key) : fallback;
}
bool get_flag(const Params& p, const std::string& key) { return has(p, key) && raw(p, key) != "false"; }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParameterError("'" + path + "' is not valid JSON: " + e.what());
  }
}

struct Settings {
  double tolerance = kDefaultTolerance;
  SearchOptions search;
  bool budgeted = false;
};

Settings resolve_settings(const CommandRequest& req) {
  Settings s;
  if (req.tolerance) {
    s.tolerance = *req.tolerance;
  } else if (const char* env = std::getenv("ISO_LAB_TOLERANCE")) {
    s.tolerance = parse_real(env, "ISO_LAB_TOLERANCE");
  }
  if (s.tolerance < 0) throw ParameterError("tolerance must be non-negative");
  int threads = 0;
  if (req.threads) {
    threads = *req.threads;
  } else if (const char* env = std::getenv("ISO_LAB_THREADS")) {
    threads = parse_integer<int>(env, "ISO_LAB_THREADS");
  }
  if (req.threads || std::getenv("ISO_LAB_THREADS")) {
    if (threads < 1) throw ParameterError("thread count must be at least 1");
    set_thread_count(threads);
  }
  s.search.tolerance = s.tolerance;
  if (req.budget) {
    s.search.node_budget = *req.budget;
    s.budgeted = true;
  }
  return s;
}

Family family_argument(const Params& p) {
  if (has(p, "family")) return family_from_json(read_json_file(raw(p, "family")));
  const int n = get_int(p, "n");
  const int r = get_int(p, "r");
  Family a(n, r);
  for (const auto& member : split(raw(p, "members"), ';')) {
    std::vector<int> elements;
    for (const auto& e : split(member, ',')) elements.push_back(parse_integer<int>(e, "--members"));
    if (static_cast<int>(elements.size()) != r) throw ParameterError("--members: every member needs r elements");
    a.insert(RSet::of(n, elements));
  }
  return a;
}

AuditReport cmd_bound(const Params& p) {
  AuditReport rep;
  rep.name = "bound";
  const int n = get_int(p, "n");
  const double alpha = get_real(p, "alpha");
  if (get_flag(p, "cube")) {
    rep.columns = {"n", "alpha", "bound"};
    rep.rows.push_back({std::int64_t{n}, alpha, cube_bound(n, alpha)});
    rep.notes.push_back("hypercube vertex-boundary bound sqrt(2) a(1-a) 2^n / sqrt(n)");
    return rep;
  }
  const auto point = BoundPoint::make(n, get_int(p, "r"), alpha, get_real(p, "c", kDefaultC));
  rep.columns = {"n", "r", "alpha", "c", "theta", "binomial", "bound"};
  rep.rows.push_back({std::int64_t{n}, std::int64_t{point.r}, alpha, point.c, theta(n, point.r),
                      binomial(n, point.r).str(), main_bound(point)});
  return rep;
}

AuditReport cmd_boundary(const Params& p) {
  const Family a = family_argument(p);
  const Family b = vertex_boundary(a);
  AuditReport rep;
  rep.name = "boundary";
  rep.parameters = {{"n", std::int64_t{a.n()}}, {"r", std::int64_t{a.r()}}};
  rep.columns = {"family_size", "boundary_size", "density", "boundary_density"};
  rep.rows.push_back({static_cast<std::int64_t>(a.size()), static_cast<std::int64_t>(b.size()),
                      to_string(a.density()), to_string(b.density())});
  rep.witnesses.emplace_back(b);
  rep.notes.push_back("the witness is the boundary family");
  return rep;
}

AuditReport cmd_profile(const Params& p, const Settings& s) {
  return profile_report(isoperimetric_profile(get_int(p, "n"), get_int(p, "r"), s.search, s.budgeted));
}

AuditReport cmd_prop3(const Params& p, const Settings& s) {
  Prop3Grid grid;
  grid.n_min = get_int(p, "nmin", grid.n_min);
  grid.n_max = get_int(p, "nmax", grid.n_max);
  grid.alpha_steps = get_int(p, "alpha-steps", grid.alpha_steps);
  grid.delta_steps = get_int(p, "delta-steps", grid.delta_steps);
  grid.c = get_real(p, "c", grid.c);
  grid.tolerance = s.tolerance;
  if (grid.n_min < 4 || grid.n_max < grid.n_min) throw ParameterError("prop3-scan: requires 4 <= nmin <= nmax");
  if (grid.alpha_steps < 1 || grid.delta_steps < 1) throw ParameterError("prop3-scan: steps must be positive");
  if (grid.c < 0 || grid.c > 0.2) throw ParameterError("prop3-scan: c must lie in [0, 1/5]");
  AuditReport rep = scan_report("prop3-scan", prop3_scan(grid), true);
  rep.parameters = {{"nmin", std::int64_t{grid.n_min}},         {"nmax", std::int64_t{grid.n_max}},
                    {"alpha_steps", std::int64_t{grid.alpha_steps}}, {"delta_steps", std::int64_t{grid.delta_steps}},
                    {"c", grid.c},                                {"tolerance", grid.tolerance}};
  rep.notes.push_back("failures: max(t1,t2,t3) < rhs - tolerance; secondary: region-designated term below rhs");
  return rep;
}

AuditReport cmd_claim2(const Params& p, const Settings& s) {
  Claim2Grid grid;
  grid.n_max = get_int(p, "nmax", grid.n_max);
  grid.alpha_steps = get_int(p, "alpha-steps", grid.alpha_steps);
  grid.delta_steps = get_int(p, "delta-steps", grid.delta_steps);
  grid.tolerance = s.tolerance;
  if (grid.n_max < 1) throw ParameterError("claim2-scan: requires nmax >= 1");
  if (grid.alpha_steps < 2 || grid.delta_steps < 1) throw ParameterError("claim2-scan: alpha-steps >= 2, delta-steps >= 1");
  AuditReport rep = scan_report("claim2-scan", claim2_scan(grid), false);
  rep.parameters = {{"nmax", std::int64_t{grid.n_max}},
                    {"alpha_steps", std::int64_t{grid.alpha_steps}},
                    {"delta_steps", std::int64_t{grid.delta_steps}},
                    {"tolerance", grid.tolerance}};
  rep.notes.push_back("failures: ratio < sqrt(1-1/n) - tolerance; secondary: closed-form identity error");
  return rep;
}

AuditReport cmd_claim6(const Params& p, const Settings& s) {
  Claim6Sampling sampling;
  sampling.samples = get_u64(p, "samples", sampling.samples);
  sampling.n_max = get_int(p, "nmax", sampling.n_max);
  sampling.c = get_real(p, "c", sampling.c);
  sampling.seed = get_u64(p, "seed", sampling.seed);
  sampling.tolerance = s.tolerance;
  if (sampling.n_max < 4) throw ParameterError("claim6-check: requires nmax >= 4");
  if (sampling.c <= 0 || sampling.c > 0.2) throw ParameterError("claim6-check: c must lie in (0, 1/5]");
  AuditReport rep = scan_report("claim6-check", claim6_audit(sampling), false);
  rep.parameters = {{"samples", static_cast<std::int64_t>(sampling.samples)},
                    {"nmax", std::int64_t{sampling.n_max}},
                    {"c", sampling.c},
                    {"seed", static_cast<std::int64_t>(sampling.seed)},
                    {"identity_tolerance", sampling.identity_tolerance}};
  rep.notes.push_back("failures: the two W expressions disagree; secondary: T1, T2 or W bound violated");
  return rep;
}

AuditReport cmd_sharpness(const Params& p) {
  AuditReport rep;
  rep.name = "sharpness";
  rep.columns = {"n", "r", "ratio", "ratio_value", "theta", "ratio_over_theta", "identity_ok", "enumerated"};
  std::vector<std::pair<int, int>> instances;
  if (has(p, "n")) {
    instances.emplace_back(get_int(p, "n"), get_int(p, "r"));
  } else {
    const int n_max = get_int(p, "nmax", 24);
    for (int n = 4; n <= n_max; n += 2) {
      for (int r = 1; r <= n - 1; r += 2) instances.emplace_back(n, r);
    }
  }
  constexpr int kEnumerationLimit = 10;
  for (const auto& [n, r] : instances) {
    const SharpnessRatio s = sharpness_ratio(n, r);
    const double value = s.ratio.convert_to<double>();
    const double th = theta(n, r);
    std::string enumerated = "skipped";
    if (n <= kEnumerationLimit) {
      const BigInt direct = vertex_boundary(halfspace_set(n, r)).size();
      enumerated = direct == binomial(n / 2, (r - 1) / 2) * binomial(n / 2, (r + 1) / 2) ? "match" : "mismatch";
    }
    rep.rows.push_back({std::int64_t{n}, std::int64_t{r}, to_string(s.ratio), value, th, value / th, s.identity_ok,
                        enumerated});
    rep.row_pass.push_back(s.identity_ok && enumerated != "mismatch");
  }
  rep.notes.push_back("enumerated: direct boundary of the half-space set against the closed form (n <= 10)");
  return rep;
}

void add_family_row(AuditReport& rep, const std::string& label, const Family& a) {
  rep.rows.push_back({label, static_cast<std::int64_t>(a.size()),
                      static_cast<std::int64_t>(vertex_boundary(a).size()), to_string(a.density())});
  rep.witnesses.emplace_back(a);
}

AuditReport cmd_construct(const Params& p) {
  AuditReport rep;
  rep.name = "construct";
  rep.columns = {"family", "size", "boundary_size", "density"};
  const std::string kind = raw(p, "kind");
  const int n = get_int(p, "n");
  const int r = get_int(p, "r");
  rep.parameters = {{"kind", kind}, {"n", std::int64_t{n}}, {"r", std::int64_t{r}}};
  if (kind == "bkl") {
    add_family_row(rep, "B_kl", b_kl(n, r, get_int(p, "k"), get_int(p, "l")));
  } else if (kind == "sandwich") {
    SandwichSpec spec{n, r, get_int(p, "k"), get_int(p, "l"), get_u64(p, "size"), CompletionRule::ColexFirst, 0};
    if (has(p, "completion-index")) {
      spec.rule = CompletionRule::ExhaustiveIndex;
      spec.completion_index = get_u64(p, "completion-index");
    }
    add_family_row(rep, "sandwich", sandwiched_family(spec));
  } else if (kind == "halfspace") {
    add_family_row(rep, "halfspace", halfspace_set(n, r));
  } else if (kind == "beta-ball") {
    const BetaBall ball = beta_ball(n, r, get_real(p, "beta"));
    add_family_row(rep, "inner", ball.inner);
    add_family_row(rep, "outer", ball.outer);
    rep.parameters.emplace_back("l_inner", std::int64_t{ball.l_inner});
    rep.parameters.emplace_back("l_outer", std::int64_t{ball.l_outer});
    if (ball.clamped) rep.notes.push_back("an l value was clamped into [0, r]");
  } else {
    throw ParameterError("--kind must be bkl, sandwich, halfspace or beta-ball");
  }
  return rep;
}

CubeFamily cube_argument(const Params& p) {
  if (has(p, "family")) return cube_family_from_json(read_json_file(raw(p, "family")));
  const int n = get_int(p, "n");
  const std::string kind = has(p, "kind") ? raw(p, "kind") : "vertices";
  if (kind == "ball") return hamming_ball(n, get_int(p, "radius"));
  if (kind == "simplicial") return simplicial_segment(n, get_u64(p, "k"));
  if (kind == "binary") return binary_segment(n, get_u64(p, "k"));
  if (kind != "vertices") throw ParameterError("--kind must be vertices, ball, simplicial or binary");
  std::vector<std::uint32_t> vertices;
  for (const auto& v : split(raw(p, "vertices"), ',')) vertices.push_back(parse_integer<std::uint32_t>(v, "--vertices"));
  return CubeFamily::from_vertices(n, vertices);
}

AuditReport cmd_talagrand(const Params& p, const Settings& s) {
  AuditReport rep;
  rep.name = "talagrand";
  if (get_flag(p, "exhaustive")) {
    const int n = get_int(p, "n");
    const CubeScan scan = cube_exhaustive_scan(n, s.tolerance);
    rep.parameters = {{"n", std::int64_t{n}}, {"tolerance", s.tolerance}};
    rep.columns = {"families", "vertex_bound_failures", "functional_failures", "min_vertex_margin",
                   "min_functional_margin"};
    rep.rows.push_back({static_cast<std::int64_t>(scan.families), static_cast<std::int64_t>(scan.vertex_bound_failures),
                        static_cast<std::int64_t>(scan.functional_failures), scan.min_vertex_margin,
                        scan.min_functional_margin});
    rep.checks.emplace_back("vertex boundary bound", scan.vertex_bound_failures == 0);
    rep.checks.emplace_back("h-functional bound", scan.functional_failures == 0);
    return rep;
  }
  const CubeFamily a = cube_argument(p);
  const double alpha = a.density();
  const double functional = talagrand_functional(a);
  const double functional_bound = std::sqrt(2.0) * alpha * (1 - alpha);
  const auto boundary = cube_vertex_boundary(a).size();
  const double vertex_bound = cube_bound(a.n(), alpha);
  rep.parameters = {{"n", std::int64_t{a.n()}}, {"tolerance", s.tolerance}};
  rep.columns = {"size", "alpha", "functional", "functional_bound", "vertex_boundary", "vertex_bound"};
  rep.rows.push_back({static_cast<std::int64_t>(a.size()), alpha, functional, functional_bound,
                      static_cast<std::int64_t>(boundary), vertex_bound});
  rep.row_pass.push_back(functional >= functional_bound - s.tolerance &&
                         static_cast<double>(boundary) >= vertex_bound - s.tolerance);
  return rep;
}

AuditReport dispatch(const CommandRequest& req, const Settings& s) {
  const Params& p = req.params;
  const std::string& cmd = req.subcommand;
  if (cmd == "bound") return cmd_bound(p);
  if (cmd == "boundary") return cmd_boundary(p);
  if (cmd == "profile") return cmd_profile(p, s);
  if (cmd == "conjecture") return conjecture_audit(get_int(p, "n"), get_int(p, "r"), s.search);
  if (cmd == "theorem1") {
    return theorem1_audit(get_int(p, "n"), get_int(p, "r"), get_real(p, "c", kDefaultC), s.search,
                          get_flag(p, "full-scan"));
  }
  if (cmd == "harper") return harper_audit(get_int(p, "n"));
  if (cmd == "prop3-scan") return cmd_prop3(p, s);
  if (cmd == "claim2-scan") return cmd_claim2(p, s);
  if (cmd == "claim6-check") return cmd_claim6(p, s);
  if (cmd == "sharpness") return cmd_sharpness(p);
  if (cmd == "construct") return cmd_construct(p);
  if (cmd == "talagrand") return cmd_talagrand(p, s);
  throw ParameterError("unknown subcommand '" + cmd + "'");
}

struct OptionSpec {
  const char* name;
  const char* help;
  bool flag = false;
};

struct SubcommandSpec {
  const char* name;
  const char* help;
  std::vector<OptionSpec> options;
};

const std::vector<SubcommandSpec>& subcommands() {
  static const std::vector<SubcommandSpec> table = {
      {"bound", "value of the Johnson-graph or hypercube boundary bound",
       {{"n", "ground set size"}, {"r", "set size"}, {"alpha", "density"}, {"c", "constant (default 0.2)"},
        {"cube", "hypercube form", true}}},
      {"boundary", "vertex boundary of a family",
       {{"family", "family JSON file"}, {"n", "ground set size"}, {"r", "set size"},
        {"members", "members as '1,2;1,3'"}}},
      {"profile", "isoperimetric profile", {{"n", "ground set size"}, {"r", "set size"}}},
      {"conjecture", "exact minima against sandwiched families", {{"n", "ground set size"}, {"r", "set size"}}},
      {"theorem1", "profile minima against the main bound",
       {{"n", "ground set size"}, {"r", "set size"}, {"c", "constant (default 0.2)"},
        {"full-scan", "also check every family", true}}},
      {"harper", "exhaustive hypercube optimality of segments", {{"n", "dimension, at most 4"}}},
      {"prop3-scan", "grid scan of the inductive inequality",
       {{"nmin", "smallest n (default 4)"}, {"nmax", "largest n (default 64)"},
        {"alpha-steps", "alpha grid steps (default 64)"}, {"delta-steps", "delta grid steps (default 64)"},
        {"c", "constant (default 0.2)"}}},
      {"claim2-scan", "grid scan of the warm-up ratio",
       {{"nmax", "largest n (default 128)"}, {"alpha-steps", "alpha grid steps (default 64)"},
        {"delta-steps", "delta grid steps (default 64)"}}},
      {"claim6-check", "random check of the small-modulus decomposition",
       {{"samples", "number of points (default 100000)"}, {"nmax", "largest n (default 64)"},
        {"c", "constant (default 0.2)"}, {"seed", "random seed"}}},
      {"sharpness", "half-space boundary ratios",
       {{"n", "even ground set size"}, {"r", "odd set size"}, {"nmax", "sweep bound (default 24)"}}},
      {"construct", "build a named family",
       {{"kind", "bkl, sandwich, halfspace or beta-ball"}, {"n", "ground set size"}, {"r", "set size"},
        {"k", "prefix size"}, {"l", "intersection threshold"}, {"size", "sandwich size"},
        {"completion-index", "colex index of the completion"}, {"beta", "ball parameter"}}},
      {"talagrand", "h-functional and vertex boundary of a cube family",
       {{"n", "dimension"}, {"family", "cube family JSON file"}, {"vertices", "vertices as '0,1,3'"},
        {"kind", "vertices, ball, simplicial or binary"}, {"radius", "ball radius"}, {"k", "segment length"},
        {"exhaustive", "scan every family (n <= 4)", true}}},
  };
  return table;
}

}  // namespace

int report_exit_code(const AuditReport& rep) {
  if (!rep.exact) return kExitBudget;
  return rep.pass() ? kExitPass : kExitCheckFailed;
}

int execute(const CommandRequest& request, std::ostream& out, std::ostream& err) {
  try {
    const Settings settings = resolve_settings(request);
    const AuditReport report = dispatch(request, settings);
    if (request.out_path) {
      std::ofstream file(*request.out_path);
      if (!file) throw ParameterError("cannot write '" + *request.out_path + "'");
      write_report(file, report, request.format);
    } else {
      write_report(out, report, request.format);
    }
    const int code = report_exit_code(report);
    if (code == kExitBudget) err << "iso-lab: node budget exhausted; results marked exact=false\n";
    if (code == kExitCheckFailed) err << "iso-lab: " << request.subcommand << ": a check failed\n";
    return code;
  } catch (const std::invalid_argument& e) {
    err << "iso-lab: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "iso-lab: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "iso-lab: " << e.what() << '\n';
  }
  return kExitUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vertex-isoperimetric bounds and audits on r-sets and the hypercube", "iso-lab"};
  app.require_subcommand(1);
  std::string format = "text";
  std::string out_path;
  int threads = 0;
  std::uint64_t budget = 0;
  double tolerance = 0.0;
  app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  auto* out_opt = app.add_option("--out", out_path, "write the report to a file");
  auto* threads_opt = app.add_option("--threads", threads, "worker threads (env ISO_LAB_THREADS)");
  auto* budget_opt = app.add_option("--budget", budget, "branch-and-bound node budget");
  auto* tol_opt = app.add_option("--tol", tolerance, "comparison slack (env ISO_LAB_TOLERANCE)");

  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, std::map<std::string, bool>> flags;
  std::vector<std::pair<CLI::App*, const SubcommandSpec*>> subs;
  for (const auto& spec : subcommands()) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    sub->fallthrough();
    for (const auto& opt : spec.options) {
      if (opt.flag) {
        sub->add_flag(std::string("--") + opt.name, flags[spec.name][opt.name], opt.help);
      } else {
        sub->add_option(std::string("--") + opt.name, values[spec.name][opt.name], opt.help);
      }
    }
    subs.emplace_back(sub, &spec);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  CommandRequest request;
  for (const auto& [sub, spec] : subs) {
    if (!sub->parsed()) continue;
    request.subcommand = spec->name;
    for (const auto& opt : spec->options) {
      if (sub->count(std::string("--") + opt.name) == 0) continue;
      request.params[opt.name] = opt.flag ? "true" : values[spec->name][opt.name];
    }
  }
  request.format = parse_format(format);
  if (out_opt->count()) request.out_path = out_path;
  if (threads_opt->count()) request.threads = threads;
  if (budget_opt->count()) request.budget = budget;
  if (tol_opt->count()) request.tolerance = tolerance;
  return execute(request, out, err);
}

}  // namespace isolab
