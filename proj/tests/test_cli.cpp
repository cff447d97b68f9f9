#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "isolab/cli.hpp"
#include "isolab/errors.hpp"
#include "isolab/io.hpp"
#include "isolab/parallel.hpp"
#include "isolab/search.hpp"
#include "support/generators.hpp"

using namespace isolab;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "iso-lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ',')) fields.push_back(f);
    rows.push_back(fields);
  }
  return rows;
}

}  // namespace

TEST(FamilyJson, Format) {
  const Family a = Family::from_lists(4, 2, {{3, 4}, {1, 2}, {1, 3}});
  const json doc = family_to_json(a);
  EXPECT_EQ(doc.dump(), R"({"members":[[1,2],[1,3],[3,4]],"n":4,"r":2})");
}

TEST(FamilyJson, RoundTrip) {
  isolab::testing::Gen gen(71);
  for (int t = 0; t < 200; ++t) {
    const int n = gen.integer(1, 12);
    const int r = gen.integer(0, n);
    const Family a = gen.family(n, r);
    EXPECT_EQ(family_from_json(json::parse(family_to_json(a).dump())), a);
  }
}

TEST(FamilyJson, RejectsMalformed) {
  EXPECT_THROW(family_from_json(json::parse(R"({"n":4,"members":[]})")), ParameterError);
  EXPECT_THROW(family_from_json(json::parse(R"({"n":4,"r":2,"members":[[1,2,3]]})")), ParameterError);
  EXPECT_THROW(family_from_json(json::parse(R"({"n":4,"r":2,"members":[[1,5]]})")), ParameterError);
  EXPECT_THROW(family_from_json(json::parse(R"({"n":4,"r":2,"members":[["a","b"]]})")), ParameterError);
}

TEST(CubeJson, RoundTrip) {
  isolab::testing::Gen gen(72);
  for (int t = 0; t < 50; ++t) {
    const CubeFamily a = gen.cube_family(gen.integer(1, 8));
    EXPECT_EQ(cube_family_from_json(json::parse(cube_family_to_json(a).dump())), a);
  }
}

TEST(Formatting, TwelveSignificantDigits) {
  EXPECT_EQ(format_real(0.816496580927726), "0.816496580928");
  EXPECT_EQ(format_real(0.3), "0.3");
  EXPECT_EQ(format_real(1e-12), "1e-12");
  EXPECT_EQ(format_real(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_THROW(parse_format("xml"), ParameterError);
}

TEST(Reports, CsvAndJsonCarryIdenticalNumbers) {
  const AuditReport rep = theorem1_audit(5, 2, 0.2);
  const json doc = report_to_json(rep);
  const auto csv = parse_csv(report_to_csv(rep));
  ASSERT_EQ(csv.size(), rep.rows.size() + 1);
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    for (std::size_t c = 0; c < rep.columns.size(); ++c) {
      const json& cell = doc["rows"][i][c];
      const std::string& field = csv[i + 1][c];
      if (cell.is_boolean()) {
        EXPECT_EQ(field, cell.get<bool>() ? "true" : "false");
      } else if (cell.is_number()) {
        EXPECT_EQ(std::stod(field), cell.get<double>()) << i << " " << c;
      } else {
        EXPECT_EQ(field, cell.get<std::string>());
      }
    }
  }
}

TEST(Reports, PassFlagsRecomputable) {
  const AuditReport rep = conjecture_audit(4, 2);
  const json doc = report_to_json(rep);
  EXPECT_TRUE(doc["pass"].get<bool>());
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    EXPECT_EQ(doc["row_pass"][i].get<bool>(),
              doc["rows"][i][1].get<std::int64_t>() == doc["rows"][i][2].get<std::int64_t>());
  }
  EXPECT_EQ(doc["witnesses"].size(), rep.rows.size());
}

TEST(Cli, BoundExample) {
  const auto o = run_cli({"bound", "--n", "6", "--r", "3", "--alpha", "0.5"});
  EXPECT_EQ(o.code, kExitPass);
  EXPECT_NE(o.out.find("0.816496580928"), std::string::npos);
  EXPECT_NE(o.out.find("20"), std::string::npos);
}

TEST(Cli, CubeBound) {
  const auto o = run_cli({"bound", "--cube", "--n", "3", "--alpha", "0.5", "--format", "json"});
  EXPECT_EQ(o.code, kExitPass);
  const json doc = json::parse(o.out);
  EXPECT_NEAR(doc["rows"][0][2].get<double>(), 1.632993, 1e-6);
}

TEST(Cli, ProfileCsv) {
  const auto o = run_cli({"profile", "--n", "4", "--r", "2", "--format", "csv"});
  EXPECT_EQ(o.code, kExitPass);
  const auto rows = parse_csv(o.out);
  ASSERT_EQ(rows.size(), 8U);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"m", "min_boundary", "exact", "bound_c_over_5"}));
  EXPECT_EQ(rows[4][0], "3");
  EXPECT_EQ(rows[4][1], "3");
}

TEST(Cli, ProfileCapNeedsBudget) {
  const auto refused = run_cli({"profile", "--n", "7", "--r", "2"});
  EXPECT_EQ(refused.code, kExitUsage);
  EXPECT_NE(refused.err.find("budget"), std::string::npos);
  EXPECT_EQ(run_cli({"profile", "--n", "7", "--r", "2", "--budget", "1000000"}).code, kExitPass);
}

TEST(Cli, BudgetExhaustedExitCode) {
  const auto o = run_cli({"profile", "--n", "7", "--r", "3", "--budget", "10", "--format", "json"});
  EXPECT_EQ(o.code, kExitBudget);
  EXPECT_FALSE(json::parse(o.out)["exact"].get<bool>());
}

TEST(Cli, Prop3ScanExample) {
  const auto o = run_cli({"prop3-scan", "--nmax", "64", "--alpha-steps", "64", "--delta-steps", "64", "--c", "0.2"});
  EXPECT_EQ(o.code, kExitPass);
}

TEST(Cli, AuditsAndScans) {
  EXPECT_EQ(run_cli({"conjecture", "--n", "5", "--r", "2"}).code, kExitPass);
  EXPECT_EQ(run_cli({"theorem1", "--n", "5", "--r", "2", "--full-scan"}).code, kExitPass);
  EXPECT_EQ(run_cli({"harper", "--n", "3"}).code, kExitPass);
  EXPECT_EQ(run_cli({"claim2-scan", "--nmax", "32", "--alpha-steps", "16", "--delta-steps", "16"}).code, kExitPass);
  EXPECT_EQ(run_cli({"claim6-check", "--samples", "2000"}).code, kExitPass);
  EXPECT_EQ(run_cli({"sharpness", "--nmax", "12"}).code, kExitPass);
  EXPECT_EQ(run_cli({"talagrand", "--n", "3", "--exhaustive"}).code, kExitPass);
  EXPECT_EQ(run_cli({"talagrand", "--n", "5", "--kind", "ball", "--radius", "2"}).code, kExitPass);
}

TEST(Cli, ExitCodeMapping) {
  AuditReport rep;
  rep.row_pass = {true, true};
  EXPECT_EQ(report_exit_code(rep), kExitPass);
  rep.row_pass[1] = false;
  EXPECT_EQ(report_exit_code(rep), kExitCheckFailed);
  rep.row_pass[1] = true;
  rep.checks.emplace_back("total", false);
  EXPECT_EQ(report_exit_code(rep), kExitCheckFailed);
  rep.exact = false;
  EXPECT_EQ(report_exit_code(rep), kExitBudget);
  EXPECT_EQ(run_cli({"theorem1", "--n", "4", "--r", "2", "--tol", "-0.5"}).code, kExitUsage);
}

TEST(Cli, BoundaryFromFileAndConstruct) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto path = (dir / "isolab_family.json").string();
  {
    std::ofstream f(path);
    f << family_to_json(Family::from_lists(4, 2, {{1, 2}}));
  }
  const auto o = run_cli({"boundary", "--family", path, "--format", "json"});
  EXPECT_EQ(o.code, kExitPass);
  const json doc = json::parse(o.out);
  EXPECT_EQ(family_from_json(doc["witnesses"][0]), Family::from_lists(4, 2, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}));

  const auto out_path = (dir / "isolab_construct.json").string();
  EXPECT_EQ(run_cli({"construct", "--kind", "sandwich", "--n", "4", "--r", "2", "--k", "2", "--l", "2", "--size", "3",
                     "--format", "json", "--out", out_path})
                .code,
            kExitPass);
  std::ifstream in(out_path);
  const json c = json::parse(in);
  EXPECT_EQ(family_from_json(c["witnesses"][0]), Family::from_lists(4, 2, {{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(run_cli({"construct", "--kind", "beta-ball", "--n", "6", "--r", "3", "--beta", "0"}).code, kExitPass);
  EXPECT_EQ(run_cli({"construct", "--kind", "halfspace", "--n", "6", "--r", "3"}).code, kExitPass);
  EXPECT_EQ(run_cli({"construct", "--kind", "bkl", "--n", "6", "--r", "3", "--k", "3", "--l", "2"}).code, kExitPass);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"nonsense"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"bound", "--n", "6", "--alpha", "0.5"}).code, kExitUsage);  // missing --r
  EXPECT_EQ(run_cli({"bound", "--n", "6", "--r", "7", "--alpha", "0.5"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"bound", "--n", "six", "--r", "3", "--alpha", "0.5"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"harper", "--n", "6"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"construct", "--kind", "moon", "--n", "6", "--r", "3"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"bound", "--n", "6", "--r", "3", "--alpha", "0.5", "--format", "xml"}).code, kExitUsage);
  const auto e = run_cli({"harper", "--n", "6"});
  EXPECT_NE(e.err.find("n <= 4"), std::string::npos);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run_cli({"--help"}).code, kExitPass); }

TEST(Cli, ConfigurationPrecedence) {
  const int saved = thread_count();
  ::setenv("ISO_LAB_THREADS", "2", 1);
  EXPECT_EQ(run_cli({"harper", "--n", "2"}).code, kExitPass);
  EXPECT_EQ(thread_count(), 2);
  EXPECT_EQ(run_cli({"harper", "--n", "2", "--threads", "3"}).code, kExitPass);
  EXPECT_EQ(thread_count(), 3);
  ::setenv("ISO_LAB_THREADS", "zero", 1);
  EXPECT_EQ(run_cli({"harper", "--n", "2"}).code, kExitUsage);
  ::unsetenv("ISO_LAB_THREADS");

  ::setenv("ISO_LAB_TOLERANCE", "0.001", 1);
  auto o = run_cli({"theorem1", "--n", "4", "--r", "2", "--format", "json"});
  EXPECT_DOUBLE_EQ(json::parse(o.out)["parameters"]["tolerance"].get<double>(), 0.001);
  o = run_cli({"theorem1", "--n", "4", "--r", "2", "--format", "json", "--tol", "1e-9"});
  EXPECT_DOUBLE_EQ(json::parse(o.out)["parameters"]["tolerance"].get<double>(), 1e-9);
  ::unsetenv("ISO_LAB_TOLERANCE");
  o = run_cli({"theorem1", "--n", "4", "--r", "2", "--format", "json"});
  EXPECT_DOUBLE_EQ(json::parse(o.out)["parameters"]["tolerance"].get<double>(), 1e-12);
  set_thread_count(saved);
}
