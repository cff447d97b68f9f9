#include "isolab/io.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "isolab/errors.hpp"

namespace isolab {

using nlohmann::json;

namespace {

int get_int(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key) || !doc[key].is_number_integer()) {
    throw ParameterError(std::string("family JSON: missing integer field '") + key + "'");
  }
  return doc[key].get<int>();
}

const json& get_array(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw ParameterError(std::string("family JSON: missing array field '") + key + "'");
  }
  return doc[key];
}

json cell_to_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
          return std::stod(format_real(v));
        } else {
          return v;
        }
      },
      cell);
}

std::string cell_to_string(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_real(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else {
          return std::to_string(v);
        }
      },
      cell);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace

json family_to_json(const Family& a) {
  json members = json::array();
  for (const auto& x : a.members()) members.push_back(x.elements());
  return {{"n", a.n()}, {"r", a.r()}, {"members", std::move(members)}};
}

Family family_from_json(const json& doc) {
  const int n = get_int(doc, "n");
  const int r = get_int(doc, "r");
  Family a(n, r);
  for (const auto& m : get_array(doc, "members")) {
    if (!m.is_array()) throw ParameterError("family JSON: each member must be an array of elements");
    std::vector<int> elements;
    for (const auto& e : m) {
      if (!e.is_number_integer()) throw ParameterError("family JSON: elements must be integers");
      elements.push_back(e.get<int>());
    }
    if (static_cast<int>(elements.size()) != r) {
      throw ParameterError("family JSON: member of size " + std::to_string(elements.size()) + " in a family of " +
                           std::to_string(r) + "-sets");
    }
    a.insert(RSet::of(n, elements));
  }
  return a;
}

json cube_family_to_json(const CubeFamily& a) { return {{"n", a.n()}, {"vertices", a.vertices()}}; }

CubeFamily cube_family_from_json(const json& doc) {
  const int n = get_int(doc, "n");
  std::vector<std::uint32_t> vertices;
  for (const auto& v : get_array(doc, "vertices")) {
    if (!v.is_number_unsigned()) throw ParameterError("cube family JSON: vertices must be non-negative integers");
    vertices.push_back(v.get<std::uint32_t>());
  }
  return CubeFamily::from_vertices(n, vertices);
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  throw ParameterError("unknown format '" + std::string(name) + "' (expected json, csv or text)");
}

json report_to_json(const AuditReport& report) {
  json params = json::object();
  for (const auto& [key, value] : report.parameters) params[key] = cell_to_json(value);
  json rows = json::array();
  for (const auto& row : report.rows) {
    json r = json::array();
    for (const auto& cell : row) r.push_back(cell_to_json(cell));
    rows.push_back(std::move(r));
  }
  json doc = {{"name", report.name},   {"parameters", params},    {"notes", report.notes},
              {"columns", report.columns}, {"rows", std::move(rows)}, {"exact", report.exact},
              {"pass", report.pass()}};
  if (!report.row_pass.empty()) doc["row_pass"] = report.row_pass;
  if (!report.checks.empty()) {
    json checks = json::object();
    for (const auto& [name, ok] : report.checks) checks[name] = ok;
    doc["checks"] = std::move(checks);
  }
  if (!report.witnesses.empty()) {
    json witnesses = json::array();
    for (const auto& w : report.witnesses) witnesses.push_back(w ? family_to_json(*w) : json(nullptr));
    doc["witnesses"] = std::move(witnesses);
  }
  return doc;
}

std::string report_to_csv(const AuditReport& report) {
  const bool with_pass = !report.row_pass.empty();
  std::ostringstream os;
  for (std::size_t c = 0; c < report.columns.size(); ++c) os << (c ? "," : "") << csv_field(report.columns[c]);
  if (with_pass) os << ",pass";
  os << '\n';
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& row = report.rows[i];
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_field(cell_to_string(row[c]));
    if (with_pass) os << ',' << (report.row_pass[i] ? "true" : "false");
    os << '\n';
  }
  return os.str();
}

std::string report_to_text(const AuditReport& report) {
  const bool with_pass = !report.row_pass.empty();
  std::vector<std::string> header = report.columns;
  if (with_pass) header.push_back("pass");
  std::vector<std::vector<std::string>> cells;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    std::vector<std::string> line;
    for (const auto& cell : report.rows[i]) line.push_back(cell_to_string(cell));
    if (with_pass) line.push_back(report.row_pass[i] ? "yes" : "NO");
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& line : cells) width[c] = std::max(width[c], line[c].size());
  }

  std::ostringstream os;
  os << report.name << '\n';
  for (const auto& [key, value] : report.parameters) os << "  " << key << " = " << cell_to_string(value) << '\n';
  for (const auto& note : report.notes) os << "  note: " << note << '\n';
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < line.size(); ++c) os << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << line[c];
    os << '\n';
  };
  if (!header.empty()) emit(header);
  for (const auto& line : cells) emit(line);
  for (const auto& [name, ok] : report.checks) os << "check " << name << ": " << (ok ? "yes" : "NO") << '\n';
  if (!report.exact) os << "exact: false (budget exhausted; values are upper bounds)\n";
  os << "verdict: " << (report.pass() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

void write_report(std::ostream& out, const AuditReport& report, Format format) {
  switch (format) {
    case Format::Json:
      out << report_to_json(report).dump(2) << '\n';
      break;
    case Format::Csv:
      out << report_to_csv(report);
      break;
    case Format::Text:
      out << report_to_text(report);
      break;
  }
}

AuditReport scan_report(std::string name, const ScanSummary& s, bool with_regions) {
  AuditReport rep;
  rep.name = std::move(name);
  rep.columns = {"points", "failures", "secondary_failures", "min_margin", "min_secondary_margin",
                 "max_identity_error", "worst_n", "worst_r", "worst_alpha", "worst_delta"};
  std::vector<Cell> row = {static_cast<std::int64_t>(s.points),
                           static_cast<std::int64_t>(s.failures),
                           static_cast<std::int64_t>(s.secondary_failures),
                           s.min_margin,
                           s.min_secondary_margin,
                           s.max_identity_error,
                           std::int64_t{s.worst_n},
                           std::int64_t{s.worst_r},
                           s.worst_alpha,
                           s.worst_delta};
  if (with_regions) {
    for (Region region : {Region::LargePositive, Region::LargeNegative, Region::SmallModulus}) {
      rep.columns.push_back("region_" + std::string(to_string(region)));
      row.push_back(static_cast<std::int64_t>(s.region_counts[static_cast<std::size_t>(region)]));
    }
  }
  rep.rows.push_back(std::move(row));
  rep.checks.emplace_back("primary inequality", s.failures == 0);
  rep.checks.emplace_back("secondary checks", s.secondary_failures == 0);
  return rep;
}

}  // namespace isolab
