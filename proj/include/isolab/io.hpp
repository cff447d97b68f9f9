#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "isolab/bounds.hpp"
#include "isolab/family.hpp"
#include "isolab/hypercube.hpp"
#include "isolab/report.hpp"

namespace isolab {

/// {"n": n, "r": r, "members": [[1,2],[1,3],...]}; elements ascending within a
/// set, sets in colex order.
nlohmann::json family_to_json(const Family& a);
/// Throws ParameterError on a malformed document, a member of the wrong size
/// or an element outside [1, n].
Family family_from_json(const nlohmann::json& doc);

/// {"n": n, "vertices": [...]}; vertex v encodes the subset with element i at bit i−1.
nlohmann::json cube_family_to_json(const CubeFamily& a);
CubeFamily cube_family_from_json(const nlohmann::json& doc);

/// 12 significant digits; "inf", "-inf" and "nan" for non-finite values.
std::string format_real(double x);

enum class Format { Json, Csv, Text };
/// Throws ParameterError for anything other than json, csv or text.
Format parse_format(std::string_view name);

nlohmann::json report_to_json(const AuditReport& report);
/// Header row of column names, then one line per row. Strings containing a
/// comma or quote are quoted.
std::string report_to_csv(const AuditReport& report);
std::string report_to_text(const AuditReport& report);
void write_report(std::ostream& out, const AuditReport& report, Format format);

/// One-row report of a scan aggregate, with the pass verdict as a check.
AuditReport scan_report(std::string name, const ScanSummary& summary, bool with_regions);

}  // namespace isolab
