#include "isolab/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace isolab {

bool AuditReport::pass() const {
  return std::all_of(row_pass.begin(), row_pass.end(), [](bool b) { return b; }) &&
         std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

std::size_t AuditReport::column(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw std::out_of_range("AuditReport: no column '" + name + "'");
  return static_cast<std::size_t>(it - columns.begin());
}

const Cell& AuditReport::at(std::size_t row, const std::string& column_name) const {
  return rows.at(row).at(column(column_name));
}

}  // namespace isolab
