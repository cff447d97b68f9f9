#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "isolab/family.hpp"

namespace isolab {

using Cell = std::variant<std::int64_t, double, bool, std::string>;

/// A tabular result shared by every audit and scan: one row per checked
/// size or grid slice, with optional per-row pass flags and witnesses.
struct AuditReport {
  std::string name;
  std::vector<std::pair<std::string, Cell>> parameters;
  std::vector<std::string> notes;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  /// Per-row verdicts; empty when the report carries no row checks.
  std::vector<bool> row_pass;
  /// Per-row witness families; empty or aligned with rows.
  std::vector<std::optional<Family>> witnesses;
  /// Whole-report checks (scan totals, exhaustive counts).
  std::vector<std::pair<std::string, bool>> checks;
  /// False when any value is a budget-limited upper bound.
  bool exact = true;

  bool pass() const;
  /// Index of a column by name; throws std::out_of_range when absent.
  std::size_t column(const std::string& name) const;
  const Cell& at(std::size_t row, const std::string& column_name) const;
};

}  // namespace isolab
