#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "steklov/model.hpp"

namespace steklov {

/// Machine-readable Steklov result. Field names and CSV column order are
/// part of the output format: n, r, v1, mode, f_at_r, lambda1c_boundary, margin.
struct SteklovRecord {
  int n = 0;
  double r = 0.0;
  double v1 = 0.0;
  int mode = 0;
  double f_at_r = 0.0;
  double lambda1c_boundary = 0.0;
  std::optional<double> margin;  ///< only for comparison reports

  bool operator==(const SteklovRecord&) const = default;
};

SteklovRecord make_record(const ModelBall& ball, const SteklovResult& result);
/// Record of the variable-bound model, carrying the comparison margin.
SteklovRecord make_record(const ComparisonReport& report);

/// One-line JSON object; `margin` is null when absent.
std::string to_json(const SteklovRecord& rec);
/// Inverse of to_json. Throws Error(Config) on missing or mistyped fields.
SteklovRecord record_from_json(std::string_view text);

std::string record_csv_header();
/// Doubles use 17 significant digits; an absent margin is an empty cell.
std::string to_csv_row(const SteklovRecord& rec);

}  // namespace steklov
