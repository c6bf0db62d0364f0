// SPDX-License-Identifier: Apache-2.0
//
// Text renderers for model results. All numbers are printed with six
// significant digits; column order and JSON key order are fixed.

#pragma once

#include <string>
#include <vector>

#include "bspower/analysis.hpp"
#include "bspower/model.hpp"

namespace bspower {

/// Six significant digits, printf "%.6g" style.
std::string format_number(double value);

/// value rounded to six significant digits (what format_number prints).
double round_to_display(double value);

struct EvalReport {
  std::string station;
  OperatingPoint op;  ///< p_max_op resolved
  Aggregation aggregation = Aggregation::PerPa;
  PowerBreakdown breakdown;
};

std::string render_eval_csv(const EvalReport& report);
std::string render_eval_json(const EvalReport& report);

/// Columns: axis columns (outer first), p_pa, p_bb, p_rf, eta_pa, p1_sector,
/// p_supply_total, is_sleeping, error.
std::string render_sweep_csv(const SweepResult& result);
std::string render_sweep_json(const SweepResult& result);

/// 800x600 self-contained line chart of p_supply_total against the first axis,
/// one polyline per second-axis value.
std::string render_sweep_svg(const SweepResult& result);

struct ProfileReport {
  std::string station;
  std::string profile_label;
  std::size_t slot_count = 0;
  OperatingPoint op;
  Aggregation aggregation = Aggregation::PerPa;
  EnergyReport energy;
};

std::string render_profile_csv(const ProfileReport& report);
std::string render_profile_json(const ProfileReport& report);

std::string render_comparison_csv(const std::vector<ComparisonRow>& rows);
std::string render_comparison_json(const std::vector<ComparisonRow>& rows,
                                   const OperatingPoint& op, Aggregation aggregation);

}  // namespace bspower
