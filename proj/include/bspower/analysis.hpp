// SPDX-License-Identifier: Apache-2.0
//
// Batch evaluation on top of the model: 1-D/2-D sweeps, energy over traffic
// profiles, and side-by-side station comparison.

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bspower/model.hpp"

namespace bspower {

// ---------------------------------------------------------------- sweeps

enum class AxisKind { Bandwidth, Chains, Load, PMaxOp };

std::string_view to_string(AxisKind kind);
/// CLI spelling: bandwidth | chains | load | pmax.
std::optional<AxisKind> parse_axis_kind(std::string_view text);

struct SweepAxis {
  AxisKind kind = AxisKind::Bandwidth;
  std::vector<double> values;
};

struct SweepSpec {
  BsParameters station;
  SweepAxis axis;
  std::optional<SweepAxis> second_axis;
  OperatingPoint fixed;  ///< knobs not covered by an axis
  Aggregation aggregation = Aggregation::PerPa;
};

class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws SpecError on empty/unsorted/out-of-range axes or a repeated axis.
void validate(const SweepSpec& spec);

/// Operating point at the given axis values.
OperatingPoint apply_axis(OperatingPoint op, AxisKind kind, double value);

struct SweepCell {
  double axis_value = 0.0;
  std::optional<double> second_value;
  std::optional<PowerBreakdown> breakdown;
  std::optional<ModelErrorCode> error;

  bool ok() const { return breakdown.has_value(); }
};

struct SweepResult {
  SweepSpec spec;
  /// Row-major: first axis outer, second axis inner.
  std::vector<SweepCell> cells;

  std::size_t succeeded() const;
};

/// Evaluates every axis combination. Cells are independent; `threads` > 1
/// evaluates them concurrently with identical results. Model errors are
/// captured per cell.
SweepResult run_sweep(const SweepSpec& spec, unsigned threads = 1);

// ------------------------------------------------------- traffic / energy

struct TrafficSlot {
  double duration_s = 0.0;
  double load = 0.0;

  bool operator==(const TrafficSlot&) const = default;
};

struct TrafficProfile {
  std::vector<TrafficSlot> slots;
  std::string label;

  double total_duration() const;
};

/// Throws SpecError if the profile is empty or has a bad slot.
void validate(const TrafficProfile& profile);

/// Malformed traffic CSV; line() is 1-based, 0 for whole-file problems.
class TrafficParseError : public std::runtime_error {
 public:
  TrafficParseError(std::size_t line, const std::string& message)
      : std::runtime_error(message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Two-column CSV `duration_s,load` with header; blank lines and '#'
/// comments ignored.
TrafficProfile parse_traffic_csv(std::string_view text);
TrafficProfile load_traffic_csv(const std::filesystem::path& path);

inline constexpr double kJoulesPerKwh = 3.6e6;

struct EnergyReport {
  double energy_j = 0.0;
  double energy_kwh = 0.0;
  double duration_s = 0.0;
  double mean_power_w = 0.0;
  double sleep_fraction = 0.0;  ///< share of time at load 0
};

/// Sum of supply power times slot duration. Model errors carry the slot index.
EnergyReport integrate_energy(const BsParameters& params, const TrafficProfile& profile,
                              const OperatingPoint& op_defaults,
                              Aggregation aggregation = Aggregation::PerPa);

// ------------------------------------------------------------ comparison

struct ComparisonRow {
  std::string station;
  std::optional<PowerBreakdown> breakdown;
  std::optional<ModelErrorCode> error;
  std::optional<double> p1_reference;

  /// Computed minus published P1, when both exist.
  std::optional<double> reference_delta() const;
};

/// One row per station at a shared operating point. p_max_op, when set on
/// op_point, applies to every station; otherwise each uses its design value.
std::vector<ComparisonRow> compare_stations(const std::vector<BsParameters>& stations,
                                            const OperatingPoint& op_point,
                                            Aggregation aggregation = Aggregation::PerPa);

}  // namespace bspower
