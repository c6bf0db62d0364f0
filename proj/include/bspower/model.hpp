// SPDX-License-Identifier: Apache-2.0
//
// Parameterized linear base-station power model.
//
// Supply power is affine in the load share chi, anchored at the full-load
// sector power P1, which itself is composed from baseband, RF and PA terms
// divided by the DC-DC, mains-supply and cooling loss factors. At chi = 0 the
// station is asleep and draws D * P_sleep,0 per sector.
//
// All functions are pure and thread-safe.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bspower {

enum class BsType { Macro, Pico, Femto, Custom };

std::string_view to_string(BsType type);
std::optional<BsType> parse_bs_type(std::string_view text);

/// One base-station class: a full row of the published parameter table, or a
/// user-supplied custom row. Powers in W, fractions dimensionless.
struct BsParameters {
  BsType bs_type = BsType::Custom;
  std::string name;

  double p_pa_limit = 0.0;  ///< data-sheet maximum PA output
  double eta_pa_max = 0.0;  ///< PA efficiency at p_pa_limit
  double gamma = 0.0;       ///< efficiency loss per halving of PA output
  double p_bb_base = 0.0;   ///< baseband, per antenna per 10 MHz
  double p_rf_base = 0.0;   ///< RF transceiver, per antenna per 10 MHz
  double sigma_feed = 0.0;
  double sigma_dc = 0.0;
  double sigma_cool = 0.0;
  double sigma_ms = 0.0;
  int m_sec = 1;
  double p_max_design = 0.0;  ///< design maximum transmit power per sector
  double delta_p = 0.0;       ///< load-dependence slope
  double p_sleep_ref = 0.0;   ///< single-antenna sleep power

  /// Published full-load sector power. Display only; never enters a computation.
  std::optional<double> p1_reference;

  bool operator==(const BsParameters&) const = default;
};

/// Thrown when a parameter set violates its invariants.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string field, const std::string& message)
      : std::runtime_error(message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Throws ValidationError naming the first offending field.
void validate(const BsParameters& params);

enum class Aggregation {
  PerPa,  ///< single PA term as written in the sector-power composition
  Total,  ///< PA term summed over all D amplifiers
};

std::string_view to_string(Aggregation aggregation);
std::optional<Aggregation> parse_aggregation(std::string_view text);

inline constexpr double kReferenceBandwidthHz = 10e6;
inline constexpr int kMaxVerifiedChains = 4;

struct OperatingPoint {
  double bandwidth_hz = kReferenceBandwidthHz;
  int n_chains = 1;
  double load = 1.0;
  /// Defaults to BsParameters::p_max_design when unset.
  std::optional<double> p_max_op;

  double resolved_p_max(const BsParameters& params) const {
    return p_max_op.value_or(params.p_max_design);
  }
};

struct PowerBreakdown {
  double p_pa = 0.0;
  double p_bb = 0.0;
  double p_rf = 0.0;
  double eta_pa = 0.0;
  double loss_divisor = 0.0;
  double p1_sector = 0.0;
  /// Static share p1_sector - delta_p * P_max (read-only, derived).
  double p0 = 0.0;
  double p_supply_total = 0.0;
  bool is_sleeping = false;
  /// Set when n_chains exceeds the antenna count the model was checked against.
  bool beyond_verified_chains = false;
};

enum class ModelErrorCode {
  PaOverdriven,
  EfficiencyCollapse,
  NegativePower,
  InvalidOperatingPoint,
};

std::string_view to_string(ModelErrorCode code);

class ModelError : public std::runtime_error {
 public:
  ModelError(ModelErrorCode code, const std::string& message,
             std::optional<std::size_t> slot = std::nullopt)
      : std::runtime_error(message), code_(code), slot_(slot) {}

  ModelErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return to_string(code_); }
  /// Traffic-profile slot that triggered the error, if any.
  std::optional<std::size_t> slot() const noexcept { return slot_; }

 private:
  ModelErrorCode code_;
  std::optional<std::size_t> slot_;
};

/// PA efficiency after back-off from the data-sheet limit to p_max_op / D.
double pa_efficiency(const BsParameters& params, double p_max_op, int n_chains);

double pa_power(const BsParameters& params, double p_max_op, int n_chains,
                Aggregation aggregation = Aggregation::PerPa);

double bb_power(const BsParameters& params, double bandwidth_hz, int n_chains);
double rf_power(const BsParameters& params, double bandwidth_hz, int n_chains);

/// Per-sector sleep power D * P_sleep,0.
double sleep_power(const BsParameters& params, int n_chains);

/// Full-load sector breakdown; p_supply_total and is_sleeping are left unset.
PowerBreakdown p1(const BsParameters& params, const OperatingPoint& op,
                  Aggregation aggregation = Aggregation::PerPa);

/// Site supply power at op.load, across all sectors.
PowerBreakdown supply_power(const BsParameters& params, const OperatingPoint& op,
                            Aggregation aggregation = Aggregation::PerPa);

}  // namespace bspower
