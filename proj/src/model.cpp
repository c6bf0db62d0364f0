// SPDX-License-Identifier: Apache-2.0

#include "bspower/model.hpp"

#include <cmath>

#include <fmt/format.h>

namespace bspower {

std::string_view to_string(BsType type) {
  switch (type) {
    case BsType::Macro: return "Macro";
    case BsType::Pico: return "Pico";
    case BsType::Femto: return "Femto";
    case BsType::Custom: return "Custom";
  }
  return "Custom";
}

std::optional<BsType> parse_bs_type(std::string_view text) {
  if (text == "Macro") return BsType::Macro;
  if (text == "Pico") return BsType::Pico;
  if (text == "Femto") return BsType::Femto;
  if (text == "Custom") return BsType::Custom;
  return std::nullopt;
}

std::string_view to_string(Aggregation aggregation) {
  return aggregation == Aggregation::PerPa ? "per-pa" : "total";
}

std::optional<Aggregation> parse_aggregation(std::string_view text) {
  if (text == "per-pa" || text == "perpa" || text == "PerPa") return Aggregation::PerPa;
  if (text == "total" || text == "Total") return Aggregation::Total;
  return std::nullopt;
}

std::string_view to_string(ModelErrorCode code) {
  switch (code) {
    case ModelErrorCode::PaOverdriven: return "PaOverdriven";
    case ModelErrorCode::EfficiencyCollapse: return "EfficiencyCollapse";
    case ModelErrorCode::NegativePower: return "NegativePower";
    case ModelErrorCode::InvalidOperatingPoint: return "InvalidOperatingPoint";
  }
  return "Unknown";
}

namespace {

void require_finite(const char* field, double value) {
  if (!std::isfinite(value)) {
    throw ValidationError(field, fmt::format("{} must be finite", field));
  }
}

void require_non_negative(const char* field, double value) {
  require_finite(field, value);
  if (value < 0.0) {
    throw ValidationError(field, fmt::format("{} = {} must be >= 0", field, value));
  }
}

void require_loss_fraction(const char* field, double value) {
  require_finite(field, value);
  if (value < 0.0 || value >= 1.0) {
    throw ValidationError(field, fmt::format("{} = {} must lie in [0, 1)", field, value));
  }
}

void check_chains(int n_chains) {
  if (n_chains < 1) {
    throw ModelError(ModelErrorCode::InvalidOperatingPoint,
                     fmt::format("n_chains = {} must be >= 1", n_chains));
  }
}

void check_bandwidth(double bandwidth_hz) {
  if (!(bandwidth_hz > 0.0) || !std::isfinite(bandwidth_hz)) {
    throw ModelError(ModelErrorCode::InvalidOperatingPoint,
                     fmt::format("bandwidth_hz = {} must be > 0", bandwidth_hz));
  }
}

void check_operating_point(const OperatingPoint& op, double p_max) {
  check_bandwidth(op.bandwidth_hz);
  check_chains(op.n_chains);
  if (!(op.load >= 0.0 && op.load <= 1.0)) {
    throw ModelError(ModelErrorCode::InvalidOperatingPoint,
                     fmt::format("load = {} must lie in [0, 1]", op.load));
  }
  if (!(p_max > 0.0) || !std::isfinite(p_max)) {
    throw ModelError(ModelErrorCode::InvalidOperatingPoint,
                     fmt::format("p_max_op = {} must be > 0", p_max));
  }
}

}  // namespace

void validate(const BsParameters& p) {
  require_non_negative("p_pa_limit", p.p_pa_limit);
  require_finite("eta_pa_max", p.eta_pa_max);
  if (!(p.eta_pa_max > 0.0 && p.eta_pa_max <= 1.0)) {
    throw ValidationError("eta_pa_max",
                          fmt::format("eta_pa_max = {} must lie in (0, 1]", p.eta_pa_max));
  }
  require_non_negative("gamma", p.gamma);
  require_non_negative("p_bb_base", p.p_bb_base);
  require_non_negative("p_rf_base", p.p_rf_base);
  require_loss_fraction("sigma_feed", p.sigma_feed);
  require_loss_fraction("sigma_dc", p.sigma_dc);
  require_loss_fraction("sigma_cool", p.sigma_cool);
  require_loss_fraction("sigma_ms", p.sigma_ms);
  if (p.m_sec < 1) {
    throw ValidationError("m_sec", fmt::format("m_sec = {} must be >= 1", p.m_sec));
  }
  require_finite("p_max_design", p.p_max_design);
  if (!(p.p_max_design > 0.0)) {
    throw ValidationError("p_max_design",
                          fmt::format("p_max_design = {} must be > 0", p.p_max_design));
  }
  require_non_negative("delta_p", p.delta_p);
  require_non_negative("p_sleep_ref", p.p_sleep_ref);
  if (p.p1_reference) require_non_negative("p1_reference", *p.p1_reference);
}

double pa_efficiency(const BsParameters& params, double p_max_op, int n_chains) {
  check_chains(n_chains);
  if (!(p_max_op > 0.0) || !std::isfinite(p_max_op)) {
    throw ModelError(ModelErrorCode::InvalidOperatingPoint,
                     fmt::format("p_max_op = {} must be > 0", p_max_op));
  }
  const double per_pa_output = p_max_op / n_chains;
  if (per_pa_output > params.p_pa_limit) {
    throw ModelError(ModelErrorCode::PaOverdriven,
                     fmt::format("per-PA output {} W exceeds PA limit {} W", per_pa_output,
                                 params.p_pa_limit));
  }
  const double factor = 1.0 - params.gamma * std::log2(params.p_pa_limit / per_pa_output);
  if (!(factor > 0.0)) {
    throw ModelError(ModelErrorCode::EfficiencyCollapse,
                     fmt::format("back-off to {} W from {} W leaves efficiency factor {}",
                                 per_pa_output, params.p_pa_limit, factor));
  }
  return params.eta_pa_max * factor;
}

double pa_power(const BsParameters& params, double p_max_op, int n_chains,
                Aggregation aggregation) {
  const double eta = pa_efficiency(params, p_max_op, n_chains);
  const double per_pa = p_max_op / (n_chains * eta * (1.0 - params.sigma_feed));
  return aggregation == Aggregation::Total ? n_chains * per_pa : per_pa;
}

double bb_power(const BsParameters& params, double bandwidth_hz, int n_chains) {
  check_bandwidth(bandwidth_hz);
  check_chains(n_chains);
  return n_chains * (bandwidth_hz / kReferenceBandwidthHz) * params.p_bb_base;
}

double rf_power(const BsParameters& params, double bandwidth_hz, int n_chains) {
  check_bandwidth(bandwidth_hz);
  check_chains(n_chains);
  return n_chains * (bandwidth_hz / kReferenceBandwidthHz) * params.p_rf_base;
}

double sleep_power(const BsParameters& params, int n_chains) {
  check_chains(n_chains);
  return n_chains * params.p_sleep_ref;
}

PowerBreakdown p1(const BsParameters& params, const OperatingPoint& op,
                  Aggregation aggregation) {
  const double p_max = op.resolved_p_max(params);
  check_operating_point(op, p_max);

  PowerBreakdown out;
  out.eta_pa = pa_efficiency(params, p_max, op.n_chains);
  out.p_pa = pa_power(params, p_max, op.n_chains, aggregation);
  out.p_bb = bb_power(params, op.bandwidth_hz, op.n_chains);
  out.p_rf = rf_power(params, op.bandwidth_hz, op.n_chains);
  out.loss_divisor =
      (1.0 - params.sigma_dc) * (1.0 - params.sigma_ms) * (1.0 - params.sigma_cool);
  out.p1_sector = (out.p_bb + out.p_rf + out.p_pa) / out.loss_divisor;
  out.p0 = out.p1_sector - params.delta_p * p_max;
  out.beyond_verified_chains = op.n_chains > kMaxVerifiedChains;
  return out;
}

PowerBreakdown supply_power(const BsParameters& params, const OperatingPoint& op,
                            Aggregation aggregation) {
  PowerBreakdown out = p1(params, op, aggregation);
  if (op.load == 0.0) {
    out.is_sleeping = true;
    out.p_supply_total = params.m_sec * sleep_power(params, op.n_chains);
    return out;
  }
  const double p_max = op.resolved_p_max(params);
  const double drop = params.delta_p * p_max * (1.0 - op.load);
  if (drop > out.p1_sector) {
    throw ModelError(ModelErrorCode::NegativePower,
                     fmt::format("load {} extrapolates sector power below zero ({} W drop "
                                 "from {} W)",
                                 op.load, drop, out.p1_sector));
  }
  // Written as P1 + slope * (chi - 1) so that chi = 1 reproduces M_sec * P1 exactly.
  out.p_supply_total =
      params.m_sec * (out.p1_sector + params.delta_p * p_max * (op.load - 1.0));
  return out;
}

}  // namespace bspower
