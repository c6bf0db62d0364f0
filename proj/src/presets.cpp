// SPDX-License-Identifier: Apache-2.0

#include "bspower/presets.hpp"

namespace bspower {

BsParameters preset(PresetType type) {
  BsParameters p;
  switch (type) {
    case PresetType::Macro:
      p.bs_type = BsType::Macro;
      p.name = "macro";
      p.p_pa_limit = 80.0;
      p.eta_pa_max = 0.36;
      p.gamma = 0.15;
      p.p_bb_base = 29.4;
      p.p_rf_base = 12.9;
      p.sigma_feed = 0.5;
      p.sigma_dc = 0.075;
      p.sigma_cool = 0.1;
      p.sigma_ms = 0.09;
      p.m_sec = 3;
      p.p_max_design = 40.0;
      p.delta_p = 4.2;
      p.p_sleep_ref = 324.0;
      p.p1_reference = 460.4;
      break;
    case PresetType::Pico:
      p.bs_type = BsType::Pico;
      p.name = "pico";
      p.p_pa_limit = 0.25;
      p.eta_pa_max = 0.08;
      p.gamma = 0.20;
      p.p_bb_base = 4.0;
      p.p_rf_base = 1.2;
      p.sigma_feed = 0.0;
      p.sigma_dc = 0.09;
      p.sigma_cool = 0.0;
      p.sigma_ms = 0.11;
      p.m_sec = 1;
      p.p_max_design = 0.25;
      p.delta_p = 4.0;
      p.p_sleep_ref = 4.9;
      p.p1_reference = 17.4;
      break;
    case PresetType::Femto:
      p.bs_type = BsType::Femto;
      p.name = "femto";
      p.p_pa_limit = 0.10;
      p.eta_pa_max = 0.05;
      p.gamma = 0.10;
      p.p_bb_base = 2.5;
      p.p_rf_base = 0.6;
      p.sigma_feed = 0.0;
      p.sigma_dc = 0.09;
      p.sigma_cool = 0.0;
      p.sigma_ms = 0.11;
      p.m_sec = 1;
      p.p_max_design = 0.10;
      p.delta_p = 4.0;
      p.p_sleep_ref = 3.3;
      p.p1_reference = 12.0;
      break;
  }
  return p;
}

std::optional<PresetType> parse_preset(std::string_view name) {
  for (PresetType t : kAllPresets) {
    if (preset_name(t) == name) return t;
  }
  return std::nullopt;
}

std::string_view preset_name(PresetType type) {
  switch (type) {
    case PresetType::Macro: return "macro";
    case PresetType::Pico: return "pico";
    case PresetType::Femto: return "femto";
  }
  return "macro";
}

}  // namespace bspower
