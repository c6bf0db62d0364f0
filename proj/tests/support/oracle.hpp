// SPDX-License-Identifier: Apache-2.0
//
// Test-only reference: a literal copy of the published parameter table and a
// straight-line transcription of the sector-power equations. Deliberately
// shares no code with the library.

#pragma once

#include <cmath>

namespace oracle {

struct Row {
  const char* name;
  double p_pa_limit, eta_pa_max, gamma, p_bb, p_rf, sigma_feed, sigma_dc, sigma_cool, sigma_ms;
  int m_sec;
  double p_max, p1, delta_p, p_sleep0;
};

// BS type | P_PA,limit | eta_PA,max | gamma | P'_BB | P'_RF | s_feed | s_DC | s_cool | s_MS |
// M_sec | P_max | P1 | Delta_p | P_sleep,0
inline constexpr Row kTable[3] = {
    {"macro", 80.00, 0.36, 0.15, 29.4, 12.9, 0.5, 0.075, 0.1, 0.09, 3, 40.00, 460.4, 4.2, 324.0},
    {"pico", 0.25, 0.08, 0.20, 4.0, 1.2, 0.0, 0.09, 0.0, 0.11, 1, 0.25, 17.4, 4.0, 4.9},
    {"femto", 0.10, 0.05, 0.10, 2.5, 0.6, 0.0, 0.09, 0.0, 0.11, 1, 0.10, 12.0, 4.0, 3.3},
};

inline double efficiency(const Row& r, double p_max, int d) {
  double backoff = r.p_pa_limit / (p_max / d);
  return r.eta_pa_max * (1.0 - r.gamma * (std::log(backoff) / std::log(2.0)));
}

inline double pa_per_amp(const Row& r, double p_max, int d) {
  return p_max / (d * efficiency(r, p_max, d) * (1.0 - r.sigma_feed));
}

inline double sector_power(const Row& r, double w_hz, int d, double p_max) {
  double bb_rf = d * (w_hz / 1.0e7) * (r.p_bb + r.p_rf);
  double pa = pa_per_amp(r, p_max, d);
  double losses = (1.0 - r.sigma_dc) * (1.0 - r.sigma_ms) * (1.0 - r.sigma_cool);
  return (bb_rf + pa) / losses;
}

inline double supply(const Row& r, double w_hz, int d, double load) {
  if (load == 0.0) return r.m_sec * d * r.p_sleep0;
  return r.m_sec * (sector_power(r, w_hz, d, r.p_max) + r.delta_p * r.p_max * (load - 1.0));
}

}  // namespace oracle
