// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "bspower/model.hpp"
#include "bspower/presets.hpp"
#include "support/oracle.hpp"

using namespace bspower;

namespace {

const BsParameters kMacro = preset(PresetType::Macro);
const BsParameters kPico = preset(PresetType::Pico);
const BsParameters kFemto = preset(PresetType::Femto);

OperatingPoint at(double bandwidth_hz, int chains, double load = 1.0) {
  OperatingPoint op;
  op.bandwidth_hz = bandwidth_hz;
  op.n_chains = chains;
  op.load = load;
  return op;
}

ModelErrorCode error_of(auto&& fn) {
  try {
    fn();
  } catch (const ModelError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected ModelError";
  return ModelErrorCode::InvalidOperatingPoint;
}

}  // namespace

TEST(PaEfficiency, HandEvaluatedExamples) {
  EXPECT_NEAR(pa_efficiency(kMacro, 40.0, 1), 0.306, 1e-12);
  EXPECT_DOUBLE_EQ(pa_efficiency(kPico, 0.25, 1), 0.08);
  EXPECT_NEAR(pa_efficiency(kFemto, 0.10, 2), 0.045, 1e-12);
  EXPECT_NEAR(pa_efficiency(kMacro, 40.0, 2), 0.252, 1e-12);
}

TEST(PaEfficiency, OverdrivenAndCollapse) {
  EXPECT_EQ(error_of([] { pa_efficiency(kPico, 0.5, 1); }), ModelErrorCode::PaOverdriven);
  // gamma 0.2: factor hits zero at 2^5 = 32x back-off.
  EXPECT_EQ(error_of([] { pa_efficiency(kPico, 0.25 / 32.0, 1); }),
            ModelErrorCode::EfficiencyCollapse);
  EXPECT_GT(pa_efficiency(kPico, 0.25 / 31.0, 1), 0.0);
  EXPECT_EQ(error_of([] { pa_efficiency(kPico, 0.0, 1); }),
            ModelErrorCode::InvalidOperatingPoint);
  EXPECT_EQ(error_of([] { pa_efficiency(kPico, 0.25, 0); }),
            ModelErrorCode::InvalidOperatingPoint);
}

TEST(PaEfficiency, MonotoneInPerAmplifierOutput) {
  double previous = 0.0;
  for (double p = 1.0; p <= 80.0; p += 0.5) {
    const double eta = pa_efficiency(kMacro, p, 1);
    EXPECT_GT(eta, previous);
    EXPECT_LE(eta, kMacro.eta_pa_max);
    previous = eta;
  }
  BsParameters flat = kMacro;
  flat.gamma = 0.0;
  for (double p : {1.0, 10.0, 80.0}) EXPECT_EQ(pa_efficiency(flat, p, 1), flat.eta_pa_max);
}

TEST(PaPower, Examples) {
  EXPECT_NEAR(pa_power(kMacro, 40.0, 1), 261.438, 5e-4);
  EXPECT_NEAR(pa_power(kMacro, 40.0, 2), 158.730, 5e-4);
  EXPECT_NEAR(pa_power(kPico, 0.25, 1), 3.125, 1e-12);
}

TEST(PaPower, TotalIsChainsTimesPerPa) {
  for (const auto& p : {kMacro, kPico, kFemto}) {
    for (int d : {1, 2, 3, 4, 8}) {
      EXPECT_EQ(pa_power(p, p.p_max_design, d, Aggregation::Total),
                d * pa_power(p, p.p_max_design, d, Aggregation::PerPa));
    }
  }
}

TEST(BasebandAndRf, Examples) {
  EXPECT_DOUBLE_EQ(bb_power(kMacro, 10e6, 1), 29.4);
  EXPECT_NEAR(bb_power(kMacro, 20e6, 2), 117.6, 1e-12);
  EXPECT_DOUBLE_EQ(bb_power(kFemto, 5e6, 1), 1.25);
  EXPECT_DOUBLE_EQ(rf_power(kMacro, 10e6, 1), 12.9);
  EXPECT_NEAR(rf_power(kPico, 10e6, 4), 4.8, 1e-12);
  EXPECT_NEAR(rf_power(kMacro, 1.4e6, 1), 1.806, 1e-12);
}

TEST(BasebandAndRf, LinearInBandwidthAndChains) {
  for (double w : {1.4e6, 3e6, 5e6, 15e6}) {
    for (int d : {1, 2, 3}) {
      EXPECT_EQ(bb_power(kMacro, 2 * w, d), 2 * bb_power(kMacro, w, d));
      EXPECT_EQ(rf_power(kPico, w, 2 * d), 2 * rf_power(kPico, w, d));
    }
  }
  EXPECT_EQ(error_of([] { bb_power(kMacro, 0.0, 1); }), ModelErrorCode::InvalidOperatingPoint);
  EXPECT_EQ(error_of([] { rf_power(kMacro, -1.0, 1); }), ModelErrorCode::InvalidOperatingPoint);
}

TEST(SectorPower, FrozenOracleValues) {
  // Frozen from the straight-line oracle.
  EXPECT_NEAR(p1(kMacro, at(10e6, 1)).p1_sector, 400.93444015012636, 1e-9);
  EXPECT_NEAR(p1(kMacro, at(10e6, 2)).p1_sector, 321.1961307199402, 1e-9);
  EXPECT_NEAR(p1(kPico, at(10e6, 1)).p1_sector, 10.279046795900728, 1e-11);
  EXPECT_NEAR(p1(kFemto, at(10e6, 1)).p1_sector, 6.297073712804049, 1e-11);
  EXPECT_NEAR(p1(kFemto, at(10e6, 2)).p1_sector, 9.027177566503408, 1e-11);

  EXPECT_NEAR(p1(kMacro, at(10e6, 1)).p1_sector, 400.93, 0.01);
  EXPECT_NEAR(p1(kMacro, at(10e6, 2)).p1_sector, 321.20, 0.01);
  EXPECT_NEAR(p1(kPico, at(10e6, 1)).p1_sector, 10.279, 0.01);
}

TEST(SectorPower, MatchesOracleOnGrid) {
  for (const auto& row : oracle::kTable) {
    const BsParameters params = preset(*parse_preset(row.name));
    for (int d : {1, 2, 4}) {
      for (double w : {1.4e6, 5e6, 10e6, 20e6}) {
        const double expected = oracle::sector_power(row, w, d, row.p_max);
        const double got = p1(params, at(w, d)).p1_sector;
        EXPECT_LE(std::abs(got - expected), 1e-12 * std::abs(expected))
            << row.name << " D=" << d << " W=" << w;
      }
    }
  }
}

TEST(SectorPower, LossComposition) {
  for (const auto& p : {kMacro, kPico, kFemto}) {
    for (int d : {1, 2, 4, 6}) {
      const auto b = p1(p, at(7e6, d), Aggregation::Total);
      EXPECT_NEAR(b.p1_sector * b.loss_divisor, b.p_bb + b.p_rf + b.p_pa,
                  1e-12 * (b.p_bb + b.p_rf + b.p_pa));
      EXPECT_DOUBLE_EQ(b.p0, b.p1_sector - p.delta_p * p.p_max_design);
      EXPECT_EQ(b.beyond_verified_chains, d > 4);
    }
  }
}

TEST(SectorPower, OperatingPmaxOverride) {
  OperatingPoint op = at(10e6, 1);
  op.p_max_op = 20.0;
  const auto b = p1(kMacro, op);
  EXPECT_NEAR(b.eta_pa, 0.36 * (1 - 0.15 * 2), 1e-12);
  op.p_max_op = 81.0;
  EXPECT_EQ(error_of([&] { p1(kMacro, op); }), ModelErrorCode::PaOverdriven);
  op.p_max_op = 160.0;
  op.n_chains = 2;
  EXPECT_NO_THROW(p1(kMacro, op));
}

TEST(SleepPower, Examples) {
  EXPECT_EQ(sleep_power(kMacro, 1), 324.0);
  EXPECT_EQ(sleep_power(kMacro, 2), 648.0);
  EXPECT_EQ(sleep_power(kFemto, 1), 3.3);
}

TEST(SupplyPower, Examples) {
  EXPECT_NEAR(supply_power(kMacro, at(10e6, 1, 1.0)).p_supply_total, 1202.8, 0.01);
  EXPECT_NEAR(supply_power(kMacro, at(10e6, 1, 0.5)).p_supply_total, 950.8, 0.01);
  for (double w : {1.4e6, 10e6, 20e6}) {
    const auto b = supply_power(kMacro, at(w, 1, 0.0));
    EXPECT_EQ(b.p_supply_total, 972.0);
    EXPECT_TRUE(b.is_sleeping);
  }
  EXPECT_EQ(supply_power(kFemto, at(10e6, 1, 0.0)).p_supply_total, 3.3);
}

TEST(SupplyPower, FullLoadAnchorIsExact) {
  for (const auto& p : {kMacro, kPico, kFemto}) {
    for (int d : {1, 2, 4}) {
      const auto b = supply_power(p, at(10e6, d, 1.0));
      EXPECT_EQ(b.p_supply_total, p.m_sec * b.p1_sector);
      EXPECT_FALSE(b.is_sleeping);
    }
  }
}

TEST(SupplyPower, SleepDiscontinuity) {
  for (const auto& p : {kMacro, kPico, kFemto}) {
    const double asleep = supply_power(p, at(10e6, 1, 0.0)).p_supply_total;
    const double barely_awake = supply_power(p, at(10e6, 1, 1e-9)).p_supply_total;
    EXPECT_EQ(asleep, p.m_sec * 1 * p.p_sleep_ref);
    EXPECT_NE(asleep, barely_awake);
  }
}

TEST(SupplyPower, NegativePowerOnSteepCustomSlope) {
  BsParameters steep = kPico;
  steep.name = "steep";
  steep.delta_p = 100.0;  // 25 W drop against a ~10 W sector
  EXPECT_EQ(error_of([&] { supply_power(steep, at(10e6, 1, 0.1)); }),
            ModelErrorCode::NegativePower);
  EXPECT_NO_THROW(supply_power(steep, at(10e6, 1, 1.0)));
  EXPECT_NO_THROW(supply_power(steep, at(10e6, 1, 0.0)));
}

TEST(SupplyPower, MacroPresetGoesNegativeAtNarrowBandManyChains) {
  // D=4 at 1.4 MHz: P1 ~ 164.6 W is below the 168 W full slope drop.
  EXPECT_LT(p1(kMacro, at(1.4e6, 4)).p1_sector, kMacro.delta_p * kMacro.p_max_design);
  EXPECT_EQ(error_of([] { supply_power(kMacro, at(1.4e6, 4, 0.01)); }),
            ModelErrorCode::NegativePower);
  EXPECT_NO_THROW(supply_power(kMacro, at(1.4e6, 4, 0.5)));
  EXPECT_NO_THROW(supply_power(kMacro, at(10e6, 4, 1e-6)));
}

TEST(SupplyPower, RejectsOutOfRangeLoad) {
  EXPECT_EQ(error_of([] { supply_power(kMacro, at(10e6, 1, 1.5)); }),
            ModelErrorCode::InvalidOperatingPoint);
  EXPECT_EQ(error_of([] { supply_power(kMacro, at(10e6, 1, -0.1)); }),
            ModelErrorCode::InvalidOperatingPoint);
}

TEST(SupplyPower, LoadLinearityProperty) {
  std::mt19937_64 rng(20121);
  std::uniform_real_distribution<double> load(1e-6, 1.0);
  std::uniform_real_distribution<double> bandwidth(1e6, 40e6);
  std::uniform_int_distribution<int> chains(1, 8);
  int checked = 0;
  for (int trial = 0; checked < 500; ++trial) {
    const auto& p = std::vector{kMacro, kPico, kFemto}[trial % 3];
    const double w = bandwidth(rng);
    const int d = chains(rng);
    const double a = load(rng);
    const double b = load(rng);
    double pa = 0.0, pb = 0.0;
    try {
      pa = supply_power(p, at(w, d, a)).p_supply_total;
      pb = supply_power(p, at(w, d, b)).p_supply_total;
    } catch (const ModelError& e) {
      ASSERT_EQ(e.code(), ModelErrorCode::NegativePower);
      continue;  // outside the model's valid region
    }
    ++checked;
    const double expected = p.m_sec * p.delta_p * p.p_max_design * (a - b);
    EXPECT_LE(std::abs((pa - pb) - expected), 1e-9 * std::max(pa, pb));
  }
}

TEST(Validation, RejectsInvariantViolations) {
  auto field_of = [](BsParameters p) -> std::string {
    try {
      validate(p);
    } catch (const ValidationError& e) {
      return e.field();
    }
    return "";
  };
  EXPECT_EQ(field_of(kMacro), "");
  BsParameters p = kMacro;
  p.sigma_feed = 1.0;
  EXPECT_EQ(field_of(p), "sigma_feed");
  p = kMacro;
  p.gamma = -0.1;
  EXPECT_EQ(field_of(p), "gamma");
  p = kMacro;
  p.eta_pa_max = 0.0;
  EXPECT_EQ(field_of(p), "eta_pa_max");
  p = kMacro;
  p.eta_pa_max = 1.0;
  EXPECT_EQ(field_of(p), "");
  p = kMacro;
  p.m_sec = 0;
  EXPECT_EQ(field_of(p), "m_sec");
  p = kMacro;
  p.p_max_design = 0.0;
  EXPECT_EQ(field_of(p), "p_max_design");
  p = kMacro;
  p.p_sleep_ref = std::nan("");
  EXPECT_EQ(field_of(p), "p_sleep_ref");
}
