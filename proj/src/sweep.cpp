// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include <fmt/format.h>

#include "bspower/analysis.hpp"

namespace bspower {

std::string_view to_string(AxisKind kind) {
  switch (kind) {
    case AxisKind::Bandwidth: return "bandwidth";
    case AxisKind::Chains: return "chains";
    case AxisKind::Load: return "load";
    case AxisKind::PMaxOp: return "pmax";
  }
  return "bandwidth";
}

std::optional<AxisKind> parse_axis_kind(std::string_view text) {
  for (AxisKind k : {AxisKind::Bandwidth, AxisKind::Chains, AxisKind::Load, AxisKind::PMaxOp}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

namespace {

void validate_axis(const SweepAxis& axis) {
  const auto name = to_string(axis.kind);
  if (axis.values.empty()) {
    throw SpecError(fmt::format("axis '{}' has no values", name));
  }
  for (std::size_t i = 0; i < axis.values.size(); ++i) {
    const double v = axis.values[i];
    if (!std::isfinite(v)) {
      throw SpecError(fmt::format("axis '{}' value {} is not finite", name, v));
    }
    if (i > 0 && !(v > axis.values[i - 1])) {
      throw SpecError(fmt::format("axis '{}' values must be strictly increasing", name));
    }
    switch (axis.kind) {
      case AxisKind::Bandwidth:
      case AxisKind::PMaxOp:
        if (!(v > 0.0)) throw SpecError(fmt::format("axis '{}' value {} must be > 0", name, v));
        break;
      case AxisKind::Chains:
        if (v < 1.0 || v != std::floor(v) || v > 1e6) {
          throw SpecError(fmt::format("axis 'chains' value {} must be an integer >= 1", v));
        }
        break;
      case AxisKind::Load:
        if (v < 0.0 || v > 1.0) {
          throw SpecError(fmt::format("axis 'load' value {} must lie in [0, 1]", v));
        }
        break;
    }
  }
}

}  // namespace

void validate(const SweepSpec& spec) {
  validate_axis(spec.axis);
  if (spec.second_axis) {
    if (spec.second_axis->kind == spec.axis.kind) {
      throw SpecError(fmt::format("axis '{}' given twice", to_string(spec.axis.kind)));
    }
    validate_axis(*spec.second_axis);
  }
}

OperatingPoint apply_axis(OperatingPoint op, AxisKind kind, double value) {
  switch (kind) {
    case AxisKind::Bandwidth: op.bandwidth_hz = value; break;
    case AxisKind::Chains: op.n_chains = static_cast<int>(value); break;
    case AxisKind::Load: op.load = value; break;
    case AxisKind::PMaxOp: op.p_max_op = value; break;
  }
  return op;
}

std::size_t SweepResult::succeeded() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](const SweepCell& c) { return c.ok(); }));
}

SweepResult run_sweep(const SweepSpec& spec, unsigned threads) {
  validate(spec);

  SweepResult result{spec, {}};
  const std::size_t inner = spec.second_axis ? spec.second_axis->values.size() : 1;
  result.cells.resize(spec.axis.values.size() * inner);
  for (std::size_t i = 0; i < spec.axis.values.size(); ++i) {
    for (std::size_t j = 0; j < inner; ++j) {
      SweepCell& cell = result.cells[i * inner + j];
      cell.axis_value = spec.axis.values[i];
      if (spec.second_axis) cell.second_value = spec.second_axis->values[j];
    }
  }

  auto evaluate = [&](SweepCell& cell) {
    OperatingPoint op = apply_axis(spec.fixed, spec.axis.kind, cell.axis_value);
    if (cell.second_value) op = apply_axis(op, spec.second_axis->kind, *cell.second_value);
    try {
      cell.breakdown = supply_power(spec.station, op, spec.aggregation);
    } catch (const ModelError& e) {
      cell.error = e.code();
    }
  };

  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(result.cells.size()));
  if (threads == 1) {
    for (auto& cell : result.cells) evaluate(cell);
    return result;
  }

  // Each cell is written by exactly one worker; ordering is fixed by index.
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < result.cells.size(); i = next++) {
          evaluate(result.cells[i]);
        }
      });
    }
  }
  return result;
}

}  // namespace bspower
