// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "bspower/model.hpp"

namespace bspower {

enum class PresetType { Macro, Pico, Femto };

inline constexpr std::array<PresetType, 3> kAllPresets = {PresetType::Macro, PresetType::Pico,
                                                          PresetType::Femto};

/// Published parameter row for a station class, named "macro", "pico" or "femto".
BsParameters preset(PresetType type);

/// Lower-case lookup: "macro" | "pico" | "femto".
std::optional<PresetType> parse_preset(std::string_view name);
std::string_view preset_name(PresetType type);

}  // namespace bspower
