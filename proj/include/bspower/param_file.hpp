// SPDX-License-Identifier: Apache-2.0
//
// Parameter files: YAML documents with a schema version and a list of named
// stations, each carrying exactly the BsParameters fields.
//
//   schema_version: 1
//   stations:
//     - name: my-macro
//       bs_type: Custom
//       p_pa_limit: 80.0
//       ...
//
// Unknown keys are rejected. p1_reference is optional.

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bspower/model.hpp"

namespace bspower {

inline constexpr int kSchemaVersion = 1;

struct ParameterFile {
  int schema_version = kSchemaVersion;
  std::vector<BsParameters> stations;

  /// nullptr when no station carries that name.
  const BsParameters* find(std::string_view name) const;

  bool operator==(const ParameterFile&) const = default;
};

/// Malformed document structure. key() names the offending key when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string key, const std::string& message)
      : std::runtime_error(message), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses and validates. Throws ParseError or ValidationError.
ParameterFile parse_parameters(std::string_view text);

/// Throws IoError, ParseError or ValidationError.
ParameterFile load_parameters(const std::filesystem::path& path);

std::string dump_parameters(const ParameterFile& file);
std::string dump_parameters(const BsParameters& params);

/// Writes dump_parameters(file) to path. Throws IoError.
void save_parameters(const ParameterFile& file, const std::filesystem::path& path);

}  // namespace bspower
