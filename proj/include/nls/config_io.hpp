#pragma once

#include <optional>
#include <string>

#include "nls/sweep.hpp"

namespace nls {

// JSON document mirroring SweepSpec, plus the optional output path. Key
// names match the field names; unknown keys are rejected.
struct RunConfig {
  SweepSpec sweep;
  std::optional<std::string> out;
};

// Parses and validates a config document. Errors name the offending key.
RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::string& path);

// Canonical JSON form with every key explicit.
std::string to_json_string(const RunConfig& cfg);

}  // namespace nls
