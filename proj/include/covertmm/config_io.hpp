#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "covertmm/channel.hpp"
#include "covertmm/errors.hpp"

namespace covertmm {

/// Loads a config file (flat-key JSON; see README for the schema). An
/// empty path yields the benchmark defaults. Missing keys keep their
/// defaults; unknown keys, malformed values and out-of-range values throw
/// ConfigError with the offending field name.
SystemConfig load_config(const std::string& path);

/// Same, from an already-parsed JSON object.
SystemConfig config_from_json(const nlohmann::json& j);

/// Canonical JSON form of a config (dB/dBm/degree units at the boundary).
nlohmann::json config_to_json(const SystemConfig& cfg);

/// FNV-1a hash of the canonical JSON form; stamped into CSV metadata.
std::uint64_t config_hash(const SystemConfig& cfg);

}  // namespace covertmm
