#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace cubewalk::cli {

/// Provenance record written alongside every run. Replaying `arguments`
/// with the same tool version must reproduce `output_digest`.
struct RunManifest {
  std::vector<std::string> arguments;  // without the program name
  std::string tool_version;
  std::vector<std::string> inputs;
  std::optional<std::uint64_t> seed;
  std::string started_at;
  std::string finished_at;
  double wall_time_s = 0.0;
  std::string output_digest;  // sha256 of the emitted document
  int exit_code = 0;

  nlohmann::ordered_json to_json() const;
  static RunManifest from_json(const nlohmann::ordered_json& doc);
};

std::string sha256_hex(const std::string& data);
std::string utc_timestamp();

}  // namespace cubewalk::cli
