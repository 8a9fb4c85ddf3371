#include "manifest.hpp"

#include <openssl/evp.h>

#include <array>
#include <chrono>
#include <ctime>
#include <stdexcept>

namespace cubewalk::cli {

nlohmann::ordered_json RunManifest::to_json() const {
  nlohmann::ordered_json out{{"arguments", arguments},
                             {"tool_version", tool_version},
                             {"inputs", inputs}};
  out["seed"] = seed ? nlohmann::ordered_json(*seed) : nlohmann::ordered_json(nullptr);
  out["started_at"] = started_at;
  out["finished_at"] = finished_at;
  out["wall_time_s"] = wall_time_s;
  out["output_digest"] = output_digest;
  out["exit_code"] = exit_code;
  return out;
}

RunManifest RunManifest::from_json(const nlohmann::ordered_json& doc) {
  RunManifest m;
  m.arguments = doc.at("arguments").get<std::vector<std::string>>();
  m.tool_version = doc.at("tool_version").get<std::string>();
  m.inputs = doc.value("inputs", std::vector<std::string>{});
  if (doc.contains("seed") && !doc.at("seed").is_null()) {
    m.seed = doc.at("seed").get<std::uint64_t>();
  }
  m.started_at = doc.value("started_at", "");
  m.finished_at = doc.value("finished_at", "");
  m.wall_time_s = doc.value("wall_time_s", 0.0);
  m.output_digest = doc.at("output_digest").get<std::string>();
  m.exit_code = doc.value("exit_code", 0);
  return m;
}

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::array<char, 32> buf{};
  std::strftime(buf.data(), buf.size(), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf.data();
}

}  // namespace cubewalk::cli
