#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "noetherlab/version.hpp"

namespace nlab {

/// 64-bit FNV-1a over bytes; content addressing only, no adversarial use.
inline std::uint64_t content_hash(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

/// Content-addressed result cache: a hit requires the exact canonical key
/// and tool version; a payload whose stored hash does not match is treated
/// as a miss, never silently reused.
class ResultCache {
public:
  explicit ResultCache(std::string dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
  }

  bool enabled() const { return !dir_.empty(); }

  std::optional<nlohmann::ordered_json> lookup(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    auto path = path_for(key);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::ordered_json entry;
    try {
      in >> entry;
      if (entry.at("key_hash").get<std::string>() != hash_hex(key)) return std::nullopt;
      if (entry.at("version").get<std::string>() != kVersion) return std::nullopt;
      std::string payload = entry.at("payload").dump();
      if (entry.at("payload_hash").get<std::string>() != hash_hex(payload))
        return std::nullopt;  // corruption = miss
      return entry.at("payload");
    } catch (const nlohmann::json::exception&) {
      return std::nullopt;
    }
  }

  void store(const std::string& key, const nlohmann::ordered_json& payload) const {
    if (!enabled()) return;
    nlohmann::ordered_json entry;
    entry["key_hash"] = hash_hex(key);
    entry["version"] = kVersion;
    entry["timestamp"] = static_cast<long>(
        std::chrono::duration_cast<std::chrono::seconds>(
            std::chrono::system_clock::now().time_since_epoch())
            .count());
    entry["payload"] = payload;
    entry["payload_hash"] = hash_hex(payload.dump());
    std::ofstream out(path_for(key));
    out << entry.dump(2) << "\n";
  }

private:
  static std::string hash_hex(const std::string& s) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(content_hash(s)));
    return buf;
  }

  std::string path_for(const std::string& key) const {
    return dir_ + "/" + hash_hex(key) + ".json";
  }

  std::string dir_;
};

}  // namespace nlab
