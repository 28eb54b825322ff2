#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "report.hpp"

namespace kfin::app {

inline constexpr const char* kCacheEnv = "KFIN_CACHE_DIR";

std::string sha256_hex(std::string_view data);

/// --cache-dir wins over the environment; nullopt disables caching.
std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag);

/// File cache of reports, one JSON document per entry named by the key hash.
class ReportCache {
 public:
  explicit ReportCache(std::filesystem::path dir);

  /// SHA-256 over (schema, command, canonical spec, parameters).
  static std::string key(const std::string& command, const std::string& canonical_spec, const Json& params);

  std::optional<Json> load(const std::string& key) const;
  void store(const std::string& key, const Json& report) const;
  std::filesystem::path path_for(const std::string& key) const { return dir_ / (key + ".json"); }

 private:
  std::filesystem::path dir_;
};

}  // namespace kfin::app
