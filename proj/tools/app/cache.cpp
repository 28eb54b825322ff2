#include "cache.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "kfin/error.hpp"

namespace kfin::app {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return std::filesystem::path(flag);
  if (const char* env = std::getenv(kCacheEnv); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

ReportCache::ReportCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw InvalidArgument("cannot create cache directory " + dir_.string() + ": " + ec.message());
}

std::string ReportCache::key(const std::string& command, const std::string& canonical_spec, const Json& params) {
  const Json material{{"schema", kSchema}, {"command", command}, {"spec", canonical_spec}, {"params", params}};
  return sha256_hex(material.dump());
}

std::optional<Json> ReportCache::load(const std::string& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  const auto entry = Json::parse(in, nullptr, false);
  if (entry.is_discarded() || !entry.contains("report") || entry.value("key", "") != key) return std::nullopt;
  if (entry["report"].value("schema", "") != kSchema) return std::nullopt;
  return entry["report"];
}

void ReportCache::store(const std::string& key, const Json& report) const {
  const auto now = std::chrono::system_clock::now();
  const auto seconds = std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count();
  const Json entry{{"key", key}, {"created_at", seconds}, {"report", report}};

  std::ostringstream tmp_name;
  tmp_name << key << ".tmp." << std::this_thread::get_id();
  const auto tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp);
    if (!out) throw InvalidArgument("cannot write cache entry in " + dir_.string());
    out << entry.dump(2) << "\n";
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path_for(key), ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace kfin::app
