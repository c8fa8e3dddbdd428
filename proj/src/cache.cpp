#include "translat/cache.hpp"

#include <unistd.h>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace translat {

namespace {
std::atomic<bool> g_enabled{true};
}

std::filesystem::path cache_directory() {
  if (const char* env = std::getenv("TRANSFER_LATTICE_CACHE"); env && *env)
    return std::filesystem::path(env);
  return std::filesystem::path(".cache");
}

void set_cache_enabled(bool on) { g_enabled = on; }
bool cache_enabled() { return g_enabled; }

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::optional<nlohmann::json> cache_get(const std::string& key_material) {
  if (!g_enabled) return std::nullopt;
  auto path = cache_directory() / (fnv1a_hex(key_material) + ".json");
  std::ifstream in(path);
  if (!in) return std::nullopt;
  nlohmann::json entry = nlohmann::json::parse(in, nullptr, false);
  if (entry.is_discarded() || !entry.is_object()) return std::nullopt;
  if (entry.value("version", -1) != kCacheVersion) return std::nullopt;
  if (entry.value("key", std::string{}) != key_material) return std::nullopt;
  if (!entry.contains("value")) return std::nullopt;
  return entry["value"];
}

void cache_put(const std::string& key_material, const nlohmann::json& value) {
  if (!g_enabled) return;
  std::error_code ec;
  auto dir = cache_directory();
  std::filesystem::create_directories(dir, ec);
  if (ec) return;
  nlohmann::json entry{{"version", kCacheVersion}, {"key", key_material}, {"value", value}};
  auto final_path = dir / (fnv1a_hex(key_material) + ".json");
  auto tmp_path = dir / (fnv1a_hex(key_material) + ".tmp." +
                         std::to_string(static_cast<unsigned>(::getpid())));
  {
    std::ofstream out(tmp_path);
    if (!out) return;
    out << entry.dump();
  }
  std::filesystem::rename(tmp_path, final_path, ec);
  if (ec) std::filesystem::remove(tmp_path, ec);
}

}  // namespace translat
