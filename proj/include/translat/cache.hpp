#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace translat {

// Persistent computation cache. Entries live under the directory named by
// TRANSFER_LATTICE_CACHE (default ".cache"), one JSON file per entry:
// {"version": N, "key": <full key material>, "value": ...}. The stored key is
// verified on read, so hash collisions and stale formats fall back to a miss.
// Writes go through a temp file plus rename, safe for concurrent processes.
// The cache is an optimization only; deleting it never changes results.

inline constexpr int kCacheVersion = 1;

std::filesystem::path cache_directory();
void set_cache_enabled(bool on);
bool cache_enabled();

std::optional<nlohmann::json> cache_get(const std::string& key_material);
void cache_put(const std::string& key_material, const nlohmann::json& value);

std::string fnv1a_hex(const std::string& data);

}  // namespace translat
