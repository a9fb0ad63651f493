#pragma once

#include <orbitft/serialize.hpp>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace orbitft {

// flag value > ORBITFOURIER_CACHE env var > .orbitfourier-cache under cwd
std::filesystem::path resolve_cache_dir(const std::string& flag_value);

// content address: schema, n, class, cartan, component, engine
std::string cache_key(int schema, int n, const std::vector<int>& levi, int cartan,
                      const std::vector<int>& real_order_1based,
                      const std::vector<int>& pair_signs, const std::string& engine);
std::string cache_key(const FormulaRecord& r);

// atomic write: temp file in the same directory, then rename
void cache_put(const std::filesystem::path& dir, const std::string& key, const std::string& payload);

// Returns the validated record, or nothing. A present-but-unusable entry
// (unparsable, inconsistent, or stored under the wrong key) is a miss; the
// reason is appended to *warning when given.
std::optional<FormulaRecord> cache_get(const std::filesystem::path& dir, const std::string& key,
                                       std::string* warning = nullptr);

std::vector<std::string> cache_list(const std::filesystem::path& dir);
int cache_clear(const std::filesystem::path& dir);

}
