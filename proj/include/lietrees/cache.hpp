#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace lietrees {

/// Environment variable that overrides the cache directory.
inline constexpr const char* kCacheDirEnv = "LIETREES_CACHE_DIR";

/// Content-addressed JSON store: the file name is a hash of the key and the
/// key is stored alongside the value to detect collisions. Writes go to a
/// temporary file that is then renamed into place.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  /// Directory from the environment variable, else `fallback`; nullopt if
  /// neither is set.
  static std::optional<ResultCache> open(std::optional<std::filesystem::path> fallback);

  std::optional<nlohmann::json> load(std::string_view key) const;
  void store(std::string_view key, const nlohmann::json& value) const;

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(std::string_view key) const;

 private:
  std::filesystem::path dir_;
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view data);

}  // namespace lietrees
