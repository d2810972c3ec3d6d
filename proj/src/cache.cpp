#include "lietrees/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>

namespace lietrees {

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<ResultCache> ResultCache::open(std::optional<std::filesystem::path> fallback) {
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) return ResultCache(env);
  if (fallback && !fallback->empty()) return ResultCache(*fallback);
  return std::nullopt;
}

std::filesystem::path ResultCache::path_for(std::string_view key) const {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(fnv1a(key)));
  return dir_ / name;
}

std::optional<nlohmann::json> ResultCache::load(std::string_view key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    auto j = nlohmann::json::parse(in);
    if (!j.is_object() || j.value("key", "") != key || !j.contains("value")) return std::nullopt;
    return j["value"];
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void ResultCache::store(std::string_view key, const nlohmann::json& value) const {
  std::filesystem::create_directories(dir_);
  auto target = path_for(key);
  std::random_device rd;
  auto tmp = target;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << nlohmann::json{{"key", std::string(key)}, {"value", value}}.dump(2) << '\n';
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace lietrees
