#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

namespace refsev {

// Append-only persistent key/value store backing the recursion memo.
//
// File layout: a header line "REFSEV-CHCACHE v1", then one record per line:
// key TAB value TAB fnv1a64-hex. On open, the first malformed or
// checksum-failing record and everything after it are cut off, which is how a
// torn write from an interrupted run is dropped. A different header is
// refused with kCache.
class CacheStore {
 public:
  static constexpr const char* kHeader = "REFSEV-CHCACHE v1";
  static constexpr const char* kEnvVar = "REFSEV_CACHE_DIR";

  explicit CacheStore(std::filesystem::path file);

  // File inside $REFSEV_CACHE_DIR, or nullopt when the variable is unset.
  static std::optional<std::filesystem::path> default_path();

  std::optional<std::string> get(const std::string& key) const;
  // First write wins; writing an existing key with a different value is kCache.
  void put(const std::string& key, const std::string& value);

  std::size_t size() const;
  std::size_t dropped_bytes() const { return dropped_bytes_; }
  const std::filesystem::path& path() const { return file_; }

 private:
  std::filesystem::path file_;
  mutable std::mutex mu_;
  std::unordered_map<std::string, std::string> records_;
  std::size_t dropped_bytes_ = 0;
};

std::string fnv1a64_hex(const std::string& text);

}  // namespace refsev
