#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace jackchar {

uint64_t fnv1a64(std::string_view data);

// Content-addressed key/value store on disk. Entries are self-describing and
// checksummed: anything unreadable, truncated, or from another format
// version degrades to a miss, never to wrong data. Writes go through a
// temporary file and a rename, so a crashed writer cannot leave a partial
// entry behind.
class CacheStore {
 public:
  CacheStore() = default;  // disabled store: get misses, put is a no-op
  explicit CacheStore(std::filesystem::path dir);

  // Resolves the directory from the JACKCHAR_CACHE_DIR environment variable
  // first, then the given flag value; both empty yields a disabled store.
  static CacheStore from_options(const std::string& flag_dir);

  bool enabled() const { return !dir_.empty(); }
  const std::filesystem::path& directory() const { return dir_; }

  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, const std::string& payload) const;

 private:
  std::filesystem::path entry_path(const std::string& key) const;

  std::filesystem::path dir_;
};

}  // namespace jackchar
