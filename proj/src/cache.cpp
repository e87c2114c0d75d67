#include "jackchar/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace jackchar {

namespace {
constexpr const char* kMagic = "jackchar-cache v1";
}

uint64_t fnv1a64(std::string_view data) {
  uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

CacheStore::CacheStore(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

CacheStore CacheStore::from_options(const std::string& flag_dir) {
  const char* env = std::getenv("JACKCHAR_CACHE_DIR");
  if (env && *env) return CacheStore(std::filesystem::path(env));
  if (!flag_dir.empty()) return CacheStore(std::filesystem::path(flag_dir));
  return CacheStore();
}

std::filesystem::path CacheStore::entry_path(const std::string& key) const {
  std::ostringstream name;
  name << std::hex << fnv1a64(key) << ".entry";
  return dir_ / name.str();
}

std::optional<std::string> CacheStore::get(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(entry_path(key), std::ios::binary);
  if (!in) return std::nullopt;

  std::string magic;
  if (!std::getline(in, magic) || magic != kMagic) return std::nullopt;
  size_t key_len = 0, payload_len = 0;
  uint64_t checksum = 0;
  std::string line;
  if (!std::getline(in, line)) return std::nullopt;
  try {
    key_len = std::stoull(line);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  std::string stored_key(key_len, '\0');
  if (!in.read(stored_key.data(), key_len) || in.get() != '\n') return std::nullopt;
  if (stored_key != key) return std::nullopt;  // hash collision or damage
  if (!std::getline(in, line)) return std::nullopt;
  try {
    payload_len = std::stoull(line);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (!std::getline(in, line)) return std::nullopt;
  try {
    checksum = std::stoull(line, nullptr, 16);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  std::string payload(payload_len, '\0');
  if (!in.read(payload.data(), payload_len)) return std::nullopt;
  if (in.get() != std::ifstream::traits_type::eof()) return std::nullopt;
  if (fnv1a64(payload) != checksum) return std::nullopt;
  return payload;
}

void CacheStore::put(const std::string& key, const std::string& payload) const {
  if (!enabled()) return;
  std::filesystem::path final_path = entry_path(key);
  std::filesystem::path tmp_path = final_path;
  tmp_path += ".tmp";

  {
    std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
    if (!out)
      throw std::runtime_error("cache: cannot open " + tmp_path.string() + " for writing");
    std::ostringstream checksum;
    checksum << std::hex << fnv1a64(payload);
    out << kMagic << '\n'
        << key.size() << '\n'
        << key << '\n'
        << payload.size() << '\n'
        << checksum.str() << '\n'
        << payload;
    out.flush();
    if (!out) throw std::runtime_error("cache: write failed for " + tmp_path.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp_path, final_path, ec);
  if (ec)
    throw std::runtime_error("cache: rename to " + final_path.string() + " failed: " +
                             ec.message());
}

}  // namespace jackchar
