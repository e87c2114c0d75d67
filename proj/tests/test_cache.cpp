#include "jackchar/cache.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

using jackchar::CacheStore;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const char* tag) {
  fs::path dir = fs::temp_directory_path() / (std::string("jackchar-cache-test-") + tag);
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("fnv1a64 known vectors") {
  CHECK(jackchar::fnv1a64("") == 14695981039346656037ull);
  CHECK(jackchar::fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(jackchar::fnv1a64("foobar") == 0x85944171f73967e8ull);
}

TEST_CASE("cache round trip") {
  CacheStore store(fresh_dir("roundtrip"));
  REQUIRE(store.enabled());
  CHECK_FALSE(store.get("absent").has_value());

  std::string payload = "line1\nline2\n";
  payload.push_back('\0');
  payload += "binary tail";
  store.put("theta:n=4", payload);
  auto back = store.get("theta:n=4");
  REQUIRE(back.has_value());
  CHECK(*back == payload);

  store.put("theta:n=4", "replaced");
  CHECK(*store.get("theta:n=4") == "replaced");

  store.put("empty", "");
  REQUIRE(store.get("empty").has_value());
  CHECK(store.get("empty")->empty());

  int entries = 0;
  for (const auto& file : fs::directory_iterator(store.directory())) {
    CHECK(file.path().extension() == ".entry");
    ++entries;
  }
  CHECK(entries == 2);
}

TEST_CASE("disabled store is inert") {
  CacheStore store;
  CHECK_FALSE(store.enabled());
  store.put("k", "v");
  CHECK_FALSE(store.get("k").has_value());
}

TEST_CASE("damage degrades to a miss") {
  CacheStore store(fresh_dir("damage"));
  store.put("key", "payload-payload-payload");

  fs::path entry;
  for (const auto& file : fs::directory_iterator(store.directory())) entry = file.path();
  REQUIRE_FALSE(entry.empty());

  SUBCASE("flipped payload byte") {
    std::fstream f(entry, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(-3, std::ios::end);
    f.put('X');
    f.close();
    CHECK_FALSE(store.get("key").has_value());
  }
  SUBCASE("truncation") {
    fs::resize_file(entry, fs::file_size(entry) - 4);
    CHECK_FALSE(store.get("key").has_value());
  }
  SUBCASE("format version bump") {
    std::ifstream in(entry, std::ios::binary);
    std::string body((std::istreambuf_iterator<char>(in)), {});
    in.close();
    body.replace(body.find("v1"), 2, "v9");
    std::ofstream out(entry, std::ios::binary | std::ios::trunc);
    out << body;
    out.close();
    CHECK_FALSE(store.get("key").has_value());
  }
  SUBCASE("rewrite after miss recovers") {
    fs::resize_file(entry, 3);
    CHECK_FALSE(store.get("key").has_value());
    store.put("key", "fresh");
    CHECK(*store.get("key") == "fresh");
  }
}

TEST_CASE("no temporary files survive a put") {
  CacheStore store(fresh_dir("tmpfiles"));
  for (int i = 0; i < 20; ++i) store.put("key" + std::to_string(i), "value");
  for (const auto& file : fs::directory_iterator(store.directory()))
    CHECK(file.path().extension() == ".entry");
}

TEST_CASE("environment variable outranks the flag") {
  fs::path env_dir = fresh_dir("envdir");
  fs::path flag_dir = fresh_dir("flagdir");

  setenv("JACKCHAR_CACHE_DIR", env_dir.c_str(), 1);
  CacheStore from_env = CacheStore::from_options(flag_dir.string());
  CHECK(from_env.directory() == env_dir);

  unsetenv("JACKCHAR_CACHE_DIR");
  CacheStore from_flag = CacheStore::from_options(flag_dir.string());
  CHECK(from_flag.directory() == flag_dir);

  CacheStore disabled = CacheStore::from_options("");
  CHECK_FALSE(disabled.enabled());
}
