#include "cache.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "syzygy/error.hpp"

namespace syzygy::cli {

namespace fs = std::filesystem;

namespace {
constexpr const char* kHeader = "# syzygy-cache sha256 ";
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr))
    throw InternalError("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

Cache::Cache(fs::path dir) : dir_(std::move(dir)) {}

fs::path Cache::path_for(const std::string& kind, const std::string& key) const {
  return dir_ / kind / (sha256_hex(key).substr(0, 24) + ".txt");
}

std::optional<std::string> Cache::load(const std::string& kind, const std::string& key) {
  if (!enabled()) return std::nullopt;
  const fs::path p = path_for(kind, key);
  std::ifstream in(p, std::ios::binary);
  if (!in) {
    misses_.push_back(p.string());
    return std::nullopt;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  const std::string header(kHeader);
  auto nl = text.find('\n');
  if (text.compare(0, header.size(), header) != 0 || nl == std::string::npos)
    throw CacheCorruption("cache file has no checksum header: " + p.string());
  const std::string sum = text.substr(header.size(), nl - header.size());
  std::string rest = text.substr(nl + 1);
  // second line records the key so hash collisions are detected too
  auto nl2 = rest.find('\n');
  if (nl2 == std::string::npos) throw CacheCorruption("truncated cache file: " + p.string());
  if (sha256_hex(rest) != sum) throw CacheCorruption("checksum mismatch in " + p.string());
  if (rest.substr(0, nl2) != "# key " + key) throw CacheCorruption("cache key mismatch in " + p.string());
  hits_.push_back(p.string());
  return rest.substr(nl2 + 1);
}

void Cache::store(const std::string& kind, const std::string& key, const std::string& body) {
  if (!enabled()) return;
  const fs::path p = path_for(kind, key);
  fs::create_directories(p.parent_path());
  const std::string rest = "# key " + key + "\n" + body;
  const fs::path tmp = p.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidInput("cannot write cache file " + tmp.string());
    out << kHeader << sha256_hex(rest) << "\n" << rest;
  }
  fs::rename(tmp, p);
}

fs::path resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("SYZYGY_CACHE_DIR"); env && *env) return env;
  return ".syzygy-cache";
}

}  // namespace syzygy::cli
