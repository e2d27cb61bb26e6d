#pragma once
// On-disk cache with embedded checksums.
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace syzygy::cli {

std::string sha256_hex(const std::string& data);

class Cache {
 public:
  // Empty dir disables the cache.
  explicit Cache(std::filesystem::path dir);

  bool enabled() const { return !dir_.empty(); }
  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const std::string& kind, const std::string& key) const;

  // nullopt when absent; throws CacheCorruption when the checksum does not match.
  std::optional<std::string> load(const std::string& kind, const std::string& key);
  void store(const std::string& kind, const std::string& key, const std::string& body);

  const std::vector<std::string>& hits() const { return hits_; }
  const std::vector<std::string>& misses() const { return misses_; }

 private:
  std::filesystem::path dir_;
  std::vector<std::string> hits_, misses_;
};

// SYZYGY_CACHE_DIR overrides the default when no explicit directory is given.
std::filesystem::path resolve_cache_dir(const std::string& flag);

}  // namespace syzygy::cli
