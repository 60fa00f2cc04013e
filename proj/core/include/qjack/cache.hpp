#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "qjack/jack.hpp"

namespace qjack {

inline constexpr int kCacheSchema = 1;

// Directory-backed store for expensive artifacts.  Every file is JSON with a
// "schema" tag; missing, unreadable, malformed, or mismatched files count as
// absent and the caller recomputes.  Writes go through a temporary file and a
// rename so readers never observe partial content.
class DiskCache {
public:
  explicit DiskCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }

  std::optional<nlohmann::json> load(const std::string& key) const;
  void store(const std::string& key, const nlohmann::json& value) const;

  int hits() const { return hits_; }
  int misses() const { return misses_; }

private:
  std::filesystem::path dir_;
  mutable int hits_ = 0;
  mutable int misses_ = 0;
};

std::string table_key(int weight);
std::string jack_key(const Partition& la, JackNorm norm, Basis basis);

// Per-weight action table through the cache.  Only the off-diagonal rows are
// stored; ordering and diagonal are recomputed on load and validated by
// ActionTable::from_parts.
ActionTable cached_table(const DiskCache& cache, int weight);

// Per-shape expansion through the cache (iteration method on a miss).
SymExpr cached_jack(const DiskCache& cache, const Partition& la, JackNorm norm, Basis basis);

} // namespace qjack
