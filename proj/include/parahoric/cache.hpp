#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace parahoric {

// Write-once store of basis products T_x T_y, optionally persisted as
// tab-separated lines: type, parameter tag, cutoff, x key, y key, value.
// Values are opaque serialized expansions. Entries are cutoff-independent, so
// the cutoff column is informational only.
class StructureCache {
 public:
  StructureCache() = default;
  // Empty directory means memory-only.
  explicit StructureCache(std::string dir);

  static std::string defaultDirectory();  // PARAHORIC_CACHE_DIR or empty

  const std::string& directory() const { return dir_; }
  bool persistent() const { return !dir_.empty(); }
  std::string filePath() const;

  std::optional<std::string> lookup(const std::string& type, const std::string& param, const std::string& x,
                                    const std::string& y) const;
  void insert(const std::string& type, const std::string& param, int cutoff, const std::string& x,
              const std::string& y, const std::string& value);
  // Appends entries added since the last load/flush.
  void flush();

  struct Stat {
    std::size_t entries = 0;
    std::size_t bytes = 0;
    std::map<std::string, std::size_t> perType;
  };
  Stat stat() const;
  void clear();
  std::size_t size() const;

 private:
  using Key = std::tuple<std::string, std::string, std::string, std::string>;
  void load();
  std::string dir_;
  mutable std::mutex mu_;
  std::map<Key, std::string> entries_;
  std::vector<std::string> pending_;
};

}  // namespace parahoric
