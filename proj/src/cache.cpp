#include "parahoric/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace parahoric {

namespace fs = std::filesystem;

StructureCache::StructureCache(std::string dir) : dir_(std::move(dir)) {
  if (persistent()) load();
}

std::string StructureCache::defaultDirectory() {
  const char* env = std::getenv("PARAHORIC_CACHE_DIR");
  return env ? std::string(env) : std::string();
}

std::string StructureCache::filePath() const { return (fs::path(dir_) / "structure_constants.tsv").string(); }

void StructureCache::load() {
  std::ifstream in(filePath());
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, '\t')) f.push_back(field);
    if (f.size() != 6) continue;  // tolerate a truncated final line
    entries_.emplace(Key{f[0], f[1], f[3], f[4]}, f[5]);
  }
}

std::optional<std::string> StructureCache::lookup(const std::string& type, const std::string& param,
                                                  const std::string& x, const std::string& y) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = entries_.find(Key{type, param, x, y});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void StructureCache::insert(const std::string& type, const std::string& param, int cutoff, const std::string& x,
                            const std::string& y, const std::string& value) {
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, fresh] = entries_.emplace(Key{type, param, x, y}, value);
  if (!fresh) return;
  if (persistent())
    pending_.push_back(type + "\t" + param + "\t" + std::to_string(cutoff) + "\t" + x + "\t" + y + "\t" + value);
}

void StructureCache::flush() {
  std::lock_guard<std::mutex> lock(mu_);
  if (!persistent() || pending_.empty()) return;
  fs::create_directories(dir_);
  std::ofstream out(filePath(), std::ios::app);
  for (const auto& l : pending_) out << l << '\n';
  pending_.clear();
}

StructureCache::Stat StructureCache::stat() const {
  std::lock_guard<std::mutex> lock(mu_);
  Stat s;
  s.entries = entries_.size();
  for (const auto& [k, v] : entries_) ++s.perType[std::get<0>(k)];
  std::error_code ec;
  if (persistent() && fs::exists(filePath(), ec)) s.bytes = fs::file_size(filePath(), ec);
  return s;
}

void StructureCache::clear() {
  std::lock_guard<std::mutex> lock(mu_);
  entries_.clear();
  pending_.clear();
  std::error_code ec;
  if (persistent()) fs::remove(filePath(), ec);
}

std::size_t StructureCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

}  // namespace parahoric
