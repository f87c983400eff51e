#pragma once

// On-disk persistence of the expensive Γ tables (X matrices and 𝔭_μ).
// Files carry a format version; a mismatched version is ignored and
// overwritten on the next save.

#include <filesystem>
#include <string>

namespace twc {

inline constexpr int kCacheFormatVersion = 1;

/// The explicit flag wins, then TWC_CACHE_DIR; empty means caching is off.
std::filesystem::path resolve_cache_dir(const std::string &flag);

struct CacheLoad {
  int x_levels = 0;
  int pfrak_entries = 0;
  bool stale = false;  // a file was present with another version
};

/// Loads whatever is present; a missing directory is not an error.
CacheLoad load_cache(const std::filesystem::path &dir);
/// Writes every table currently held in memory.
void save_cache(const std::filesystem::path &dir);

}  // namespace twc
