#pragma once

#include <filesystem>
#include <memory>

#include "nhq/nh.hpp"

namespace nhq {

// On-disk cache of built representations, keyed by (n, l, p).  Each entry
// is a versioned binary blob plus a JSON manifest recording dimensions and
// a checksum.  Writes go to a temporary file and are renamed into place;
// anything unreadable (missing, truncated, bad checksum, old version) is
// treated as absent and rebuilt.
inline constexpr uint32_t cache_format = 1;

// explicit directory, else $NHQ_CACHE_DIR, else empty (caching disabled)
std::filesystem::path cache_directory(const std::string& explicit_dir = "");

// the `version` parameter exists so tests can exercise format bumps
bool save_rep(const NHRep& A, const std::filesystem::path& dir,
              uint32_t version = cache_format);
std::unique_ptr<NHRep> load_rep(int n, int l, uint32_t p,
                                const std::filesystem::path& dir,
                                uint32_t version = cache_format);

// load if possible, otherwise build and (best effort) store
std::unique_ptr<NHRep> cached_rep(int n, int l, uint32_t p,
                                  const std::filesystem::path& dir);

}  // namespace nhq
