#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "omex/errors.hpp"

namespace omex {

inline constexpr std::uint32_t kCacheFormatVersion = 1;

enum class CacheMode : std::uint8_t { exact = 0, mod2k = 1 };

struct CacheKey {
    long r = 1;
    long T = 0;
    CacheMode mode = CacheMode::exact;
    int k = 0;  // modulus exponent; 0 in exact mode

    bool operator==(const CacheKey&) const = default;

    // stable file name for this key (version lives inside the file)
    std::string file_name() const;
};

/// One cached coefficient table. Payload entries are decimal strings, so the
/// format is lossless for any integer size and language-neutral.
struct CacheEntry {
    CacheKey key;
    std::vector<std::string> payload;  // T+1 decimal-encoded coefficients
    std::uint32_t format_version = kCacheFormatVersion;
};

// Serializes and writes atomically (temp file + rename).
// Throws IoError when the directory cannot be written.
void cache_store(const std::filesystem::path& dir, const CacheEntry& entry);

// Reads and validates a cache file. Throws CorruptCache on structural or
// checksum failure, VersionMismatch when written by another format version.
CacheEntry cache_load_file(const std::filesystem::path& file);

// Lookup by key: nullopt on miss; propagates CorruptCache / VersionMismatch.
std::optional<CacheEntry> cache_load(const std::filesystem::path& dir, const CacheKey& key);

// Default cache directory: $OMEX_CACHE_DIR, else $XDG_CACHE_HOME/omex,
// else ~/.cache/omex, else a temp-dir fallback.
std::filesystem::path default_cache_dir();

}  // namespace omex
