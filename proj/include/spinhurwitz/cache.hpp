#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "spinhurwitz/sergeev.hpp"
#include "spinhurwitz/spectral.hpp"

namespace spinhurwitz {

inline constexpr int kCacheFormatVersion = 1;
inline constexpr const char* kGeneratorFingerprint = "spinhurwitz-core/1.0";

/// Persisted algebra + spectrum for one degree.  Rationals and big integers
/// are serialized as canonical decimal strings ("num/den"), so a load/save
/// round trip is bit-exact; basis order matches the canonical OP(d) order.
struct CacheFile {
    int format_version = kCacheFormatVersion;
    std::string fingerprint = kGeneratorFingerprint;
    int d = 1;
    ClassAlgebra algebra;
    SpinSpectrum spectrum;
};

/// Directory that holds per-degree cache files.  Resolution order:
/// explicit path option, SPINHURWITZ_CACHE_DIR, ./.spinhurwitz-cache.
std::filesystem::path cache_directory(const std::string& override_path);
std::filesystem::path cache_file_path(const std::filesystem::path& dir, int d);

std::string serialize_cache(const CacheFile& cache);  // deterministic JSON text
CacheFile deserialize_cache(const std::string& text);

void save_cache(const std::filesystem::path& file, const CacheFile& cache);
/// Returns nothing when the file is absent or carries a stale format version
/// (stale caches are recomputed, not migrated).
std::optional<CacheFile> load_cache(const std::filesystem::path& file, int expected_d);

/// Load from cache when possible, otherwise compute (and persist best-effort).
CacheFile load_or_compute(int d, const std::string& cache_override, int jobs);

}  // namespace spinhurwitz
