#include <doctest.h>

#include <filesystem>

#include "spinhurwitz/cache.hpp"

using namespace spinhurwitz;

TEST_CASE("cache serialization round trip is bit exact") {
    for (int d : {1, 2, 3, 4}) {
        CacheFile cache;
        cache.d = d;
        cache.algebra = structure_constants(d);
        cache.spectrum = spin_spectrum(cache.algebra);
        std::string text = serialize_cache(cache);
        CacheFile back = deserialize_cache(text);
        CHECK(serialize_cache(back) == text);
        CHECK(back.algebra.size() == cache.algebra.size());
        CHECK(back.spectrum.slots.size() == cache.spectrum.slots.size());
        for (std::size_t i = 0; i < cache.spectrum.slots.size(); ++i) {
            CHECK(back.spectrum.slots[i].t == cache.spectrum.slots[i].t);
            CHECK(back.spectrum.slots[i].sign == cache.spectrum.slots[i].sign);
            CHECK(back.spectrum.slots[i].f == cache.spectrum.slots[i].f);
        }
        for (int a = 0; a < cache.algebra.size(); ++a)
            CHECK(back.algebra.mult[a] == cache.algebra.mult[a]);
    }
}

TEST_CASE("serialization is deterministic") {
    CacheFile cache;
    cache.d = 3;
    cache.algebra = structure_constants(3);
    cache.spectrum = spin_spectrum(cache.algebra);
    CHECK(serialize_cache(cache) == serialize_cache(cache));
}

TEST_CASE("save and load through the filesystem") {
    auto dir = std::filesystem::temp_directory_path() / "spinhurwitz-test-cache";
    std::filesystem::remove_all(dir);
    CacheFile cache;
    cache.d = 3;
    cache.algebra = structure_constants(3);
    cache.spectrum = spin_spectrum(cache.algebra);
    auto file = cache_file_path(dir, 3);
    save_cache(file, cache);

    auto loaded = load_cache(file, 3);
    REQUIRE(loaded.has_value());
    CHECK(serialize_cache(*loaded) == serialize_cache(cache));
    CHECK_FALSE(load_cache(file, 4).has_value());
    CHECK_FALSE(load_cache(dir / "missing.json", 3).has_value());

    // stale versions are rejected, not migrated
    CacheFile stale = cache;
    stale.format_version = kCacheFormatVersion + 1;
    save_cache(file, stale);
    CHECK_FALSE(load_cache(file, 3).has_value());
    std::filesystem::remove_all(dir);
}

TEST_CASE("load_or_compute computes on a cold cache and reuses the file") {
    auto dir = std::filesystem::temp_directory_path() / "spinhurwitz-test-cache2";
    std::filesystem::remove_all(dir);
    CacheFile first = load_or_compute(2, dir.string(), 1);
    CHECK(first.d == 2);
    CHECK(std::filesystem::exists(cache_file_path(dir, 2)));
    CacheFile second = load_or_compute(2, dir.string(), 1);
    CHECK(serialize_cache(second) == serialize_cache(first));
    std::filesystem::remove_all(dir);
}
