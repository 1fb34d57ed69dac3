#include "spinhurwitz/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "spinhurwitz/errors.hpp"

namespace spinhurwitz {

using ojson = nlohmann::ordered_json;

std::filesystem::path cache_directory(const std::string& override_path) {
    if (!override_path.empty()) return override_path;
    if (const char* env = std::getenv("SPINHURWITZ_CACHE_DIR"); env && *env) return env;
    return ".spinhurwitz-cache";
}

std::filesystem::path cache_file_path(const std::filesystem::path& dir, int d) {
    return dir / ("spin-d" + std::to_string(d) + ".json");
}

std::string serialize_cache(const CacheFile& cache) {
    ojson j;
    j["format_version"] = cache.format_version;
    j["generator"] = cache.fingerprint;
    j["d"] = cache.d;

    ojson basis = ojson::array();
    for (const Partition& p : cache.algebra.basis) basis.push_back(p.parts());
    j["op_basis"] = std::move(basis);

    ojson thetas = ojson::array();
    for (const BigInt& t : cache.algebra.theta_values) thetas.push_back(t.to_string());
    j["theta"] = std::move(thetas);

    ojson sizes = ojson::array();
    for (std::uint64_t s : cache.algebra.class_sizes) sizes.push_back(s);
    j["class_size"] = std::move(sizes);

    ojson sparse = ojson::array();
    const int m = cache.algebra.size();
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int g = 0; g < m; ++g)
                if (std::int64_t v = cache.algebra.mult[a](g, b); v != 0)
                    sparse.push_back(ojson::array({a, b, g, v}));
    j["structure_constants"] = std::move(sparse);

    ojson slots = ojson::array();
    for (const SpectrumSlot& slot : cache.spectrum.slots) {
        ojson s;
        s["sign"] = to_string(slot.sign);
        s["c"] = slot.c.to_string();
        s["t"] = slot.t.to_string();
        s["dim"] = slot.dim.to_string();
        ojson f = ojson::array();
        for (const Rational& v : slot.f) f.push_back(v.to_string());
        s["f"] = std::move(f);
        slots.push_back(std::move(s));
    }
    j["spectrum"] = std::move(slots);
    return j.dump(2) + "\n";
}

CacheFile deserialize_cache(const std::string& text) {
    ojson j = ojson::parse(text);
    CacheFile cache;
    cache.format_version = j.at("format_version").get<int>();
    cache.fingerprint = j.at("generator").get<std::string>();
    cache.d = j.at("d").get<int>();

    ClassAlgebra& alg = cache.algebra;
    alg.d = cache.d;
    alg.order = group_order(cache.d);
    for (const auto& parts : j.at("op_basis"))
        alg.basis.emplace_back(parts.get<std::vector<int>>());
    for (const auto& t : j.at("theta"))
        alg.theta_values.push_back(BigInt::from_string(t.get<std::string>()));
    for (const auto& s : j.at("class_size")) alg.class_sizes.push_back(s.get<std::uint64_t>());

    const int m = alg.size();
    alg.mult.assign(m, Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>::Zero(m, m));
    for (const auto& entry : j.at("structure_constants")) {
        int a = entry.at(0).get<int>(), b = entry.at(1).get<int>(), g = entry.at(2).get<int>();
        alg.mult[a](g, b) = entry.at(3).get<std::int64_t>();
    }

    SpinSpectrum& spec = cache.spectrum;
    spec.d = cache.d;
    spec.order = alg.order;
    spec.basis = alg.basis;
    spec.theta_values = alg.theta_values;
    for (const auto& s : j.at("spectrum")) {
        SpectrumSlot slot;
        slot.sign = s.at("sign").get<std::string>() == "+" ? SignClass::plus : SignClass::minus;
        slot.c = Rational::from_string(s.at("c").get<std::string>());
        slot.t = Rational::from_string(s.at("t").get<std::string>());
        slot.dim = BigInt::from_string(s.at("dim").get<std::string>());
        for (const auto& f : s.at("f"))
            slot.f.push_back(Rational::from_string(f.get<std::string>()));
        spec.slots.push_back(std::move(slot));
    }
    return cache;
}

void save_cache(const std::filesystem::path& file, const CacheFile& cache) {
    std::error_code ec;
    std::filesystem::create_directories(file.parent_path(), ec);
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot open cache file for writing: " + file.string());
    out << serialize_cache(cache);
    if (!out) throw std::runtime_error("failed writing cache file: " + file.string());
}

std::optional<CacheFile> load_cache(const std::filesystem::path& file, int expected_d) {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        CacheFile cache = deserialize_cache(buffer.str());
        if (cache.format_version != kCacheFormatVersion) return std::nullopt;
        if (cache.d != expected_d) return std::nullopt;
        return cache;
    } catch (const std::exception&) {
        return std::nullopt;  // unreadable caches are recomputed
    }
}

CacheFile load_or_compute(int d, const std::string& cache_override, int jobs) {
    auto dir = cache_directory(cache_override);
    auto file = cache_file_path(dir, d);
    if (auto cached = load_cache(file, d)) return *cached;

    CacheFile cache;
    cache.d = d;
    cache.algebra = structure_constants(d, jobs);
    cache.spectrum = spin_spectrum(cache.algebra);
    try {
        save_cache(file, cache);
    } catch (const std::exception&) {
        // caching is best-effort for read paths; classdata surfaces IO errors
    }
    return cache;
}

}  // namespace spinhurwitz
