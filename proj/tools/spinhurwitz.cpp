#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "spinhurwitz/cache.hpp"
#include "spinhurwitz/errors.hpp"
#include "spinhurwitz/hurwitz.hpp"
#include "spinhurwitz/oracle.hpp"
#include "spinhurwitz/tqft.hpp"
#include "spinhurwitz/verify.hpp"

namespace sh = spinhurwitz;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitResourceLimit = 3;

struct CommonOptions {
    std::string cache_dir;
    std::string format = "plain";
    std::string out_path;
    int jobs = 1;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_format = true) {
    cmd->add_option("--cache", opts.cache_dir,
                    "cache directory (default: $SPINHURWITZ_CACHE_DIR or ./.spinhurwitz-cache)");
    cmd->add_option("--jobs", opts.jobs, "worker threads for convolution (default 1)");
    cmd->add_option("--out", opts.out_path, "write output to a file instead of stdout");
    if (with_format)
        cmd->add_option("--format", opts.format, "output format: plain, json or csv")
            ->check(CLI::IsMember({"plain", "json", "csv"}));
}

void emit(const CommonOptions& opts, const std::string& text) {
    if (opts.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + opts.out_path);
    out << text;
}

sh::Parity parse_parity(const std::string& text) {
    if (text == "+" || text == "even") return sh::Parity::even;
    if (text == "-" || text == "odd") return sh::Parity::odd;
    throw sh::invalid_input_error("parity must be one of +, -, even, odd (got \"" + text + "\")");
}

std::string profiles_display(const sh::ProfileList& profiles) {
    if (profiles.profiles.empty()) return "";
    std::string s;
    for (std::size_t i = 0; i < profiles.profiles.size(); ++i) {
        if (i) s += ";";
        s += profiles.profiles[i].to_string();
    }
    return s;
}

ojson profiles_json(const sh::ProfileList& profiles) {
    ojson arr = ojson::array();
    for (const auto& p : profiles.profiles) arr.push_back(p.parts());
    return arr;
}

int run_classdata(int d, const CommonOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    sh::CacheFile cache;
    cache.d = d;
    cache.algebra = sh::structure_constants(d, opts.jobs);
    cache.spectrum = sh::spin_spectrum(cache.algebra);
    auto file = sh::cache_file_path(sh::cache_directory(opts.cache_dir), d);
    sh::save_cache(file, cache);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();

    std::ostringstream out;
    if (opts.format == "json") {
        ojson j;
        j["d"] = d;
        j["cache_file"] = file.string();
        j["basis_size"] = cache.algebra.size();
        j["spectrum_slots"] = cache.spectrum.slots.size();
        j["elapsed_ms"] = ms;
        out << j.dump(2) << "\n";
    } else {
        out << "wrote " << file.string() << "\n"
            << "OP(" << d << ") basis size " << cache.algebra.size() << ", "
            << cache.spectrum.slots.size() << " spectrum slots, " << ms << " ms\n";
    }
    emit(opts, out.str());
    return kExitOk;
}

int run_hurwitz(int d, int genus, const std::string& parity_text, const std::string& profile_text,
                bool formal, const CommonOptions& opts) {
    sh::Parity parity = parse_parity(parity_text);
    sh::ProfileList profiles = sh::parse_profiles(d, profile_text);
    sh::CacheFile cache = sh::load_or_compute(d, opts.cache_dir, opts.jobs);
    sh::HurwitzQuery query{d, genus, parity, profiles, formal};
    sh::HurwitzValue value = sh::normalized_value(query, cache.spectrum);

    std::ostringstream out;
    if (opts.format == "json") {
        ojson j;
        j["d"] = d;
        j["genus"] = genus;
        j["parity"] = sh::to_string(parity);
        j["profiles"] = profiles_json(profiles);
        j["normalized"] = value.normalized.to_string();
        j["unnormalized"] = value.unnormalized.to_string();
        j["chi_domain"] = value.chi_domain;
        j["chi_base"] = value.chi_base;
        j["formal"] = value.formal;
        out << j.dump(2) << "\n";
    } else if (opts.format == "csv") {
        out << "d,genus,parity,profiles,normalized,unnormalized,chi_domain,chi_base,formal\n"
            << d << "," << genus << "," << sh::to_string(parity) << ",\""
            << profiles_display(profiles) << "\"," << value.normalized << ","
            << value.unnormalized << "," << value.chi_domain << "," << value.chi_base << ","
            << (value.formal ? "true" : "false") << "\n";
    } else {
        out << "H(" << genus << "," << sh::to_string(parity) << ")";
        if (!profiles.profiles.empty()) out << "_" << profiles_display(profiles);
        out << ":\n"
            << "  normalized   = " << value.normalized << "\n"
            << "  unnormalized = " << value.unnormalized << "\n"
            << "  chi(C) = " << value.chi_domain << ", chi(D) = " << value.chi_base << "\n";
        if (value.formal) out << "  formal value: (0,-) has no geometric cover count\n";
    }
    emit(opts, out.str());
    return kExitOk;
}

int run_gt(int d, int genus, const std::string& parity_text, const CommonOptions& opts) {
    sh::Parity parity = parse_parity(parity_text);
    sh::CacheFile cache = sh::load_or_compute(d, opts.cache_dir, opts.jobs);
    sh::Rational value = sh::gt_invariant(d, genus, parity, cache.spectrum);

    std::ostringstream out;
    if (opts.format == "json") {
        ojson j;
        j["d"] = d;
        j["genus"] = genus;
        j["parity"] = sh::to_string(parity);
        j["gt"] = value.to_string();
        out << j.dump(2) << "\n";
    } else if (opts.format == "csv") {
        out << "d,genus,parity,gt\n"
            << d << "," << genus << "," << sh::to_string(parity) << "," << value << "\n";
    } else {
        out << "GT_" << d << "^{" << genus << "," << sh::to_string(parity) << "} = " << value
            << "\n";
    }
    emit(opts, out.str());
    return kExitOk;
}

int run_verify(const std::string& suite, int d_max, const CommonOptions& opts) {
    auto source = sh::computing_source(opts.jobs);
    auto reports = sh::run_suites(suite, d_max, source);
    std::ostringstream out;
    bool all_ok = true;
    int checks = 0;
    for (const auto& report : reports) {
        out << "suite " << report.suite << ":\n";
        for (const auto& line : report.lines) {
            ++checks;
            out << "  [" << (line.ok ? "PASS" : "FAIL") << "] " << line.label;
            if (!line.ok) out << "  lhs=" << line.lhs << " rhs=" << line.rhs;
            out << "\n";
        }
        all_ok = all_ok && report.ok();
    }
    out << (all_ok ? "all " : "FAILURES among ") << checks << " checks\n";
    emit(opts, out.str());
    return all_ok ? kExitOk : kExitVerificationFailure;
}

int run_oracle(int d, const std::string& profile_text, const CommonOptions& opts) {
    sh::ProfileList profiles = sh::parse_profiles(d, profile_text);
    auto orbits = sh::enumerate_genus0_monodromy(d, profiles);
    sh::Rational value = sh::spin_hurwitz_genus0_bruteforce(d, profiles);
    sh::Rational classical = sh::classical_hurwitz(d, profiles);

    std::ostringstream out;
    if (opts.format == "json") {
        ojson j;
        j["d"] = d;
        j["profiles"] = profiles_json(profiles);
        j["spin_hurwitz_genus0"] = value.to_string();
        j["classical_hurwitz"] = classical.to_string();
        ojson arr = ojson::array();
        for (const auto& orbit : orbits) {
            auto desc = sh::cover_descriptor(orbit.representative, orbit.orbit_size,
                                             orbit.aut_order);
            ojson o;
            o["orbit_size"] = orbit.orbit_size;
            o["aut_order"] = orbit.aut_order;
            o["parity"] = desc.parity;
            ojson comps = ojson::array();
            for (auto [deg, g] : desc.components)
                comps.push_back(ojson::array({deg, g}));
            o["components"] = comps;
            arr.push_back(std::move(o));
        }
        j["covers"] = std::move(arr);
        out << j.dump(2) << "\n";
    } else {
        out << "genus-0 covers of degree " << d << " with profiles "
            << (profiles.profiles.empty() ? "(none)" : profiles_display(profiles)) << ":\n";
        for (const auto& orbit : orbits) {
            auto desc = sh::cover_descriptor(orbit.representative, orbit.orbit_size,
                                             orbit.aut_order);
            out << "  orbit size " << orbit.orbit_size << ", |Aut| = " << orbit.aut_order
                << ", parity " << (desc.parity > 0 ? "+" : "-") << ", components";
            for (auto [deg, g] : desc.components) out << " (d=" << deg << ",g=" << g << ")";
            out << "\n";
        }
        out << "spin Hurwitz (genus 0, +) by enumeration = " << value << "\n"
            << "classical Hurwitz = " << classical << "\n";
    }
    emit(opts, out.str());
    return kExitOk;
}

int run_cobordism(int d, const std::string& expr_text, const CommonOptions& opts) {
    sh::CacheFile cache = sh::load_or_compute(d, opts.cache_dir, opts.jobs);
    sh::ExprPtr expr = sh::parse_cobordism(expr_text);
    sh::LinearMap map = sh::evaluate_expr(expr, cache.spectrum);

    auto tuple_label = [&](int index, int arity) {
        if (arity == 0) return std::string("()");
        std::vector<int> digits(arity);
        for (int i = arity - 1; i >= 0; --i) {
            digits[i] = index % map.m;
            index /= map.m;
        }
        std::string s;
        for (int i = 0; i < arity; ++i) s += cache.spectrum.basis[digits[i]].to_string();
        return s;
    };

    std::ostringstream out;
    if (opts.format == "json") {
        ojson j;
        j["d"] = d;
        j["expr"] = sh::to_string(expr);
        j["in_arity"] = map.in_arity;
        j["out_arity"] = map.out_arity;
        ojson rows = ojson::array();
        for (int r = 0; r < map.matrix.rows(); ++r) {
            ojson row = ojson::array();
            for (int c = 0; c < map.matrix.cols(); ++c)
                row.push_back(map.matrix(r, c).to_string());
            rows.push_back(std::move(row));
        }
        j["matrix"] = std::move(rows);
        out << j.dump(2) << "\n";
    } else if (map.is_scalar()) {
        out << "scalar = " << map.scalar() << "\n";
    } else {
        out << "linear map F^(x" << map.in_arity << ") -> F^(x" << map.out_arity << "), dim F = "
            << map.m << " over OP(" << d << ")\n";
        for (int r = 0; r < map.matrix.rows(); ++r) {
            out << "  " << tuple_label(r, map.out_arity) << " :";
            for (int c = 0; c < map.matrix.cols(); ++c) out << " " << map.matrix(r, c);
            out << "\n";
        }
        if (map.in_arity > 0) {
            out << "  columns:";
            for (int c = 0; c < map.matrix.cols(); ++c) out << " " << tuple_label(c, map.in_arity);
            out << "\n";
        }
    }
    emit(opts, out.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spin Hurwitz numbers via the Sergeev class algebra"};
    app.require_subcommand(1);

    CommonOptions opts;
    int d = 1, genus = 0, d_max = 4;
    std::string parity = "+", profiles, suite = "all", expr;
    bool formal = false;

    auto* classdata = app.add_subcommand("classdata", "compute and cache algebra + spectrum");
    classdata->add_option("--d", d, "degree")->required();
    add_common(classdata, opts);

    auto* hurwitz = app.add_subcommand("hurwitz", "evaluate a spin Hurwitz number");
    hurwitz->add_option("--d", d, "degree")->required();
    hurwitz->add_option("--genus", genus, "base-curve genus")->required();
    hurwitz->add_option("--parity", parity, "spin parity: +, -, even, odd")->required();
    hurwitz->add_option("--profiles", profiles, "ramification profiles, e.g. \"(3,1);(3,1)\"");
    hurwitz->add_flag("--formal", formal, "allow the formal (0,-) value");
    add_common(hurwitz, opts);

    auto* gt = app.add_subcommand("gt", "dimension-zero local invariant (etale case)");
    gt->add_option("--d", d, "degree")->required();
    gt->add_option("--genus", genus, "base-curve genus")->required();
    gt->add_option("--parity", parity, "spin parity: +, -, even, odd")->required();
    add_common(gt, opts);

    auto* verify = app.add_subcommand("verify", "run a property suite");
    verify->add_option("--suite", suite, "one of: axioms, census, orthogonality, gluing, routes, "
                                         "tqft, oracle, lemma3, all");
    verify->add_option("--d", d_max, "maximum degree (suites cap it further)");
    add_common(verify, opts, /*with_format=*/false);

    auto* oracle = app.add_subcommand("oracle", "brute-force genus-0 enumeration");
    oracle->add_option("--d", d, "degree")->required();
    oracle->add_option("--profiles", profiles, "ramification profiles");
    add_common(oracle, opts);

    auto* cobordism = app.add_subcommand("cobordism", "evaluate a cobordism expression");
    cobordism->add_option("--d", d, "degree")->required();
    cobordism->add_option("--expr", expr, "expression, e.g. \"cap ; handle ; cup\"")->required();
    add_common(cobordism, opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (classdata->parsed()) return run_classdata(d, opts);
        if (hurwitz->parsed()) return run_hurwitz(d, genus, parity, profiles, formal, opts);
        if (gt->parsed()) return run_gt(d, genus, parity, opts);
        if (verify->parsed()) return run_verify(suite, d_max, opts);
        if (oracle->parsed()) return run_oracle(d, profiles, opts);
        if (cobordism->parsed()) return run_cobordism(d, expr, opts);
    } catch (const sh::resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const sh::invalid_input_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitOk;
}
