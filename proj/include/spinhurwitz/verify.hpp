#pragma once

#include <functional>
#include <string>
#include <vector>

#include "spinhurwitz/sergeev.hpp"
#include "spinhurwitz/spectral.hpp"

namespace spinhurwitz {

struct CheckLine {
    std::string label;
    std::string lhs, rhs;
    bool ok;
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckLine> lines;

    bool ok() const {
        for (const auto& l : lines)
            if (!l.ok) return false;
        return true;
    }
    int failures() const {
        int n = 0;
        for (const auto& l : lines) n += !l.ok;
        return n;
    }
};

/// Provider for (algebra, spectrum) pairs so suites can share cached data.
struct SpectrumSource {
    std::function<const ClassAlgebra&(int)> algebra;
    std::function<const SpinSpectrum&(int)> spectrum;
};
/// In-memory source that computes on first use.
SpectrumSource computing_source(int jobs = 1);

VerifyReport verify_axioms(int d_max, const SpectrumSource& source, unsigned seed = 20240915);
VerifyReport verify_census(int d_max);
VerifyReport verify_orthogonality_suite(int d_max, const SpectrumSource& source);
VerifyReport verify_gluing(int d_max, const SpectrumSource& source);
VerifyReport verify_routes(int d_max, const SpectrumSource& source);
VerifyReport verify_tqft(int d_max, const SpectrumSource& source, unsigned seed = 20240915);
VerifyReport verify_oracle(int d_max, const SpectrumSource& source);
VerifyReport verify_two_torsion(int d_max);

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"axioms",  "census", "orthogonality",
                                                "gluing",  "routes", "tqft",
                                                "oracle",  "lemma3", "all"};
    return names;
}

/// Runs one named suite (or "all") at its default degree limits, capped by
/// d_max when that is smaller.
std::vector<VerifyReport> run_suites(const std::string& name, int d_max,
                                     const SpectrumSource& source);

/// All size-<=k multisets over OP(d), each as a ProfileList.
std::vector<ProfileList> profile_multisets(int d, int max_count);

}  // namespace spinhurwitz
