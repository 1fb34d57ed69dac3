// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.
// Every equality here is an exact rational identity (tolerance zero).

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "spinhurwitz/hurwitz.hpp"
#include "spinhurwitz/oracle.hpp"
#include "spinhurwitz/verify.hpp"

namespace sh = spinhurwitz;

namespace {

sh::Partition P(std::vector<int> parts) { return sh::Partition(std::move(parts)); }
sh::Rational Q(std::int64_t n, std::int64_t d) {
    return sh::Rational(sh::BigInt(n), sh::BigInt(d));
}

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool report_ok(const sh::VerifyReport& report, std::string& detail) {
    if (report.ok()) {
        detail = std::to_string(report.lines.size()) + " checks";
        return true;
    }
    for (const auto& line : report.lines) {
        if (!line.ok) {
            detail = "failed: " + line.label + " (lhs=" + line.lhs + ", rhs=" + line.rhs + ")";
            return false;
        }
    }
    return false;
}

}  // namespace

int main() {
    auto source = sh::computing_source(1);
    std::vector<Criterion> criteria;

    criteria.push_back({"1 oracle-formula agreement at genus 0 (d <= 4, k <= 3)",
                        [&](std::string& detail) {
        int checked = 0;
        for (int d = 1; d <= 4; ++d) {
            const auto& spec = source.spectrum(d);
            for (const auto& profiles : sh::profile_multisets(d, 3)) {
                sh::Rational brute = sh::spin_hurwitz_genus0_bruteforce(d, profiles);
                sh::HurwitzQuery q{d, 0, sh::Parity::even, profiles, false};
                sh::Rational closed = sh::normalized_value(q, spec).unnormalized;
                ++checked;
                if (!(brute == closed)) {
                    detail = "mismatch at d=" + std::to_string(d);
                    return false;
                }
            }
        }
        // pinned spot values
        if (!(sh::spin_hurwitz_genus0_bruteforce(3, sh::ProfileList(3, {P({3}), P({3})})) ==
              Q(1, 3))) {
            detail = "H^{0,+}_{(3),(3)} != 1/3";
            return false;
        }
        if (!(sh::spin_hurwitz_genus0_bruteforce(2, sh::ProfileList(2, {})) == Q(1, 2))) {
            detail = "H^{0,+} at d=2 != 1/2";
            return false;
        }
        if (!(sh::spin_hurwitz_genus0_bruteforce(3, sh::ProfileList(3, {})) == Q(1, 6))) {
            detail = "H^{0,+} at d=3 != 1/6";
            return false;
        }
        detail = std::to_string(checked) + " profile multisets + 3 spot values";
        return true;
    }});

    criteria.push_back({"2 degree-1 and degree-2 closed values (h <= 3)",
                        [&](std::string& detail) {
        const auto& spec1 = source.spectrum(1);
        const auto& spec2 = source.spectrum(2);
        for (int h = 0; h <= 3; ++h) {
            sh::HurwitzQuery q1{1, h, sh::Parity::even, sh::ProfileList(1, {}), false};
            if (!(sh::normalized_value(q1, spec1).unnormalized == sh::Rational(1))) {
                detail = "d=1 even value wrong at h=" + std::to_string(h);
                return false;
            }
            sh::HurwitzQuery q2{2, h, sh::Parity::even, sh::ProfileList(2, {}), false};
            if (!(sh::normalized_value(q2, spec2).unnormalized == sh::Rational::two_pow(h - 1))) {
                detail = "d=2 even value wrong at h=" + std::to_string(h);
                return false;
            }
            if (h >= 1) {
                sh::HurwitzQuery qm{1, h, sh::Parity::odd, sh::ProfileList(1, {}), false};
                if (!(sh::normalized_value(qm, spec1).unnormalized == sh::Rational(-1))) {
                    detail = "d=1 odd value wrong at h=" + std::to_string(h);
                    return false;
                }
            }
        }
        // h = 0 cross-checked against the enumeration oracle
        if (!(sh::spin_hurwitz_genus0_bruteforce(1, sh::ProfileList(1, {})) == sh::Rational(1)) ||
            !(sh::spin_hurwitz_genus0_bruteforce(2, sh::ProfileList(2, {})) == Q(1, 2))) {
            detail = "oracle disagrees at h=0";
            return false;
        }
        detail = "closed towers match, oracle agrees at h=0";
        return true;
    }});

    criteria.push_back({"3 character orthogonality (d <= 6)", [&](std::string& detail) {
        return report_ok(sh::verify_orthogonality_suite(6, source), detail);
    }});

    criteria.push_back({"4 gluing closure (d <= 5, h <= 2, k <= 3)", [&](std::string& detail) {
        return report_ok(sh::verify_gluing(5, source), detail);
    }});

    criteria.push_back({"5 route equivalence (d <= 5, k <= 3)", [&](std::string& detail) {
        return report_ok(sh::verify_routes(5, source), detail);
    }});

    criteria.push_back({"6 structural census (d <= 4; class sizes d <= 5)",
                        [&](std::string& detail) {
        return report_ok(sh::verify_census(5), detail);
    }});

    criteria.push_back({"7 TQFT coherence (d <= 3)", [&](std::string& detail) {
        return report_ok(sh::verify_tqft(3, source), detail);
    }});

    criteria.push_back({"8 parity integrality (d <= 4) and two-torsion count (d <= 3)",
                        [&](std::string& detail) {
        long covers = 0;
        for (int d = 1; d <= 4; ++d) {
            for (const auto& profiles : sh::profile_multisets(d, 3)) {
                for (const auto& orbit : sh::enumerate_genus0_monodromy(d, profiles)) {
                    int parity;
                    try {
                        parity = sh::cover_parity(orbit.representative);
                    } catch (const std::exception& e) {
                        detail = e.what();
                        return false;
                    }
                    if (parity != 1 && parity != -1) {
                        detail = "non-unit parity";
                        return false;
                    }
                    ++covers;
                }
            }
        }
        std::string lemma_detail;
        if (!report_ok(sh::verify_two_torsion(3), lemma_detail)) {
            detail = lemma_detail;
            return false;
        }
        detail = std::to_string(covers) + " covers, all +-1; " + lemma_detail;
        return true;
    }});

    criteria.push_back({"9 performance target", [&](std::string& detail) {
        auto start = std::chrono::steady_clock::now();
        sh::ClassAlgebra alg6 = sh::structure_constants(6, /*jobs=*/1);
        sh::SpinSpectrum spec6 = sh::spin_spectrum(alg6);
        double t6 = seconds_since(start);
        std::ostringstream note;
        note << "d=6 single-threaded in " << t6 << " s (target 60)";
        if (t6 >= 60.0) {
            detail = note.str();
            return false;
        }
        if (std::getenv("SPINHURWITZ_ACCEPT_D7")) {
            start = std::chrono::steady_clock::now();
            sh::ClassAlgebra alg7 = sh::structure_constants(7, /*jobs=*/0);
            sh::SpinSpectrum spec7 = sh::spin_spectrum(alg7);
            double t7 = seconds_since(start);
            note << "; d=7 parallel in " << t7 << " s (soft target 1800)";
            if (t7 >= 1800.0) {
                detail = note.str() + " [soft target missed: documented limitation]";
                return true;  // soft target: degrade to a note, not a failure
            }
            (void)spec7;
        } else {
            note << "; d=7 skipped (set SPINHURWITZ_ACCEPT_D7=1 to run, soft target)";
        }
        (void)spec6;
        detail = note.str();
        return true;
    }});

    int failures = 0;
    for (auto& criterion : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion.name;
        if (!detail.empty()) std::cout << "  [" << detail << "]";
        std::cout << "\n";
        failures += !ok;
    }
    std::cout << (failures ? "ACCEPTANCE FAILED: " : "ACCEPTANCE PASSED: ")
              << (criteria.size() - failures) << "/" << criteria.size() << " criteria\n";
    return failures ? 1 : 0;
}
