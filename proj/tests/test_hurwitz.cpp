#include <doctest.h>

#include "spinhurwitz/errors.hpp"
#include "spinhurwitz/hurwitz.hpp"
#include "spinhurwitz/verify.hpp"

using namespace spinhurwitz;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
Rational Q(std::int64_t n, std::int64_t d) { return Rational(BigInt(n), BigInt(d)); }

const SpinSpectrum& spectrum_of(int d) {
    static auto source = computing_source(1);
    return source.spectrum(d);
}

HurwitzValue value_of(int d, int h, Parity p, std::vector<Partition> profiles,
                      bool formal = false) {
    HurwitzQuery q{d, h, p, ProfileList(d, std::move(profiles)), formal};
    return normalized_value(q, spectrum_of(d));
}

}  // namespace

TEST_CASE("degree-1 values are unit for every genus") {
    for (int h = 0; h <= 4; ++h) {
        auto v = value_of(1, h, Parity::even, {});
        CHECK(v.normalized == Rational::two_pow(2 * h - 2));  // (1/2)^{2-2h}
        CHECK(v.unnormalized == Rational(1));
        if (h >= 1) CHECK(value_of(1, h, Parity::odd, {}).unnormalized == Rational(-1));
        // profiles of (1) change nothing
        CHECK(value_of(1, h, Parity::even, {P({1}), P({1})}).unnormalized == Rational(1));
    }
}

TEST_CASE("degree-2 etale tower") {
    for (int h = 0; h <= 4; ++h) {
        CHECK(value_of(2, h, Parity::even, {}).unnormalized == Rational::two_pow(h - 1));
    }
    CHECK(value_of(2, 0, Parity::even, {}).unnormalized == Q(1, 2));
}

TEST_CASE("spot values fixed by the genus-0 oracle") {
    CHECK(value_of(3, 0, Parity::even, {P({3}), P({3})}).unnormalized == Q(1, 3));
    CHECK(value_of(3, 0, Parity::even, {}).unnormalized == Q(1, 6));
}

TEST_CASE("(0,-) is formal only") {
    CHECK_THROWS_AS(value_of(2, 0, Parity::odd, {}), invalid_input_error);
    auto v = value_of(2, 0, Parity::odd, {}, /*formal=*/true);
    CHECK(v.formal);
    CHECK_FALSE(value_of(2, 1, Parity::odd, {}).formal);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(value_of(3, 0, Parity::even, {P({1, 1})}), invalid_input_error);
    HurwitzQuery bad{2, 0, Parity::even, ProfileList(2, {}), false};
    CHECK_THROWS_AS(normalized_value(bad, spectrum_of(3)), invalid_input_error);
}

TEST_CASE("genus-1 odd route equals the engine value") {
    for (int d = 1; d <= 4; ++d) {
        for (const auto& profiles : profile_multisets(d, 3)) {
            Rational via_direct_form = genus1_odd_value(profiles, spectrum_of(d));
            HurwitzQuery q{d, 1, Parity::odd, profiles, false};
            CHECK(via_direct_form == normalized_value(q, spectrum_of(d)).unnormalized);
        }
    }
    CHECK(genus1_odd_value(ProfileList(1, {}), spectrum_of(1)) == Rational(-1));
    CHECK(genus1_odd_value(ProfileList(2, {}), spectrum_of(2)) == Rational(-1));
}

TEST_CASE("literal closed formula equals the inductive route") {
    for (int d = 1; d <= 4; ++d) {
        for (int h = 0; h <= 3; ++h) {
            for (Parity p : {Parity::even, Parity::odd}) {
                for (const auto& profiles : profile_multisets(d, 2)) {
                    HurwitzQuery q{d, h, p, profiles, /*allow_formal=*/true};
                    CHECK(euler_form_value(q, spectrum_of(d)) ==
                          normalized_value(q, spectrum_of(d)).unnormalized);
                }
            }
        }
    }
}

TEST_CASE("normalization exponent is integral") {
    for (int d = 1; d <= 4; ++d) {
        for (int h = 0; h <= 3; ++h) {
            for (const auto& profiles : profile_multisets(d, 3)) {
                CHECK((domain_euler_char(d, h, profiles) + 2 - 2 * h) % 2 == 0);
            }
        }
    }
}

TEST_CASE("gluing identities in the small cases") {
    // d=1: 1 = z_(1) * 1 * 1
    GluingReport r1 = gluing_check(
        SeparatingSplit{0, Parity::even, ProfileList(1, {}), 0, Parity::even, ProfileList(1, {})},
        spectrum_of(1));
    CHECK(r1.ok());

    // d=2 non-separating at h=0,+ : H^{1,+} = z_(11) H^{0,+}_{(11),(11)}
    GluingReport r2 =
        gluing_check(NonSeparatingSplit{0, Parity::even, ProfileList(2, {})}, spectrum_of(2));
    CHECK(r2.ok());
    auto lhs = value_of(2, 1, Parity::even, {}).unnormalized;
    auto rhs = Rational(z_order(P({1, 1}))) *
               value_of(2, 0, Parity::even, {P({1, 1}), P({1, 1})}).unnormalized;
    CHECK(lhs == rhs);

    // d=3 separating ((3) | (3)) at genus 0
    GluingReport r3 = gluing_check(SeparatingSplit{0, Parity::even, ProfileList(3, {P({3})}), 0,
                                                   Parity::even, ProfileList(3, {P({3})})},
                                   spectrum_of(3));
    CHECK(r3.ok());

    // splits through (0,-) pieces close as well (the extended identity)
    GluingReport r4 = gluing_check(
        SeparatingSplit{0, Parity::odd, ProfileList(3, {P({3})}), 1, Parity::odd,
                        ProfileList(3, {})},
        spectrum_of(3));
    CHECK(r4.ok());
}

TEST_CASE("gt invariant") {
    CHECK(gt_invariant(1, 0, Parity::even, spectrum_of(1)) == Rational(1));
    for (int h = 0; h <= 3; ++h) {
        CHECK(gt_invariant(1, h, Parity::even, spectrum_of(1)) == Rational(1));
        if (h >= 1) CHECK(gt_invariant(1, h, Parity::odd, spectrum_of(1)) == Rational(-1));
    }
    CHECK(gt_invariant(2, 1, Parity::even, spectrum_of(2)) == Rational(1));
    CHECK(gt_invariant(2, 1, Parity::odd, spectrum_of(2)) == Rational(-1));
    CHECK(gt_invariant(3, 0, Parity::even, spectrum_of(3)) == Q(1, 6));
    CHECK_THROWS_AS(gt_invariant(2, 0, Parity::odd, spectrum_of(2)), invalid_input_error);

    // the etale engine value is the same number
    for (int d = 1; d <= 4; ++d) {
        for (int h = 0; h <= 3; ++h) {
            for (Parity p : {Parity::even, Parity::odd}) {
                if (h == 0 && p == Parity::odd) continue;
                CHECK(gt_invariant(d, h, p, spectrum_of(d)) ==
                      value_of(d, h, p, {}).unnormalized);
            }
        }
    }
}

TEST_CASE("profile order does not matter") {
    auto a = value_of(4, 1, Parity::even, {P({3, 1}), P({1, 1, 1, 1}), P({3, 1})});
    auto b = value_of(4, 1, Parity::even, {P({1, 1, 1, 1}), P({3, 1}), P({3, 1})});
    CHECK(a.normalized == b.normalized);
    CHECK(a.unnormalized == b.unnormalized);
}
