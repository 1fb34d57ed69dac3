#include <doctest.h>

#include <random>

#include "spinhurwitz/bigint.hpp"
#include "spinhurwitz/rational.hpp"

using spinhurwitz::BigInt;
using spinhurwitz::Rational;

TEST_CASE("bigint small arithmetic matches int64") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> dist(-1'000'000'000, 1'000'000'000);
    for (int i = 0; i < 2000; ++i) {
        std::int64_t a = dist(rng), b = dist(rng);
        CHECK((BigInt(a) + BigInt(b)).to_string() == std::to_string(a + b));
        CHECK((BigInt(a) - BigInt(b)).to_string() == std::to_string(a - b));
        CHECK((BigInt(a) * BigInt(b)).to_string() == std::to_string(a * b));
        if (b != 0) {
            CHECK((BigInt(a) / BigInt(b)).to_string() == std::to_string(a / b));
            CHECK((BigInt(a) % BigInt(b)).to_string() == std::to_string(a % b));
        }
    }
}

TEST_CASE("bigint big multiplication and division round trip") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> dist(1, INT64_MAX / 2);
    for (int i = 0; i < 200; ++i) {
        BigInt a = BigInt(dist(rng)) * BigInt(dist(rng)) * BigInt(dist(rng));
        BigInt b = BigInt(dist(rng)) * BigInt(dist(rng));
        if (i % 2) b = -b;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
    }
}

TEST_CASE("bigint decimal string round trip") {
    BigInt v = BigInt::from_string("123456789012345678901234567890123456789");
    CHECK(v.to_string() == "123456789012345678901234567890123456789");
    CHECK((-v).to_string() == "-123456789012345678901234567890123456789");
    CHECK(BigInt::from_string("-42").to_int64() == -42);
    CHECK(BigInt(0).to_string() == "0");
}

TEST_CASE("bigint gcd, pow, isqrt") {
    CHECK(gcd(BigInt(12342), BigInt(54)) == BigInt(6));
    CHECK(gcd(BigInt(0), BigInt(-8)) == BigInt(8));
    CHECK(pow(BigInt(3), 20).to_string() == "3486784401");
    CHECK(isqrt(BigInt(152399025)) == BigInt(12345));
    CHECK(isqrt(BigInt(152399026)) == BigInt(12345));
    CHECK(spinhurwitz::is_perfect_square(pow(BigInt(123456789), 2)));
    CHECK_FALSE(spinhurwitz::is_perfect_square(pow(BigInt(123456789), 2) + BigInt(1)));
}

TEST_CASE("rational arithmetic and normalization") {
    Rational half(BigInt(1), BigInt(2));
    Rational third(BigInt(-1), BigInt(-3));  // normalizes to 1/3
    CHECK(third.to_string() == "1/3");
    CHECK((half + third).to_string() == "5/6");
    CHECK((half * third).to_string() == "1/6");
    CHECK((half - half).is_zero());
    CHECK((half / third).to_string() == "3/2");
    CHECK(Rational(BigInt(4), BigInt(-6)).to_string() == "-2/3");
    CHECK(Rational(7) > Rational(BigInt(13), BigInt(2)));
}

TEST_CASE("rational powers and two_pow") {
    CHECK(Rational::two_pow(-3).to_string() == "1/8");
    CHECK(Rational::two_pow(5) == Rational(32));
    Rational q(BigInt(-2), BigInt(3));
    CHECK(q.pow_int(3).to_string() == "-8/27");
    CHECK(q.pow_int(-2).to_string() == "9/4");
    CHECK(q.pow_int(0) == Rational(1));
}

TEST_CASE("rational string round trip") {
    for (const char* text : {"0/1", "-3/4", "12345678901234567890/7", "5/1"}) {
        CHECK(Rational::from_string(text).to_string() == text);
    }
    CHECK(Rational::from_string("17") == Rational(17));
}

TEST_CASE("exact square roots") {
    CHECK(sqrt_exact(Rational(BigInt(9), BigInt(16)))->to_string() == "3/4");
    CHECK_FALSE(sqrt_exact(Rational(BigInt(1), BigInt(2))).has_value());
    CHECK_FALSE(sqrt_exact(Rational(-4)).has_value());
}
