#include <doctest.h>

#include "spinhurwitz/errors.hpp"
#include "spinhurwitz/partition.hpp"

using namespace spinhurwitz;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
}  // namespace

TEST_CASE("partition classification") {
    CHECK(P({3, 1, 1}).is_odd());
    CHECK_FALSE(P({4, 2}).is_odd());
    CHECK(P({4, 3, 1}).is_strict());
    CHECK_FALSE(P({3, 3}).is_strict());
    CHECK(P({5, 5, 1}).degree() == 11);
    CHECK_THROWS_AS(P({1, 2}), invalid_input_error);
    CHECK_THROWS_AS(P({0}), invalid_input_error);
}

TEST_CASE("enumerations match hand lists") {
    auto odd3 = enumerate_partitions(3, PartitionClass::odd);
    REQUIRE(odd3.size() == 2);
    CHECK(odd3[0] == P({3}));
    CHECK(odd3[1] == P({1, 1, 1}));

    auto strict4 = enumerate_partitions(4, PartitionClass::strict);
    REQUIRE(strict4.size() == 2);
    CHECK(strict4[0] == P({4}));
    CHECK(strict4[1] == P({3, 1}));
    CHECK(enumerate_partitions(4, PartitionClass::strict_even) ==
          std::vector<Partition>{P({3, 1})});
    CHECK(enumerate_partitions(4, PartitionClass::strict_odd) == std::vector<Partition>{P({4})});

    auto odd6 = enumerate_partitions(6, PartitionClass::odd);
    REQUIRE(odd6.size() == 4);
    CHECK(odd6[0] == P({5, 1}));
    CHECK(odd6[1] == P({3, 3}));
    CHECK(odd6[2] == P({3, 1, 1, 1}));
    CHECK(odd6[3] == P({1, 1, 1, 1, 1, 1}));

    CHECK_THROWS_AS(enumerate_partitions(0, PartitionClass::all), invalid_input_error);
}

TEST_CASE("odd and strict classes are equinumerous up to d = 10") {
    for (int d = 1; d <= 10; ++d) {
        CHECK(enumerate_partitions(d, PartitionClass::odd).size() ==
              enumerate_partitions(d, PartitionClass::strict).size());
    }
}

TEST_CASE("length parity of odd partitions") {
    for (int d = 1; d <= 8; ++d) {
        for (const auto& gamma : enumerate_partitions(d, PartitionClass::odd)) {
            CHECK((gamma.length() - d) % 2 == 0);
        }
    }
}

TEST_CASE("z and theta values") {
    CHECK(z_order(P({1, 1, 1})) == BigInt(6));
    CHECK(z_order(P({3, 1, 1})) == BigInt(6));
    CHECK(z_order(P({5})) == BigInt(5));
    CHECK(z_order(P({3, 3})) == BigInt(18));
    CHECK(theta(P({1})) == BigInt(4));
    CHECK(theta(P({1, 1, 1})) == BigInt(96));
    CHECK(theta(P({3})) == BigInt(12));
}

TEST_CASE("domain Euler characteristic") {
    CHECK(domain_euler_char(3, 0, ProfileList(3, {P({3}), P({3})})) == 2);
    CHECK(domain_euler_char(2, 1, ProfileList(2, {})) == 0);
    for (int h = 0; h <= 3; ++h) CHECK(domain_euler_char(1, h, ProfileList(1, {})) == 2 - 2 * h);
    CHECK_THROWS_AS(ProfileList(4, {P({2, 2})}), invalid_input_error);
    CHECK_THROWS_AS(ProfileList(4, {P({3})}), invalid_input_error);
}

TEST_CASE("euler characteristic is always even") {
    for (int d = 1; d <= 6; ++d) {
        auto odd = enumerate_partitions(d, PartitionClass::odd);
        for (const auto& a : odd) {
            for (const auto& b : odd) {
                for (int h = 0; h <= 2; ++h) {
                    CHECK(domain_euler_char(d, h, ProfileList(d, {a, b})) % 2 == 0);
                }
            }
        }
    }
}

TEST_CASE("profile parsing") {
    ProfileList p = parse_profiles(4, "(3,1); (1,1,1,1)");
    REQUIRE(p.count() == 2);
    CHECK(p.profiles[0] == P({3, 1}));
    CHECK(p.profiles[1] == P({1, 1, 1, 1}));
    CHECK(parse_profiles(3, "").count() == 0);
    CHECK(parse_profiles(4, "(1,3)").profiles[0] == P({3, 1}));  // parts get sorted
    CHECK_THROWS_AS(parse_profiles(3, "(3"), invalid_input_error);
    CHECK_THROWS_AS(parse_profiles(3, "(2,1)"), invalid_input_error);
}
