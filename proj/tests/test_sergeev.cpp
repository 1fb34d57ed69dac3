#include <doctest.h>

#include <map>
#include <random>

#include "spinhurwitz/errors.hpp"
#include "spinhurwitz/sergeev.hpp"

using namespace spinhurwitz;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
}  // namespace

TEST_CASE("defining relations") {
    const int d = 3;
    auto xi1 = xi_generator(d, 0);
    auto xi2 = xi_generator(d, 1);
    auto eps = epsilon_element(d);
    auto one = identity_element(d);

    CHECK(multiply(xi1, xi1) == one);
    CHECK(multiply(eps, eps) == one);
    CHECK(multiply(xi1, xi2) == multiply(eps, multiply(xi2, xi1)));

    auto swap12 = pure_permutation(2, {1, 0});
    auto x1 = xi_generator(2, 0);
    auto x2 = xi_generator(2, 1);
    CHECK(multiply(swap12, multiply(x1, swap12)) == x2);

    CHECK_THROWS_AS(multiply(xi1, x1), invalid_input_error);
}

TEST_CASE("degree grading") {
    CHECK(degree_grading(identity_element(3)) == 0);
    CHECK(degree_grading(epsilon_element(3)) == 0);
    CHECK(degree_grading(xi_generator(3, 1)) == 1);
    CHECK(degree_grading(multiply(xi_generator(3, 0), xi_generator(3, 1))) == 0);
}

TEST_CASE("dense index is a bijection") {
    for (int d : {1, 2, 3, 4}) {
        for (std::uint32_t i = 0; i < group_order(d); ++i) {
            CHECK(dense_index(element_at(d, i)) == i);
        }
    }
}

TEST_CASE("group closure has the right order") {
    for (int d : {1, 2, 3, 4}) {
        CHECK(enumerate_group(d).size() == group_order(d));
    }
    CHECK_THROWS_AS(enumerate_group(6, 5), resource_limit_error);
}

TEST_CASE("group axioms on random samples") {
    std::mt19937 rng(3);
    for (int d : {2, 3, 4}) {
        auto group = enumerate_group(d);
        std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
        auto one = identity_element(d);
        for (int i = 0; i < 3000; ++i) {
            const auto& x = group[pick(rng)];
            const auto& y = group[pick(rng)];
            const auto& z = group[pick(rng)];
            CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
        }
        for (int i = 0; i < 300; ++i) {
            const auto& x = group[pick(rng)];
            CHECK(multiply(x, inverse(x)) == one);
            CHECK(multiply(inverse(x), x) == one);
            CHECK(multiply(x, one) == x);
        }
    }
}

TEST_CASE("pure class sizes") {
    CHECK(pure_class(3, P({3})).size == 8);  // 96 / 12
    CHECK(pure_class(1, P({1})).size == 1);
    CHECK(pure_class(2, P({1, 1})).size == 1);
    CHECK_THROWS_AS(pure_class(4, P({2, 2})), invalid_input_error);
    for (int d = 1; d <= 5; ++d) {
        for (const auto& gamma : enumerate_partitions(d, PartitionClass::odd)) {
            auto cls = pure_class(d, gamma);
            CHECK(BigInt(static_cast<std::int64_t>(cls.size)) * theta(gamma) ==
                  BigInt(static_cast<std::int64_t>(group_order(d))));
        }
    }
}

TEST_CASE("z and theta equal directly-counted centralizer orders") {
    // z_gamma: commuting permutations in S(d); theta_gamma: commuting elements of C(d)
    for (int d = 1; d <= 5; ++d) {
        auto group = enumerate_group(d);
        for (const auto& gamma : enumerate_partitions(d, PartitionClass::odd)) {
            auto rep = canonical_pure(gamma, d);
            std::int64_t s_centralizer = 0, c_centralizer = 0;
            for (const auto& x : group) {
                if (!(multiply(x, rep) == multiply(rep, x))) continue;
                ++c_centralizer;
                if (x.eps == 0 && x.xi == 0) ++s_centralizer;
            }
            CHECK(BigInt(s_centralizer) == z_order(gamma));
            CHECK(BigInt(c_centralizer) == theta(gamma));
        }
    }
}

TEST_CASE("pure classes are inverse-closed") {
    for (int d = 1; d <= 4; ++d) {
        for (const auto& gamma : enumerate_partitions(d, PartitionClass::odd)) {
            auto cls = pure_class(d, gamma);
            std::map<std::uint32_t, bool> members;
            for (const auto& e : cls.members) members[dense_index(e)] = true;
            for (const auto& e : cls.members) CHECK(members.count(dense_index(inverse(e))));
        }
    }
}

TEST_CASE("census counts match the partition statistics") {
    struct Expected {
        int d, m, q;
    };
    for (auto [d, m, q] : {Expected{1, 1, 1}, Expected{2, 1, 1}, Expected{3, 2, 1}}) {
        auto census = class_census(d);
        CHECK(census.even_pairs == m);
        CHECK(census.odd_pairs == q);
        CHECK(census.even_pairs ==
              static_cast<int>(enumerate_partitions(d, PartitionClass::odd).size()));
        CHECK(census.even_pairs ==
              static_cast<int>(enumerate_partitions(d, PartitionClass::strict).size()));
        CHECK(census.odd_pairs ==
              static_cast<int>(enumerate_partitions(d, PartitionClass::strict_odd).size()));
        std::uint64_t total = 0;
        for (const auto& cls : census.classes) total += cls.size;
        CHECK(total == group_order(d));
    }
    CHECK_THROWS_AS(class_census(6, 5), resource_limit_error);
}

namespace {

/// Independent class construction: conjugate the canonical pure representative
/// by every group element.  Slower than the orbit walk the production code
/// uses, which is the point.
std::vector<std::uint32_t> class_by_full_conjugation(int d, const Partition& gamma) {
    auto group = enumerate_group(d);
    auto seed = canonical_pure(gamma, d);
    std::vector<bool> seen(group_order(d), false);
    std::vector<std::uint32_t> out;
    for (const auto& g : group) {
        auto idx = dense_index(multiply(g, multiply(seed, inverse(g))));
        if (!seen[idx]) {
            seen[idx] = true;
            out.push_back(idx);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("orbit walk agrees with full conjugation") {
    for (int d = 1; d <= 4; ++d) {
        for (const auto& gamma : enumerate_partitions(d, PartitionClass::odd)) {
            auto via_orbit = pure_class(d, gamma);
            auto via_group = class_by_full_conjugation(d, gamma);
            REQUIRE(via_orbit.members.size() == via_group.size());
            std::sort(via_group.begin(), via_group.end());
            for (std::size_t i = 0; i < via_group.size(); ++i)
                CHECK(dense_index(via_orbit.members[i]) == via_group[i]);
        }
    }
}

TEST_CASE("structure constants: identity law and symmetry") {
    for (int d = 1; d <= 4; ++d) {
        auto alg = structure_constants(d);
        const int m = alg.size();
        const int one = alg.identity_index();
        CHECK(alg.basis[one] == P(std::vector<int>(d, 1)));
        for (int g = 0; g < m; ++g) {
            for (int b = 0; b < m; ++b) {
                CHECK(alg.mult[one](g, b) == (g == b ? 1 : 0));
                for (int a = 0; a < m; ++a) CHECK(alg.mult[a](g, b) == alg.mult[b](g, a));
            }
        }
    }
    CHECK_THROWS_AS(structure_constants(8, 1, 7), resource_limit_error);
}

TEST_CASE("structure constants against a hand convolution at d = 3") {
    // independent route: count products over the fully-conjugated classes
    auto alg = structure_constants(3);
    int i3 = alg.index_of(P({3}));
    int i1 = alg.identity_index();
    REQUIRE(i3 == 0);

    auto cls = class_by_full_conjugation(3, P({3}));
    std::map<std::uint32_t, int> counts;
    for (auto xi : cls) {
        for (auto yi : cls) {
            auto prod = multiply(element_at(3, xi), element_at(3, yi));
            counts[dense_index(prod)]++;
        }
    }
    auto coeff_at = [&](const SergeevElement& e) {
        auto it = counts.find(dense_index(e));
        auto eps_it = counts.find(dense_index(multiply(epsilon_element(3), e)));
        return (it == counts.end() ? 0 : it->second) -
               (eps_it == counts.end() ? 0 : eps_it->second);
    };
    CHECK(alg.mult[i3](i1, i3) == coeff_at(identity_element(3)));
    CHECK(alg.mult[i3](i3, i3) == coeff_at(canonical_pure(P({3}), 3)));
    // total convolution mass
    long total = 0;
    for (auto& [idx, c] : counts) total += c;
    CHECK(total == 64);  // |C_(3)|^2
}

TEST_CASE("tuple identity counts") {
    CHECK(tuple_identity_count(2, {P({1, 1})}) == BigInt(1));
    CHECK(tuple_identity_count(3, {P({3}), P({3})}) == BigInt(8));        // inverse pairing
    CHECK(tuple_identity_count(3, {P({3}), P({1, 1, 1})}) == BigInt(0));  // never the identity
    CHECK(tuple_identity_count(4, {}) == BigInt(1));
    for (int d = 1; d <= 4; ++d) {
        for (const auto& gamma : enumerate_partitions(d, PartitionClass::odd)) {
            CHECK(tuple_identity_count(d, {gamma, gamma}) ==
                  BigInt(static_cast<std::int64_t>(pure_class(d, gamma).size)));
        }
    }
}

TEST_CASE("multithreaded convolution is schedule independent") {
    auto serial = convolve_pure_classes(4, P({3, 1}), P({3, 1}), 1);
    auto parallel = convolve_pure_classes(4, P({3, 1}), P({3, 1}), 3);
    CHECK(serial == parallel);
    auto alg1 = structure_constants(4, 1);
    auto alg3 = structure_constants(4, 3);
    for (int a = 0; a < alg1.size(); ++a) CHECK(alg1.mult[a] == alg3.mult[a]);
}
