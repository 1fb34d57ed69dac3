#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <vector>

#include "spinhurwitz/bigint.hpp"
#include "spinhurwitz/partition.hpp"

namespace spinhurwitz {

inline constexpr int kMaxDegree = 12;          // structural cap for element storage
inline constexpr int kDefaultEnumBound = 5;    // full-group enumeration / census
inline constexpr int kDefaultConvBound = 7;    // class-sum convolution

/// Element of the Sergeev group C(d) in canonical form
///   eps^a * xi_{i1} xi_{i2} ... * sigma,   i1 < i2 < ...
/// eps is the order-2 central generator, xi holds the support of the xi-product
/// as a bitmask (bit i for xi_{i+1}), perm is 0-based with composition
/// (s*t)(x) = s(t(x)).  Every group element has exactly one such form, so
/// equality of triples is group equality: |C(d)| = 2^{d+1} d!.
struct SergeevElement {
    std::uint8_t d = 1;
    std::uint8_t eps = 0;
    std::uint16_t xi = 0;
    std::array<std::uint8_t, kMaxDegree> perm{};

    friend bool operator==(const SergeevElement& a, const SergeevElement& b) {
        if (a.d != b.d || a.eps != b.eps || a.xi != b.xi) return false;
        for (int i = 0; i < a.d; ++i)
            if (a.perm[i] != b.perm[i]) return false;
        return true;
    }
};

SergeevElement identity_element(int d);
SergeevElement epsilon_element(int d);
SergeevElement xi_generator(int d, int i);  // xi_{i+1}, 0-based i
SergeevElement pure_permutation(int d, const std::vector<int>& perm);
/// Pure permutation with cycles of the given type laid out on 1..d in order,
/// e.g. (3,1) -> (0 1 2)(3).  This is the representative every class uses.
SergeevElement canonical_pure(const Partition& gamma, int d);

/// Canonical product; throws invalid_input_error on degree mismatch.
SergeevElement multiply(const SergeevElement& x, const SergeevElement& y);
SergeevElement inverse(const SergeevElement& x);

/// Z2-grading: parity of the number of xi factors.
int degree_grading(const SergeevElement& x);

/// Dense index eps + 2*xi + 2^{d+1}*lehmer(perm), a bijection onto
/// [0, 2^{d+1} d!).  Requires d <= 8 so that the index fits comfortably.
std::uint32_t dense_index(const SergeevElement& x);
SergeevElement element_at(int d, std::uint32_t index);

std::uint64_t group_order(int d);  // 2^{d+1} d!

/// All of C(d), generated by closure from {eps, xi_1, adjacent transpositions};
/// verifies the expected order. Sorted by dense index.
std::vector<SergeevElement> enumerate_group(int d, int bound = kDefaultEnumBound);

/// Conjugacy class of a pure permutation of odd cycle type gamma, together
/// with its size |C(d)| / theta_gamma.
struct ConjClassPair {
    Partition gamma;
    std::vector<SergeevElement> members;  // sorted by dense index
    std::uint64_t size = 0;
};
ConjClassPair pure_class(int d, const Partition& gamma);

/// Full conjugacy-class census of C(d): every class tagged by grading and by
/// whether multiplication by eps maps it to itself or to a disjoint partner.
struct CensusClass {
    std::uint32_t representative;  // dense index of smallest member
    std::uint64_t size;
    bool odd_grading;
    bool self_paired;  // eps*C == C
    bool pure_type;    // contains a pure permutation (eps=0, xi=0)
};
struct ClassCensus {
    int d;
    std::uint64_t order;
    std::vector<CensusClass> classes;
    int even_pairs;   // m: disjoint (C, eps C) pairs of even grading
    int odd_pairs;    // q: disjoint pairs of odd grading
    int self_paired;  // s
};
ClassCensus class_census(int d, int bound = kDefaultEnumBound);

/// Structure constants of the algebra Z0+ over the OP(d) basis, computed by
/// convolving class sums in C(d) and reading pure-representative coefficients.
struct ClassAlgebra {
    int d = 1;
    std::vector<Partition> basis;  // OP(d), canonical order
    std::vector<BigInt> theta_values;
    std::vector<std::uint64_t> class_sizes;
    std::uint64_t order = 0;  // |C(d)|
    /// mult[a](g, b) = coefficient of u_g in u_a * u_b
    std::vector<Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>> mult;

    int size() const { return static_cast<int>(basis.size()); }
    int index_of(const Partition& gamma) const;  // -1 if absent
    int identity_index() const;                  // index of (1^d)
};

/// jobs <= 0 means one worker per hardware thread.
ClassAlgebra structure_constants(int d, int jobs = 1, int bound = kDefaultConvBound);

/// Raw convolution coefficients of one class-sum product, indexed densely over
/// C(d).  Exposed for the verification suites; structure_constants uses the
/// same kernel.
std::vector<std::uint32_t> convolve_pure_classes(int d, const Partition& alpha,
                                                 const Partition& beta, int jobs = 1);

/// Number of tuples (g_1,...,g_k) in C_{gamma_1} x ... x C_{gamma_k} with
/// product equal to the identity, by iterated class-sum convolution.
BigInt tuple_identity_count(int d, const std::vector<Partition>& classes,
                            int bound = kDefaultEnumBound);

}  // namespace spinhurwitz
