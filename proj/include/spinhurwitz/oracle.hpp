#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinhurwitz/partition.hpp"
#include "spinhurwitz/rational.hpp"

namespace spinhurwitz {

using Perm = std::vector<std::uint8_t>;  // 0-based images, composition (s*t)(x) = s(t(x))

Perm perm_identity(int d);
Perm perm_multiply(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);
Partition cycle_type(const Perm& a);
std::vector<Perm> symmetric_class(int d, const Partition& type);

/// Monodromy data of a genus-0 cover: permutations g_i of cycle type alpha^i
/// with g_1 ... g_k = 1.
struct MonodromyTuple {
    int d = 1;
    std::vector<Perm> images;
};

struct MonodromyOrbit {
    MonodromyTuple representative;  // lexicographically minimal under conjugation
    std::uint64_t orbit_size = 0;
    std::uint64_t aut_order = 0;  // d! / orbit_size
};

inline constexpr int kOracleDegreeBound = 5;
inline constexpr int kOracleProfileBound = 4;
inline constexpr int kLiftDegreeBound = 4;

/// One representative per simultaneous-conjugation orbit, enumerated by fixing
/// the last generator through the product constraint.
std::vector<MonodromyOrbit> enumerate_genus0_monodromy(int d, const ProfileList& profiles);

/// Classical Hurwitz number: sum over orbits of 1/|Aut|.
Rational classical_hurwitz(int d, const ProfileList& profiles);

/// Connected components and their genera, read off the tuple.
struct CoverDescriptor {
    std::uint64_t orbit_size = 0;
    std::uint64_t aut_order = 0;
    std::vector<std::pair<int, int>> components;  // (degree, genus) per component
    int component_count = 0;
    int parity = +1;  // (-1)^{p(f)}
};
CoverDescriptor cover_descriptor(const MonodromyTuple& tuple, std::uint64_t orbit_size,
                                 std::uint64_t aut_order);

/// Weighted lift counts h_G(M; phi) = |H_G(M; phi)| / |G| for the
/// hyperoctahedral group and the Sergeev group: tuples in the pure-type class
/// fibers over phi with product 1.
struct LiftCounts {
    BigInt raw_hyperoctahedral;  // |H_B(M; phi)|
    BigInt raw_sergeev;          // |H_C(M; phi)|
    Rational h_hyperoctahedral;
    Rational h_sergeev;
};
LiftCounts lift_counts(const MonodromyTuple& tuple);

/// (-1)^{p(f)} = 2^{chi(C)/2} d! (4 h_C - h_B); must be exactly +1 or -1,
/// anything else flags a lift-enumeration bug.
int cover_parity(const MonodromyTuple& tuple);

/// Genus-0 spin Hurwitz number with no character theory:
/// sum over orbits of cover_parity / |Aut|.
Rational spin_hurwitz_genus0_bruteforce(int d, const ProfileList& profiles);

struct TwoTorsionReport {
    int component_count = 0;
    BigInt two_torsion_order;  // |J_2(C)| = 2^{sum 2 g_i}
    BigInt lift_count;         // |H_B(M; phi)|
    BigInt expected;           // 2^{d-n} |J_2(C)|
    bool ok = false;
};
TwoTorsionReport two_torsion_check(const MonodromyTuple& tuple);

/// Tuple counts with product 1 over pure-type classes of S(d) and B(d),
/// by direct enumeration; used to cross-check the weighted counts.
BigInt symmetric_tuple_identity_count(int d, const std::vector<Partition>& classes);
BigInt hyperoctahedral_tuple_identity_count(int d, const std::vector<Partition>& classes);

}  // namespace spinhurwitz
