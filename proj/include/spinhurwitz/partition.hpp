#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spinhurwitz/bigint.hpp"

namespace spinhurwitz {

/// Integer partition: weakly decreasing positive parts. Value type, compared
/// structurally. The canonical ordering of partition lists everywhere in this
/// project is reverse-lexicographic (descending), fixed by enumerate_partitions.
class Partition {
public:
    Partition() = default;  // the empty partition of 0
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int degree() const { return degree_; }
    int length() const { return static_cast<int>(parts_.size()); }

    bool is_odd() const;     // every part odd
    bool is_strict() const;  // strictly decreasing parts

    /// Multiplicity of part size k.
    int count(int k) const;

    std::string to_string() const;  // "(3,1,1)"

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend std::ostream& operator<<(std::ostream& os, const Partition& p);

private:
    std::vector<int> parts_;
    int degree_ = 0;
};

/// Reverse-lexicographic "a comes before b" predicate for same-degree partitions.
bool canonical_before(const Partition& a, const Partition& b);

enum class PartitionClass { all, odd, strict, strict_even, strict_odd };

/// Complete, duplicate-free, reverse-lexicographically ordered list of the
/// requested class of partitions of d.  strict_even / strict_odd filter strict
/// partitions by parity of the length.
std::vector<Partition> enumerate_partitions(int d, PartitionClass cls);

/// z_gamma = prod_k k^{m_k} m_k!  (order of the centralizer of a permutation of
/// cycle type gamma in the symmetric group).
BigInt z_order(const Partition& gamma);

/// theta_gamma = 2^{len(gamma)+1} z_gamma (centralizer order of a pure
/// permutation in the Sergeev group).
BigInt theta(const Partition& gamma);

/// Ramification profiles at the marked points: every entry an odd partition of d.
struct ProfileList {
    int d = 1;
    std::vector<Partition> profiles;

    ProfileList() = default;
    ProfileList(int degree, std::vector<Partition> entries);
    int count() const { return static_cast<int>(profiles.size()); }
};

/// Domain Euler characteristic forced by Riemann-Hurwitz:
///   chi(C) = d(2-2h) + sum_i (len(alpha^i) - d).
/// Always even for odd profiles.
int domain_euler_char(int d, int genus, const ProfileList& profiles);

/// Parse "(3,1);(3,1)" into a ProfileList; whitespace-insensitive.
/// An empty string means no ramification.
ProfileList parse_profiles(int d, const std::string& text);

}  // namespace spinhurwitz
