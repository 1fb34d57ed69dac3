#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "spinhurwitz/partition.hpp"
#include "spinhurwitz/rational.hpp"
#include "spinhurwitz/sergeev.hpp"

namespace spinhurwitz {

using MatrixXq = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXq = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

enum class SignClass { plus, minus };
inline const char* to_string(SignClass s) { return s == SignClass::plus ? "+" : "-"; }

/// One joint eigenline of the commutative algebra Z0+: the data of a single
/// irreducible spin supermodule as seen through its central characters.
/// Slots are labeled abstractly (by position after sorting), not by strict
/// partitions: every formula downstream needs only (sign, c, f).
struct SpectrumSlot {
    SignClass sign = SignClass::minus;
    Rational c;              // dim / |C(d)|
    Rational t;              // counit of the idempotent; 2c^2 or c^2 by sign
    std::vector<Rational> f; // central characters, one per OP(d) basis element
    BigInt dim;              // |C(d)| * c, a positive even integer
};

struct SpinSpectrum {
    int d = 1;
    std::uint64_t order = 0;        // |C(d)|
    std::vector<Partition> basis;   // OP(d), canonical order
    std::vector<BigInt> theta_values;
    std::vector<SpectrumSlot> slots;  // one per strict partition of d

    int identity_index() const { return static_cast<int>(basis.size()) - 1; }
    int index_of(const Partition& gamma) const;
};

/// Extract the spectrum from the structure constants: split the joint
/// eigenlines of the commuting multiplication matrices, normalize each line to
/// an idempotent, and classify it by the perfect-square rule.  All exact.
SpinSpectrum spin_spectrum(const ClassAlgebra& algebra);

/// Coefficients of the idempotent e over the u-basis via the closed formula
/// kappa_alpha = k c^2 theta_alpha f_alpha, k = 2 for sign +, 1 for sign -.
VectorXq idempotent_vector(const SpectrumSlot& slot, const ClassAlgebra& algebra);

/// Product in Z0+ of two coefficient vectors over the u-basis.
VectorXq algebra_product(const ClassAlgebra& algebra, const VectorXq& u, const VectorXq& v);

struct OrthogonalityViolation {
    int slot_a, slot_b;
    std::string lhs, rhs;
};
struct OrthogonalityReport {
    int pairs_checked = 0;
    std::vector<OrthogonalityViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks sum_gamma theta_gamma f_gamma(lambda) f_gamma(mu) =
/// delta_{lambda mu} / (k c^2) exactly for every slot pair.
OrthogonalityReport verify_orthogonality(const SpinSpectrum& spectrum);

}  // namespace spinhurwitz
