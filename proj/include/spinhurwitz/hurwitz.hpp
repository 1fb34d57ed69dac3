#pragma once

#include <string>
#include <vector>

#include "spinhurwitz/partition.hpp"
#include "spinhurwitz/rational.hpp"
#include "spinhurwitz/spectral.hpp"

namespace spinhurwitz {

enum class Parity { even, odd };  // printed as + / -
inline const char* to_string(Parity p) { return p == Parity::even ? "+" : "-"; }
inline Parity combine(Parity a, Parity b) {
    return a == b ? Parity::even : Parity::odd;
}

struct HurwitzQuery {
    int d = 1;
    int genus = 0;
    Parity parity = Parity::even;
    ProfileList profiles;
    /// (genus, parity) = (0, -) has no geometric meaning; it is admitted only
    /// when this flag is set and the result is marked formal.
    bool allow_formal = false;
};

struct HurwitzValue {
    Rational normalized;    // H(h,p)
    Rational unnormalized;  // H^{h,p} = 2^{(chiC+chiD)/2} H(h,p)
    int chi_domain = 0;     // chi(C)
    int chi_base = 0;       // chi(D) = 2 - 2h
    bool formal = false;    // true iff (h,p) = (0,-)
};

/// Spectral evaluation of the spin Hurwitz number:
///   H(h,+/-) = sum_{+} 2^{1-h} c^{2-2h} prod_i f_{alpha_i}
///            +/- sum_{-} c^{2-2h} prod_i f_{alpha_i}.
HurwitzValue normalized_value(const HurwitzQuery& query, const SpinSpectrum& spectrum);

/// Genus-one odd-parity evaluation through its own closed form
///   H^{1,-} = 2^{chi(C)/2} (sum_{+} prod f  -  sum_{-} prod f);
/// must agree with normalized_value at (1,-).
Rational genus1_odd_value(const ProfileList& profiles, const SpinSpectrum& spectrum);

/// Literal evaluation of the all-genus closed formula
///   2^{(chiC+chiD)/2} ( sum_{+} 2^{chiD/2} c^{chiD} prod f
///                       +/- sum_{-} c^{chiD} prod f );
/// must agree with normalized_value's unnormalized field.
Rational euler_form_value(const HurwitzQuery& query, const SpinSpectrum& spectrum);

/// Dimension-zero local invariant of the etale case:
///   GT = 2^{(chiC+chiD)/2} sum_slots (sign factor) t^{1-h},
/// sign factor -1 exactly when parity is odd and the slot is in the - class.
Rational gt_invariant(int d, int genus, Parity parity, const SpinSpectrum& spectrum);

struct GluingLine {
    std::string label;
    std::string lhs, rhs;
    bool ok;
};
struct GluingReport {
    std::vector<GluingLine> lines;
    bool ok() const {
        for (const auto& l : lines)
            if (!l.ok) return false;
        return true;
    }
};

struct SeparatingSplit {
    int genus1 = 0;
    Parity parity1 = Parity::even;
    ProfileList profiles1;
    int genus2 = 0;
    Parity parity2 = Parity::even;
    ProfileList profiles2;
};
struct NonSeparatingSplit {
    int genus = 0;
    Parity parity = Parity::even;
    ProfileList profiles;
};

/// Verifies H^{h1+h2,p1+p2}_{A,B} = sum_gamma z_gamma H^{h1,p1}_{A,gamma} H^{h2,p2}_{B,gamma}
/// and the theta-weighted normalized form, exactly.  Pieces at (0,-) are
/// evaluated formally, which is exactly what makes the extended identity close.
GluingReport gluing_check(const SeparatingSplit& split, const SpinSpectrum& spectrum);

/// Verifies H^{h+1,p}_A = sum_gamma z_gamma H^{h,p}_{A,gamma,gamma} and the
/// normalized form.
GluingReport gluing_check(const NonSeparatingSplit& split, const SpinSpectrum& spectrum);

}  // namespace spinhurwitz
