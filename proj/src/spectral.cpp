#include "spinhurwitz/spectral.hpp"

#include <algorithm>

#include "spinhurwitz/errors.hpp"
#include "spinhurwitz/linalg.hpp"

namespace spinhurwitz {

int SpinSpectrum::index_of(const Partition& gamma) const {
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == gamma) return static_cast<int>(i);
    return -1;
}

VectorXq algebra_product(const ClassAlgebra& algebra, const VectorXq& u, const VectorXq& v) {
    const int m = algebra.size();
    VectorXq out = VectorXq::Zero(m);
    for (int a = 0; a < m; ++a) {
        if (u(a).is_zero()) continue;
        for (int g = 0; g < m; ++g) {
            Rational acc(0);
            for (int b = 0; b < m; ++b) {
                std::int64_t coeff = algebra.mult[a](g, b);
                if (coeff) acc += Rational(coeff) * v(b);
            }
            out(g) += u(a) * acc;
        }
    }
    return out;
}

namespace {

/// Multiplication matrix of u_alpha in the u-basis: column b holds u_alpha u_b.
MatrixXq multiplication_matrix(const ClassAlgebra& algebra, int alpha) {
    const int m = algebra.size();
    MatrixXq mat(m, m);
    for (int g = 0; g < m; ++g)
        for (int b = 0; b < m; ++b) mat(g, b) = Rational(algebra.mult[alpha](g, b));
    return mat;
}

/// Integer roots of a monic rational polynomial that splits over the integers.
/// bound caps |root|; candidates are divisors of the constant term.
std::vector<BigInt> integer_roots(std::vector<Rational> poly, const BigInt& bound) {
    for (const Rational& c : poly) {
        if (!c.is_integer())
            throw internal_consistency_error("integer_roots: non-integer coefficient in "
                                             "what must be an integer polynomial");
    }
    std::vector<BigInt> roots;
    auto deflate = [&](const BigInt& r) {
        // synthetic division by (x - r), exact
        std::vector<Rational> q(poly.size() - 1);
        Rational carry(0);
        for (std::size_t i = poly.size(); i-- > 1;) {
            carry = poly[i] + carry * Rational(r);
            q[i - 1] = carry;
        }
        poly = std::move(q);
    };

    while (poly.size() > 1) {
        if (poly.front().is_zero()) {
            roots.push_back(BigInt(0));
            deflate(BigInt(0));
            continue;
        }
        BigInt c0 = poly.front().num().abs();
        // every root is bounded, so all prime factors of c0 are too
        std::vector<std::pair<BigInt, int>> factors;
        BigInt rest = c0;
        for (BigInt p(2); p <= bound && p * p <= rest; p += BigInt(1)) {
            int e = 0;
            while ((rest % p).is_zero()) {
                rest /= p;
                ++e;
            }
            if (e) factors.emplace_back(p, e);
        }
        if (rest > BigInt(1)) factors.emplace_back(rest, 1);

        std::vector<BigInt> divisors{BigInt(1)};
        for (const auto& [p, e] : factors) {
            std::size_t n = divisors.size();
            BigInt pk(1);
            for (int i = 1; i <= e; ++i) {
                pk *= p;
                for (std::size_t j = 0; j < n; ++j) {
                    BigInt cand = divisors[j] * pk;
                    if (cand <= bound) divisors.push_back(cand);
                }
            }
        }
        std::sort(divisors.begin(), divisors.end());

        bool found = false;
        for (const BigInt& dv : divisors) {
            for (int sgn : {1, -1}) {
                BigInt cand = sgn > 0 ? dv : -dv;
                if (poly_eval(poly, Rational(cand)).is_zero()) {
                    roots.push_back(cand);
                    deflate(cand);
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found)
            throw internal_consistency_error(
                "integer_roots: polynomial does not split over bounded integers "
                "(structure-constant data is inconsistent)");
    }
    return roots;
}

BigInt infinity_norm(const MatrixXq& m) {
    BigInt best(0);
    for (int r = 0; r < m.rows(); ++r) {
        BigInt row(0);
        for (int c = 0; c < m.cols(); ++c) row += abs(m(r, c)).num();  // entries are integers
        if (row > best) best = row;
    }
    return best;
}

}  // namespace

SpinSpectrum spin_spectrum(const ClassAlgebra& algebra) {
    const int m = algebra.size();
    SpinSpectrum spectrum;
    spectrum.d = algebra.d;
    spectrum.order = algebra.order;
    spectrum.basis = algebra.basis;
    spectrum.theta_values = algebra.theta_values;
    const int one = algebra.identity_index();

    std::vector<MatrixXq> mult_matrices;
    mult_matrices.reserve(m);
    for (int a = 0; a < m; ++a) mult_matrices.push_back(multiplication_matrix(algebra, a));

    // Split the full space into joint eigenlines.  Commuting diagonalizable
    // operators preserve each other's eigenspaces, so one pass over the
    // multiplication matrices fully refines the decomposition.
    std::vector<MatrixXq> subspaces{MatrixXq::Identity(m, m)};
    for (int a = 0; a < m; ++a) {
        if (a == one) continue;  // the identity acts as 1 everywhere
        const MatrixXq& big = mult_matrices[a];
        BigInt bound = infinity_norm(big);
        if (bound.is_zero()) bound = BigInt(1);
        std::vector<MatrixXq> refined;
        for (const MatrixXq& basis : subspaces) {
            const int k = static_cast<int>(basis.cols());
            if (k == 1) {
                refined.push_back(basis);
                continue;
            }
            // restriction B with big * basis = basis * B
            MatrixXq image = big * basis;
            MatrixXq restricted(k, k);
            for (int col = 0; col < k; ++col)
                restricted.col(col) = solve_exact<Rational>(basis, image.col(col));
            auto roots = integer_roots(minimal_polynomial(restricted), bound);
            int covered = 0;
            for (const BigInt& root : roots) {
                MatrixXq shifted = restricted;
                for (int i = 0; i < k; ++i) shifted(i, i) -= Rational(root);
                MatrixXq kernel = nullspace(shifted);
                if (kernel.cols() == 0)
                    throw internal_consistency_error("spin_spectrum: empty eigenspace");
                refined.push_back(basis * kernel);
                covered += static_cast<int>(kernel.cols());
            }
            if (covered != k)
                throw internal_consistency_error(
                    "spin_spectrum: eigenspaces do not fill an invariant subspace; "
                    "the algebra is not acting semisimply");
        }
        subspaces = std::move(refined);
    }
    for (const MatrixXq& s : subspaces) {
        if (s.cols() != 1)
            throw internal_consistency_error(
                "spin_spectrum: splitting finished with a subspace of dimension " +
                std::to_string(s.cols()) + "; expected all joint eigenlines");
    }
    if (static_cast<int>(subspaces.size()) != m)
        throw internal_consistency_error("spin_spectrum: wrong number of eigenlines");

    const BigInt order_big(static_cast<std::int64_t>(algebra.order));
    const Rational theta_one(algebra.theta_values[one]);

    for (const MatrixXq& line : subspaces) {
        VectorXq w = line.col(0);
        int lead = -1;
        for (int i = 0; i < m; ++i) {
            if (!w(i).is_zero()) {
                lead = i;
                break;
            }
        }
        if (lead < 0) throw internal_consistency_error("spin_spectrum: zero eigenvector");

        SpectrumSlot slot;
        slot.f.resize(m);
        for (int a = 0; a < m; ++a) {
            VectorXq image = mult_matrices[a] * w;
            Rational f = image(lead) / w(lead);
            for (int i = 0; i < m; ++i) {
                if (!(image(i) == f * w(i)))
                    throw internal_consistency_error(
                        "spin_spectrum: vector is not a joint eigenvector");
            }
            slot.f[a] = f;
        }
        if (!(slot.f[one] == Rational(1)))
            throw internal_consistency_error("spin_spectrum: f at the identity class is not 1");

        // normalize the line to its idempotent: w*w = s*w, e = w/s
        VectorXq square = algebra_product(algebra, w, w);
        Rational s = square(lead) / w(lead);
        if (s.is_zero())
            throw internal_consistency_error("spin_spectrum: nilpotent eigenline");
        for (int i = 0; i < m; ++i) {
            if (!(square(i) == s * w(i)))
                throw internal_consistency_error("spin_spectrum: line is not a subalgebra");
        }
        VectorXq idem = w / s;
        slot.t = idem(one) / theta_one;

        // Exactly one k in {1,2} makes t |C|^2 / k the square of an even
        // integer (2 is not a rational square); k = 2 marks the + class.
        int matches = 0;
        for (int k : {1, 2}) {
            Rational r = slot.t * Rational(order_big * order_big) / Rational(k);
            if (!r.is_integer() || r.is_negative()) continue;
            if (!is_perfect_square(r.num())) continue;
            BigInt dim = isqrt(r.num());
            if (dim.is_odd() || dim.is_zero()) continue;
            ++matches;
            slot.sign = (k == 2) ? SignClass::plus : SignClass::minus;
            slot.dim = dim;
            slot.c = Rational(dim, order_big);
        }
        if (matches != 1)
            throw internal_consistency_error(
                "spin_spectrum: perfect-square sign rule matched " + std::to_string(matches) +
                " values of k; expected exactly one");
        spectrum.slots.push_back(std::move(slot));
    }

    std::sort(spectrum.slots.begin(), spectrum.slots.end(),
              [](const SpectrumSlot& a, const SpectrumSlot& b) {
                  if (a.t != b.t) return a.t > b.t;
                  return std::lexicographical_compare(b.f.begin(), b.f.end(), a.f.begin(),
                                                      a.f.end());
              });

    // The sign census must reproduce the strict-partition split.
    auto sp_plus = enumerate_partitions(algebra.d, PartitionClass::strict_even).size();
    auto sp_minus = enumerate_partitions(algebra.d, PartitionClass::strict_odd).size();
    std::size_t got_plus = 0, got_minus = 0;
    for (const auto& slot : spectrum.slots)
        (slot.sign == SignClass::plus ? got_plus : got_minus)++;
    if (got_plus != sp_plus || got_minus != sp_minus)
        throw internal_consistency_error(
            "spin_spectrum: sign census (" + std::to_string(got_plus) + "+, " +
            std::to_string(got_minus) + "-) does not match the strict-partition split (" +
            std::to_string(sp_plus) + "+, " + std::to_string(sp_minus) + "-)");
    return spectrum;
}

VectorXq idempotent_vector(const SpectrumSlot& slot, const ClassAlgebra& algebra) {
    const int m = algebra.size();
    Rational k(slot.sign == SignClass::plus ? 2 : 1);
    VectorXq kappa(m);
    for (int a = 0; a < m; ++a)
        kappa(a) = k * slot.c * slot.c * Rational(algebra.theta_values[a]) * slot.f[a];
    return kappa;
}

OrthogonalityReport verify_orthogonality(const SpinSpectrum& spectrum) {
    OrthogonalityReport report;
    const int m = static_cast<int>(spectrum.basis.size());
    const int n = static_cast<int>(spectrum.slots.size());
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            const auto& sa = spectrum.slots[a];
            const auto& sb = spectrum.slots[b];
            Rational lhs(0);
            for (int g = 0; g < m; ++g)
                lhs += Rational(spectrum.theta_values[g]) * sa.f[g] * sb.f[g];
            Rational rhs(0);
            if (a == b) {
                Rational k(sa.sign == SignClass::plus ? 2 : 1);
                rhs = Rational(1) / (k * sa.c * sa.c);
            }
            ++report.pairs_checked;
            if (!(lhs == rhs))
                report.violations.push_back({a, b, lhs.to_string(), rhs.to_string()});
        }
    }
    return report;
}

}  // namespace spinhurwitz
