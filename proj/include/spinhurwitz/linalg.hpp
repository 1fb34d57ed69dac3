#pragma once

#include <Eigen/Core>
#include <vector>

#include "spinhurwitz/errors.hpp"

namespace spinhurwitz {

// Exact elimination helpers over any field-like Eigen scalar (no pivoting by
// magnitude: the first nonzero entry wins, which is all exact arithmetic needs).

/// In-place reduced row-echelon form; returns the pivot column of each pivot row.
template <typename Scalar>
std::vector<int> reduced_row_echelon(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m) {
    const int rows = static_cast<int>(m.rows());
    const int cols = static_cast<int>(m.cols());
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int r = row; r < rows; ++r) {
            if (!(m(r, col) == Scalar(0))) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row) m.row(pivot).swap(m.row(row));
        const Scalar pivot_value = m(row, col);  // copy: the row operation overwrites it
        m.row(row) /= pivot_value;
        for (int r = 0; r < rows; ++r) {
            if (r == row || m(r, col) == Scalar(0)) continue;
            const Scalar factor = m(r, col);
            m.row(r) -= factor * m.row(row);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <typename Scalar>
int rank_of(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m) {
    return static_cast<int>(reduced_row_echelon(m).size());
}

/// Columns spanning the kernel of m.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> nullspace(
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m) {
    const int cols = static_cast<int>(m.cols());
    std::vector<int> pivots = reduced_row_echelon(m);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;

    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> basis(
        cols, cols - static_cast<int>(pivots.size()));
    int out = 0;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Eigen::Matrix<Scalar, Eigen::Dynamic, 1> v =
            Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(cols);
        v(free) = Scalar(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v(pivots[r]) = -m(static_cast<int>(r), free);
        basis.col(out++) = v;
    }
    return basis;
}

/// Solve A x = b for a consistent system with full column rank.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> solve_exact(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& b) {
    const int cols = static_cast<int>(a.cols());
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> aug(a.rows(), cols + 1);
    aug.leftCols(cols) = a;
    aug.col(cols) = b;
    std::vector<int> pivots = reduced_row_echelon(aug);
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x =
        Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(cols);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols)
            throw internal_consistency_error("solve_exact: inconsistent system");
        x(pivots[r]) = aug(static_cast<int>(r), cols);
    }
    if (static_cast<int>(pivots.size()) != cols)
        throw internal_consistency_error("solve_exact: rank-deficient system");
    return x;
}

// Dense univariate polynomials as coefficient vectors, low degree first.

template <typename Scalar>
Scalar poly_eval(const std::vector<Scalar>& p, const Scalar& x) {
    Scalar acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

template <typename Scalar>
std::vector<Scalar> poly_mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    std::vector<Scalar> r(a.size() + b.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

template <typename Scalar>
void poly_trim(std::vector<Scalar>& p) {
    while (p.size() > 1 && p.back() == Scalar(0)) p.pop_back();
}

/// Remainder of a modulo b over a field; b nonzero.
template <typename Scalar>
std::vector<Scalar> poly_mod(std::vector<Scalar> a, const std::vector<Scalar>& b) {
    poly_trim(a);
    while (a.size() >= b.size() && !(a.size() == 1 && a[0] == Scalar(0))) {
        Scalar factor = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
        a.pop_back();
        poly_trim(a);
        if (a.size() == 1 && a[0] == Scalar(0)) break;
    }
    return a;
}

template <typename Scalar>
std::vector<Scalar> poly_monic(std::vector<Scalar> p) {
    poly_trim(p);
    Scalar lead = p.back();
    for (auto& c : p) c = c / lead;
    return p;
}

template <typename Scalar>
std::vector<Scalar> poly_gcd(std::vector<Scalar> a, std::vector<Scalar> b) {
    poly_trim(a);
    poly_trim(b);
    while (!(b.size() == 1 && b[0] == Scalar(0))) {
        auto r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

/// Exact quotient, requires b | a.
template <typename Scalar>
std::vector<Scalar> poly_div_exact(std::vector<Scalar> a, const std::vector<Scalar>& b) {
    poly_trim(a);
    std::vector<Scalar> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, Scalar(0));
    while (a.size() >= b.size() && !(a.size() == 1 && a[0] == Scalar(0))) {
        Scalar factor = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
        a.pop_back();
        poly_trim(a);
        if (a.size() == 1 && a[0] == Scalar(0)) break;
    }
    poly_trim(a);
    if (!(a.size() == 1 && a[0] == Scalar(0)))
        throw internal_consistency_error("poly_div_exact: nonzero remainder");
    poly_trim(q);
    return q;
}

template <typename Scalar>
std::vector<Scalar> poly_lcm(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    return poly_monic(poly_div_exact(poly_mul(a, b), poly_gcd(a, b)));
}

/// Monic minimal polynomial of the Krylov orbit of v under b, by incremental
/// exact elimination with coefficient tracking.
template <typename Scalar>
std::vector<Scalar> krylov_min_poly(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& b,
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> v) {
    const int n = static_cast<int>(b.rows());
    using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    // reduced[i]: a reduced Krylov vector; combo[i]: its expansion over B^j v
    std::vector<Vec> reduced;
    std::vector<std::vector<Scalar>> combos;
    std::vector<int> lead_rows;

    Vec w = v;
    for (int j = 0; j <= n; ++j) {
        std::vector<Scalar> combo(j + 1, Scalar(0));
        combo[j] = Scalar(1);
        Vec r = w;
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            const Scalar& c = r(lead_rows[i]);
            if (c == Scalar(0)) continue;
            Scalar factor = c;  // reduced rows are normalized to lead 1
            r -= factor * reduced[i];
            for (std::size_t t = 0; t < combos[i].size(); ++t) combo[t] -= factor * combos[i][t];
        }
        int lead = -1;
        for (int row = 0; row < n; ++row) {
            if (!(r(row) == Scalar(0))) {
                lead = row;
                break;
            }
        }
        if (lead < 0) {
            // dependency found: B^j v = -sum combo[t] B^t v  (combo[j] == 1)
            return combo;
        }
        Scalar norm = r(lead);
        r /= norm;
        for (auto& c : combo) c = c / norm;
        reduced.push_back(std::move(r));
        combos.push_back(std::move(combo));
        lead_rows.push_back(lead);
        w = b * w;
    }
    throw internal_consistency_error("krylov_min_poly: no dependency within dimension bound");
}

/// Minimal polynomial of b: lcm of the Krylov polynomials of the standard basis.
template <typename Scalar>
std::vector<Scalar> minimal_polynomial(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& b) {
    const int n = static_cast<int>(b.rows());
    std::vector<Scalar> p{Scalar(0), Scalar(1)};  // placeholder, replaced below
    bool first = true;
    for (int i = 0; i < n; ++i) {
        Eigen::Matrix<Scalar, Eigen::Dynamic, 1> e =
            Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(n);
        e(i) = Scalar(1);
        auto q = krylov_min_poly(b, e);
        p = first ? q : poly_lcm(p, q);
        first = false;
        if (static_cast<int>(p.size()) == n + 1) break;  // cannot grow further
    }
    return p;
}

}  // namespace spinhurwitz
