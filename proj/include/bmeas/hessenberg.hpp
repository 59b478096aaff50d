#pragma once

#include "bmeas/binomial.hpp"
#include "bmeas/polynomial.hpp"
#include "bmeas/scalar.hpp"

#include <stdexcept>
#include <vector>

namespace bmeas {

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Two bordered Pascal matrices whose determinant integrates a polynomial
// against the digit measure.  `compact` divides by 1-p inside the matrix and
// is singular at p = 1; `regularized` scales each row by 2^-n and stays
// finite there.
enum class PascalForm { compact, regularized };

// (N+1)x(N+1) lower-Hessenberg matrix.  Rows 0..N-1 carry binomial row n =
// i+1 with one superdiagonal entry; the last row is r_0..r_N.
template <class T>
Matrix<T> pascal_hessenberg_matrix(PascalForm form, const T& p, const Polynomial<T>& r, int order) {
    if (order < 0) throw std::invalid_argument("matrix order must be >= 0");
    if (r.degree() > order) throw std::invalid_argument("polynomial degree exceeds matrix order");
    if (form == PascalForm::compact && p == T(1))
        throw std::domain_error("compact determinant form is singular at p = 1");

    const std::size_t size = static_cast<std::size_t>(order) + 1;
    Matrix<T> a(size, std::vector<T>(size, T(0)));
    const T one_minus_p = T(1) - p;
    T pow2 = T(1);
    for (int n = 1; n <= order; ++n) {
        pow2 = pow2 * T(2);
        auto& row = a[static_cast<std::size_t>(n - 1)];
        const auto& pas = pascal_row(n);
        if (form == PascalForm::compact) {
            for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = scalar_from_bigint<T>(pas[static_cast<std::size_t>(j)]);
            row[static_cast<std::size_t>(n)] = (T(1) - pow2) / one_minus_p;
        } else {
            for (int j = 0; j < n; ++j)
                row[static_cast<std::size_t>(j)] = one_minus_p * scalar_from_bigint<T>(pas[static_cast<std::size_t>(j)]) / pow2;
            row[static_cast<std::size_t>(n)] = T(1) / pow2 - T(1);
        }
    }
    for (int k = 0; k <= order; ++k) a[size - 1][static_cast<std::size_t>(k)] = r.coeff(k);
    return a;
}

// Determinant of a lower-Hessenberg matrix by leading-principal-minor
// recurrence, O(n^2): expanding minor t along its last row gives
//   d_t = sum_c (-1)^(t-1+c) a[t-1][c] (prod_{j=c}^{t-2} a[j][j+1]) d_c.
template <class T>
T hessenberg_det(const Matrix<T>& a) {
    const std::size_t n = a.size();
    if (n == 0) return T(1);
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("matrix must be square");
    std::vector<T> d(n + 1);
    d[0] = T(1);
    for (std::size_t t = 1; t <= n; ++t) {
        T acc(0);
        T prod(1);
        bool negate = false;
        for (std::size_t c = t; c-- > 0;) {
            const T& entry = a[t - 1][c];
            if (!(entry == T(0))) {
                T term = entry * prod * d[c];
                acc += negate ? -term : term;
            }
            if (c > 0) {
                prod = prod * a[c - 1][c];
                negate = !negate;
            }
        }
        d[t] = acc;
    }
    return d[n];
}

// Prefactor times determinant.  Both prefactors are accumulated factor by
// factor so magnitudes stay tame in floating point.
template <class T>
T integrate_polynomial_det(PascalForm form, const Polynomial<T>& r, const T& p, int order = -1) {
    if (order < 0) order = r.degree();
    if (r.is_zero()) return T(0);
    T pref(1);
    const T one_minus_p = T(1) - p;
    T pow2 = T(1);
    for (int n = 1; n <= order; ++n) {
        pow2 = pow2 * T(2);
        if (form == PascalForm::compact)
            pref = pref * one_minus_p / (pow2 - T(1));
        else
            pref = pref * pow2 / (pow2 - T(1));
    }
    return pref * hessenberg_det(pascal_hessenberg_matrix(form, p, r, order));
}

template <class T>
T moment_det(PascalForm form, int k, const T& p) {
    if (k < 0) throw std::invalid_argument("moment order must be >= 0");
    return integrate_polynomial_det(form, Polynomial<T>::monomial(k), p, k);
}

}  // namespace bmeas
