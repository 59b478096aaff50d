#pragma once

#include "bmeas/binomial.hpp"
#include "bmeas/hessenberg.hpp"
#include "bmeas/polynomial.hpp"
#include "bmeas/scalar.hpp"

#include <cmath>

namespace bmeas {

// S_N(x) = sqrt(2N+1) P_N(x) on [0,1]: integer coefficients
// s_n = (-1)^(N+n) C(N,n) C(N+n,n), with S_N(1) = 1.  The irrational
// normalizer 1/sqrt(2N+1) is kept out of all exact arithmetic.
struct ShiftedLegendre {
    int index = 0;
    Polynomial<BigInt> scaled_coeffs;
};

ShiftedLegendre shifted_legendre(int n);

inline double legendre_normalizer(int n) { return 1.0 / std::sqrt(2.0 * n + 1.0); }

// Exact part of int P_N d(mu_p), i.e. int S_N d(mu_p): bordered determinant
// with last row (-1)^n C(N,n) C(N+n,n) and prefactor (p-1)^N / prod(2^n-1).
// At p = 1 the compact matrix is singular; the regularized form with the
// plain S_N coefficient row gives the same value.
template <class T>
T legendre_coeff_exact_part(const T& p, int n) {
    if (n < 0) throw std::invalid_argument("legendre index must be >= 0");
    std::vector<T> row(static_cast<std::size_t>(n) + 1);
    bool alt = false;
    for (int k = 0; k <= n; ++k) {
        T v = scalar_from_bigint<T>(binomial(n, k) * binomial(n + k, k));
        row[static_cast<std::size_t>(k)] = alt ? -v : v;
        alt = !alt;
    }
    if (p == T(1)) {
        // Flip to the S_N coefficients proper: extra factor (-1)^N.
        if (n % 2 == 1)
            for (auto& v : row) v = -v;
        return integrate_polynomial_det(PascalForm::regularized, Polynomial<T>(std::move(row)), p, n);
    }
    T pref(1);
    const T p_minus_one = p - T(1);
    T pow2 = T(1);
    for (int j = 1; j <= n; ++j) {
        pow2 = pow2 * T(2);
        pref = pref * p_minus_one / (pow2 - T(1));
    }
    return pref * hessenberg_det(pascal_hessenberg_matrix(PascalForm::compact, p, Polynomial<T>(std::move(row)), n));
}

}  // namespace bmeas
