#pragma once

#include "bmeas/measure.hpp"
#include "bmeas/scalar.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bmeas {

// Knobs for the I_p(omega) routes.  precision_digits > 17 switches the
// internal arithmetic to ~34-digit floats; results are narrowed on return.
struct EvalConfig {
    double product_tol = 1e-14;
    int taylor_terms = 40;
    int reduce_depth = 24;
    int precision_digits = 16;
};

struct ComplexPoint {
    Complex p;
    Complex omega;
};

namespace detail {

// Smallest M with C * 2^-M <= tol where C = |1-p| (e^|w| - 1) bounds factor
// n of the product by C * 2^-n, plus three guard factors so residuals of
// identities evaluated at mismatched truncations stay below tol as well.
// Worked in log2 space: e^|w| overflows a double long before the index
// itself gets large.
inline int product_truncation_index(double abs_one_minus_p, double abs_omega, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("product tolerance must be positive");
    if (abs_one_minus_p == 0.0 || abs_omega == 0.0) return 1;
    double log2_c;
    if (abs_omega > 30.0)
        log2_c = std::log2(abs_one_minus_p) + abs_omega / std::numbers::ln2;
    else
        log2_c = std::log2(abs_one_minus_p * (std::exp(abs_omega) - 1.0));
    const double need = log2_c - std::log2(tol);
    if (!(need > 0.0)) return 3;
    return static_cast<int>(std::ceil(need)) + 3;
}

template <class C>
double abs_as_double(const C& z) {
    using std::abs;
    return static_cast<double>(abs(z));
}

// Pi(n=1..M) (p + (1-p) e^(w/2^n)); M per the tail bound above.  The
// argument is halved incrementally so no 2^n is ever materialized, and each
// factor is formed as 1 + (1-p)(e^z - 1) so I_p(0) is exactly 1 and small-z
// factors carry no cancellation from p.
template <class C>
C ip_product_t(const C& p, const C& w, double tol) {
    using std::exp;
    const C one_minus_p = C(1) - p;
    const int m = product_truncation_index(abs_as_double(one_minus_p), abs_as_double(w), tol);
    C acc(1);
    C z = w;
    for (int n = 1; n <= m; ++n) {
        z = z / C(2);
        acc = acc * (C(1) + one_minus_p * (exp(z) - C(1)));
    }
    return acc;
}

template <class C>
C ip_taylor_t(const C& p, const C& w, int terms) {
    if (terms < 1) throw std::invalid_argument("taylor term count must be >= 1");
    const auto j = moments_recurrence(p, terms);
    C acc(1);
    C wfac(1);  // w^n / n!
    for (int n = 1; n <= terms; ++n) {
        wfac = wfac * w / C(n);
        acc += j[static_cast<std::size_t>(n)] * wfac;
    }
    return acc;
}

template <class C>
C ip_reduce_t(const C& p, const C& w, int depth, int terms) {
    if (depth < 1) throw std::invalid_argument("reduction depth must be >= 1");
    using std::exp;
    const C one_minus_p = C(1) - p;
    C acc(1);
    C z = w;
    for (int n = 1; n <= depth; ++n) {
        z = z / C(2);
        acc = acc * (C(1) + one_minus_p * (exp(z) - C(1)));
    }
    return acc * ip_taylor_t(p, z, terms);
}

}  // namespace detail

// I_p(omega) = integral of e^(omega x) against the digit measure, by the
// infinite product, by its Taylor series in omega, and by functional-equation
// halving followed by a short Taylor tail.
Complex ip_product(const ComplexPoint& pt, const EvalConfig& cfg = {});
Complex ip_taylor(const ComplexPoint& pt, const EvalConfig& cfg = {});
Complex ip_reduce(const ComplexPoint& pt, const EvalConfig& cfg = {});

// Identity defects, each evaluated with ip_product on both sides.
// functional:  I_p(w) = (p + (1-p)e^(w/2)) I_p(w/2)
// symmetry:    I_p(-w) = e^-w I_{1-p}(w)
// reciprocal:  Pi_{m<=M} I_{exp(p/2^m)}(w) = Pi_{m<=M} I_{exp(w/2^m)}(p)
// param_split: I_p(w/2) I_{p/(2p-1)}(w/2) = I_{p^2/(2p-1)}(w),  p != 1/2
// remark1:     I_p(w) = (p + (1-p)e^(w/2)) I_{p^2/(2p-1)}(w) / I_{p/(2p-1)}(w/2)
double residual_functional(const ComplexPoint& pt, const EvalConfig& cfg = {});
double residual_symmetry(const ComplexPoint& pt, const EvalConfig& cfg = {});
double residual_reciprocal(Complex p, Complex omega, int m_terms, const EvalConfig& cfg = {});
double residual_param_split(Complex p, Complex omega, const EvalConfig& cfg = {});
double residual_remark1(Complex p, Complex omega, const EvalConfig& cfg = {});

// I_p(2 pi i k): trigonometric Fourier coefficient of the measure.
Complex fourier_coefficient(Complex p, long k, const EvalConfig& cfg = {});

}  // namespace bmeas
