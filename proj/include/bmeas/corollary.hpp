#pragma once

#include "bmeas/entire.hpp"
#include "bmeas/hessenberg.hpp"
#include "bmeas/measure.hpp"
#include "bmeas/scalar.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace bmeas {

// Truncations of int f d(mu_p) for f = e^(wx), ln(1 - wx), (1 + wx)^a.
// Each comes in two exactly-equal forms: the moment series and the bordered
// Pascal determinant whose last row holds the Taylor weights of f.  The
// determinant route exists as a cross-check, not as the cheaper path.

template <class T>
std::vector<T> generalized_binomials(const T& alpha, int n_max) {
    std::vector<T> c(static_cast<std::size_t>(n_max) + 1);
    c[0] = T(1);
    for (int n = 1; n <= n_max; ++n)
        c[static_cast<std::size_t>(n)] = c[static_cast<std::size_t>(n - 1)] * (alpha - T(n - 1)) / T(n);
    return c;
}

namespace detail {

// Sum r_n J_n evaluated as the bordered determinant; the regularized matrix
// form covers p = 1 where the compact form divides by zero.
template <class T>
T bordered_moment_sum(std::vector<T> last_row, const T& p, int order) {
    const PascalForm form = (p == T(1)) ? PascalForm::regularized : PascalForm::compact;
    return integrate_polynomial_det(form, Polynomial<T>(std::move(last_row)), p, order);
}

template <class T>
void require_unit_disc(const T& omega, const char* what) {
    if (!abs_less_one(omega)) throw std::domain_error(std::string(what) + " requires |omega| < 1");
}

}  // namespace detail

template <class T>
T exp_integral_series(const T& p, const T& omega, int terms) {
    if (terms < 1) throw std::invalid_argument("truncation order must be >= 1");
    return detail::ip_taylor_t(p, omega, terms);
}

template <class T>
T exp_integral_det(const T& p, const T& omega, int terms) {
    if (terms < 1) throw std::invalid_argument("truncation order must be >= 1");
    std::vector<T> row(static_cast<std::size_t>(terms) + 1);
    row[0] = T(1);
    for (int n = 1; n <= terms; ++n) row[static_cast<std::size_t>(n)] = row[static_cast<std::size_t>(n - 1)] * omega / T(n);
    return detail::bordered_moment_sum(std::move(row), p, terms);
}

template <class T>
T log_integral_series(const T& p, const T& omega, int terms) {
    if (terms < 1) throw std::invalid_argument("truncation order must be >= 1");
    detail::require_unit_disc(omega, "log integral");
    const auto j = moments_recurrence(p, terms);
    T acc(0);
    T wpow(1);
    for (int n = 1; n <= terms; ++n) {
        wpow = wpow * omega;
        acc += wpow * j[static_cast<std::size_t>(n)] / T(n);
    }
    return -acc;
}

template <class T>
T log_integral_det(const T& p, const T& omega, int terms) {
    if (terms < 1) throw std::invalid_argument("truncation order must be >= 1");
    detail::require_unit_disc(omega, "log integral");
    std::vector<T> row(static_cast<std::size_t>(terms) + 1, T(0));
    T wpow(1);
    for (int n = 1; n <= terms; ++n) {
        wpow = wpow * omega;
        row[static_cast<std::size_t>(n)] = wpow / T(n);
    }
    return -detail::bordered_moment_sum(std::move(row), p, terms);
}

template <class T>
T power_integral_series(const T& p, const T& omega, const T& alpha, int terms) {
    if (terms < 1) throw std::invalid_argument("truncation order must be >= 1");
    detail::require_unit_disc(omega, "power integral");
    const auto j = moments_recurrence(p, terms);
    const auto c = generalized_binomials(alpha, terms);
    T acc(1);
    T wpow(1);
    for (int n = 1; n <= terms; ++n) {
        wpow = wpow * omega;
        acc += c[static_cast<std::size_t>(n)] * wpow * j[static_cast<std::size_t>(n)];
    }
    return acc;
}

template <class T>
T power_integral_det(const T& p, const T& omega, const T& alpha, int terms) {
    if (terms < 1) throw std::invalid_argument("truncation order must be >= 1");
    detail::require_unit_disc(omega, "power integral");
    const auto c = generalized_binomials(alpha, terms);
    std::vector<T> row(static_cast<std::size_t>(terms) + 1);
    T wpow(1);
    row[0] = T(1);
    for (int n = 1; n <= terms; ++n) {
        wpow = wpow * omega;
        row[static_cast<std::size_t>(n)] = c[static_cast<std::size_t>(n)] * wpow;
    }
    return detail::bordered_moment_sum(std::move(row), p, terms);
}

}  // namespace bmeas
