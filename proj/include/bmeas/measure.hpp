#pragma once

#include "bmeas/binomial.hpp"
#include "bmeas/polynomial.hpp"
#include "bmeas/scalar.hpp"

#include <stdexcept>
#include <vector>

namespace bmeas {

// Moments J_k = integral of x^k against the base-2 digit measure with digit
// probability p of drawing 0.  J_0 = 1 and for k >= 1
//   J_k = (1-p) / (2^k - 1) * sum_{n=0}^{k-1} C(k,n) J_n,
// exact over any field containing p.
template <class T>
std::vector<T> moments_recurrence(const T& p, int max_order) {
    if (max_order < 0) throw std::invalid_argument("moment order must be >= 0");
    std::vector<T> j(static_cast<std::size_t>(max_order) + 1);
    j[0] = T(1);
    const T one_minus_p = T(1) - p;
    T pow2 = T(1);
    for (int k = 1; k <= max_order; ++k) {
        pow2 = pow2 * T(2);
        T acc(0);
        const auto& row = pascal_row(k);
        for (int n = 0; n < k; ++n) acc += scalar_from_bigint<T>(row[static_cast<std::size_t>(n)]) * j[static_cast<std::size_t>(n)];
        j[static_cast<std::size_t>(k)] = one_minus_p * acc / (pow2 - T(1));
    }
    return j;
}

// Cached prefix of the moment sequence for a fixed parameter.
template <class T>
class MomentTable {
  public:
    explicit MomentTable(T p, int initial_order = 0) : p_(std::move(p)) {
        j_ = moments_recurrence(p_, initial_order);
    }

    const T& parameter() const { return p_; }
    int max_order() const { return static_cast<int>(j_.size()) - 1; }

    const T& operator[](int k) {
        ensure(k);
        return j_[static_cast<std::size_t>(k)];
    }

    void ensure(int k) {
        if (k < 0) throw std::invalid_argument("moment order must be >= 0");
        if (k <= max_order()) return;
        // Extend in place with the same recurrence.
        const T one_minus_p = T(1) - p_;
        T pow2 = scalar_pow(T(2), static_cast<unsigned>(max_order()));
        j_.reserve(static_cast<std::size_t>(k) + 1);
        for (int m = max_order() + 1; m <= k; ++m) {
            pow2 = pow2 * T(2);
            T acc(0);
            const auto& row = pascal_row(m);
            for (int n = 0; n < m; ++n) acc += scalar_from_bigint<T>(row[static_cast<std::size_t>(n)]) * j_[static_cast<std::size_t>(n)];
            j_.push_back(one_minus_p * acc / (pow2 - T(1)));
        }
    }

  private:
    T p_;
    std::vector<T> j_;
};

// Integral of a polynomial against the measure: linearity over the moments.
template <class T>
T integrate_poly_via_moments(const Polynomial<T>& r, const T& p) {
    if (r.is_zero()) return T(0);
    auto j = moments_recurrence(p, r.degree());
    T acc(0);
    for (int k = 0; k <= r.degree(); ++k) acc += r.coeffs[static_cast<std::size_t>(k)] * j[static_cast<std::size_t>(k)];
    return acc;
}

template <class T>
T integrate_poly_via_moments(const Polynomial<T>& r, MomentTable<T>& table) {
    if (r.is_zero()) return T(0);
    table.ensure(r.degree());
    T acc(0);
    for (int k = 0; k <= r.degree(); ++k) acc += r.coeffs[static_cast<std::size_t>(k)] * table[k];
    return acc;
}

// Floating facade: runs the recurrence in ~34-digit precision and narrows,
// so double callers do not accumulate rounding across high orders.
std::vector<double> moments_double(double p, int max_order);

}  // namespace bmeas
