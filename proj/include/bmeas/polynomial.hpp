#pragma once

#include "bmeas/binomial.hpp"
#include "bmeas/scalar.hpp"

#include <cstddef>
#include <vector>

namespace bmeas {

// Dense polynomial in the monomial basis, coeffs[k] * x^k.  Canonical form
// trims trailing zeros; the zero polynomial has an empty coefficient vector
// and degree -1.
template <class T>
struct Polynomial {
    std::vector<T> coeffs;

    Polynomial() = default;
    explicit Polynomial(std::vector<T> c) : coeffs(std::move(c)) { canonicalize(); }

    static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }
    static Polynomial monomial(int degree, T scale = T(1)) {
        std::vector<T> c(static_cast<std::size_t>(degree) + 1, T(0));
        c.back() = std::move(scale);
        return Polynomial(std::move(c));
    }

    void canonicalize() {
        while (!coeffs.empty() && coeffs.back() == T(0)) coeffs.pop_back();
    }

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    T coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs.size())) return T(0);
        return coeffs[static_cast<std::size_t>(k)];
    }

    T eval(const T& x) const {
        T acc(0);
        for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs.size() <= 1) return {};
        std::vector<T> d(coeffs.size() - 1);
        for (std::size_t k = 1; k < coeffs.size(); ++k) d[k - 1] = coeffs[k] * T(static_cast<long>(k));
        return Polynomial(std::move(d));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<T> out(std::max(a.coeffs.size(), b.coeffs.size()), T(0));
        for (std::size_t k = 0; k < a.coeffs.size(); ++k) out[k] += a.coeffs[k];
        for (std::size_t k = 0; k < b.coeffs.size(); ++k) out[k] += b.coeffs[k];
        return Polynomial(std::move(out));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<T> out(std::max(a.coeffs.size(), b.coeffs.size()), T(0));
        for (std::size_t k = 0; k < a.coeffs.size(); ++k) out[k] += a.coeffs[k];
        for (std::size_t k = 0; k < b.coeffs.size(); ++k) out[k] -= b.coeffs[k];
        return Polynomial(std::move(out));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> out(a.coeffs.size() + b.coeffs.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs.size(); ++j) out[i + j] += a.coeffs[i] * b.coeffs[j];
        return Polynomial(std::move(out));
    }
    friend Polynomial operator*(const T& s, const Polynomial& a) {
        std::vector<T> out = a.coeffs;
        for (auto& c : out) c = s * c;
        return Polynomial(std::move(out));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs == b.coeffs; }
};

// R(a*x + b) expanded by the binomial theorem: the x^k coefficient picks up
// r_n * C(n,k) * a^k * b^(n-k) from every n >= k.
template <class T>
Polynomial<T> poly_compose_affine(const Polynomial<T>& r, const T& a, const T& b) {
    if (r.is_zero()) return {};
    int n_max = r.degree();
    std::vector<T> apow(static_cast<std::size_t>(n_max) + 1, T(1));
    std::vector<T> bpow(static_cast<std::size_t>(n_max) + 1, T(1));
    for (int k = 1; k <= n_max; ++k) {
        apow[k] = apow[k - 1] * a;
        bpow[k] = bpow[k - 1] * b;
    }
    std::vector<T> out(static_cast<std::size_t>(n_max) + 1, T(0));
    for (int n = 0; n <= n_max; ++n) {
        const T& rn = r.coeffs[static_cast<std::size_t>(n)];
        if (rn == T(0)) continue;
        for (int k = 0; k <= n; ++k)
            out[k] += rn * scalar_from_bigint<T>(binomial(n, k)) * apow[k] * bpow[n - k];
    }
    return Polynomial<T>(std::move(out));
}

}  // namespace bmeas
