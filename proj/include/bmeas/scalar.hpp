#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <utility>

namespace bmeas {

// Scalar families used throughout the library.  Exact kinds (Rational,
// ComplexRational) give bit-exact results; floating kinds trade exactness
// for transcendental evaluation.  Quad carries ~34 significant decimal
// digits and backs the high-precision paths.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Quad = boost::multiprecision::cpp_bin_float_quad;
using QuadComplex = boost::multiprecision::cpp_complex_quad;
using Complex = std::complex<double>;

// Gaussian rational: exact complex arithmetic over Q(i).  Field operations
// only; enough to run every exact kernel with complex parameters.
struct ComplexRational {
    Rational re;
    Rational im;

    ComplexRational() = default;
    ComplexRational(long v) : re(v) {}  // NOLINT: implicit by design, mirrors T(0)/T(1)
    ComplexRational(Rational r) : re(std::move(r)) {}
    ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
    friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
        Rational n = b.re * b.re + b.im * b.im;  // nonzero unless b == 0
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    ComplexRational& operator+=(const ComplexRational& o) { return *this = *this + o; }
    ComplexRational& operator-=(const ComplexRational& o) { return *this = *this - o; }
    ComplexRational& operator*=(const ComplexRational& o) { return *this = *this * o; }
    ComplexRational& operator/=(const ComplexRational& o) { return *this = *this / o; }
    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ComplexRational& a, const ComplexRational& b) { return !(a == b); }
};

template <class T>
inline constexpr bool is_exact_scalar_v = false;
template <>
inline constexpr bool is_exact_scalar_v<Rational> = true;
template <>
inline constexpr bool is_exact_scalar_v<ComplexRational> = true;

// Conversion of exact rationals into any scalar kind.  This is the one
// funnel through which table entries (binomials, 2^n-1 products, dyadic
// weights) enter floating arithmetic, so each value is rounded once.
template <class T>
T scalar_from_rational(const Rational& q);

template <>
inline Rational scalar_from_rational<Rational>(const Rational& q) {
    return q;
}
template <>
inline ComplexRational scalar_from_rational<ComplexRational>(const Rational& q) {
    return {q, Rational(0)};
}
template <>
inline double scalar_from_rational<double>(const Rational& q) {
    return q.convert_to<double>();
}
template <>
inline Complex scalar_from_rational<Complex>(const Rational& q) {
    return {q.convert_to<double>(), 0.0};
}
template <>
inline Quad scalar_from_rational<Quad>(const Rational& q) {
    return q.convert_to<Quad>();
}
template <>
inline QuadComplex scalar_from_rational<QuadComplex>(const Rational& q) {
    return QuadComplex(q.convert_to<Quad>());
}

template <class T>
T scalar_from_bigint(const BigInt& n) {
    return scalar_from_rational<T>(Rational(n));
}

// |x| < 1, exact for the exact kinds (compares |x|^2 over Q).
inline bool abs_less_one(const Rational& x) { return abs(x) < 1; }
inline bool abs_less_one(const ComplexRational& z) { return z.re * z.re + z.im * z.im < 1; }
inline bool abs_less_one(double x) { return std::abs(x) < 1.0; }
inline bool abs_less_one(const Complex& z) { return std::norm(z) < 1.0; }
inline bool abs_less_one(const Quad& x) { return abs(x) < 1; }
inline bool abs_less_one(const QuadComplex& z) { return norm(z) < 1; }

inline Complex narrow(const QuadComplex& z) {
    return {z.real().convert_to<double>(), z.imag().convert_to<double>()};
}
inline double narrow(const Quad& x) { return x.convert_to<double>(); }
inline QuadComplex widen(const Complex& z) { return {Quad(z.real()), Quad(z.imag())}; }

template <class T>
T scalar_pow(T base, unsigned n) {
    T out(1);
    while (n) {
        if (n & 1u) out *= base;
        base *= base;
        n >>= 1u;
    }
    return out;
}

}  // namespace bmeas
