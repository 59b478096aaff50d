#pragma once

#include "bmeas/scalar.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace bmeas {

// Depth-d cylinder of the digit measure: the dyadic interval fixing the
// first d binary digits x_1..x_d (packed into `bits`, x_1 at the high end).
template <class T>
struct DyadicCylinder {
    std::uint64_t bits = 0;
    int depth = 0;
    T weight{};    // p^(#zeros) * (1-p)^(#ones)
    T left{};      // 0.x_1...x_d
    T width{};     // 2^-depth
};

template <class T>
DyadicCylinder<T> dyadic_cylinder(std::uint64_t bits, int depth, const T& p) {
    if (depth < 1 || depth > 63) throw std::invalid_argument("cylinder depth must be in [1, 63]");
    if (bits >> depth) throw std::invalid_argument("cylinder bits exceed depth");
    DyadicCylinder<T> c;
    c.bits = bits;
    c.depth = depth;
    const int ones = std::popcount(bits);
    c.weight = scalar_pow(p, static_cast<unsigned>(depth - ones)) * scalar_pow(T(1) - p, static_cast<unsigned>(ones));
    const T pow2 = scalar_pow(T(2), static_cast<unsigned>(depth));
    c.left = T(static_cast<long long>(bits)) / pow2;
    c.width = T(1) / pow2;
    return c;
}

struct DyadicResult {
    double value;
    double error_bound;  // modulus-of-continuity budget at half cylinder width
    bool bound_estimated;
};

// Midpoint quadrature over all 2^depth cylinders.  The error bound is
// w_f(2^-(depth+1)): supplied via `modulus`, or estimated from the largest
// jump between adjacent midpoint samples when `modulus` is negative.
template <class F>
DyadicResult dyadic_integrate(F&& f, double p, int depth, double modulus = -1.0) {
    if (depth < 1 || depth > 26) throw std::invalid_argument("dyadic depth must be in [1, 26]");
    std::vector<double> pz(static_cast<std::size_t>(depth) + 1, 1.0);
    std::vector<double> po(static_cast<std::size_t>(depth) + 1, 1.0);
    for (int i = 1; i <= depth; ++i) {
        pz[static_cast<std::size_t>(i)] = pz[static_cast<std::size_t>(i - 1)] * p;
        po[static_cast<std::size_t>(i)] = po[static_cast<std::size_t>(i - 1)] * (1.0 - p);
    }
    const std::uint64_t count = std::uint64_t{1} << depth;
    const double half_width = std::ldexp(1.0, -depth - 1);
    double acc = 0.0;
    double jump = 0.0;
    double prev = 0.0;
    for (std::uint64_t k = 0; k < count; ++k) {
        const int ones = std::popcount(k);
        const double v = f(static_cast<double>(2 * k + 1) * half_width);
        acc += pz[static_cast<std::size_t>(depth - ones)] * po[static_cast<std::size_t>(ones)] * v;
        if (modulus < 0.0 && k > 0 && std::abs(v - prev) > jump) jump = std::abs(v - prev);
        prev = v;
    }
    if (modulus >= 0.0) return {acc, modulus, false};
    return {acc, jump, true};
}

// Same quadrature over an exact field; used to pin identities without
// rounding.  f maps T -> T.
template <class T, class F>
T dyadic_integrate_exact(F&& f, const T& p, int depth) {
    if (depth < 1 || depth > 22) throw std::invalid_argument("exact dyadic depth must be in [1, 22]");
    std::vector<T> pz(static_cast<std::size_t>(depth) + 1, T(1));
    std::vector<T> po(static_cast<std::size_t>(depth) + 1, T(1));
    for (int i = 1; i <= depth; ++i) {
        pz[static_cast<std::size_t>(i)] = pz[static_cast<std::size_t>(i - 1)] * p;
        po[static_cast<std::size_t>(i)] = po[static_cast<std::size_t>(i - 1)] * (T(1) - p);
    }
    const std::uint64_t count = std::uint64_t{1} << depth;
    const T denom = scalar_pow(T(2), static_cast<unsigned>(depth + 1));
    T acc(0);
    for (std::uint64_t k = 0; k < count; ++k) {
        const int ones = std::popcount(k);
        acc += pz[static_cast<std::size_t>(depth - ones)] * po[static_cast<std::size_t>(ones)] *
               f(T(static_cast<long long>(2 * k + 1)) / denom);
    }
    return acc;
}

struct McResult {
    double value;
    double std_error;
    std::uint64_t samples;
    std::uint64_t seed;
};

// Sample mean over draws X = sum b_i 2^-i with independent digits,
// P(b_i = 1) = 1-p.  Uniforms are built as (mt19937_64() >> 11) * 2^-53 so
// runs are reproducible bit-for-bit across platforms.
template <class F>
McResult mc_integrate(F&& f, double p, std::uint64_t samples, std::uint64_t seed, int digits = 53) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("monte carlo sampling requires 0 < p < 1");
    if (samples == 0) throw std::invalid_argument("sample count must be positive");
    if (digits < 1 || digits > 64) throw std::invalid_argument("digit count must be in [1, 64]");
    std::mt19937_64 rng(seed);
    double sum = 0.0;
    double sumsq = 0.0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        double x = 0.0;
        double scale = 0.5;
        for (int i = 0; i < digits; ++i) {
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u >= p) x += scale;
            scale *= 0.5;
        }
        const double v = f(x);
        sum += v;
        sumsq += v * v;
    }
    const double n = static_cast<double>(samples);
    const double mean = sum / n;
    double var = sumsq / n - mean * mean;
    if (var < 0.0) var = 0.0;
    if (samples > 1) var *= n / (n - 1.0);
    return {mean, std::sqrt(var / n), samples, seed};
}

}  // namespace bmeas
