#include "bmeas/entire.hpp"

#include <boost/math/constants/constants.hpp>

namespace bmeas {

namespace {

bool use_quad(const EvalConfig& cfg) { return cfg.precision_digits > 17; }

// In high-precision mode the truncation budget follows the requested digits,
// else the extra mantissa would be spent on the same double-grade tail.
double quad_tol(const EvalConfig& cfg) {
    const double digit_tol = std::pow(10.0, 1 - cfg.precision_digits);
    return cfg.product_tol < digit_tol ? cfg.product_tol : digit_tol;
}

template <class C>
auto residual_functional_t(const C& p, const C& w, double tol) {
    using std::abs, std::exp;
    const C lhs = detail::ip_product_t(p, w, tol);
    const C half = w / C(2);
    const C rhs = (p + (C(1) - p) * exp(half)) * detail::ip_product_t(p, half, tol);
    return abs(lhs - rhs);
}

template <class C>
auto residual_symmetry_t(const C& p, const C& w, double tol) {
    using std::abs, std::exp;
    const C lhs = detail::ip_product_t(p, -w, tol);
    const C rhs = exp(-w) * detail::ip_product_t(C(1) - p, w, tol);
    return abs(lhs - rhs);
}

template <class C>
auto residual_reciprocal_t(const C& p, const C& w, int m_terms, double tol) {
    using std::abs, std::exp;
    C lhs(1), rhs(1);
    C zp = p, zw = w;
    for (int m = 1; m <= m_terms; ++m) {
        zp = zp / C(2);
        zw = zw / C(2);
        lhs = lhs * detail::ip_product_t(exp(zp), w, tol);
        rhs = rhs * detail::ip_product_t(exp(zw), p, tol);
    }
    return abs(lhs - rhs);
}

template <class C>
auto residual_param_split_t(const C& p, const C& w, double tol) {
    using std::abs;
    const C denom = C(2) * p - C(1);
    const C half = w / C(2);
    const C lhs = detail::ip_product_t(p, half, tol) * detail::ip_product_t(p / denom, half, tol);
    const C rhs = detail::ip_product_t(p * p / denom, w, tol);
    return abs(lhs - rhs);
}

template <class C>
auto residual_remark1_t(const C& p, const C& w, double tol) {
    using std::abs, std::exp;
    const C denom2p = C(2) * p - C(1);
    const C half = w / C(2);
    const C bottom = detail::ip_product_t(p / denom2p, half, tol);
    if (detail::abs_as_double(bottom) < 1e-14)
        throw std::domain_error("identity denominator I_{p/(2p-1)}(omega/2) is numerically zero");
    const C lhs = detail::ip_product_t(p, w, tol);
    const C rhs = (p + (C(1) - p) * exp(half)) * detail::ip_product_t(p * p / denom2p, w, tol) / bottom;
    return abs(lhs - rhs);
}

}  // namespace

Complex ip_product(const ComplexPoint& pt, const EvalConfig& cfg) {
    if (use_quad(cfg)) return narrow(detail::ip_product_t(widen(pt.p), widen(pt.omega), quad_tol(cfg)));
    return detail::ip_product_t(pt.p, pt.omega, cfg.product_tol);
}

Complex ip_taylor(const ComplexPoint& pt, const EvalConfig& cfg) {
    if (use_quad(cfg)) return narrow(detail::ip_taylor_t(widen(pt.p), widen(pt.omega), cfg.taylor_terms));
    return detail::ip_taylor_t(pt.p, pt.omega, cfg.taylor_terms);
}

Complex ip_reduce(const ComplexPoint& pt, const EvalConfig& cfg) {
    if (use_quad(cfg))
        return narrow(detail::ip_reduce_t(widen(pt.p), widen(pt.omega), cfg.reduce_depth, cfg.taylor_terms));
    return detail::ip_reduce_t(pt.p, pt.omega, cfg.reduce_depth, cfg.taylor_terms);
}

double residual_functional(const ComplexPoint& pt, const EvalConfig& cfg) {
    if (use_quad(cfg)) return narrow(residual_functional_t(widen(pt.p), widen(pt.omega), quad_tol(cfg)));
    return residual_functional_t(pt.p, pt.omega, cfg.product_tol);
}

double residual_symmetry(const ComplexPoint& pt, const EvalConfig& cfg) {
    if (use_quad(cfg)) return narrow(residual_symmetry_t(widen(pt.p), widen(pt.omega), quad_tol(cfg)));
    return residual_symmetry_t(pt.p, pt.omega, cfg.product_tol);
}

double residual_reciprocal(Complex p, Complex omega, int m_terms, const EvalConfig& cfg) {
    if (m_terms < 1) throw std::invalid_argument("reciprocal truncation must be >= 1");
    if (use_quad(cfg)) return narrow(residual_reciprocal_t(widen(p), widen(omega), m_terms, quad_tol(cfg)));
    return residual_reciprocal_t(p, omega, m_terms, cfg.product_tol);
}

double residual_param_split(Complex p, Complex omega, const EvalConfig& cfg) {
    if (p == Complex(0.5, 0.0)) throw std::domain_error("parameter split identity requires p != 1/2");
    if (use_quad(cfg)) return narrow(residual_param_split_t(widen(p), widen(omega), quad_tol(cfg)));
    return residual_param_split_t(p, omega, cfg.product_tol);
}

double residual_remark1(Complex p, Complex omega, const EvalConfig& cfg) {
    if (p == Complex(0.5, 0.0)) throw std::domain_error("combined identity requires p != 1/2");
    if (use_quad(cfg)) return narrow(residual_remark1_t(widen(p), widen(omega), quad_tol(cfg)));
    return residual_remark1_t(p, omega, cfg.product_tol);
}

Complex fourier_coefficient(Complex p, long k, const EvalConfig& cfg) {
    if (use_quad(cfg)) {
        const Quad two_pi_k = 2 * boost::math::constants::pi<Quad>() * Quad(k);
        return narrow(detail::ip_product_t(widen(p), QuadComplex(Quad(0), two_pi_k), quad_tol(cfg)));
    }
    return detail::ip_product_t(p, Complex(0.0, 2.0 * std::numbers::pi * static_cast<double>(k)), cfg.product_tol);
}

}  // namespace bmeas
