#include "bmeas/corollary.hpp"
#include "bmeas/entire.hpp"
#include "bmeas/format.hpp"
#include "bmeas/hessenberg.hpp"
#include "bmeas/integrands.hpp"
#include "bmeas/legendre.hpp"
#include "bmeas/measure.hpp"
#include "bmeas/oracle.hpp"
#include "bmeas/qpoly.hpp"
#include "bmeas/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <string>
#include <vector>

namespace py = pybind11;

namespace {

using namespace bmeas;

// Exact values cross the boundary as canonical strings ("a/b", big integers
// in decimal); the python package turns them into Fraction/int.

Rational rat(const std::string& s) { return parse_rational(s); }

std::vector<std::string> py_moments_exact(const std::string& p, int n) {
    std::vector<std::string> out;
    for (const auto& j : moments_recurrence(rat(p), n)) out.push_back(format_rational(j));
    return out;
}

std::string py_integrate_exact(const std::string& p, const std::vector<std::string>& coeffs,
                               const std::string& method) {
    std::vector<Rational> c(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = rat(coeffs[i]);
    const Polynomial<Rational> poly(std::move(c));
    const Rational pr = rat(p);
    Rational v;
    if (method == "moments") {
        v = integrate_poly_via_moments(poly, pr);
    } else if (method == "det3") {
        v = integrate_polynomial_det(PascalForm::compact, poly, pr);
    } else if (method == "det104") {
        v = integrate_polynomial_det(PascalForm::regularized, poly, pr);
    } else {
        throw std::invalid_argument("unknown method '" + method + "'");
    }
    return format_rational(v);
}

Complex py_ip(Complex p, Complex w, const std::string& method, double tol, int precision_digits) {
    EvalConfig cfg;
    if (tol > 0.0) cfg.product_tol = tol;
    cfg.precision_digits = precision_digits;
    const ComplexPoint pt{p, w};
    if (method == "product") return ip_product(pt, cfg);
    if (method == "taylor") return ip_taylor(pt, cfg);
    if (method == "reduce") return ip_reduce(pt, cfg);
    if (method == "logseries") return std::exp(log_series_eval(p, w, 60));
    throw std::invalid_argument("unknown method '" + method + "'");
}

Complex py_fourier(Complex p, long k, int precision_digits) {
    EvalConfig cfg;
    cfg.precision_digits = precision_digits;
    return fourier_coefficient(p, k, cfg);
}

py::list py_verify(const std::string& which) {
    py::list rows;
    for (const auto& r : run_identity_suite(which).rows) {
        py::dict d;
        d["suite"] = r.suite;
        d["p"] = r.p;
        d["omega"] = r.omega;
        d["m"] = r.m_terms;
        d["residual"] = r.residual;
        d["tolerance"] = r.tolerance;
        d["pass"] = r.pass;
        rows.append(std::move(d));
    }
    return rows;
}

std::vector<std::string> py_qpoly(int n) {
    std::vector<std::string> out;
    for (const auto& c : q_polynomial(n).coeffs) out.push_back(format_bigint(c));
    return out;
}

py::tuple py_qpoly_certificate(int n) {
    const RootCertificate cert = root_certificate({n, q_polynomial(n)});
    return py::make_tuple(cert.root_count_in_unit_interval, cert.all_simple);
}

std::vector<std::string> py_legendre_coeffs(int n) {
    std::vector<std::string> out;
    for (const auto& c : shifted_legendre(n).scaled_coeffs.coeffs) out.push_back(format_bigint(c));
    return out;
}

std::string py_legendre_exact(const std::string& p, int n) {
    return format_rational(legendre_coeff_exact_part(rat(p), n));
}

std::string py_corollary_exact(const std::string& which, const std::string& p, const std::string& w,
                               const std::string& alpha, int terms) {
    const Rational pr = rat(p), wr = rat(w);
    Rational v;
    if (which == "exp") {
        v = exp_integral_series(pr, wr, terms);
    } else if (which == "log") {
        v = log_integral_series(pr, wr, terms);
    } else if (which == "pow") {
        v = power_integral_series(pr, wr, rat(alpha), terms);
    } else {
        throw std::invalid_argument("unknown corollary integral '" + which + "'");
    }
    return format_rational(v);
}

py::tuple py_dyadic(const std::string& f, double p, int depth, double omega, double alpha) {
    const Integrand fn = make_integrand(f, omega, alpha);
    const double budget = fn.lipschitz >= 0.0 ? fn.lipschitz * std::ldexp(1.0, -depth - 1) : -1.0;
    const DyadicResult r = dyadic_integrate(fn.f, p, depth, budget);
    return py::make_tuple(r.value, r.error_bound, r.bound_estimated);
}

py::tuple py_mc(const std::string& f, double p, std::uint64_t samples, std::uint64_t seed, int digits, double omega,
                double alpha) {
    const McResult r = mc_integrate(make_integrand(f, omega, alpha).f, p, samples, seed, digits);
    return py::make_tuple(r.value, r.std_error);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "integrals against the binary digit measure mu_p";
    m.def("moments_exact", &py_moments_exact, py::arg("p"), py::arg("n"));
    m.def("moments_float", &moments_double, py::arg("p"), py::arg("n"));
    m.def("integrate_exact", &py_integrate_exact, py::arg("p"), py::arg("coeffs"), py::arg("method") = "moments");
    m.def("ip", &py_ip, py::arg("p"), py::arg("omega"), py::arg("method") = "product", py::arg("tol") = 0.0,
          py::arg("precision_digits") = 16);
    m.def("fourier", &py_fourier, py::arg("p"), py::arg("k"), py::arg("precision_digits") = 16);
    m.def("verify_suite", &py_verify, py::arg("which") = "all");
    m.def("qpoly_coefficients", &py_qpoly, py::arg("n"));
    m.def("qpoly_certificate", &py_qpoly_certificate, py::arg("n"));
    m.def("legendre_coefficients", &py_legendre_coeffs, py::arg("n"));
    m.def("legendre_exact", &py_legendre_exact, py::arg("p"), py::arg("n"));
    m.def("legendre_normalizer", &legendre_normalizer, py::arg("n"));
    m.def("corollary_exact", &py_corollary_exact, py::arg("which"), py::arg("p"), py::arg("omega"),
          py::arg("alpha") = "0", py::arg("terms") = 32);
    m.def("dyadic_integrate", &py_dyadic, py::arg("f"), py::arg("p"), py::arg("depth"), py::arg("omega") = 1.0,
          py::arg("alpha") = 0.5);
    m.def("mc_integrate", &py_mc, py::arg("f"), py::arg("p"), py::arg("samples"), py::arg("seed") = 1,
          py::arg("digits") = 53, py::arg("omega") = 1.0, py::arg("alpha") = 0.5);
}
