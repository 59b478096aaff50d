#pragma once

#include "bmeas/polynomial.hpp"
#include "bmeas/scalar.hpp"

#include <vector>

namespace bmeas {

// Q_1 = 1 - p, Q_{n+1} = p(p-1) Q_n'.  Coefficients are integers and grow
// roughly like n!, so they live in big integers.
struct QPolynomial {
    int index = 0;
    Polynomial<BigInt> poly;  // coefficients in p, ascending
};

std::vector<QPolynomial> q_sequence(int n_max);
const Polynomial<BigInt>& q_polynomial(int n);  // cached, thread-safe

struct RootCertificate {
    int root_count_in_unit_interval = 0;
    bool all_simple = false;
};

// Exact certificate: distinct real roots in [0,1] by a Sturm chain over
// rationals (endpoint roots deflated first), simplicity by gcd(f, f') being
// constant.
RootCertificate root_certificate(const QPolynomial& q);

int count_roots_unit_interval(const Polynomial<Rational>& f);
bool is_squarefree(const Polynomial<Rational>& f);

// Convergence radius of the log series, 2|Log((p-1)/p)| on the principal
// branch; infinite at p = 0 and p = 1 where ln I_p is a polynomial in omega.
double log_series_radius(Complex p);

// Sum_{n=1..terms} Q_n(p) w^n / ((2^n - 1) n!) = ln I_p(w) inside the disc.
// Rejects |w| beyond 0.8 of the radius; the message reports the radius.
Complex log_series_eval(Complex p, Complex omega, int terms);

// J(p, w) = Log(p + (1-p)e^w), the building block whose halvings resum to
// ln I_p(w).
Complex j_expansion(Complex p, Complex omega);

}  // namespace bmeas
