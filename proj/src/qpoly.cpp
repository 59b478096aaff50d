#include "bmeas/qpoly.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdio>
#include <limits>
#include <mutex>
#include <stdexcept>

namespace bmeas {

namespace {

std::mutex g_q_mutex;
std::vector<Polynomial<BigInt>> g_q;  // g_q[n-1] = Q_n

void extend_q_locked(int n_max) {
    if (g_q.empty()) g_q.push_back(Polynomial<BigInt>({BigInt(1), BigInt(-1)}));
    const Polynomial<BigInt> p2_minus_p({BigInt(0), BigInt(-1), BigInt(1)});  // p(p-1)
    while (static_cast<int>(g_q.size()) < n_max) g_q.push_back(p2_minus_p * g_q.back().derivative());
}

// Scale a rational polynomial by the positive constant that makes it a
// primitive integer polynomial.  Signs are untouched, which is what keeps
// the Sturm chain valid.
Polynomial<Rational> primitive_part(const Polynomial<Rational>& f) {
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    if (f.is_zero()) return f;
    BigInt num_gcd(0), den_lcm(1);
    for (const auto& c : f.coeffs) {
        num_gcd = gcd(num_gcd, BigInt(abs(numerator(c))));
        den_lcm = lcm(den_lcm, BigInt(denominator(c)));
    }
    const Rational scale(den_lcm, num_gcd);
    return scale * f;
}

Polynomial<Rational> poly_rem(Polynomial<Rational> a, const Polynomial<Rational>& b) {
    const int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        const int shift = a.degree() - db;
        const Rational q = a.coeffs.back() / b.coeffs.back();
        std::vector<Rational> sub(static_cast<std::size_t>(shift + db) + 1, Rational(0));
        for (int j = 0; j <= db; ++j) sub[static_cast<std::size_t>(j + shift)] = q * b.coeffs[static_cast<std::size_t>(j)];
        a = a - Polynomial<Rational>(std::move(sub));
    }
    return a;
}

std::vector<Polynomial<Rational>> sturm_chain(const Polynomial<Rational>& f) {
    std::vector<Polynomial<Rational>> chain;
    chain.push_back(primitive_part(f));
    auto d = f.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(primitive_part(d));
    while (true) {
        auto r = poly_rem(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        chain.push_back(primitive_part(Rational(-1) * r));
    }
    return chain;
}

int sign_of(const Rational& x) { return x == 0 ? 0 : (x < 0 ? -1 : 1); }

int variations_at(const std::vector<Polynomial<Rational>>& chain, const Rational& x) {
    int count = 0;
    int last = 0;
    for (const auto& f : chain) {
        const int s = sign_of(f.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

// Exact division by (x - 1); caller guarantees f(1) = 0.
Polynomial<Rational> deflate_at_one(const Polynomial<Rational>& f) {
    const int d = f.degree();
    std::vector<Rational> out(static_cast<std::size_t>(d), Rational(0));
    Rational carry(0);
    for (int k = d; k >= 1; --k) {
        carry += f.coeffs[static_cast<std::size_t>(k)];
        out[static_cast<std::size_t>(k - 1)] = carry;
    }
    return Polynomial<Rational>(std::move(out));
}

Polynomial<Rational> to_rational(const Polynomial<BigInt>& f) {
    std::vector<Rational> c(f.coeffs.size());
    for (std::size_t k = 0; k < f.coeffs.size(); ++k) c[k] = Rational(f.coeffs[k]);
    return Polynomial<Rational>(std::move(c));
}

template <class C>
C eval_bigint_poly(const Polynomial<BigInt>& f, const C& x) {
    C acc(0);
    for (std::size_t k = f.coeffs.size(); k-- > 0;) acc = acc * x + scalar_from_bigint<C>(f.coeffs[k]);
    return acc;
}

}  // namespace

std::vector<QPolynomial> q_sequence(int n_max) {
    if (n_max < 1) throw std::invalid_argument("q_sequence needs n_max >= 1");
    std::lock_guard<std::mutex> lock(g_q_mutex);
    extend_q_locked(n_max);
    std::vector<QPolynomial> out;
    out.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) out.push_back({n, g_q[static_cast<std::size_t>(n - 1)]});
    return out;
}

const Polynomial<BigInt>& q_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("Q_n defined for n >= 1");
    std::lock_guard<std::mutex> lock(g_q_mutex);
    extend_q_locked(n);
    return g_q[static_cast<std::size_t>(n - 1)];
}

int count_roots_unit_interval(const Polynomial<Rational>& f) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial has no root count");
    Polynomial<Rational> d = f;
    int distinct_endpoint_roots = 0;
    std::size_t lead_zeros = 0;
    while (lead_zeros < d.coeffs.size() && d.coeffs[lead_zeros] == 0) ++lead_zeros;
    if (lead_zeros > 0) {
        ++distinct_endpoint_roots;
        d = Polynomial<Rational>(std::vector<Rational>(d.coeffs.begin() + static_cast<long>(lead_zeros), d.coeffs.end()));
    }
    bool root_at_one = false;
    while (!d.is_zero() && d.degree() >= 1 && d.eval(Rational(1)) == 0) {
        root_at_one = true;
        d = deflate_at_one(d);
    }
    if (root_at_one) ++distinct_endpoint_roots;
    if (d.degree() < 1) return distinct_endpoint_roots;
    const auto chain = sturm_chain(d);
    // d(0) != 0 and d(1) != 0 here, so V(0) - V(1) counts distinct roots in
    // the open interval.
    return distinct_endpoint_roots + variations_at(chain, Rational(0)) - variations_at(chain, Rational(1));
}

bool is_squarefree(const Polynomial<Rational>& f) {
    if (f.is_zero()) return false;
    if (f.degree() <= 1) return true;
    // Euclid on (f, f'); squarefree iff the last nonzero remainder is
    // constant.
    Polynomial<Rational> a = primitive_part(f);
    Polynomial<Rational> b = primitive_part(f.derivative());
    while (!b.is_zero()) {
        auto r = primitive_part(poly_rem(a, b));
        a = b;
        b = r;
    }
    return a.degree() == 0;
}

RootCertificate root_certificate(const QPolynomial& q) {
    const auto f = to_rational(q.poly);
    return {count_roots_unit_interval(f), is_squarefree(f)};
}

double log_series_radius(Complex p) {
    if (p == Complex(0.0) || p == Complex(1.0)) return std::numeric_limits<double>::infinity();
    return 2.0 * std::abs(std::log((p - 1.0) / p));
}

Complex log_series_eval(Complex p, Complex omega, int terms) {
    if (terms < 1) throw std::invalid_argument("log series needs terms >= 1");
    const double radius = log_series_radius(p);
    if (!(std::abs(omega) <= 0.8 * radius)) {
        char msg[160];
        std::snprintf(msg, sizeof msg,
                      "omega outside the log-series disc: |omega| = %.6g exceeds 0.8 * radius = %.6g", std::abs(omega),
                      0.8 * radius);
        throw std::domain_error(msg);
    }
    std::vector<Polynomial<BigInt>> q;
    {
        std::lock_guard<std::mutex> lock(g_q_mutex);
        extend_q_locked(terms);
        q.assign(g_q.begin(), g_q.begin() + terms);
    }
    Complex acc(0.0);
    Complex wfac(1.0);  // w^n / n!
    double pow2 = 1.0;
    for (int n = 1; n <= terms; ++n) {
        wfac *= omega / static_cast<double>(n);
        pow2 *= 2.0;
        acc += eval_bigint_poly(q[static_cast<std::size_t>(n - 1)], p) * wfac / (pow2 - 1.0);
    }
    return acc;
}

Complex j_expansion(Complex p, Complex omega) {
    const Complex arg = p + (1.0 - p) * std::exp(omega);
    if (arg == Complex(0.0)) throw std::domain_error("logarithm argument p + (1-p)e^omega is zero");
    return std::log(arg);
}

}  // namespace bmeas
