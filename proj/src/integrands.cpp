#include "bmeas/integrands.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace bmeas {

namespace {

bool parse_monomial_exponent(const std::string& name, int& k) {
    if (name.size() < 3 || name[0] != 'x' || name[1] != '^') return false;
    char* end = nullptr;
    const long v = std::strtol(name.c_str() + 2, &end, 10);
    if (end == nullptr || *end != '\0' || v < 0 || v > 1024) return false;
    k = static_cast<int>(v);
    return true;
}

}  // namespace

Integrand make_integrand(const std::string& name, double omega, double alpha) {
    int k = 0;
    if (parse_monomial_exponent(name, k)) {
        return {name, [k](double x) { return std::pow(x, k); }, static_cast<double>(k)};
    }
    if (name == "exp") {
        // |d/dx e^(wx)| <= |w| e^max(w,0) on [0,1].
        return {name, [omega](double x) { return std::exp(omega * x); },
                std::abs(omega) * std::exp(omega > 0.0 ? omega : 0.0)};
    }
    if (name == "log1m") {
        if (std::abs(omega) >= 1.0) throw std::domain_error("log1m integrand requires |omega| < 1");
        return {name, [omega](double x) { return std::log1p(-omega * x); },
                std::abs(omega) / (1.0 - std::abs(omega))};
    }
    if (name == "pow") {
        if (std::abs(omega) >= 1.0) throw std::domain_error("pow integrand requires |omega| < 1");
        // |d/dx (1+wx)^a| = |a w| (1+wx)^(a-1); bound by the larger endpoint value.
        const double lo = std::pow(1.0 - std::abs(omega), alpha - 1.0);
        const double hi = std::pow(1.0 + std::abs(omega), alpha - 1.0);
        return {name, [omega, alpha](double x) { return std::pow(1.0 + omega * x, alpha); },
                std::abs(alpha * omega) * (lo > hi ? lo : hi)};
    }
    throw std::invalid_argument("unknown integrand '" + name + "' (expected x^k, exp, log1m, pow)");
}

}  // namespace bmeas
