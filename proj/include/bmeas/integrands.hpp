#pragma once

#include <functional>
#include <string>

namespace bmeas {

// Named real integrand for the brute-force integrators.  `lipschitz` is a
// bound on |f'| over [0,1] (-1 when no closed form is provided) so callers
// can turn cylinder width into a rigorous quadrature error budget.
struct Integrand {
    std::string name;
    std::function<double(double)> f;
    double lipschitz = -1.0;
};

// Accepted names: "x^k" (k a nonnegative integer), "exp" for e^(omega x),
// "log1m" for ln(1 - omega x), "pow" for (1 + omega x)^alpha.  The latter
// three read their parameters from `omega`/`alpha` and require |omega| < 1
// where the integrand would otherwise leave its domain.
Integrand make_integrand(const std::string& name, double omega = 0.0, double alpha = 0.0);

}  // namespace bmeas
