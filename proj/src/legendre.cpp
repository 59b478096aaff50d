#include "bmeas/legendre.hpp"

#include <stdexcept>

namespace bmeas {

ShiftedLegendre shifted_legendre(int n) {
    if (n < 0) throw std::invalid_argument("legendre index must be >= 0");
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        BigInt v = binomial(n, k) * binomial(n + k, k);
        c[static_cast<std::size_t>(k)] = ((n + k) % 2 == 0) ? v : -v;
    }
    return {n, Polynomial<BigInt>(std::move(c))};
}

}  // namespace bmeas
