#include "bmeas/binomial.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

namespace bmeas {

namespace {

// deque keeps completed rows at stable addresses while the cache grows.
std::deque<std::vector<BigInt>> g_rows;
std::mutex g_rows_mutex;

const std::vector<BigInt>& ensure_row(int n) {
    std::lock_guard<std::mutex> lock(g_rows_mutex);
    while (static_cast<int>(g_rows.size()) <= n) {
        int m = static_cast<int>(g_rows.size());
        std::vector<BigInt> row(m + 1, BigInt(1));
        for (int k = 1; k < m; ++k) row[k] = g_rows[m - 1][k - 1] + g_rows[m - 1][k];
        g_rows.push_back(std::move(row));
    }
    return g_rows[n];
}

const BigInt g_zero(0);

}  // namespace

const std::vector<BigInt>& pascal_row(int n) {
    if (n < 0) throw std::invalid_argument("pascal_row: negative row");
    return ensure_row(n);
}

const BigInt& binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return g_zero;
    return ensure_row(n)[k];
}

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt out(1);
    for (int j = 2; j <= n; ++j) out *= j;
    return out;
}

BigInt pow2m1_product(int n) {
    BigInt out(1);
    for (int j = 1; j <= n; ++j) out *= (BigInt(1) << j) - 1;
    return out;
}

}  // namespace bmeas
