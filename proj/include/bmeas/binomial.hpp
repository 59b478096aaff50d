#pragma once

#include "bmeas/scalar.hpp"

#include <vector>

namespace bmeas {

// Pascal-triangle cache in exact integers.  Rows are built by addition only
// and kept for the lifetime of the process; lookups are thread-safe.
const BigInt& binomial(int n, int k);
const std::vector<BigInt>& pascal_row(int n);

BigInt factorial(int n);

// prod_{j=1..n} (2^j - 1); empty product for n == 0.
BigInt pow2m1_product(int n);

}  // namespace bmeas
