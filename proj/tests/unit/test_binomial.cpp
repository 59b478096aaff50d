#include "bmeas/binomial.hpp"

#include "doctest.h"

using namespace bmeas;

TEST_CASE("binomial coefficients") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(7, 7) == 1);
    CHECK(binomial(7, 8) == 0);
    CHECK(binomial(7, -1) == 0);
    CHECK(binomial(40, 20) == BigInt("137846528820"));
}

TEST_CASE("pascal rows") {
    const auto& row = pascal_row(4);
    REQUIRE(row.size() == 5);
    CHECK(row[0] == 1);
    CHECK(row[1] == 4);
    CHECK(row[2] == 6);
    CHECK(row[3] == 4);
    CHECK(row[4] == 1);

    BigInt sum = 0;
    for (const auto& c : pascal_row(20)) sum += c;
    CHECK(sum == BigInt(1) << 20);
}

TEST_CASE("factorial and 2^n-1 products") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(pow2m1_product(0) == 1);
    CHECK(pow2m1_product(3) == 1 * 3 * 7);
    CHECK(pow2m1_product(5) == BigInt(1) * 3 * 7 * 15 * 31);
}
