#include "bmeas/format.hpp"

#include "doctest.h"

#include <stdexcept>

using namespace bmeas;

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("3/-4") == Rational(-3, 4));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational(" 1/3 ") == Rational(1, 3));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("real parsing") {
    CHECK(parse_real("0.5") == 0.5);
    CHECK(parse_real("1e-3") == 1e-3);
    CHECK(parse_real("-2.5E2") == -250.0);
    CHECK_THROWS_AS(parse_real("0.5x"), std::invalid_argument);
}

TEST_CASE("complex parsing") {
    CHECK(parse_complex("1+2i") == Complex(1, 2));
    CHECK(parse_complex("1-2i") == Complex(1, -2));
    CHECK(parse_complex("-0.5i") == Complex(0, -0.5));
    CHECK(parse_complex("3e-2-1e-1i") == Complex(3e-2, -1e-1));
    CHECK(parse_complex("i") == Complex(0, 1));
    CHECK(parse_complex("-i") == Complex(0, -1));
    CHECK(parse_complex("1+i") == Complex(1, 1));
    CHECK(parse_complex("2.5") == Complex(2.5, 0));
    CHECK_THROWS_AS(parse_complex("1+2j"), std::invalid_argument);
}

TEST_CASE("kind dispatch") {
    CHECK(parse_number("2/3").kind == ParsedNumber::Kind::rational);
    CHECK(parse_number("-5").kind == ParsedNumber::Kind::rational);
    CHECK(parse_number("0.5").kind == ParsedNumber::Kind::real);
    CHECK(parse_number("1e2").kind == ParsedNumber::Kind::real);
    CHECK(parse_number("1+2i").kind == ParsedNumber::Kind::complex);
    CHECK(parse_number("2/3").cplx == Complex(2.0 / 3.0, 0));
    CHECK(parse_number("1+2i").cplx == Complex(1, 2));
}

TEST_CASE("formatting round trips") {
    CHECK(format_rational(Rational(3, 4)) == "3/4");
    CHECK(format_rational(Rational(8, 4)) == "2");
    CHECK(format_rational(Rational(-3, 4)) == "-3/4");
    CHECK(format_rational(parse_rational("3/-4")) == "-3/4");
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
    CHECK(format_complex({1, 2}) == "1+2i");
    CHECK(format_complex({0.5, -0.25}) == "0.5-0.25i");
    CHECK(format_complex({3, 0}) == "3");
    CHECK(format_bigint(BigInt(-12)) == "-12");

    for (double x : {1.0 / 3.0, 2.718281828459045, -1e-7, 123456.789}) {
        CHECK(parse_real(format_double(x)) == x);
    }
    for (Complex z : {Complex(1.0 / 3.0, -2.0 / 7.0), Complex(0, 1e-3), Complex(-4, 0)}) {
        CHECK(parse_complex(format_complex(z)) == z);
    }
}
