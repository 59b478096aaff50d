#pragma once

#include "bmeas/scalar.hpp"

#include <string>
#include <string_view>

namespace bmeas {

// Number grammar shared by the CLI and the python bindings:
//   rational   "a/b" or a bare integer     -> exact
//   real       anything with . e E inf nan -> double
//   complex    trailing i on the imaginary part, e.g. "1+2i", "-0.5i", "3e-2-1e-1i"
struct ParsedNumber {
    enum class Kind { rational, real, complex };
    Kind kind = Kind::rational;
    Rational rat;   // valid when kind == rational
    Complex cplx;   // always valid (rational/real are widened)
};

// Throw std::invalid_argument with the offending token on malformed input.
Rational parse_rational(std::string_view s);
double parse_real(std::string_view s);
Complex parse_complex(std::string_view s);
ParsedNumber parse_number(std::string_view s);

// Canonical output forms: rationals as "a/b" (bare integer when b == 1),
// doubles with 17 significant digits, complex as "re+imi" (bare real when
// the imaginary part is exactly zero).
std::string format_rational(const Rational& q);
std::string format_double(double x);
std::string format_complex(const Complex& z);
std::string format_bigint(const BigInt& n);

}  // namespace bmeas
