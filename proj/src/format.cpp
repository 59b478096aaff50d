#include "bmeas/format.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace bmeas {

namespace {

[[noreturn]] void bad_number(std::string_view what, std::string_view s) {
    throw std::invalid_argument(std::string(what) + ": '" + std::string(s) + "'");
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
    std::string_view body = s;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) body.remove_prefix(1);
    if (!all_digits(body)) bad_number("malformed integer", whole);
    return BigInt(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view raw) {
    std::string_view s = trim(raw);
    if (s.empty()) bad_number("empty rational", raw);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s, raw));
    BigInt num = parse_integer(s.substr(0, slash), raw);
    BigInt den = parse_integer(s.substr(slash + 1), raw);
    if (den == 0) bad_number("zero denominator", raw);
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

double parse_real(std::string_view raw) {
    std::string s(trim(raw));
    if (s.empty()) bad_number("empty number", raw);
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size()) bad_number("malformed number", raw);
    return v;
}

Complex parse_complex(std::string_view raw) {
    std::string_view s = trim(raw);
    if (s.empty()) bad_number("empty number", raw);
    if (s.back() != 'i' && s.back() != 'I') return {parse_real(s), 0.0};

    std::string_view body = s.substr(0, s.size() - 1);
    // Split off a leading real term at the last +/- that is not an exponent
    // sign and not the leading sign of the whole token.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        char c = body[k];
        if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    std::string_view re_part, im_part;
    if (split == std::string_view::npos) {
        im_part = body;
    } else {
        re_part = body.substr(0, split);
        im_part = body.substr(split);
    }
    double re = re_part.empty() ? 0.0 : parse_real(re_part);
    double im;
    if (im_part.empty() || im_part == "+")
        im = 1.0;
    else if (im_part == "-")
        im = -1.0;
    else
        im = parse_real(im_part);
    return {re, im};
}

ParsedNumber parse_number(std::string_view raw) {
    std::string_view s = trim(raw);
    if (s.empty()) bad_number("empty number", raw);
    ParsedNumber out;
    if (s.find('i') != std::string_view::npos || s.find('I') != std::string_view::npos) {
        out.kind = ParsedNumber::Kind::complex;
        out.cplx = parse_complex(s);
        return out;
    }
    bool floaty = false;
    for (char c : s)
        if (c == '.' || c == 'e' || c == 'E' || c == 'n' || c == 'N' || c == 'f') floaty = true;
    if (floaty) {
        out.kind = ParsedNumber::Kind::real;
        out.cplx = {parse_real(s), 0.0};
        return out;
    }
    if (s.find('/') != std::string_view::npos || all_digits(s) ||
        ((s.front() == '+' || s.front() == '-') && all_digits(s.substr(1)))) {
        out.kind = ParsedNumber::Kind::rational;
        out.rat = parse_rational(s);
        out.cplx = scalar_from_rational<Complex>(out.rat);
        return out;
    }
    out.kind = ParsedNumber::Kind::real;
    out.cplx = {parse_real(s), 0.0};
    return out;
}

std::string format_rational(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string format_complex(const Complex& z) {
    if (z.imag() == 0.0) return format_double(z.real());
    std::string out = format_double(z.real());
    out += (z.imag() < 0.0 || (z.imag() == 0.0 && std::signbit(z.imag()))) ? "-" : "+";
    out += format_double(std::abs(z.imag()));
    out += "i";
    return out;
}

std::string format_bigint(const BigInt& n) { return n.str(); }

}  // namespace bmeas
