#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zerogeom {

// Exact rational scalar. Always stored reduced with positive denominator
// (mpq_class maintains canonical form through arithmetic).
using BigRational = mpq_class;

// Raised by the text parsers. `position` is the byte offset of the offending
// token for line input, or the element index for JSON array input.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& message, std::size_t pos)
        : std::runtime_error(message + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// Accepts "123", "-123", "+123", "num/den" with den > 0 digits only.
// Anything else raises ParseError anchored at `offset`.
BigRational parse_rational(const std::string& token, std::size_t offset = 0);

// Canonical "num" or "num/den" form, inverse of parse_rational.
std::string rational_to_string(const BigRational& q);

// Exact binomial coefficient C(n, k); zero when k > n.
BigRational binomial(unsigned long n, unsigned long k);

BigRational factorial(unsigned long n);

// log(|q|) computed without converting q to double first, so it stays finite
// for rationals far outside double range. Requires q != 0.
double log_abs(const BigRational& q);

// Exact complex rational, just enough arithmetic to evaluate polynomials and
// elementary symmetric functions at complex rational points.
struct GaussianRational {
    BigRational re;
    BigRational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(BigRational r) : re(std::move(r)), im(0) {}
    GaussianRational(BigRational r, BigRational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

}  // namespace zerogeom
