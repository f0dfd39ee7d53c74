#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zerogeom/rational.hpp"

namespace zerogeom {

// Dense univariate polynomial over BigRational, coefficient of z^k at index k.
// Trailing zeros are always trimmed; the zero polynomial is the empty list,
// so degree() is -1 for it and the leading coefficient of a nonzero Poly is
// never zero.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly constant(const BigRational& c) { return Poly(std::vector<BigRational>{c}); }
    static Poly monomial(std::size_t k, const BigRational& c);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }

    // Coefficient of z^k; reads 0 beyond the stored range.
    BigRational coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : BigRational(0);
    }
    // Requires a nonzero polynomial.
    const BigRational& leading() const { return coeffs_.back(); }

    BigRational eval(const BigRational& x) const;
    GaussianRational eval(const GaussianRational& z) const;

    Poly derivative() const;
    Poly scaled(const BigRational& c) const;
    // Requires a nonzero polynomial.
    Poly monic() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

private:
    std::vector<BigRational> coeffs_;
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
};

Poly poly_pow(const Poly& p, unsigned e);

// Quotient and remainder with deg(rem) < deg(b); throws std::domain_error on b = 0.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);

// Monic gcd by the Euclidean algorithm; gcd(p, 0) = monic(p).
// Throws std::domain_error when both inputs are zero.
Poly poly_gcd(const Poly& a, const Poly& b);

// Monic p / gcd(p, p'): same distinct roots, all simple. Requires p != 0.
Poly square_free_part(const Poly& p);

// Yun decomposition. Returns monic y_1, ..., y_k with p = lc(p) * prod y_i^i;
// every root of multiplicity m in p is a simple root of y_m. Constants give
// an empty list. Requires p != 0.
std::vector<Poly> yun_squarefree_factors(const Poly& p);

// (P^E, P^O) with p(z) = P^E(z^2) + z * P^O(z^2) exactly.
std::pair<Poly, Poly> even_odd_split(const Poly& p);

// Strict bound: every complex root r of p has |r| < cauchy_root_bound(p).
// Returns 1 for constants. Requires p != 0.
BigRational cauchy_root_bound(const Poly& p);

// Text format: one line of whitespace-separated rationals, low degree first,
// e.g. "1 3 1" for 1 + 3z + z^2. A blank line parses as the zero polynomial.
Poly parse_poly_text(const std::string& line);
std::string format_poly_text(const Poly& p);

// JSON format: {"coeffs": ["1", "3", "1"]}. ParseError.position is the array
// index of a malformed coefficient (or the byte offset for malformed JSON).
Poly parse_poly_json(const std::string& text);
std::string poly_to_json(const Poly& p);

// prod_i (1 + rho_i z): zeros at -1/rho_i.
Poly from_linear_factors(const std::vector<BigRational>& rhos);

// prod_i (z - r_i): zeros exactly at the r_i.
Poly from_roots(const std::vector<BigRational>& roots);

// (1 + z)^n.
Poly binomial_poly(unsigned n);

}  // namespace zerogeom
