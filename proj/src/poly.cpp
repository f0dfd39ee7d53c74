#include "zerogeom/poly.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace zerogeom {

Poly Poly::monomial(std::size_t k, const BigRational& c) {
    std::vector<BigRational> v(k + 1, BigRational(0));
    v[k] = c;
    return Poly(std::move(v));
}

BigRational Poly::eval(const BigRational& x) const {
    BigRational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

GaussianRational Poly::eval(const GaussianRational& z) const {
    GaussianRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * z + GaussianRational(*it);
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<BigRational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = coeffs_[k] * BigRational(static_cast<unsigned long>(k));
    return Poly(std::move(d));
}

Poly Poly::scaled(const BigRational& c) const {
    if (c == 0) return Poly();
    std::vector<BigRational> v(coeffs_);
    for (auto& x : v) x *= c;
    return Poly(std::move(v));
}

Poly Poly::monic() const {
    if (is_zero()) throw std::domain_error("monic of zero polynomial");
    return scaled(BigRational(1) / leading());
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<BigRational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), BigRational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<BigRational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), BigRational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
    return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<BigRational> v(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(v));
}

Poly Poly::operator-() const {
    std::vector<BigRational> v(coeffs_);
    for (auto& x : v) x = -x;
    return Poly(std::move(v));
}

Poly poly_pow(const Poly& p, unsigned e) {
    Poly acc = Poly::constant(1);
    Poly base = p;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return acc;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly(), a};

    std::vector<BigRational> rem(a.coeffs());
    const int db = b.degree();
    std::vector<BigRational> quot(static_cast<std::size_t>(a.degree() - db) + 1, BigRational(0));
    const BigRational& lead = b.leading();

    for (int i = a.degree(); i >= db; --i) {
        const std::size_t ui = static_cast<std::size_t>(i);
        if (rem[ui] == 0) continue;
        const BigRational f = rem[ui] / lead;
        quot[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    Poly x = a.is_zero() ? a : a.monic();
    Poly y = b.is_zero() ? b : b.monic();
    while (!y.is_zero()) {
        Poly r = divrem(x, y).second;
        x = std::move(y);
        y = r.is_zero() ? std::move(r) : r.monic();
    }
    return x;
}

Poly square_free_part(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("square_free_part of zero polynomial");
    if (p.degree() == 0) return Poly::constant(1);
    const Poly g = poly_gcd(p, p.derivative());
    return divrem(p, g).first.monic();
}

std::vector<Poly> yun_squarefree_factors(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("square-free decomposition of zero polynomial");
    if (p.degree() == 0) return {};

    const Poly g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return {p.monic()};

    // Yun's loop. The leading coefficient of p rides along in b and d; gcd
    // outputs are monic, so the reported factors are monic regardless.
    std::vector<Poly> factors;
    Poly b = divrem(p, g).first;
    Poly d = divrem(p.derivative(), g).first - b.derivative();
    while (true) {
        Poly a = poly_gcd(b, d);
        factors.push_back(a);
        b = divrem(b, a).first;
        if (b.degree() == 0) break;
        const Poly c = divrem(d, a).first;
        d = c - b.derivative();
    }
    return factors;
}

std::pair<Poly, Poly> even_odd_split(const Poly& p) {
    std::vector<BigRational> even, odd;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (k % 2 == 0)
            even.push_back(p.coeffs()[k]);
        else
            odd.push_back(p.coeffs()[k]);
    }
    return {Poly(std::move(even)), Poly(std::move(odd))};
}

BigRational cauchy_root_bound(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("root bound of zero polynomial");
    if (p.degree() == 0) return BigRational(1);
    BigRational mx(0);
    for (int k = 0; k < p.degree(); ++k) {
        BigRational a = abs(p.coeff(static_cast<std::size_t>(k)));
        if (a > mx) mx = a;
    }
    return BigRational(1) + mx / abs(p.leading());
}

Poly parse_poly_text(const std::string& line) {
    std::vector<BigRational> coeffs;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        coeffs.push_back(parse_rational(line.substr(i, j - i), i));
        i = j;
    }
    return Poly(std::move(coeffs));
}

std::string format_poly_text(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (k > 0) out << ' ';
        out << rational_to_string(p.coeffs()[k]);
    }
    return out.str();
}

Poly parse_poly_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
    }
    if (!doc.is_object() || !doc.contains("coeffs") || !doc["coeffs"].is_array())
        throw ParseError("expected {\"coeffs\": [...]}", 0);

    std::vector<BigRational> coeffs;
    std::size_t index = 0;
    for (const auto& entry : doc["coeffs"]) {
        if (!entry.is_string())
            throw ParseError("coefficient must be a string", index);
        coeffs.push_back(parse_rational(entry.get<std::string>(), index));
        ++index;
    }
    return Poly(std::move(coeffs));
}

std::string poly_to_json(const Poly& p) {
    nlohmann::ordered_json doc;
    doc["coeffs"] = nlohmann::ordered_json::array();
    for (const auto& c : p.coeffs()) doc["coeffs"].push_back(rational_to_string(c));
    return doc.dump();
}

Poly from_linear_factors(const std::vector<BigRational>& rhos) {
    Poly p = Poly::constant(1);
    for (const auto& rho : rhos) p = p * Poly(std::vector<BigRational>{BigRational(1), rho});
    return p;
}

Poly from_roots(const std::vector<BigRational>& roots) {
    Poly p = Poly::constant(1);
    for (const auto& r : roots) p = p * Poly(std::vector<BigRational>{-r, BigRational(1)});
    return p;
}

Poly binomial_poly(unsigned n) {
    std::vector<BigRational> v(n + 1);
    for (unsigned k = 0; k <= n; ++k) v[k] = binomial(n, k);
    return Poly(std::move(v));
}

}  // namespace zerogeom
