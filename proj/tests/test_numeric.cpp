#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "support/oracles.hpp"
#include "zerogeom/numeric.hpp"
#include "zerogeom/rng.hpp"

using namespace zerogeom;
using testsupport::P;
using testsupport::Q;

namespace {

std::vector<std::complex<double>> sorted_roots(const ComplexRootSet& rs) {
    auto roots = rs.roots;
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

}  // namespace

TEST_CASE("conjugate pair on the axis") {
    const auto rs = complex_roots_numeric(P("1 0 1"));
    REQUIRE(rs.roots.size() == 2);
    CHECK(rs.converged);
    const auto roots = sorted_roots(rs);
    CHECK(std::abs(roots[0] - std::complex<double>(0, -1)) < 1e-9);
    CHECK(std::abs(roots[1] - std::complex<double>(0, 1)) < 1e-9);
}

TEST_CASE("golden-ratio quadratic to nine digits") {
    const auto roots = sorted_roots(complex_roots_numeric(P("1 3 1")));
    REQUIRE(roots.size() == 2);
    const double lo = (-3.0 - std::sqrt(5.0)) / 2.0;
    const double hi = (-3.0 + std::sqrt(5.0)) / 2.0;
    CHECK(std::abs(roots[0] - lo) < 1e-9);
    CHECK(std::abs(roots[1] - hi) < 1e-9);
    CHECK(std::abs(roots[0].imag()) < 1e-12);
}

TEST_CASE("triple root resolves as a cluster") {
    const auto rs = complex_roots_numeric(poly_pow(P("1 1"), 3));
    REQUIRE(rs.roots.size() == 3);
    for (const auto& r : rs.roots) CHECK(std::abs(r + 1.0) < 1e-4);
}

TEST_CASE("zeros at the origin are reported exactly") {
    const auto rs = complex_roots_numeric(P("0 0 1 1"));  // z^2 (1 + z)
    REQUIRE(rs.roots.size() == 3);
    CHECK(rs.roots[0] == std::complex<double>(0, 0));
    CHECK(rs.roots[1] == std::complex<double>(0, 0));
    CHECK(std::abs(rs.roots[2] + 1.0) < 1e-9);
    CHECK_THROWS_AS(complex_roots_numeric(P("3")), std::domain_error);
}

TEST_CASE("constructed spectra are recovered") {
    SplitMix64 rng(31);
    for (int t = 0; t < 15; ++t) {
        std::vector<BigRational> used;
        std::vector<double> expect;
        Poly p = Poly::constant(BigRational(1));
        const unsigned n = 2 + static_cast<unsigned>(rng.next_below(6));
        for (unsigned i = 0; i < n; ++i) {
            const BigRational rho = random_positive_rational(rng, 8, 8);
            // repeated zeros would blur the cluster past the tolerance
            bool dup = false;
            for (const auto& u : used)
                if (u == rho) dup = true;
            if (dup) continue;
            used.push_back(rho);
            expect.push_back(-rho.get_d());
            p = p * Poly{{rho, BigRational(1)}};
        }
        auto roots = complex_roots_numeric(p).roots;
        REQUIRE(roots.size() == expect.size());
        for (const double want : expect) {
            auto best = roots.begin();
            double dist = 1e18;
            for (auto it = roots.begin(); it != roots.end(); ++it) {
                const double d = std::abs(*it - std::complex<double>(want, 0));
                if (d < dist) {
                    dist = d;
                    best = it;
                }
            }
            CHECK(dist < 1e-6);
            roots.erase(best);
        }
    }
}

TEST_CASE("raw root iteration accepts complex coefficients") {
    // z^2 - 2i: roots are +-(1 + i).
    const auto rs = aberth_roots({{0.0, -2.0}, {0.0, 0.0}, {1.0, 0.0}});
    REQUIRE(rs.roots.size() == 2);
    const auto roots = sorted_roots(rs);
    CHECK(std::abs(roots[0] - std::complex<double>(-1, -1)) < 1e-9);
    CHECK(std::abs(roots[1] - std::complex<double>(1, 1)) < 1e-9);
}

TEST_CASE("sector membership measures the angle off the negative axis") {
    const double pi = std::numbers::pi;
    ComplexRootSet rs;
    rs.roots = {std::polar(1.0, pi - pi / 3), std::polar(1.0, -(pi - pi / 3))};
    CHECK(sector_containment(rs, pi / 3 + 0.01, 0.0));
    CHECK_FALSE(sector_containment(rs, pi / 3 - 0.01, 0.0));
    CHECK(sector_containment(rs, pi / 3, 1e-6));

    ComplexRootSet neg;
    neg.roots = {{-1.0, 0.0}};
    CHECK(sector_containment(neg, 1e-12, 1e-9));

    ComplexRootSet pos;
    pos.roots = {{1.0, 0.0}};
    CHECK_FALSE(sector_containment(pos, pi / 2, 1e-9));
    CHECK(sector_containment(pos, pi, 1e-9));

    CHECK_THROWS_AS(sector_containment(neg, 0.0, 1e-9), std::domain_error);
    CHECK_THROWS_AS(sector_containment(neg, 4.0, 1e-9), std::domain_error);
}

TEST_CASE("growth bound has the pinned closed form") {
    // For 1 + z the exponent at |z| = 1 is 1 + 3 + 0 = 4.
    const Poly p = P("1 1");
    CHECK(szasz_bound(p, {1.0, 0.0}) == doctest::Approx(std::exp(4.0)));
    CHECK(szasz_log_bound(p, {0.0, 1.0}) == doctest::Approx(4.0));

    // Constants and pure powers collapse to |a_m| |z|^m.
    CHECK(szasz_bound(P("5"), {2.0, 0.0}) == doctest::Approx(5.0));
    CHECK(szasz_bound(P("0 0 1"), {0.5, 0.0}) == doctest::Approx(0.25));
    CHECK(szasz_log_bound(P("0 0 1"), {0.5, 0.0}) == doctest::Approx(-2.0 * std::log(2.0)));
}

TEST_CASE("log bound is the log of the bound") {
    SplitMix64 rng(555);
    for (int t = 0; t < 20; ++t) {
        std::vector<BigRational> c;
        const unsigned d = 1 + static_cast<unsigned>(rng.next_below(6));
        for (unsigned k = 0; k <= d; ++k) c.push_back(random_nonzero_rational(rng));
        const Poly p{std::move(c)};
        const std::complex<double> z =
            std::polar(0.3 + 0.2 * static_cast<double>(rng.next_below(10)),
                       0.1 * static_cast<double>(rng.next_below(60)));
        const double b = szasz_bound(p, z);
        if (std::isfinite(b))
            CHECK(szasz_log_bound(p, z) == doctest::Approx(std::log(b)));
        else
            CHECK(std::isfinite(szasz_log_bound(p, z)));  // log form survives overflow
    }
}

TEST_CASE("growth bound dominates negative-zero products") {
    SplitMix64 rng(808);
    for (int t = 0; t < 25; ++t) {
        Poly p = Poly::constant(BigRational(1));
        const unsigned n = 1 + static_cast<unsigned>(rng.next_below(6));
        for (unsigned i = 0; i < n; ++i)
            p = p * Poly{{random_positive_rational(rng, 6, 6), BigRational(1)}};
        std::vector<std::complex<double>> dp;
        for (const auto& a : p.coeffs()) dp.push_back({a.get_d(), 0.0});
        for (int g = 0; g < 24; ++g) {
            const std::complex<double> z =
                std::polar(0.25 * (1 + g % 6), std::numbers::pi * (g / 6) / 2.0);
            std::complex<double> val{0.0, 0.0};
            for (auto it = dp.rbegin(); it != dp.rend(); ++it) val = val * z + *it;
            CHECK(std::abs(val) <= szasz_bound(p, z) * (1 + 1e-9) + 1e-12);
        }
    }
}
