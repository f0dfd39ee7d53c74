#include "zerogeom/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zerogeom {

namespace {

constexpr double kSeparationGuard = 1e-12;

std::complex<double> horner(const std::vector<std::complex<double>>& coeffs,
                            std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

double residual_of(const std::vector<std::complex<double>>& coeffs,
                   const std::vector<std::complex<double>>& roots) {
    const double lead = std::abs(coeffs.back());
    double worst = 0.0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        double denom = lead;
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (j == i) continue;
            denom *= std::max(std::abs(roots[i] - roots[j]), kSeparationGuard);
        }
        worst = std::max(worst, std::abs(horner(coeffs, roots[i])) / denom);
    }
    return worst;
}

}  // namespace

ComplexRootSet aberth_roots(std::vector<std::complex<double>> coeffs, double tol,
                            unsigned max_iter) {
    while (!coeffs.empty() && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
    if (coeffs.size() < 2) throw std::domain_error("aberth_roots needs degree >= 1");
    const std::size_t n = coeffs.size() - 1;

    ComplexRootSet out;
    if (n == 1) {
        out.roots = {-coeffs[0] / coeffs[1]};
        out.residual_bound = residual_of(coeffs, out.roots);
        return out;
    }

    std::vector<std::complex<double>> d(coeffs.size() - 1);
    for (std::size_t k = 1; k < coeffs.size(); ++k)
        d[k - 1] = coeffs[k] * static_cast<double>(k);

    // Perturbed-circle start: radius from the constant/leading ratio, fixed
    // deterministic angular offset so no two starts coincide symmetrically.
    const double ratio = std::abs(coeffs[0]) / std::abs(coeffs.back());
    const double radius = ratio > 0.0 ? std::pow(ratio, 1.0 / static_cast<double>(n)) : 0.5;
    std::vector<std::complex<double>>& z = out.roots;
    z.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                                 static_cast<double>(n) +
                             0.3961 + 0.7 / static_cast<double>(n);
        z[k] = std::polar(std::max(radius, 1e-6), angle);
    }

    out.converged = false;
    for (out.iterations = 0; out.iterations < max_iter; ++out.iterations) {
        double max_step = 0.0;
        double max_mag = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            const std::complex<double> pv = horner(coeffs, z[i]);
            if (std::abs(pv) == 0.0) continue;
            std::complex<double> dv = horner(d, z[i]);
            if (std::abs(dv) == 0.0) {
                // Stationary point of p; kick off it deterministically.
                z[i] += std::complex<double>(1e-8, 1e-8);
                max_step = std::max(max_step, 1e-8);
                continue;
            }
            const std::complex<double> newton = pv / dv;
            std::complex<double> repulsion = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                std::complex<double> gap = z[i] - z[j];
                if (std::abs(gap) < kSeparationGuard)
                    gap = std::complex<double>(kSeparationGuard, kSeparationGuard);
                repulsion += 1.0 / gap;
            }
            const std::complex<double> denom = 1.0 - newton * repulsion;
            const std::complex<double> step =
                std::abs(denom) == 0.0 ? newton : newton / denom;
            z[i] -= step;
            max_step = std::max(max_step, std::abs(step));
            max_mag = std::max(max_mag, std::abs(z[i]));
        }
        if (max_step < tol * max_mag) {
            out.converged = true;
            ++out.iterations;
            break;
        }
    }
    out.residual_bound = residual_of(coeffs, z);
    std::sort(z.begin(), z.end(), [](const auto& a, const auto& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return out;
}

ComplexRootSet complex_roots_numeric(const Poly& p, double tol, unsigned max_iter) {
    if (p.degree() < 1) throw std::domain_error("complex_roots_numeric needs degree >= 1");

    std::size_t origin_roots = 0;
    while (origin_roots < p.coeffs().size() && p.coeffs()[origin_roots] == 0) ++origin_roots;

    // Exact normalization by the largest |coefficient| keeps every converted
    // double in [-1, 1] no matter how large the exact coefficients are.
    BigRational scale(0);
    for (std::size_t k = origin_roots; k < p.coeffs().size(); ++k) {
        BigRational a = abs(p.coeffs()[k]);
        if (a > scale) scale = a;
    }
    std::vector<std::complex<double>> coeffs;
    for (std::size_t k = origin_roots; k < p.coeffs().size(); ++k)
        coeffs.emplace_back(BigRational(p.coeffs()[k] / scale).get_d(), 0.0);

    ComplexRootSet out;
    if (coeffs.size() >= 2) out = aberth_roots(std::move(coeffs), tol, max_iter);
    out.roots.insert(out.roots.begin(), origin_roots, std::complex<double>(0.0, 0.0));
    return out;
}

bool sector_containment(const ComplexRootSet& roots, double theta, double slack) {
    if (!(theta > 0.0) || theta > std::numbers::pi)
        throw std::domain_error("sector angle must lie in (0, pi]");
    if (slack < 0.0) throw std::domain_error("negative slack");
    for (const auto& r : roots.roots) {
        if (std::abs(r) <= slack) continue;
        const double distance = std::numbers::pi - std::abs(std::arg(r));
        if (!(distance < theta + slack)) return false;
    }
    return true;
}

namespace {

// Exponent of the growth bound plus log of the leading factor, shared by the
// direct and log-space forms.
double szasz_exponent(const Poly& p, std::complex<double> z, std::size_t m) {
    const BigRational& bm = p.coeffs()[m];
    const BigRational t1 = abs(BigRational(p.coeff(m + 1) / bm));
    const BigRational t2 = abs(BigRational(p.coeff(m + 2) / bm));
    const double az = std::abs(z);
    const double d1 = t1.get_d();
    const double d2 = t2.get_d();
    return d1 * az + 3.0 * az * az * d1 * d1 + 3.0 * az * az * d2;
}

std::size_t lowest_nonzero_index(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("growth bound of zero polynomial");
    std::size_t m = 0;
    while (p.coeffs()[m] == 0) ++m;
    return m;
}

}  // namespace

double szasz_bound(const Poly& p, std::complex<double> z) {
    const std::size_t m = lowest_nonzero_index(p);
    const double az = std::abs(z);
    return std::abs(BigRational(p.coeffs()[m]).get_d()) *
           std::pow(az, static_cast<double>(m)) * std::exp(szasz_exponent(p, z, m));
}

double szasz_log_bound(const Poly& p, std::complex<double> z) {
    const std::size_t m = lowest_nonzero_index(p);
    const double az = std::abs(z);
    const double log_pow =
        m == 0 ? 0.0 : static_cast<double>(m) * std::log(az);
    return log_abs(p.coeffs()[m]) + log_pow + szasz_exponent(p, z, m);
}

}  // namespace zerogeom
