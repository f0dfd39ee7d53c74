#include "zerogeom/symfunc.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

#include "zerogeom/numeric.hpp"
#include "zerogeom/transforms.hpp"

namespace zerogeom {

BigRational elem_sym(unsigned k, const std::vector<BigRational>& pts) {
    if (k > pts.size()) return BigRational(0);
    return elem_sym_all(pts)[k];
}

std::vector<std::vector<BigRational>> sigma_table(const std::vector<BigRational>& pts) {
    const std::size_t n = pts.size();
    const std::size_t kmax = 2 * n;
    std::vector<std::vector<BigRational>> f(kmax + 1,
                                            std::vector<BigRational>(n + 1, BigRational(0)));
    f[0][0] = 1;
    for (const auto& z : pts) {
        const BigRational z2 = z * z;
        // Descending sweep so every read sees the previous variable's table.
        for (std::size_t k = kmax + 1; k-- > 0;) {
            for (std::size_t r = n + 1; r-- > 0;) {
                BigRational v = f[k][r];
                if (k >= 1) v += z * f[k - 1][r];
                if (k >= 2 && r >= 1) v += z2 * f[k - 2][r - 1];
                f[k][r] = std::move(v);
            }
        }
    }
    return f;
}

BigRational sigma_k_r(unsigned k, unsigned r, const std::vector<BigRational>& pts) {
    if (k > 2 * pts.size() || r > pts.size()) return BigRational(0);
    return sigma_table(pts)[k][r];
}

BigRational w_mu_n_eval(const WeightSeq& mu, const std::vector<BigRational>& pts) {
    const std::vector<BigRational> e = elem_sym_all(pts);
    BigRational acc(0);
    for (const auto& [d, w] : mu.entries())
        for (std::size_t i = 0; i + d < e.size(); ++i) acc += w * e[i] * e[i + d];
    return acc;
}

void MultiPoly::add(const std::vector<int>& exponents, const BigRational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponents, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::add_scaled(const MultiPoly& other, const BigRational& scale) {
    if (scale == 0) return;
    for (const auto& [exps, coeff] : other.terms_) add(exps, coeff * scale);
}

std::optional<std::tuple<std::vector<int>, BigRational, BigRational>> MultiPoly::first_difference(
    const MultiPoly& a, const MultiPoly& b) {
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
        if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
            return std::tuple{ia->first, ia->second, BigRational(0)};
        }
        if (ia == a.terms_.end() || ib->first < ia->first) {
            return std::tuple{ib->first, BigRational(0), ib->second};
        }
        if (ia->second != ib->second) return std::tuple{ia->first, ia->second, ib->second};
        ++ia;
        ++ib;
    }
    return std::nullopt;
}

MultiPoly expand_elementary(std::size_t n, unsigned k) {
    MultiPoly out(n);
    if (k > n) return out;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        if (static_cast<unsigned>(__builtin_popcountl(mask)) != k) continue;
        std::vector<int> exps(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1ul << i)) exps[i] = 1;
        out.add(exps, BigRational(1));
    }
    return out;
}

MultiPoly multiply(const MultiPoly& a, const MultiPoly& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("arity mismatch");
    MultiPoly out(a.arity());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            std::vector<int> exps(ea);
            for (std::size_t i = 0; i < exps.size(); ++i) exps[i] += eb[i];
            out.add(exps, ca * cb);
        }
    return out;
}

MultiPoly expand_sigma(std::size_t n, unsigned k, unsigned r) {
    MultiPoly out(n);
    std::vector<int> exps(n, 0);
    while (true) {
        unsigned total = 0, twos = 0;
        for (int e : exps) {
            total += static_cast<unsigned>(e);
            if (e == 2) ++twos;
        }
        if (total == k && twos == r) out.add(exps, BigRational(1));
        std::size_t pos = 0;
        while (pos < n && exps[pos] == 2) exps[pos++] = 0;
        if (pos == n) break;
        ++exps[pos];
    }
    return out;
}

MultiPoly expand_diag_product(std::size_t n, unsigned k) {
    MultiPoly out(n);
    if (k > n) return out;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        if (static_cast<unsigned>(__builtin_popcountl(mask)) != k) continue;
        // Subsets T of the chosen S pick up the squared entries from
        // prod_{i in S}(z_i^2 + 1); everything off S contributes z_i.
        unsigned long t = mask;
        while (true) {
            std::vector<int> exps(n, 1);
            for (std::size_t i = 0; i < n; ++i) {
                if (!(mask & (1ul << i))) continue;
                exps[i] = (t & (1ul << i)) ? 2 : 0;
            }
            out.add(exps, BigRational(1));
            if (t == 0) break;
            t = (t - 1) & mask;
        }
    }
    return out;
}

std::string identity_kind_name(IdentityKind k) {
    switch (k) {
        case IdentityKind::EL_EXP: return "EL_EXP";
        case IdentityKind::PRODFORM: return "PRODFORM";
        case IdentityKind::PRODFORM2: return "PRODFORM2";
        case IdentityKind::BEAUTY: return "BEAUTY";
        case IdentityKind::JACOBI: return "JACOBI";
    }
    return "?";
}

namespace {

BigRational catalan(unsigned k) { return binomial(2 * k, k) / BigRational(k + 1); }

std::string render_tuple(const std::vector<BigRational>& values) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ", ";
        out << rational_to_string(values[i]);
    }
    out << ')';
    return out.str();
}

void record_multi_mismatch(IdentityReport& report, const MultiPoly& lhs, const MultiPoly& rhs,
                           const std::string& context) {
    const auto diff = MultiPoly::first_difference(lhs, rhs);
    if (!diff) return;
    report.verdict = false;
    const auto& [exps, cl, cr] = *diff;
    std::vector<BigRational> as_tuple;
    for (int e : exps) as_tuple.emplace_back(e);
    report.counterexample = as_tuple;
    std::ostringstream detail;
    detail << context << "monomial exponents " << render_tuple(as_tuple) << ": lhs coefficient "
           << rational_to_string(cl) << ", rhs coefficient " << rational_to_string(cr);
    report.counterexample_detail = detail.str();
}

void record_value_mismatch(IdentityReport& report, const std::vector<BigRational>& pts,
                           const BigRational& lhs, const BigRational& rhs,
                           const std::string& context) {
    report.verdict = false;
    report.counterexample = pts;
    std::ostringstream detail;
    detail << context << "at point " << render_tuple(pts) << ": lhs "
           << rational_to_string(lhs) << ", rhs " << rational_to_string(rhs);
    report.counterexample_detail = detail.str();
}

void full_el_exp(IdentityReport& report, const WeightSeq& mu, unsigned n, bool beauty) {
    const WeightSeq gamma =
        beauty ? WeightSeq() : gamma_from_mu(mu, n);

    std::vector<MultiPoly> elementary;
    for (unsigned k = 0; k <= n; ++k) elementary.push_back(expand_elementary(n, k));

    MultiPoly lhs(n);
    if (beauty) {
        for (unsigned k = 0; k <= n; ++k) {
            lhs.add_scaled(multiply(elementary[k], elementary[k]), BigRational(1));
            if (k >= 1 && k + 1 <= n)
                lhs.add_scaled(multiply(elementary[k - 1], elementary[k + 1]), BigRational(-1));
        }
    } else {
        for (const auto& [d, w] : mu.entries())
            for (unsigned i = 0; i + d <= n; ++i)
                lhs.add_scaled(multiply(elementary[i], elementary[i + d]), w);
    }

    MultiPoly rhs(n);
    if (beauty) {
        for (unsigned k = 0; 2 * k <= n; ++k)
            rhs.add_scaled(expand_diag_product(n, n - 2 * k), catalan(k));
    } else {
        for (unsigned k = 0; k <= n; ++k)
            rhs.add_scaled(expand_diag_product(n, n - k), gamma.at(k));
    }
    record_multi_mismatch(report, lhs, rhs, "");
}

void full_prodform(IdentityReport& report, unsigned n, bool variant2) {
    std::vector<MultiPoly> elementary;
    for (unsigned k = 0; k <= n; ++k) elementary.push_back(expand_elementary(n, k));

    for (unsigned i = 0; i <= n && report.verdict; ++i) {
        for (unsigned j = i; j <= n && report.verdict; ++j) {
            const MultiPoly lhs = multiply(elementary[i], elementary[j]);
            MultiPoly rhs(n);
            std::ostringstream context;
            if (variant2) {
                const unsigned m = j - i;
                for (unsigned jj = 0; jj <= i; ++jj)
                    rhs.add_scaled(expand_sigma(n, m + 2 * i, i - jj), binomial(2 * jj + m, jj));
                context << "e_" << i << " * e_" << i + m << ": ";
            } else {
                for (unsigned r = 0; r <= i; ++r)
                    rhs.add_scaled(expand_sigma(n, i + j, r),
                                   binomial(i - r + j - r, i - r));
                context << "e_" << i << " * e_" << j << ": ";
            }
            record_multi_mismatch(report, lhs, rhs, context.str());
        }
    }
}

std::vector<BigRational> draw_points(std::uint64_t seed, std::uint64_t trial, unsigned n) {
    SplitMix64 rng = SplitMix64::substream(seed, trial);
    std::vector<BigRational> pts;
    pts.reserve(n);
    for (unsigned i = 0; i < n; ++i) pts.push_back(random_nonzero_rational(rng));
    return pts;
}

void random_el_exp(IdentityReport& report, const WeightSeq& mu, unsigned n, unsigned trials,
                   std::uint64_t seed, bool beauty) {
    const WeightSeq gamma = beauty ? WeightSeq() : gamma_from_mu(mu, n);
    for (unsigned t = 0; t < trials; ++t) {
        const std::vector<BigRational> pts = draw_points(seed, t, n);
        const std::vector<BigRational> e = elem_sym_all(pts);

        BigRational lhs(0);
        if (beauty) {
            for (unsigned k = 0; k <= n; ++k) {
                lhs += e[k] * e[k];
                if (k >= 1 && k + 1 <= n) lhs -= e[k - 1] * e[k + 1];
            }
        } else {
            lhs = w_mu_n_eval(mu, pts);
        }

        std::vector<BigRational> recip;
        recip.reserve(n);
        for (const auto& z : pts) recip.push_back(z + BigRational(1) / z);
        const std::vector<BigRational> ew = elem_sym_all(recip);

        BigRational rhs(0);
        if (beauty) {
            for (unsigned k = 0; 2 * k <= n; ++k) rhs += catalan(k) * ew[n - 2 * k];
        } else {
            for (unsigned k = 0; k <= n; ++k) rhs += gamma.at(k) * ew[n - k];
        }
        rhs *= e[n];

        if (lhs != rhs) {
            record_value_mismatch(report, pts, lhs, rhs, "");
            return;
        }
    }
}

void random_prodform(IdentityReport& report, unsigned n, unsigned trials, std::uint64_t seed,
                     bool variant2) {
    for (unsigned t = 0; t < trials; ++t) {
        const std::vector<BigRational> pts = draw_points(seed, t, n);
        const std::vector<BigRational> e = elem_sym_all(pts);
        const auto sigma = sigma_table(pts);
        for (unsigned i = 0; i <= n; ++i) {
            for (unsigned j = i; j <= n; ++j) {
                const BigRational lhs = e[i] * e[j];
                BigRational rhs(0);
                std::ostringstream context;
                if (variant2) {
                    const unsigned m = j - i;
                    for (unsigned jj = 0; jj <= i; ++jj)
                        rhs += binomial(2 * jj + m, jj) * sigma[m + 2 * i][i - jj];
                    context << "e_" << i << " * e_" << i + m << ": ";
                } else {
                    for (unsigned r = 0; r <= i; ++r)
                        rhs += binomial(i - r + j - r, i - r) * sigma[i + j][r];
                    context << "e_" << i << " * e_" << j << ": ";
                }
                if (lhs != rhs) {
                    record_value_mismatch(report, pts, lhs, rhs, context.str());
                    return;
                }
            }
        }
    }
}

}  // namespace

IdentityReport verify_identity(IdentityKind which, const WeightSeq& mu, unsigned n,
                               IdentityMode mode, unsigned trials, std::uint64_t seed) {
    if (which == IdentityKind::JACOBI) return jacobi_identity_check(n);

    IdentityReport report;
    report.identity = which;
    report.n = n;
    report.mode = mode;
    report.trials = mode == IdentityMode::RANDOM_EVAL ? trials : 0;

    if (mode == IdentityMode::FULL_EXPANSION) {
        const bool subset_based =
            which == IdentityKind::EL_EXP || which == IdentityKind::BEAUTY;
        if (subset_based && n > 6)
            throw std::invalid_argument("FULL_EXPANSION limited to n <= 6 for this identity");
        if (!subset_based && n > 8)
            throw std::invalid_argument("FULL_EXPANSION limited to n <= 8 for this identity");
        switch (which) {
            case IdentityKind::EL_EXP: full_el_exp(report, mu, n, false); break;
            case IdentityKind::BEAUTY: full_el_exp(report, mu, n, true); break;
            case IdentityKind::PRODFORM: full_prodform(report, n, false); break;
            case IdentityKind::PRODFORM2: full_prodform(report, n, true); break;
            case IdentityKind::JACOBI: break;
        }
        return report;
    }

    switch (which) {
        case IdentityKind::EL_EXP: random_el_exp(report, mu, n, trials, seed, false); break;
        case IdentityKind::BEAUTY: random_el_exp(report, mu, n, trials, seed, true); break;
        case IdentityKind::PRODFORM: random_prodform(report, n, trials, seed, false); break;
        case IdentityKind::PRODFORM2: random_prodform(report, n, trials, seed, true); break;
        case IdentityKind::JACOBI: break;
    }
    return report;
}

IdentityReport jacobi_identity_check(unsigned n) {
    IdentityReport report;
    report.identity = IdentityKind::JACOBI;
    report.n = n;
    report.mode = IdentityMode::FULL_EXPANSION;
    report.trials = 0;

    Poly lhs;
    for (unsigned k = 0; 2 * k <= n; ++k) {
        const Poly term = Poly::monomial(k, catalan(k) * binomial(n, 2 * k));
        lhs = lhs + term * binomial_poly(n - 2 * k);
    }
    std::vector<BigRational> rhs_coeffs(n + 1);
    for (unsigned k = 0; k <= n; ++k)
        rhs_coeffs[k] = binomial(n + 1, k) * binomial(n + 1, k + 1) / BigRational(n + 1);
    const Poly rhs{std::vector<BigRational>(rhs_coeffs)};

    if (!(lhs == rhs)) {
        for (unsigned k = 0; k <= n; ++k) {
            if (lhs.coeff(k) != rhs.coeff(k)) {
                report.verdict = false;
                report.counterexample = std::vector<BigRational>{BigRational(k)};
                report.counterexample_detail =
                    "coefficient of z^" + std::to_string(k) + ": lhs " +
                    rational_to_string(lhs.coeff(k)) + ", rhs " +
                    rational_to_string(rhs.coeff(k));
                break;
            }
        }
    }
    return report;
}

std::string identity_report_to_json(const IdentityReport& report) {
    nlohmann::ordered_json doc;
    doc["identity"] = identity_kind_name(report.identity);
    doc["n"] = report.n;
    doc["mode"] =
        report.mode == IdentityMode::FULL_EXPANSION ? "FULL_EXPANSION" : "RANDOM_EVAL";
    doc["trials"] = report.trials;
    doc["verdict"] = report.verdict;
    if (report.counterexample) {
        nlohmann::ordered_json ce;
        ce["values"] = nlohmann::ordered_json::array();
        for (const auto& v : *report.counterexample) ce["values"].push_back(rational_to_string(v));
        ce["detail"] = report.counterexample_detail;
        doc["counterexample"] = ce;
    } else {
        doc["counterexample"] = nullptr;
    }
    return doc.dump();
}

bool Region::contains(std::complex<double> z, double slack) const {
    if (kind == Kind::RIGHT_HALF_PLANE) return z.real() >= -slack;
    return std::abs(z - center) <= radius + slack;
}

std::optional<std::complex<double>> gws_witness(const std::vector<BigRational>& c,
                                                const std::vector<GaussianRational>& pts,
                                                const Region& region, double slack) {
    const std::size_t n = pts.size();
    if (n == 0) throw std::invalid_argument("need at least one evaluation point");
    if (c.size() > n + 1)
        throw std::invalid_argument("more elementary coefficients than variables");
    for (const auto& p : pts) {
        const std::complex<double> zd(p.re.get_d(), p.im.get_d());
        if (!region.contains(zd, slack))
            throw std::invalid_argument("evaluation point outside the region");
    }

    const std::vector<GaussianRational> e = elem_sym_all(pts);
    GaussianRational value;
    for (std::size_t k = 0; k < c.size(); ++k)
        value = value + GaussianRational(c[k]) * e[k];

    std::size_t degree = 0;
    for (std::size_t k = 1; k < c.size(); ++k)
        if (c[k] != 0) degree = k;
    if (degree == 0) return std::complex<double>(pts[0].re.get_d(), pts[0].im.get_d());

    std::vector<std::complex<double>> coeffs(degree + 1);
    for (std::size_t k = 0; k <= degree; ++k) {
        const BigRational ck = k < c.size() ? c[k] : BigRational(0);
        coeffs[k] = std::complex<double>(BigRational(ck * binomial(n, k)).get_d(), 0.0);
    }
    coeffs[0] -= std::complex<double>(value.re.get_d(), value.im.get_d());

    const ComplexRootSet roots = aberth_roots(std::move(coeffs));
    std::optional<std::complex<double>> best;
    double best_margin = -1e300;
    for (const auto& r : roots.roots) {
        const double margin = region.kind == Region::Kind::RIGHT_HALF_PLANE
                                  ? r.real()
                                  : region.radius - std::abs(r - region.center);
        if (margin > best_margin) {
            best_margin = margin;
            best = r;
        }
    }
    if (best && best_margin >= -slack) return best;
    return std::nullopt;
}

}  // namespace zerogeom
