#include "zerogeom/transforms.hpp"

#include <json.hpp>

#include <stdexcept>

#include "zerogeom/certify.hpp"

namespace zerogeom {

Poly op_L(const Poly& a) {
    const auto& c = a.coeffs();
    std::vector<BigRational> b(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
        b[k] = c[k] * c[k];
        if (k >= 1 && k + 1 < c.size()) b[k] -= c[k - 1] * c[k + 1];
    }
    return Poly(std::move(b));
}

Poly op_U_alpha(const Poly& a, const WeightSeq& alpha) {
    const auto& c = a.coeffs();
    std::vector<BigRational> b(c.size(), BigRational(0));
    for (std::size_t k = 0; k < c.size(); ++k) {
        for (const auto& [j, w] : alpha.entries()) {
            if (j > k || k + j >= c.size()) continue;
            b[k] += w * c[k - j] * c[k + j];
        }
    }
    return Poly(std::move(b));
}

Poly op_V_alpha(const Poly& a, const WeightSeq& alpha) {
    const auto& c = a.coeffs();
    std::vector<BigRational> b(c.size(), BigRational(0));
    for (std::size_t k = 0; k < c.size(); ++k) {
        for (const auto& [j, w] : alpha.entries()) {
            if (j > k || k + 1 + j >= c.size()) continue;
            b[k] += w * c[k - j] * c[k + 1 + j];
        }
    }
    return Poly(std::move(b));
}

Poly op_T_mu(const Poly& a, const WeightSeq& mu) {
    const auto& c = a.coeffs();
    if (c.empty()) return Poly();
    std::vector<BigRational> b(2 * c.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i; j < c.size(); ++j) {
            const BigRational w = mu.at(static_cast<unsigned>(j - i));
            if (w != 0) b[i + j] += w * c[i] * c[j];
        }
    return Poly(std::move(b));
}

namespace {

WeightSeq sr_alpha(unsigned r) {
    std::vector<WeightSeq::Entry> entries{{0u, BigRational(1)}};
    if (r == 0)
        entries[0].second = BigRational(0);  // alpha_0 = 1 - 1
    else
        entries.emplace_back(r, BigRational(-1));
    return WeightSeq::from_entries(std::move(entries));
}

}  // namespace

Poly op_S_r(const Poly& a, unsigned r) { return op_U_alpha(a, sr_alpha(r)); }

Poly op_S_r_prime(const Poly& a, unsigned r) { return op_V_alpha(a, sr_alpha(r)); }

WeightSeq gamma_from_mu(const WeightSeq& mu, unsigned K) {
    std::vector<BigRational> g(K + 1, BigRational(0));
    for (unsigned k = 0; k <= K; ++k)
        for (unsigned j = 0; 2 * j <= k; ++j) g[k] += binomial(k, j) * mu.at(k - 2 * j);
    return WeightSeq::from_dense(g);
}

WeightSeq mu_from_gamma(const WeightSeq& gamma, unsigned K) {
    std::vector<BigRational> m(K + 1, BigRational(0));
    m[0] = gamma.at(0);
    for (unsigned k = 1; k <= K; ++k) {
        BigRational acc(0);
        for (unsigned j = 0; 2 * j <= k; ++j) {
            const BigRational term = BigRational(k) / BigRational(k - j) *
                                     binomial(k - j, j) * gamma.at(k - 2 * j);
            acc += (j % 2 == 0) ? term : -term;
        }
        m[k] = acc;
    }
    return WeightSeq::from_dense(m);
}

Poly p_mu_n(const WeightSeq& mu, unsigned n) {
    const WeightSeq gamma = gamma_from_mu(mu, n);
    std::vector<BigRational> c(n + 1, BigRational(0));
    for (unsigned k = 0; k <= n; ++k) c[n - k] = gamma.at(k) * binomial(n, k);
    return Poly(std::move(c));
}

Poly algU_condition_poly(const WeightSeq& alpha, unsigned n) {
    std::vector<BigRational> c(n / 2 + 1, BigRational(0));
    for (unsigned k = 0; 2 * k <= n; ++k) {
        BigRational inner(0);
        for (const auto& [j, w] : alpha.entries()) {
            if (j > k) continue;
            inner += w / (factorial(k + j) * factorial(k - j));
        }
        c[k] = inner / factorial(n - 2 * k);
    }
    return Poly(std::move(c));
}

Poly algV_condition_poly(const WeightSeq& alpha, unsigned n) {
    if (n == 0) return Poly();
    std::vector<BigRational> c((n - 1) / 2 + 1, BigRational(0));
    for (unsigned k = 0; 2 * k + 1 <= n; ++k) {
        BigRational inner(0);
        for (const auto& [j, w] : alpha.entries()) {
            if (j > k) continue;
            inner += w / (factorial(k + 1 + j) * factorial(k - j));
        }
        c[k] = inner / factorial(n - 2 * k - 1);
    }
    return Poly(std::move(c));
}

Poly jensen_poly(const WeightSeq& gamma, unsigned n) {
    std::vector<BigRational> c(n + 1, BigRational(0));
    for (unsigned k = 0; k <= n; ++k) c[k] = binomial(n, k) * gamma.at(k);
    return Poly(std::move(c));
}

BigRational sr_exp_coeff(unsigned r, unsigned k, bool shifted) {
    // Rising product minus falling product over the appropriate factorials;
    // the falling product hits zero once it crosses k, matching the
    // 1/(negative)! = 0 convention of the series expansion.
    BigRational rising(1);
    for (unsigned i = 1; i <= r; ++i)
        rising *= BigRational(static_cast<long>(k) + (shifted ? 1 : 0) + static_cast<long>(i));
    BigRational falling(1);
    for (unsigned i = 0; i < r; ++i)
        falling *= BigRational(static_cast<long>(k) - static_cast<long>(i));
    return (rising - falling) / (factorial(k) * factorial(k + r + (shifted ? 1 : 0)));
}

Poly turan_shift(const Poly& gamma) {
    const auto& g = gamma.coeffs();
    if (g.size() <= 1) return Poly();
    std::vector<BigRational> t(g.size() - 1);
    for (std::size_t k = 0; k + 1 < g.size(); ++k) {
        t[k] = g[k + 1] * g[k + 1];
        if (k + 2 < g.size()) t[k] -= g[k] * g[k + 2];
    }
    return Poly(std::move(t));
}

Poly apply_transform(const TransformSpec& spec, const Poly& a) {
    switch (spec.kind) {
        case TransformSpec::Kind::L: return op_L(a);
        case TransformSpec::Kind::U_ALPHA: return op_U_alpha(a, spec.weights);
        case TransformSpec::Kind::V_ALPHA: return op_V_alpha(a, spec.weights);
        case TransformSpec::Kind::T_MU: return op_T_mu(a, spec.weights);
        case TransformSpec::Kind::S_R: return op_S_r(a, spec.r);
        case TransformSpec::Kind::S_R_PRIME: return op_S_r_prime(a, spec.r);
        case TransformSpec::Kind::TURAN_SHIFT: return turan_shift(a);
    }
    throw std::logic_error("unhandled transform kind");
}

std::string transform_kind_name(TransformSpec::Kind kind) {
    switch (kind) {
        case TransformSpec::Kind::L: return "L";
        case TransformSpec::Kind::U_ALPHA: return "U";
        case TransformSpec::Kind::V_ALPHA: return "V";
        case TransformSpec::Kind::T_MU: return "T";
        case TransformSpec::Kind::S_R: return "Sr";
        case TransformSpec::Kind::S_R_PRIME: return "Sr-prime";
        case TransformSpec::Kind::TURAN_SHIFT: return "turan";
    }
    return "?";
}

IterationReport iterate_transform(const TransformSpec& spec, const Poly& a, unsigned depth,
                                  IterCheck check, bool keep_sequences) {
    if (depth < 1) throw std::invalid_argument("iteration depth must be >= 1");
    IterationReport report;
    report.depth_requested = depth;

    Poly current = a;
    for (unsigned iteration = 1; iteration <= depth; ++iteration) {
        current = apply_transform(spec, current);
        if (keep_sequences) report.sequences.push_back(current);

        if (check == IterCheck::NONNEG) {
            bool ok = true;
            for (std::size_t k = 0; k < current.coeffs().size(); ++k) {
                if (current.coeffs()[k] < 0) {
                    report.first_negative = IterationViolation{
                        iteration, "negative_coefficient", static_cast<unsigned>(k),
                        current.coeffs()[k], "coefficient below zero"};
                    ok = false;
                    break;
                }
            }
            if (!ok) {
                report.failing_iterate = current;
                return report;
            }
        } else {
            const unsigned bound =
                current.is_zero() ? 0u : static_cast<unsigned>(current.degree());
            const ZeroCertificate cert = certify_in_p_plus(current, bound);
            if (cert.verdict != Verdict::IN_P_PLUS &&
                cert.verdict != Verdict::IDENTICALLY_ZERO) {
                IterationViolation v{iteration, "not_in_p_plus", 0, BigRational(0),
                                     cert.fail_reason};
                // Surface a concrete coefficient when one witnesses the failure.
                for (std::size_t k = 0; k < current.coeffs().size(); ++k) {
                    if (current.coeffs()[k] < 0) {
                        v.index = static_cast<unsigned>(k);
                        v.value = current.coeffs()[k];
                        break;
                    }
                }
                report.first_negative = v;
                report.failing_iterate = current;
                return report;
            }
        }
        report.depth_achieved = iteration;
    }
    return report;
}

std::string iteration_report_to_json(const IterationReport& report) {
    nlohmann::ordered_json doc;
    doc["depth_requested"] = report.depth_requested;
    doc["depth_achieved"] = report.depth_achieved;
    if (report.first_negative) {
        nlohmann::ordered_json v;
        v["iteration"] = report.first_negative->iteration;
        v["kind"] = report.first_negative->kind;
        v["index"] = report.first_negative->index;
        v["value"] = rational_to_string(report.first_negative->value);
        if (!report.first_negative->reason.empty()) v["reason"] = report.first_negative->reason;
        doc["first_negative"] = v;
    } else {
        doc["first_negative"] = nullptr;
    }
    if (report.failing_iterate)
        doc["failing_iterate"] = format_poly_text(*report.failing_iterate);
    if (!report.sequences.empty()) {
        doc["sequences"] = nlohmann::ordered_json::array();
        for (const auto& s : report.sequences) doc["sequences"].push_back(format_poly_text(s));
    }
    return doc.dump();
}

}  // namespace zerogeom
