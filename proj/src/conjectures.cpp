#include "zerogeom/conjectures.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "zerogeom/certify.hpp"
#include "zerogeom/numeric.hpp"
#include "zerogeom/sturm.hpp"

namespace zerogeom {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string format_double(double x) {
    std::ostringstream out;
    out.precision(12);
    out << x;
    return out.str();
}

std::string format_root(std::complex<double> z) {
    std::ostringstream out;
    out.precision(12);
    out << '(' << z.real() << ", " << z.imag() << ')';
    return out.str();
}

}  // namespace

BorosMollRow boros_moll_row(unsigned m) {
    BorosMollRow row;
    row.m = m;
    row.d.reserve(m + 1);
    const BigRational scale(mpz_class(1), mpz_class(1) << (2 * m));
    for (unsigned l = 0; l <= m; ++l) {
        BigRational sum(0);
        for (unsigned k = l; k <= m; ++k) {
            sum += BigRational(mpz_class(1) << k) * binomial(2 * m - 2 * k, m - k) *
                   binomial(m + k, m) * binomial(k, l);
        }
        row.d.push_back(sum * scale);
    }
    return row;
}

Poly q_m_poly(unsigned m) {
    const BorosMollRow row = boros_moll_row(m);
    std::vector<BigRational> coeffs(m + 1);
    for (unsigned l = 0; l <= m; ++l) coeffs[l] = row.d[l] / factorial(l);
    return Poly(std::move(coeffs));
}

Poly r_m_poly(unsigned m) {
    const BorosMollRow row = boros_moll_row(m);
    std::vector<BigRational> coeffs(m + 1);
    for (unsigned l = 0; l <= m; ++l) coeffs[l] = row.d[l] / factorial(l + 2);
    return Poly(std::move(coeffs));
}

bool check_qr_relation(unsigned m) {
    const Poly z2r = Poly::monomial(2, BigRational(1)) * r_m_poly(m);
    return z2r.derivative().derivative() == q_m_poly(m);
}

std::string experiment_status_name(ExperimentStatus s) {
    switch (s) {
        case ExperimentStatus::PASS: return "PASS";
        case ExperimentStatus::FINDING: return "FINDING";
        case ExperimentStatus::SKIPPED: return "SKIPPED";
    }
    return "?";
}

std::string experiment_to_json(const ExperimentRecord& record) {
    nlohmann::ordered_json doc;
    doc["experiment"] = record.experiment;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : record.parameters) params[key] = value;
    doc["parameters"] = params;
    doc["verdict"] = experiment_status_name(record.status);
    if (record.witness.empty())
        doc["witness"] = nullptr;
    else
        doc["witness"] = record.witness;
    return doc.dump();
}

std::string fact_name(Fact which) { return which == Fact::FACT0 ? "fact0" : "fact2"; }

std::vector<ExperimentRecord> check_conjecture(Fact which, unsigned m_max) {
    std::vector<ExperimentRecord> records;
    records.reserve(m_max + 1);
    for (unsigned m = 0; m <= m_max; ++m) {
        const auto start = std::chrono::steady_clock::now();
        ExperimentRecord rec;
        rec.experiment = fact_name(which);
        rec.parameters = {{"m", std::to_string(m)}};
        const Poly p = which == Fact::FACT0 ? q_m_poly(m) : r_m_poly(m);
        const ZeroCertificate cert = certify_real_rooted(p);
        if (cert.verdict == Verdict::REAL_ROOTED) {
            rec.status = ExperimentStatus::PASS;
        } else {
            rec.status = ExperimentStatus::FINDING;
            rec.witness = cert.fail_reason + "; polynomial " + format_poly_text(p);
        }
        rec.wall_time = seconds_since(start);
        records.push_back(std::move(rec));
    }
    return records;
}

IterationReport check_infinite_logconcavity(const Poly& seq, unsigned depth) {
    TransformSpec spec;
    spec.kind = TransformSpec::Kind::L;
    return iterate_transform(spec, seq, depth, IterCheck::NONNEG);
}

std::vector<ExperimentRecord> multiplier_check(const WeightSeq& lambda, unsigned n_max) {
    std::vector<ExperimentRecord> records;
    records.reserve(n_max);
    for (unsigned n = 1; n <= n_max; ++n) {
        const auto start = std::chrono::steady_clock::now();
        ExperimentRecord rec;
        rec.experiment = "multiplier";
        rec.parameters = {{"n", std::to_string(n)}, {"lambda", format_weightseq(lambda)}};

        std::vector<BigRational> coeffs(n + 1);
        for (unsigned k = 0; k <= n; ++k) coeffs[k] = lambda.at(k) * binomial(n, k);
        const Poly image{std::move(coeffs)};

        if (image.is_zero()) {
            rec.status = ExperimentStatus::PASS;
        } else {
            const ZeroCertificate cert = certify_real_rooted(image);
            if (cert.verdict != Verdict::REAL_ROOTED) {
                rec.status = ExperimentStatus::FINDING;
                rec.witness = cert.fail_reason + "; polynomial " + format_poly_text(image);
            } else {
                const unsigned positive = count_real_roots(image, BigRational(0), std::nullopt);
                unsigned negative = count_real_roots(image, std::nullopt, BigRational(0));
                if (image.coeff(0) == 0) --negative;  // the root at 0 is sign-neutral
                if (positive > 0 && negative > 0) {
                    rec.status = ExperimentStatus::FINDING;
                    rec.witness = std::to_string(positive) + " positive and " +
                                  std::to_string(negative) +
                                  " negative distinct roots; polynomial " +
                                  format_poly_text(image);
                } else {
                    rec.status = ExperimentStatus::PASS;
                }
            }
        }
        rec.wall_time = seconds_since(start);
        records.push_back(std::move(rec));
    }
    return records;
}

ExperimentRecord craven_csordas_depth(const WeightSeq& gamma, unsigned K, unsigned depth,
                                      unsigned evidence_n) {
    if (2 * depth > K || K - 2 * depth < 1) {
        throw std::invalid_argument("depth " + std::to_string(depth) + " exceeds (K-1)/2 for K=" +
                                    std::to_string(K) +
                                    "; each shift invalidates two tail indices");
    }
    const auto start = std::chrono::steady_clock::now();
    ExperimentRecord rec;
    rec.experiment = "craven-csordas";
    rec.parameters = {{"gamma", format_weightseq(gamma)},
                      {"K", std::to_string(K)},
                      {"depth", std::to_string(depth)},
                      {"evidence_n", std::to_string(evidence_n)},
                      {"trusted_prefix", std::to_string(K - 2 * depth)}};

    for (unsigned n = 0; n <= evidence_n; ++n) {
        const Poly jp = jensen_poly(gamma, n);
        const ZeroCertificate cert = certify_in_p_plus(jp, n);
        if (cert.verdict != Verdict::IN_P_PLUS && cert.verdict != Verdict::IDENTICALLY_ZERO) {
            rec.status = ExperimentStatus::FINDING;
            rec.witness = "truncation n=" + std::to_string(n) +
                          " escapes P+: " + cert.fail_reason + "; polynomial " +
                          format_poly_text(jp);
            rec.wall_time = seconds_since(start);
            return rec;
        }
    }

    std::vector<BigRational> level(K + 1);
    for (unsigned k = 0; k <= K; ++k) level[k] = gamma.at(k);
    for (unsigned i = 1; i <= depth; ++i) {
        std::vector<BigRational> next(level.size() - 1);
        for (std::size_t k = 0; k + 1 < level.size(); ++k) {
            const BigRational above = k + 2 < level.size() ? level[k + 2] : BigRational(0);
            next[k] = level[k + 1] * level[k + 1] - level[k] * above;
        }
        level = std::move(next);
        // Truncation wipes out two trusted tail indices per application.
        const unsigned trusted = K - 2 * i;
        for (unsigned k = 0; k <= trusted && k < level.size(); ++k) {
            if (level[k] < 0) {
                rec.status = ExperimentStatus::FINDING;
                rec.witness = "shift level " + std::to_string(i) + " index " + std::to_string(k) +
                              " is negative: " + rational_to_string(level[k]);
                rec.wall_time = seconds_since(start);
                return rec;
            }
        }
    }

    rec.status = ExperimentStatus::PASS;
    rec.wall_time = seconds_since(start);
    return rec;
}

ExperimentRecord sector_experiment(const WeightSeq& alpha, const Poly& p, double theta,
                                   TransformSpec::Kind kind, double slack) {
    const auto start = std::chrono::steady_clock::now();
    ExperimentRecord rec;
    rec.experiment = "sector";
    rec.parameters = {{"kind", kind == TransformSpec::Kind::V_ALPHA ? "V" : "U"},
                      {"alpha", format_weightseq(alpha)},
                      {"theta", format_double(theta)},
                      {"poly", format_poly_text(p)},
                      {"slack", format_double(slack)}};
    rec.status = ExperimentStatus::SKIPPED;

    if (kind != TransformSpec::Kind::U_ALPHA && kind != TransformSpec::Kind::V_ALPHA)
        throw std::invalid_argument("sector experiments cover the U and V transforms only");

    const auto finish = [&](ExperimentStatus status, std::string witness) {
        rec.status = status;
        rec.witness = std::move(witness);
        rec.wall_time = seconds_since(start);
        return rec;
    };

    // Angular distance to the negative real axis; arg in (-pi, pi] makes the
    // sector symmetric under conjugation.
    const auto off_axis = [](std::complex<double> z) { return std::numbers::pi - std::abs(std::arg(z)); };

    if (!(theta >= 0.0 && theta < std::numbers::pi / 2))
        return finish(ExperimentStatus::SKIPPED, "theta outside [0, pi/2)");
    if (p.is_zero())
        return finish(ExperimentStatus::SKIPPED, "input polynomial is identically zero");

    const unsigned n = static_cast<unsigned>(p.degree());
    if (n >= 1) {
        const ComplexRootSet proots = complex_roots_numeric(p);
        for (const auto& r : proots.roots) {
            if (std::abs(r) <= slack) continue;
            if (!(off_axis(r) < theta + slack))
                return finish(ExperimentStatus::SKIPPED,
                              "input zero " + format_root(r) + " outside the sector of angle " +
                                  format_double(theta));
        }
    }

    const auto apply = [&](const Poly& q) {
        return kind == TransformSpec::Kind::U_ALPHA ? op_U_alpha(q, alpha)
                                                    : op_V_alpha(q, alpha);
    };

    const Poly basis_image = apply(binomial_poly(n));
    const ZeroCertificate basis_cert = certify_in_p_plus(basis_image, n);
    if (basis_cert.verdict != Verdict::IN_P_PLUS &&
        basis_cert.verdict != Verdict::IDENTICALLY_ZERO)
        return finish(ExperimentStatus::SKIPPED,
                      "transform does not map the binomial basis of degree " + std::to_string(n) +
                          " into P+: " + basis_cert.fail_reason);

    const Poly image = apply(p);
    if (image.degree() < 1) return finish(ExperimentStatus::PASS, "");

    const ComplexRootSet iroots = complex_roots_numeric(image);
    for (const auto& r : iroots.roots) {
        if (std::abs(r) <= slack) continue;
        if (!(off_axis(r) < 2 * theta + slack))
            return finish(ExperimentStatus::FINDING,
                          "image zero " + format_root(r) + " escapes the doubled sector " +
                              format_double(2 * theta) + "; image polynomial " +
                              format_poly_text(image));
    }
    return finish(ExperimentStatus::PASS, "");
}

}  // namespace zerogeom
