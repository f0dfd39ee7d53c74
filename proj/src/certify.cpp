#include "zerogeom/certify.hpp"

#include <json.hpp>

#include <sstream>

namespace zerogeom {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::REAL_ROOTED: return "REAL_ROOTED";
        case Verdict::IN_P_PLUS: return "IN_P_PLUS";
        case Verdict::WEAKLY_HURWITZ: return "WEAKLY_HURWITZ";
        case Verdict::IDENTICALLY_ZERO: return "IDENTICALLY_ZERO";
        case Verdict::FAIL: return "FAIL";
    }
    return "FAIL";
}

namespace {

ZeroCertificate base_certificate(const Poly& p) {
    ZeroCertificate cert;
    cert.degree = p.degree();
    cert.isolation = isolate_roots(p);
    cert.distinct_real_roots = static_cast<unsigned>(cert.isolation.size());
    cert.root_at_origin = p.coeff(0) == 0;
    return cert;
}

}  // namespace

ZeroCertificate certify_real_rooted(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("certify_real_rooted of zero polynomial");
    ZeroCertificate cert = base_certificate(p);
    cert.verdict = Verdict::REAL_ROOTED;
    const std::vector<Poly> factors = yun_squarefree_factors(p);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree() < 1) continue;
        const unsigned real = count_real_roots(factors[i], std::nullopt, std::nullopt);
        if (real != static_cast<unsigned>(factors[i].degree())) {
            cert.verdict = Verdict::FAIL;
            std::ostringstream reason;
            reason << "square-free factor (multiplicity " << i + 1 << ") has Sturm count "
                   << real << " < degree " << factors[i].degree();
            cert.fail_reason = reason.str();
            break;
        }
    }
    return cert;
}

ZeroCertificate certify_in_p_plus(const Poly& p, unsigned n) {
    if (p.is_zero()) {
        ZeroCertificate cert;
        cert.verdict = Verdict::IDENTICALLY_ZERO;
        return cert;
    }
    if (p.degree() > static_cast<int>(n)) {
        ZeroCertificate cert = base_certificate(p);
        cert.verdict = Verdict::FAIL;
        cert.fail_reason = "degree " + std::to_string(p.degree()) + " exceeds bound " +
                           std::to_string(n);
        return cert;
    }
    ZeroCertificate cert = certify_real_rooted(p);
    if (cert.verdict == Verdict::FAIL) return cert;

    const unsigned positive = count_real_roots(p, BigRational(0), std::nullopt);
    if (positive > 0) {
        cert.verdict = Verdict::FAIL;
        cert.fail_reason = std::to_string(positive) + " distinct root(s) in (0, inf)";
        return cert;
    }
    cert.verdict = Verdict::IN_P_PLUS;
    return cert;
}

namespace {

bool in_p_plus_precondition(const Poly& p) {
    if (p.is_zero()) return false;
    if (p.degree() == 0) return true;
    if (certify_real_rooted(p).verdict != Verdict::REAL_ROOTED) return false;
    return count_real_roots(p, BigRational(0), std::nullopt) == 0;
}

// Multiplicity-counted roots of p in (cut, inf), via its square-free factors.
unsigned roots_above(const std::vector<Poly>& factors,
                     const std::vector<std::optional<SturmChain>>& chains,
                     const BigRational& cut) {
    unsigned total = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (!chains[i]) continue;
        total += static_cast<unsigned>(i + 1) * chains[i]->count_roots(cut, std::nullopt);
    }
    return total;
}

}  // namespace

bool interlace_check(const Poly& pe, const Poly& po) {
    if (!in_p_plus_precondition(pe) || !in_p_plus_precondition(po))
        throw std::invalid_argument(
            "interlace_check requires nonzero real-rooted inputs with non-positive zeros");

    // Let E(t), O(t) count zeros >= t of pe, po with multiplicity. The merged
    // descending multisets weakly alternate starting with pe's largest zero
    // iff O(t) <= E(t) <= O(t) + 1 for every real t; both counts only change
    // across zeros of pe*po, so testing one t per isolating interval of the
    // product (its left endpoint, which no zero of either input exceeds
    // without also exceeding the interval's root) is exhaustive. This also
    // absorbs the degree condition deg(pe) in {deg(po), deg(po) + 1} via the
    // lowest test point, and handles shared zeros with no gcd stripping.
    const Poly product = pe * po;
    if (product.degree() == 0) return true;

    auto build_factor_chains = [](const Poly& p) {
        std::vector<Poly> factors = p.degree() == 0 ? std::vector<Poly>{} : yun_squarefree_factors(p);
        std::vector<std::optional<SturmChain>> chains(factors.size());
        for (std::size_t i = 0; i < factors.size(); ++i)
            if (factors[i].degree() >= 1) chains[i] = SturmChain::build(factors[i]);
        return std::make_pair(std::move(factors), std::move(chains));
    };
    const auto [pe_factors, pe_chains] = build_factor_chains(pe);
    const auto [po_factors, po_chains] = build_factor_chains(po);

    for (const IsolationInterval& iv : isolate_roots(product)) {
        const unsigned e = roots_above(pe_factors, pe_chains, iv.lo);
        const unsigned o = roots_above(po_factors, po_chains, iv.lo);
        if (e < o || e > o + 1) return false;
    }
    return true;
}

ZeroCertificate certify_weakly_hurwitz(const Poly& p) {
    if (p.is_zero()) {
        ZeroCertificate cert;
        cert.verdict = Verdict::IDENTICALLY_ZERO;
        return cert;
    }
    ZeroCertificate cert = base_certificate(p);

    int seen_sign = 0;
    for (const auto& c : p.coeffs()) {
        const int s = sgn(c);
        if (s == 0) continue;
        if (seen_sign == 0) seen_sign = s;
        else if (s != seen_sign) {
            cert.verdict = Verdict::FAIL;
            cert.fail_reason = "mixed coefficient signs";
            return cert;
        }
    }

    const auto [pe, po] = even_odd_split(p);
    auto part_in_p_plus = [](const Poly& q) {
        return certify_in_p_plus(q, static_cast<unsigned>(q.degree())).verdict ==
               Verdict::IN_P_PLUS;
    };

    if (pe.is_zero() || po.is_zero()) {
        const Poly& other = pe.is_zero() ? po : pe;
        const char* name = pe.is_zero() ? "odd part" : "even part";
        if (part_in_p_plus(other)) {
            cert.verdict = Verdict::WEAKLY_HURWITZ;
        } else {
            cert.verdict = Verdict::FAIL;
            cert.fail_reason = std::string(name) +
                               " has a nonreal or positive zero";
        }
        return cert;
    }

    if (!part_in_p_plus(pe)) {
        cert.verdict = Verdict::FAIL;
        cert.fail_reason = "even part not in P+";
        return cert;
    }
    if (!part_in_p_plus(po)) {
        cert.verdict = Verdict::FAIL;
        cert.fail_reason = "odd part not in P+";
        return cert;
    }
    if (!interlace_check(pe, po)) {
        cert.verdict = Verdict::FAIL;
        cert.fail_reason = "even/odd parts do not interlace";
        return cert;
    }
    cert.verdict = Verdict::WEAKLY_HURWITZ;
    return cert;
}

std::string certificate_to_json(const ZeroCertificate& cert) {
    nlohmann::ordered_json doc;
    doc["verdict"] = verdict_name(cert.verdict);
    doc["degree"] = cert.degree;
    doc["distinct_real_roots"] = cert.distinct_real_roots;
    doc["isolation"] = nlohmann::ordered_json::array();
    for (const auto& iv : cert.isolation) {
        nlohmann::ordered_json entry;
        entry["lo"] = rational_to_string(iv.lo);
        entry["hi"] = rational_to_string(iv.hi);
        entry["mult"] = iv.multiplicity;
        doc["isolation"].push_back(entry);
    }
    if (cert.verdict == Verdict::FAIL)
        doc["fail_reason"] = cert.fail_reason;
    else
        doc["fail_reason"] = nullptr;
    return doc.dump();
}

}  // namespace zerogeom
