#pragma once

#include <string>
#include <vector>

#include "zerogeom/poly.hpp"
#include "zerogeom/sturm.hpp"

namespace zerogeom {

enum class Verdict { REAL_ROOTED, IN_P_PLUS, WEAKLY_HURWITZ, IDENTICALLY_ZERO, FAIL };

std::string verdict_name(Verdict v);

// Exact witness record for a zero-location property. `isolation` covers the
// real roots of the certified polynomial; a FAIL names the violated condition
// in `fail_reason`. `root_at_origin` flags a zero at the origin so callers
// needing the strict (negative-only) variant of the non-positivity condition
// can reject it; the closed condition is what the verdict certifies.
struct ZeroCertificate {
    Verdict verdict = Verdict::FAIL;
    int degree = -1;
    unsigned distinct_real_roots = 0;
    std::vector<IsolationInterval> isolation;
    std::string fail_reason;
    bool root_at_origin = false;
};

// REAL_ROOTED iff every complex zero of p is real, multiplicities included:
// each square-free factor must have as many distinct real roots as its
// degree. Throws std::domain_error on the zero polynomial.
ZeroCertificate certify_real_rooted(const Poly& p);

// IDENTICALLY_ZERO for p = 0; IN_P_PLUS iff deg(p) <= n, p is real-rooted,
// and p has no root in (0, inf). Zeros at the origin are allowed and flagged.
ZeroCertificate certify_in_p_plus(const Poly& p, unsigned n);

// Weak interlacing of the zero multisets of pe and po: merged in descending
// order they must alternate starting with pe's largest, allowing ties, and
// deg(pe) must be deg(po) or deg(po) + 1. Requires both nonzero, real-rooted,
// with only non-positive zeros (throws std::invalid_argument otherwise).
bool interlace_check(const Poly& pe, const Poly& po);

// Hermite-Biehler test: all nonzero coefficients share one sign, and with
// p(z) = PE(z^2) + z PO(z^2) one of: PE = 0 and PO in P+; PO = 0 and PE in
// P+; both nonzero, both in P+, and interlace_check(PE, PO) holds.
ZeroCertificate certify_weakly_hurwitz(const Poly& p);

// {"verdict", "degree", "distinct_real_roots", "isolation", "fail_reason"},
// rationals as strings, field order fixed.
std::string certificate_to_json(const ZeroCertificate& cert);

}  // namespace zerogeom
