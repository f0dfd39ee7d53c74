#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zerogeom/poly.hpp"
#include "zerogeom/weightseq.hpp"

namespace zerogeom {

// b_k = a_k^2 - a_{k-1} a_{k+1}, indices outside the input read 0.
Poly op_L(const Poly& a);

// b_k = sum_j alpha_j a_{k-j} a_{k+j}. With alpha = {1, -1} this is op_L.
Poly op_U_alpha(const Poly& a, const WeightSeq& alpha);

// c_k = sum_j alpha_j a_{k-j} a_{k+1+j}.
Poly op_V_alpha(const Poly& a, const WeightSeq& alpha);

// Coefficient m of the image is sum_{i <= j, i+j = m} mu_{j-i} a_i a_j. Its
// even part is op_U_alpha with alpha_j = mu_{2j} and its odd part is
// op_V_alpha with beta_j = mu_{2j+1}.
Poly op_T_mu(const Poly& a, const WeightSeq& mu);

// op_U_alpha / op_V_alpha with alpha_0 = 1, alpha_r = -1. r = 0 collapses to
// the zero map.
Poly op_S_r(const Poly& a, unsigned r);
Poly op_S_r_prime(const Poly& a, unsigned r);

// gamma_k = sum_{j <= k/2} C(k, j) mu_{k-2j} for k = 0..K.
WeightSeq gamma_from_mu(const WeightSeq& mu, unsigned K);

// Inverse of gamma_from_mu on [0, K]: mu_0 = gamma_0 and for k >= 1
// mu_k = sum_j (-1)^j (k/(k-j)) C(k-j, j) gamma_{k-2j}.
WeightSeq mu_from_gamma(const WeightSeq& gamma, unsigned K);

// sum_k gamma_k C(n, k) z^{n-k} with gamma derived from mu.
Poly p_mu_n(const WeightSeq& mu, unsigned n);

// sum_{k <= n/2} (sum_j alpha_j / ((k+j)! (k-j)!)) z^k / (n-2k)!, with
// 1/(negative)! read as 0.
Poly algU_condition_poly(const WeightSeq& alpha, unsigned n);

// sum_{k <= (n-1)/2} (sum_j alpha_j / ((k+1+j)! (k-j)!)) z^k / (n-2k-1)!.
Poly algV_condition_poly(const WeightSeq& alpha, unsigned n);

// sum_{k=0}^n C(n, k) gamma_k z^k.
Poly jensen_poly(const WeightSeq& gamma, unsigned n);

// Coefficient of z^k in S_r(e^z), or S'_r(e^z) when shifted:
//   a_{k,r} = ((k+1)...(k+r) - k(k-1)...(k-r+1)) / (k! (k+r)!)
//   b_{k,r} = ((k+2)...(k+1+r) - k(k-1)...(k-r+1)) / (k! (k+1+r)!)
BigRational sr_exp_coeff(unsigned r, unsigned k, bool shifted);

// Entry k of the output is g_{k+1}^2 - g_k g_{k+2}; one entry shorter than
// the input, so constants map to zero.
Poly turan_shift(const Poly& gamma);

struct TransformSpec {
    enum class Kind { L, U_ALPHA, V_ALPHA, T_MU, S_R, S_R_PRIME, TURAN_SHIFT };
    Kind kind = Kind::L;
    WeightSeq weights;  // alpha for U/V, mu for T
    unsigned r = 0;     // for S_R / S_R_PRIME
};

Poly apply_transform(const TransformSpec& spec, const Poly& a);

std::string transform_kind_name(TransformSpec::Kind kind);

enum class IterCheck { NONNEG, IN_P_PLUS };

struct IterationViolation {
    unsigned iteration;  // 1-based
    // "negative_coefficient": index/value give the offending entry.
    // "not_in_p_plus": index/value are zero and reason explains the failure.
    std::string kind;
    unsigned index = 0;
    BigRational value = BigRational(0);
    std::string reason;
};

struct IterationReport {
    unsigned depth_requested = 0;
    unsigned depth_achieved = 0;
    std::optional<IterationViolation> first_negative;
    std::optional<Poly> failing_iterate;  // exact witness when a check failed
    std::vector<Poly> sequences;          // one per iterate, only when retained
};

// Applies the transform up to `depth` times, stopping at the first iterate
// that fails the requested check; depth_achieved counts passing iterations.
// Requires depth >= 1.
IterationReport iterate_transform(const TransformSpec& spec, const Poly& a, unsigned depth,
                                  IterCheck check, bool keep_sequences = false);

std::string iteration_report_to_json(const IterationReport& report);

}  // namespace zerogeom
