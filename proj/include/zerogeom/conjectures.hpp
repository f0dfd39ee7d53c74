#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zerogeom/poly.hpp"
#include "zerogeom/transforms.hpp"
#include "zerogeom/weightseq.hpp"

namespace zerogeom {

// Row m of the quartic-integral coefficient triangle:
//   d_l(m) = 2^{-2m} sum_{k=l}^m 2^k C(2m-2k, m-k) C(m+k, m) C(k, l).
struct BorosMollRow {
    unsigned m = 0;
    std::vector<BigRational> d;  // indices 0..m, all strictly positive
};

BorosMollRow boros_moll_row(unsigned m);

// Q_m(z) = sum_l d_l(m) z^l / l!  and  R_m(z) = sum_l d_l(m) z^l / (l+2)!.
Poly q_m_poly(unsigned m);
Poly r_m_poly(unsigned m);

// Exact check of Q_m = (d^2/dz^2)(z^2 R_m).
bool check_qr_relation(unsigned m);

// FINDING marks a conjecture-violating witness or a failed experiment; it is
// reportable output, not a bug. SKIPPED marks an unmet precondition.
enum class ExperimentStatus { PASS, FINDING, SKIPPED };

std::string experiment_status_name(ExperimentStatus s);

struct ExperimentRecord {
    std::string experiment;
    std::vector<std::pair<std::string, std::string>> parameters;
    ExperimentStatus status = ExperimentStatus::PASS;
    // Exact, re-checkable description of the violation; empty on PASS.
    std::string witness;
    // Seconds; surfaced in stderr tables only, never serialized, so stdout
    // stays byte-identical across runs.
    double wall_time = 0.0;
};

// Serializes experiment, parameters, verdict, witness (wall_time excluded).
std::string experiment_to_json(const ExperimentRecord& record);

// FACT0: Q_m has only real zeros. FACT2: R_m has only real zeros. Both open.
enum class Fact { FACT0, FACT2 };

std::string fact_name(Fact which);

// One record per m in [0, m_max]; non-real zeros surface as FINDINGs.
std::vector<ExperimentRecord> check_conjecture(Fact which, unsigned m_max);

// Repeatedly applies b_k = a_k^2 - a_{k-1} a_{k+1} and checks coefficientwise
// nonnegativity at each level. Requires depth >= 1.
IterationReport check_infinite_logconcavity(const Poly& seq, unsigned depth);

// For each n in [1, n_max] builds sum_k lambda_k C(n,k) z^k and requires it to
// be identically zero, or real-rooted with all zeros weakly of one sign.
std::vector<ExperimentRecord> multiplier_check(const WeightSeq& lambda, unsigned n_max);

// Two-part finite probe of a nonnegative-Turan question for a coefficient
// sequence gamma given on indices 0..K:
//   (1) sum_k C(n,k) gamma_k z^k in P+ (or 0) for every n <= evidence_n;
//   (2) depth applications of t_k = g_{k+1}^2 - g_k g_{k+2} stay nonnegative
//       on the truncation-trusted prefix (each application invalidates the
//       top two indices, so level i is trusted on k <= K - 2i).
// Throws std::invalid_argument when depth exceeds (K-1)/2.
ExperimentRecord craven_csordas_depth(const WeightSeq& gamma, unsigned K, unsigned depth,
                                      unsigned evidence_n);

// Sector experiment: when every zero of p lies in the sector of half-angle
// theta around the negative real axis and the transform maps (1+z)^(deg p)
// into P+, the transformed polynomial's zeros must land in the doubled
// sector. Unmet preconditions give SKIPPED; an escaping image zero is a
// FINDING. kind selects op_U_alpha or op_V_alpha.
ExperimentRecord sector_experiment(const WeightSeq& alpha, const Poly& p, double theta,
                                   TransformSpec::Kind kind = TransformSpec::Kind::U_ALPHA,
                                   double slack = 1e-9);

}  // namespace zerogeom
