#pragma once

#include <complex>
#include <vector>

#include "zerogeom/poly.hpp"

namespace zerogeom {

// Numeric root approximations. `residual_bound` is
// max_i |p(r_i)| / (|lc| * prod_{j != i} max(|r_i - r_j|, guard)), a cheap
// certificate of simultaneous quality; `converged` reports whether the
// iteration hit its correction tolerance before max_iter.
struct ComplexRootSet {
    std::vector<std::complex<double>> roots;
    double residual_bound = 0.0;
    unsigned iterations = 0;
    bool converged = true;
};

// Simultaneous root iteration on arbitrary complex coefficients (low degree
// first, nonzero leading coefficient), perturbed-circle start, Gauss-Seidel
// updates. Exposed separately because the witness solver feeds it complex
// constant terms directly.
ComplexRootSet aberth_roots(std::vector<std::complex<double>> coeffs, double tol = 1e-13,
                            unsigned max_iter = 1000);

// All complex roots of p (degree >= 1). Exact zero roots at the origin are
// split off first; the remaining coefficients are normalized exactly before
// conversion to double, so coefficient magnitudes far outside double range
// do not overflow. Multiple roots come back as clusters with the usual
// conditioning loss; residual_bound reflects it.
ComplexRootSet complex_roots_numeric(const Poly& p, double tol = 1e-13,
                                     unsigned max_iter = 1000);

// True iff every root r with |r| > slack has angular distance to the
// negative real axis (pi - |arg r|) strictly below theta + slack.
bool sector_containment(const ComplexRootSet& roots, double theta, double slack);

// Growth bound from the lowest three coefficients b_M, b_{M+1}, b_{M+2}
// (M = lowest nonzero index):
//   |b_M| |z|^M exp(t1 |z| + 3 |z|^2 t1^2 + 3 |z|^2 t2),
// t1 = |b_{M+1}/b_M|, t2 = |b_{M+2}/b_M|. Valid as an upper bound for |p(z)|
// whenever p is nonvanishing on an open half-plane whose boundary passes
// through the origin. May overflow to +inf; szasz_log_bound is the log-space
// variant that never does. Requires p != 0.
double szasz_bound(const Poly& p, std::complex<double> z);
double szasz_log_bound(const Poly& p, std::complex<double> z);

}  // namespace zerogeom
