#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "zerogeom/poly.hpp"
#include "zerogeom/rng.hpp"
#include "zerogeom/weightseq.hpp"

namespace zerogeom {

// e_0..e_n of the given values by the product recurrence on prod(1 + z_i t).
// Works over any commutative ring with 0/1 conversions from int.
template <class T>
std::vector<T> elem_sym_all(const std::vector<T>& pts) {
    std::vector<T> e(pts.size() + 1, T(0));
    e[0] = T(1);
    std::size_t used = 0;
    for (const T& z : pts) {
        ++used;
        for (std::size_t k = used; k >= 1; --k) e[k] = e[k] + z * e[k - 1];
    }
    return e;
}

// e_k(pts); zero for k > n.
BigRational elem_sym(unsigned k, const std::vector<BigRational>& pts);

// All sigma_k^r values at once: table[k][r] sums the monomials with exponent
// vectors in {0,1,2}^n of total degree k containing exactly r twos. Dynamic
// programming over variables, O(n^4) ring operations total.
std::vector<std::vector<BigRational>> sigma_table(const std::vector<BigRational>& pts);

// Single sigma_k^r value; zero for infeasible (k, r).
BigRational sigma_k_r(unsigned k, unsigned r, const std::vector<BigRational>& pts);

// sum_{i <= j} mu_{j-i} e_i(pts) e_j(pts).
BigRational w_mu_n_eval(const WeightSeq& mu, const std::vector<BigRational>& pts);

// Sparse multivariate polynomial keyed by exponent vector; the FULL_EXPANSION
// comparison form. Zero coefficients are never stored.
class MultiPoly {
public:
    explicit MultiPoly(std::size_t arity) : arity_(arity) {}

    void add(const std::vector<int>& exponents, const BigRational& coeff);
    void add_scaled(const MultiPoly& other, const BigRational& scale);
    bool operator==(const MultiPoly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }
    const std::map<std::vector<int>, BigRational>& terms() const { return terms_; }
    std::size_t arity() const { return arity_; }

    // First differing monomial between two expansions, with both coefficients.
    static std::optional<std::tuple<std::vector<int>, BigRational, BigRational>> first_difference(
        const MultiPoly& a, const MultiPoly& b);

private:
    std::size_t arity_;
    std::map<std::vector<int>, BigRational> terms_;
};

// Full expansions in n variables (subset / exponent-vector enumeration, so
// intended for small n; every FULL_EXPANSION path goes through these).
MultiPoly expand_elementary(std::size_t n, unsigned k);
MultiPoly multiply(const MultiPoly& a, const MultiPoly& b);
MultiPoly expand_sigma(std::size_t n, unsigned k, unsigned r);
// e_n(z) * e_k(z + 1/z), which is polynomial after clearing: the subsets S of
// size k contribute prod_{i in S}(z_i^2 + 1) * prod_{i not in S} z_i.
MultiPoly expand_diag_product(std::size_t n, unsigned k);

enum class IdentityKind { EL_EXP, PRODFORM, PRODFORM2, BEAUTY, JACOBI };
enum class IdentityMode { FULL_EXPANSION, RANDOM_EVAL };

std::string identity_kind_name(IdentityKind k);

struct IdentityReport {
    IdentityKind identity;
    unsigned n = 0;
    IdentityMode mode = IdentityMode::RANDOM_EVAL;
    unsigned trials = 0;
    bool verdict = true;
    // Point tuple for RANDOM_EVAL, offending exponent vector for
    // FULL_EXPANSION; populated with both side values whenever verdict is
    // false.
    std::optional<std::vector<BigRational>> counterexample;
    std::string counterexample_detail;
};

// Checks one of the symmetric-function identities.
//   EL_EXP:    sum_{i<=j} mu_{j-i} e_i e_j = e_n * sum_k gamma_k e_{n-k}(z + 1/z)
//   PRODFORM:  e_i e_j = sum_r C(i-r+j-r, i-r) sigma_{i+j}^r   for all i <= j <= n
//   PRODFORM2: e_i e_{i+m} = sum_j C(2j+m, j) sigma_{m+2i}^{i-j} for all valid i, m
//   BEAUTY:    sum_k (e_k^2 - e_{k-1} e_{k+1}) = e_n * sum_k Cat_k e_{n-2k}(z + 1/z)
// RANDOM_EVAL draws `trials` tuples of nonzero exact rationals from the seed
// and demands exact equality of both sides at each. FULL_EXPANSION compares
// sparse monomial maps and is limited to n <= 6 for EL_EXP/BEAUTY (subset
// expansions) and n <= 8 for PRODFORM/PRODFORM2. JACOBI ignores mu/mode and
// runs the exact univariate comparison.
IdentityReport verify_identity(IdentityKind which, const WeightSeq& mu, unsigned n,
                               IdentityMode mode, unsigned trials, std::uint64_t seed);

// Univariate coefficient identity
//   sum_k Cat_k C(n, 2k) z^k (1+z)^{n-2k} = sum_k (1/(n+1)) C(n+1, k) C(n+1, k+1) z^k
// expanded exactly on both sides.
IdentityReport jacobi_identity_check(unsigned n);

std::string identity_report_to_json(const IdentityReport& report);

// Circular regions supported by the diagonalization witness search.
struct Region {
    enum class Kind { RIGHT_HALF_PLANE, DISK };
    Kind kind = Kind::RIGHT_HALF_PLANE;
    std::complex<double> center{0.0, 0.0};  // DISK only
    double radius = 0.0;                    // DISK only

    static Region right_half_plane() { return Region{}; }
    static Region disk(std::complex<double> c, double r) { return Region{Kind::DISK, c, r}; }
    bool contains(std::complex<double> z, double slack) const;
};

// For a symmetric multi-affine f = sum_k c_k e_k (c has up to n+1 entries)
// and points inside the region, finds a diagonal point zeta in the region
// with f(zeta,...,zeta) = f(pts): f(pts) is evaluated exactly, the univariate
// equation sum_k c_k C(n,k) zeta^k = f(pts) is solved numerically, and any
// solution inside the region (within slack) is returned. nullopt signals a
// numeric failure; when the preconditions hold a witness must exist. Throws
// std::invalid_argument when a point lies outside the region beyond slack.
std::optional<std::complex<double>> gws_witness(const std::vector<BigRational>& c,
                                                const std::vector<GaussianRational>& pts,
                                                const Region& region, double slack = 1e-9);

}  // namespace zerogeom
