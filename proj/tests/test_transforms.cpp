#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracles.hpp"
#include "zerogeom/certify.hpp"
#include "zerogeom/rng.hpp"
#include "zerogeom/transforms.hpp"

using namespace zerogeom;
using testsupport::P;
using testsupport::Q;

namespace {

Poly random_poly(SplitMix64& rng, unsigned max_deg) {
    std::vector<BigRational> c;
    const unsigned d = 1 + static_cast<unsigned>(rng.next_below(max_deg));
    for (unsigned k = 0; k <= d; ++k) c.push_back(random_nonzero_rational(rng));
    return Poly{std::move(c)};
}

}  // namespace

TEST_CASE("quadratic map on pinned rows") {
    CHECK(op_L(P("1 2 1")) == P("1 3 1"));
    CHECK(op_L(P("1 1 1")) == P("1 0 1"));
    CHECK(op_L(P("3")) == P("9"));
    CHECK(op_L(Poly()).is_zero());
    CHECK(op_L(P("0 1")) == P("0 1"));  // z: only the middle survives
}

TEST_CASE("weighted square maps on pinned rows") {
    // U with alpha = (1,-1) is exactly the quadratic map.
    SplitMix64 rng(11);
    const WeightSeq fold = WeightSeq::from_dense({Q("1"), Q("-1")});
    for (int t = 0; t < 20; ++t) {
        const Poly p = random_poly(rng, 7);
        CHECK(op_U_alpha(p, fold) == op_L(p));
    }

    // Hand-expanded small case: alpha = (2, 3) on 1 + 2z + 3z^2.
    // b_0 = 2*1*1 + 3*(a_{-1}a_1) -> 2;  b_1 = 2*4 + 3*1*3 = 17;  b_2 = 2*9 = 18.
    CHECK(op_U_alpha(P("1 2 3"), WeightSeq::from_dense({Q("2"), Q("3")})) == P("2 17 18"));

    // V shifts the second index by one:
    // alpha = (1): b_k = a_k a_{k+1} -> (2, 6); alpha = (0,1): b_1 = a_0 a_3 = 0, b_0 = 0.
    CHECK(op_V_alpha(P("1 2 3"), WeightSeq::from_dense({Q("1")})) == P("2 6"));
    CHECK(op_V_alpha(P("1 2 3"), WeightSeq::from_dense({Q("0"), Q("1")})).is_zero());
    CHECK(op_V_alpha(P("1 2 3 4"), WeightSeq::from_dense({Q("0"), Q("1")})) == P("0 4"));
}

TEST_CASE("three-term product map on pinned rows") {
    // b_m = sum over i <= j, i + j = m of mu_{j-i} a_i a_j.
    const WeightSeq mu = WeightSeq::from_entries({{0u, Q("1")}, {1u, Q("3")}});
    CHECK(op_T_mu(P("1 2"), mu) == P("1 6 4"));
    CHECK(op_T_mu(P("1 1 1"), mu) == P("1 3 1 3 1"));
    CHECK(op_T_mu(Poly(), mu).is_zero());

    // With support {0} it squares coefficientwise on the diagonal only when
    // the cross terms vanish; compare against the direct double sum.
    SplitMix64 rng(17);
    for (int t = 0; t < 10; ++t) {
        const Poly p = random_poly(rng, 6);
        const WeightSeq w = WeightSeq::from_dense(
            {random_nonzero_rational(rng), random_nonzero_rational(rng)});
        const Poly got = op_T_mu(p, w);
        const auto& a = p.coeffs();
        std::vector<BigRational> want(2 * a.size() - 1, BigRational(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = i; j < a.size(); ++j)
                want[i + j] += w.at(static_cast<unsigned>(j - i)) * a[i] * a[j];
        CHECK(got == Poly{std::move(want)});
    }
}

TEST_CASE("even and odd parts of the product map are the square maps") {
    SplitMix64 rng(23);
    for (int t = 0; t < 15; ++t) {
        const Poly p = random_poly(rng, 7);
        std::vector<WeightSeq::Entry> entries;
        for (unsigned d = 0; d <= 4; ++d)
            if (rng.next_below(2) == 0) entries.emplace_back(d, random_nonzero_rational(rng));
        const WeightSeq mu = WeightSeq::from_entries(std::move(entries));

        std::vector<BigRational> even, odd;
        for (unsigned d = 0; d <= 4; ++d) {
            if (2 * d <= 4) even.push_back(mu.at(2 * d));
            if (2 * d + 1 <= 4) odd.push_back(mu.at(2 * d + 1));
        }
        const auto [te, to] = even_odd_split(op_T_mu(p, mu));
        CHECK(te == op_U_alpha(p, WeightSeq::from_dense(even)));
        CHECK(to == op_V_alpha(p, WeightSeq::from_dense(odd)));
    }
}

TEST_CASE("difference-of-products maps on pinned rows") {
    CHECK(op_S_r(binomial_poly(4), 2) == P("1 16 35 16 1"));
    CHECK(op_S_r_prime(binomial_poly(3), 2) == P("3 9 3"));
    CHECK(op_S_r(binomial_poly(5), 0).is_zero());
    CHECK(op_S_r_prime(binomial_poly(5), 0).is_zero());
    CHECK(op_S_r(P("1 1"), 1) == P("1 1"));

    // r = 1 reproduces the quadratic map shifted by the product map split.
    SplitMix64 rng(29);
    const WeightSeq a1 = WeightSeq::from_dense({Q("1"), Q("-1")});
    for (int t = 0; t < 10; ++t) {
        const Poly p = random_poly(rng, 6);
        CHECK(op_S_r(p, 1) == op_U_alpha(p, a1));
        CHECK(op_S_r_prime(p, 1) == op_V_alpha(p, a1));
    }
}

TEST_CASE("gamma weights from mu weights: pinned Catalan run") {
    const WeightSeq gamma = gamma_from_mu(WeightSeq::from_dense({Q("1"), Q("0"), Q("-1")}), 16);
    const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (unsigned k = 0; k <= 16; ++k) {
        if (k % 2 == 0)
            CHECK(gamma.at(k) == catalan[k / 2]);
        else
            CHECK(gamma.at(k) == 0);
    }
    // All-ones mu gives partial rows of binomial sums: gamma_k = sum_j C(k,j).
    const WeightSeq ones = gamma_from_mu(WeightSeq::from_dense(
        std::vector<BigRational>(9, BigRational(1))), 8);
    BigRational g4(0);
    for (unsigned j = 0; 2 * j <= 4; ++j) g4 += binomial(4, j);
    CHECK(ones.at(4) == g4);
}

TEST_CASE("mu and gamma conversions invert each other") {
    SplitMix64 rng(37);
    for (int t = 0; t < 30; ++t) {
        std::vector<WeightSeq::Entry> entries;
        for (unsigned k = 0; k <= 20; ++k)
            if (rng.next_below(3) == 0) entries.emplace_back(k, random_nonzero_rational(rng));
        const WeightSeq mu = WeightSeq::from_entries(std::move(entries));
        const WeightSeq gamma = gamma_from_mu(mu, 20);
        const WeightSeq back = mu_from_gamma(gamma, 20);
        for (unsigned k = 0; k <= 20; ++k) CHECK(back.at(k) == mu.at(k));

        const WeightSeq gamma2 = gamma_from_mu(back, 20);
        for (unsigned k = 0; k <= 20; ++k) CHECK(gamma2.at(k) == gamma.at(k));
    }
}

TEST_CASE("diagonal-restriction polynomial on pinned weights") {
    // mu supported at 0 with value 1: p_n collects the central Catalan-type
    // convolution; spot-check the smallest cases against the direct sum.
    const WeightSeq mu = WeightSeq::from_dense({Q("1"), Q("0"), Q("-1")});
    const Poly p0 = p_mu_n(mu, 0);
    CHECK(p0.degree() <= 0);

    SplitMix64 rng(41);
    for (int t = 0; t < 25; ++t) {
        std::vector<WeightSeq::Entry> entries;
        for (unsigned k = 0; k <= 4; ++k)
            if (rng.next_below(2) == 0) entries.emplace_back(k, random_nonzero_rational(rng));
        const WeightSeq w = WeightSeq::from_entries(std::move(entries));
        const unsigned n = 1 + static_cast<unsigned>(rng.next_below(8));

        // T on the binomial row equals z^n P(z + 1/z) cleared of denominators:
        // sum_j c_j z^{n-j} (z^2+1)^j.
        const Poly lhs = op_T_mu(binomial_poly(n), w);
        const Poly pn = p_mu_n(w, n);
        Poly rhs;
        for (unsigned j = 0; j <= n; ++j) {
            const BigRational cj = pn.coeff(j);
            if (cj == 0) continue;
            rhs = rhs + (Poly::monomial(n - j, cj) * poly_pow(P("1 0 1"), j));
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("condition polynomials on pinned weights") {
    // alpha supported at 0 with weight 1, n = 2:
    // c_k = (1/(k!k!)) / (2-2k)! -> (1/2, 1).
    CHECK(algU_condition_poly(WeightSeq::from_dense({Q("1")}), 2) == P("1/2 1"));
    // Same alpha, n = 3, odd side: c_k = (1/((k+1)! k!)) / (3-2k-1)!
    CHECK(algV_condition_poly(WeightSeq::from_dense({Q("1")}), 3) == P("1/2 1/2"));
    CHECK(algV_condition_poly(WeightSeq::from_dense({Q("1")}), 0).is_zero());

    // Degree counts: floor(n/2) for the even side, floor((n-1)/2) for the odd.
    const WeightSeq alpha = WeightSeq::from_dense({Q("1"), Q("-1")});
    CHECK(algU_condition_poly(alpha, 7).degree() <= 3);
    CHECK(algV_condition_poly(alpha, 7).degree() <= 3);
}

TEST_CASE("row polynomial with binomial weights") {
    const WeightSeq gamma = gamma_from_mu(WeightSeq::from_dense({Q("1"), Q("0"), Q("-1")}), 8);
    const Poly g = jensen_poly(gamma, 4);
    for (unsigned k = 0; k <= 4; ++k) CHECK(g.coeff(k) == binomial(4, k) * gamma.at(k));
    CHECK(jensen_poly(WeightSeq::from_dense(std::vector<BigRational>(6, BigRational(1))), 5) ==
          binomial_poly(5));
}

TEST_CASE("series coefficients of the difference maps, closed forms") {
    for (unsigned k = 0; k <= 20; ++k) {
        CHECK(sr_exp_coeff(1, k, false) == BigRational(1) / (factorial(k) * factorial(k + 1)));
        CHECK(sr_exp_coeff(2, k, false) ==
              BigRational(2 + 4 * static_cast<long>(k)) / (factorial(k) * factorial(k + 2)));
        const BigRational kk(static_cast<long>(k));
        CHECK(sr_exp_coeff(3, k, true) ==
              BigRational(12) * (kk * kk + 2 * kk + 2) / (factorial(k) * factorial(k + 4)));
    }
    // r = 0 wipes the series.
    CHECK(sr_exp_coeff(0, 5, false) == 0);
}

TEST_CASE("series coefficients match truncated exponential images") {
    // Apply the difference map to the truncation of sum z^k / k! and compare
    // the low-order coefficients with the closed-form series.
    const unsigned N = 14;
    std::vector<BigRational> trunc;
    for (unsigned k = 0; k <= N; ++k) trunc.push_back(BigRational(1) / factorial(k));
    const Poly e{std::move(trunc)};
    for (unsigned r = 1; r <= 3; ++r) {
        const Poly u = op_S_r(e, r);
        const Poly v = op_S_r_prime(e, r);
        // Entries are reliable while both source indices stay inside the
        // truncation window: k + r <= N.
        for (unsigned k = 0; k + r <= N; ++k) {
            CHECK(u.coeff(k) == sr_exp_coeff(r, k, false));
            if (k + r + 1 <= N) CHECK(v.coeff(k) == sr_exp_coeff(r, k, true));
        }
    }
}

TEST_CASE("successive-difference shift drops one entry") {
    CHECK(turan_shift(P("1 2 3")) == P("1 9"));
    CHECK(turan_shift(P("1 1 1 1")) == P("0 0 1"));
    CHECK(turan_shift(P("2 1")) == P("1"));
    CHECK(turan_shift(P("5")).is_zero());
    CHECK(turan_shift(Poly()).is_zero());
}

TEST_CASE("transform dispatch matches the direct calls") {
    SplitMix64 rng(53);
    const WeightSeq alpha = WeightSeq::from_dense({Q("1"), Q("-1/2")});
    for (int t = 0; t < 10; ++t) {
        const Poly p = random_poly(rng, 6);
        TransformSpec spec;
        spec.kind = TransformSpec::Kind::L;
        CHECK(apply_transform(spec, p) == op_L(p));
        spec.kind = TransformSpec::Kind::U_ALPHA;
        spec.weights = alpha;
        CHECK(apply_transform(spec, p) == op_U_alpha(p, alpha));
        spec.kind = TransformSpec::Kind::V_ALPHA;
        CHECK(apply_transform(spec, p) == op_V_alpha(p, alpha));
        spec.kind = TransformSpec::Kind::T_MU;
        CHECK(apply_transform(spec, p) == op_T_mu(p, alpha));
        spec.kind = TransformSpec::Kind::S_R;
        spec.r = 2;
        CHECK(apply_transform(spec, p) == op_S_r(p, 2));
        spec.kind = TransformSpec::Kind::S_R_PRIME;
        CHECK(apply_transform(spec, p) == op_S_r_prime(p, 2));
        spec.kind = TransformSpec::Kind::TURAN_SHIFT;
        CHECK(apply_transform(spec, p) == turan_shift(p));
    }
    CHECK(transform_kind_name(TransformSpec::Kind::L) == "L");
    CHECK(transform_kind_name(TransformSpec::Kind::TURAN_SHIFT) == "turan");
}

TEST_CASE("iteration stops at the first failing row") {
    TransformSpec spec;
    spec.kind = TransformSpec::Kind::L;

    const IterationReport bad = iterate_transform(spec, P("1 1 1"), 2, IterCheck::NONNEG);
    CHECK(bad.depth_requested == 2);
    CHECK(bad.depth_achieved == 1);
    REQUIRE(bad.first_negative.has_value());
    CHECK(bad.first_negative->iteration == 2);
    CHECK(bad.first_negative->index == 1);
    CHECK(bad.first_negative->value == -1);
    REQUIRE(bad.failing_iterate.has_value());
    CHECK(*bad.failing_iterate == P("1 -1 1"));

    const IterationReport good = iterate_transform(spec, P("1 2 1"), 5, IterCheck::IN_P_PLUS);
    CHECK(good.depth_achieved == 5);
    CHECK_FALSE(good.first_negative.has_value());

    const IterationReport kept = iterate_transform(spec, P("1 2 1"), 3, IterCheck::NONNEG, true);
    REQUIRE(kept.sequences.size() == 3);
    CHECK(kept.sequences[0] == P("1 3 1"));
    CHECK(kept.sequences[1] == op_L(P("1 3 1")));

    CHECK_THROWS_AS(iterate_transform(spec, P("1 1"), 0, IterCheck::NONNEG),
                    std::invalid_argument);
}

TEST_CASE("iteration reports serialize stably") {
    TransformSpec spec;
    spec.kind = TransformSpec::Kind::L;
    const IterationReport rep = iterate_transform(spec, P("1 1 1"), 2, IterCheck::NONNEG);
    CHECK(iteration_report_to_json(rep) ==
          "{\"depth_requested\":2,\"depth_achieved\":1,"
          "\"first_negative\":{\"iteration\":2,\"kind\":\"negative_coefficient\","
          "\"index\":1,\"value\":\"-1\",\"reason\":\"coefficient below zero\"},"
          "\"failing_iterate\":\"1 -1 1\"}");
    const IterationReport ok = iterate_transform(spec, P("1 2 1"), 1, IterCheck::NONNEG);
    CHECK(iteration_report_to_json(ok) ==
          "{\"depth_requested\":1,\"depth_achieved\":1,\"first_negative\":null}");
}

TEST_CASE("images of negative-zero products stay in the cone") {
    SplitMix64 rng(61);
    for (int t = 0; t < 20; ++t) {
        Poly p = Poly::constant(BigRational(1));
        const unsigned n = 1 + static_cast<unsigned>(rng.next_below(8));
        for (unsigned i = 0; i < n; ++i)
            p = p * Poly{{random_positive_rational(rng, 10, 10), BigRational(1)}};
        const Poly image = op_L(p);
        const auto cert = certify_in_p_plus(image, n);
        CHECK(cert.verdict == Verdict::IN_P_PLUS);
    }
}
