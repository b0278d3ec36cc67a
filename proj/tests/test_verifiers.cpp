#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "pinch/batch.hpp"
#include "pinch/random_tensors.hpp"
#include "pinch/sharpness.hpp"
#include "pinch/verifiers.hpp"

using namespace pinch;

TEST(Okumura, EqualityWitness) {
    const VerificationReport r = check_okumura(SymMatrix::diag({1, 1, 1, -3}));
    EXPECT_TRUE(r.pass);
    EXPECT_NEAR(r.ratio, 1.0, 1e-12);
    EXPECT_NEAR(r.lhs, 24.0, 1e-12);
    EXPECT_NEAR(r.rhs, 24.0, 1e-10);
}

TEST(Okumura, OddCubicVanishes) {
    const VerificationReport r = check_okumura(SymMatrix::diag({1, -1, 0, 0}));
    EXPECT_TRUE(r.pass);
    EXPECT_DOUBLE_EQ(r.ratio, 0.0);
}

TEST(Okumura, RandomSweepAllDims) {
    for (int n = 4; n <= 10; ++n) {
        TensorRng rng(100 + n);
        for (int s = 0; s < 500; ++s) {
            const VerificationReport r = check_okumura(rng.traceless_sym(n));
            ASSERT_TRUE(r.pass) << "n=" << n << " ratio=" << r.ratio;
        }
    }
}

TEST(Okumura, RejectsNonTraceFree) {
    EXPECT_THROW(check_okumura(SymMatrix::identity(4)), std::invalid_argument);
}

TEST(Okumura, PrintedVariantFailsAtWitness) {
    // The printed radical placement is violated by the equality witness of
    // the proof, which is what forces the corrected constant.
    const VerificationReport r = check_okumura_printed(SymMatrix::diag({1, 1, 1, -3}));
    EXPECT_FALSE(r.pass);
    EXPECT_GT(r.ratio, 1.0 + 1e-6);
}

TEST(Huisken, Zeros) {
    TensorRng rng(7);
    const CurvTensor w = rng.weyl_like(5);
    EXPECT_DOUBLE_EQ(check_huisken(CurvTensor(5), rng.traceless_sym(5)).ratio, 0.0);
    EXPECT_DOUBLE_EQ(check_huisken(w, SymMatrix(5)).ratio, 0.0);
}

TEST(Huisken, RandomSweep) {
    for (int n = 4; n <= 8; ++n) {
        TensorRng rng(200 + n);
        for (int s = 0; s < 100; ++s) {
            const VerificationReport r = check_huisken(rng.weyl_like(n), rng.traceless_sym(n));
            ASSERT_TRUE(r.pass) << "n=" << n << " ratio=" << r.ratio;
        }
    }
}

TEST(PropAlg, WZeroReducesToOkumuraEquality) {
    const VerificationReport r = check_prop_alg(CurvTensor(4), SymMatrix::diag({1, 1, 1, -3}));
    EXPECT_TRUE(r.pass);
    EXPECT_NEAR(r.ratio, 1.0, 1e-11);
}

TEST(PropAlg, ZeroT) {
    TensorRng rng(3);
    const VerificationReport r = check_prop_alg(rng.weyl_like(5), SymMatrix(5));
    EXPECT_TRUE(r.pass);
    EXPECT_DOUBLE_EQ(r.lhs, 0.0);
    EXPECT_DOUBLE_EQ(r.rhs, 0.0);
}

TEST(PropAlg, RandomSweepWithAlg1Identity) {
    for (int n = 4; n <= 8; ++n) {
        TensorRng rng(300 + n);
        for (int s = 0; s < 100; ++s) {
            const CurvTensor w = rng.weyl_like(n);
            const SymMatrix t = rng.traceless_sym(n);
            ASSERT_TRUE(check_prop_alg(w, t).pass) << "n=" << n;
            ASSERT_TRUE(check_alg1(w, t).pass) << "n=" << n;
        }
    }
}

TEST(Tachibana, ZeroTensor) {
    const VerificationReport r = check_tachibana(CurvTensor(5));
    EXPECT_TRUE(r.pass);
    EXPECT_DOUBLE_EQ(r.ratio, 0.0);
}

TEST(Tachibana, FiveDimLhsCollapsesToCubic2) {
    TensorRng rng(5);
    const CurvTensor w = rng.weyl_like(5);
    const VerificationReport r = check_tachibana(w);
    // In dimension 5 the 2:1 identity collapses the lhs to (3/2) W3_2.
    EXPECT_NEAR(r.lhs, 1.5 * weyl_cubic_2(w), 1e-10 * std::pow(frob_norm_sq(w), 1.5));
    EXPECT_TRUE(r.pass);
    EXPECT_LE(r.ratio, 1.0 + 1e-10);
}

TEST(Tachibana, SharpAtFourDimKaehlerWeyl) {
    // The dimension-four constant sqrt(6)/4 is attained: the Weyl tensor of
    // the standard Kaehler-Einstein structure on a 4d frame (one self-dual
    // block with spectrum pattern (2,-1,-1)) gives ratio exactly 1.
    double jm[4][4] = {};
    jm[0][1] = 1.0;
    jm[1][0] = -1.0;
    jm[2][3] = 1.0;
    jm[3][2] = -1.0;
    const CurvTensor rm = CurvTensor::from_function(4, [&](int i, int j, int k, int l) {
        const double id_part = (i == k ? 1.0 : 0.0) * (j == l ? 1.0 : 0.0) -
                               (i == l ? 1.0 : 0.0) * (j == k ? 1.0 : 0.0);
        const double j_part = jm[i][k] * jm[j][l] - jm[i][l] * jm[j][k] + 2.0 * jm[i][j] * jm[k][l];
        return id_part + j_part;
    });
    const CurvTensor w = weyl_projection(rm);
    const VerificationReport r = check_tachibana(w);
    EXPECT_NEAR(r.ratio, 1.0, 1e-12);
    EXPECT_TRUE(r.pass);
}

TEST(Tachibana, RandomSweepSharpAndCrude) {
    for (int n = 4; n <= 7; ++n) {
        TensorRng rng(400 + n);
        for (int s = 0; s < 100; ++s) {
            const auto [sharp, crude] = check_tachibana_pair(rng.weyl_like(n));
            ASSERT_TRUE(sharp.pass) << "n=" << n << " ratio=" << sharp.ratio;
            ASSERT_TRUE(crude.pass) << "n=" << n;
            ASSERT_LE(std::abs(crude.ratio), std::abs(sharp.ratio) + 1e-15);
        }
    }
}

TEST(EigenBound, ZeroTensor) {
    const VerificationReport r = check_eigen_bound(CurvTensor(4));
    EXPECT_TRUE(r.pass);
    EXPECT_DOUBLE_EQ(r.lhs, 0.0);
}

TEST(EigenBound, RandomSweep) {
    TensorRng rng(11);
    for (int s = 0; s < 50; ++s) {
        const VerificationReport r = check_eigen_bound(rng.weyl_like(6));
        ASSERT_TRUE(r.pass) << "ratio=" << r.ratio;
    }
}

TEST(EigenBound, ScaleInvariantRatio) {
    TensorRng rng(13);
    const CurvTensor w = rng.weyl_like(5);
    const double base = check_eigen_bound(w).ratio;
    for (double c : {0.001, 7.0, 1000.0}) {
        EXPECT_NEAR(check_eigen_bound(c * w).ratio, base, 1e-12 * base);
    }
}

TEST(CombinedNorm, WorkedExample) {
    const VerificationReport r = check_combined_norm(CurvTensor(4), SymMatrix::diag({1, -1, 0, 0}));
    EXPECT_TRUE(r.pass);
    EXPECT_NEAR(r.lhs, 2.0, 1e-12);
    EXPECT_NEAR(r.rhs, 2.0, 1e-12);
}

TEST(CombinedNorm, ZeroT) {
    TensorRng rng(17);
    const CurvTensor w = rng.weyl_like(6);
    const VerificationReport r = check_combined_norm(w, SymMatrix(6));
    EXPECT_TRUE(r.pass);
    EXPECT_NEAR(r.lhs, frob_norm_sq(w), 1e-12 * frob_norm_sq(w));
}

TEST(CombinedNorm, RandomSweep) {
    for (int n = 4; n <= 10; ++n) {
        TensorRng rng(500 + n);
        for (int s = 0; s < 50; ++s)
            ASSERT_TRUE(check_combined_norm(rng.weyl_like(n), rng.traceless_sym(n)).pass)
                << "n=" << n;
    }
}

TEST(Constants, TableValues) {
    EXPECT_DOUBLE_EQ(tachibana_c(4), std::sqrt(6.0) / 4.0);
    EXPECT_DOUBLE_EQ(tachibana_c(5), 1.0);
    EXPECT_DOUBLE_EQ(tachibana_c(6), std::sqrt(70.0) / (2.0 * std::sqrt(3.0)));
    EXPECT_DOUBLE_EQ(tachibana_c(7), 2.5);
    EXPECT_DOUBLE_EQ(tachibana_c(11), 2.5);

    EXPECT_DOUBLE_EQ(einstein_a(4), 5.0 / (9.0 * std::sqrt(6.0)));
    EXPECT_DOUBLE_EQ(einstein_a(5), 3.0 / 32.0);
    EXPECT_DOUBLE_EQ(einstein_a(6), std::sqrt(3.0) / (5.0 * std::sqrt(70.0)));
    EXPECT_DOUBLE_EQ(einstein_a(9), 7.0 / 160.0);
    EXPECT_DOUBLE_EQ(einstein_a(10), 2.0 / 50.0);
}

TEST(Constants, DeriveAMatchesTable) {
    for (int n = 4; n <= 12; ++n)
        EXPECT_LE(std::abs(derive_a(n) - einstein_a(n)), 1e-14 * einstein_a(n)) << "n=" << n;
}

TEST(Constants, PincheinCoefficients) {
    const auto c4 = pinchein_coefficient(4);
    EXPECT_NEAR(c4.coeff, 0.14434, 1e-5);
    EXPECT_TRUE(c4.strictly_below_a);
    EXPECT_NEAR(einstein_a(4), 0.22680, 1e-5);

    const auto c5 = pinchein_coefficient(5);
    EXPECT_NEAR(c5.coeff, 7.0 / (20.0 * std::sqrt(24.0)), 1e-15);
    EXPECT_NEAR(c5.coeff, 0.07144, 1e-5);
    EXPECT_TRUE(c5.strictly_below_a);

    const auto c6 = pinchein_coefficient(6);
    EXPECT_NEAR(c6.coeff, 0.02635, 1e-5);
    EXPECT_TRUE(c6.strictly_below_a);

    // The obstruction: the coefficient goes nonpositive from n = 7 on.
    EXPECT_LE(pinchein_coefficient(7).coeff, 0.0);
}

TEST(Invariance, ScaleInvarianceOfRatios) {
    TensorRng rng(19);
    const CurvTensor w = rng.weyl_like(5);
    const SymMatrix t = rng.traceless_sym(5);
    for (double c : {1e-3, 7.0, 1e3}) {
        EXPECT_NEAR(check_okumura(c * t).ratio, check_okumura(t).ratio,
                    1e-12 * std::max(1.0, check_okumura(t).ratio));
        EXPECT_NEAR(check_huisken(c * w, c * t).ratio, check_huisken(w, t).ratio, 1e-12);
        EXPECT_NEAR(check_prop_alg(c * w, c * t).ratio, check_prop_alg(w, t).ratio, 1e-12);
        EXPECT_NEAR(check_tachibana(c * w).ratio, check_tachibana(w).ratio, 1e-12);
    }
}

TEST(Invariance, RotationInvarianceOfRatios) {
    TensorRng rng(23);
    const CurvTensor w = rng.weyl_like(5);
    const SymMatrix t = rng.traceless_sym(5);
    const Eigen::MatrixXd q = oracles::random_orthogonal(5, 4242);
    const CurvTensor wq = oracles::rotate(w, q);
    const SymMatrix tq = oracles::rotate(t, q);

    EXPECT_NEAR(check_okumura(tq).ratio, check_okumura(t).ratio, 1e-10);
    EXPECT_NEAR(check_huisken(wq, tq).ratio, check_huisken(w, t).ratio, 1e-10);
    EXPECT_NEAR(check_prop_alg(wq, tq).ratio, check_prop_alg(w, t).ratio, 1e-10);
    EXPECT_NEAR(check_tachibana(wq).ratio, check_tachibana(w).ratio, 1e-10);
    EXPECT_NEAR(check_eigen_bound(wq).ratio, check_eigen_bound(w).ratio, 1e-10);
}

TEST(Batch, InequalityBlockSmallRun) {
    const auto results = run_inequality_block(4, 200, 99, 2);
    ASSERT_EQ(results.size(), 6u);
    for (const auto& r : results) {
        EXPECT_EQ(r.violations, 0) << to_string(r.id);
        EXPECT_EQ(r.samples, 200);
        EXPECT_LE(r.max_metric, 1.0 + 1e-10) << to_string(r.id);
    }
}

TEST(Batch, IdentityBlockSmallRun) {
    const auto results = run_identity_block(5, 100, 99, 2, 20);
    bool saw_five_dim = false;
    bool saw_omega = false;
    for (const auto& r : results) {
        EXPECT_EQ(r.violations, 0) << to_string(r.id);
        if (r.id == CheckId::five_dim_identity) {
            saw_five_dim = true;
            EXPECT_LE(r.max_metric, 1e-10);
        }
        if (r.id == CheckId::omega_identity) saw_omega = true;
    }
    EXPECT_TRUE(saw_five_dim);
    EXPECT_TRUE(saw_omega);
}

TEST(Batch, DeterministicAcrossThreadCounts) {
    const auto a = run_inequality_block(4, 100, 7, 1);
    const auto b = run_inequality_block(4, 100, 7, 2);
    ASSERT_EQ(a.size(), b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].max_metric, b[i].max_metric) << to_string(a[i].id);
        EXPECT_EQ(a[i].violations, b[i].violations);
    }
}
