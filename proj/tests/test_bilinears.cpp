#include <gtest/gtest.h>

#include "oracles.hpp"
#include "spinorlab/bilinears.hpp"
#include "spinorlab/sampling.hpp"

using namespace spinorlab;

namespace {
void expect_matches_oracle(const Spinor& psi) {
    const bool weyl = psi.rep == Representation::Weyl;
    const Bilinears b = bilinears(psi);
    const oracle::Bil o = oracle::bilinears(psi.c, weyl);
    const double tol = 1e-13 * (1 + b.scale());
    EXPECT_NEAR(b.sigma, o.sigma, tol);
    EXPECT_NEAR(b.omega, o.omega, tol);
    for (int m = 0; m < 4; ++m) {
        EXPECT_NEAR(b.J[m], o.J[m], tol);
        EXPECT_NEAR(b.K[m], o.K[m], tol);
        for (int n = 0; n < 4; ++n) EXPECT_NEAR(b.S[m][n], o.S[m][n], tol);
    }
}
}  // namespace

TEST(Bilinears, MatchExplicitSums) {
    for (std::uint64_t k = 0; k < 50; ++k) {
        auto rng = sample_rng(3, k);
        const auto v = oracle::random_spinor(rng);
        expect_matches_oracle({v, Representation::Dirac});
        expect_matches_oracle({v, Representation::Weyl});
    }
}

TEST(Bilinears, InvariantUnderRepresentationChange) {
    for (std::uint64_t k = 0; k < 50; ++k) {
        auto rng = sample_rng(4, k);
        const Spinor w{oracle::random_spinor(rng), Representation::Weyl};
        const Bilinears a = bilinears(w), b = bilinears(to_representation(w, Representation::Dirac));
        const double tol = 1e-13 * (1 + a.scale());
        EXPECT_NEAR(a.sigma, b.sigma, tol);
        EXPECT_NEAR(a.omega, b.omega, tol);
        for (int m = 0; m < 4; ++m) {
            EXPECT_NEAR(a.J[m], b.J[m], tol);
            EXPECT_NEAR(a.K[m], b.K[m], tol);
            for (int n = 0; n < 4; ++n) EXPECT_NEAR(a.S[m][n], b.S[m][n], tol);
        }
    }
}

TEST(Bilinears, WeylBlockFormula) {
    // sigma + i omega = 2 top^dag bot in weyl components
    auto rng = sample_rng(5, 0);
    const auto v = oracle::random_spinor(rng);
    const Bilinears b = bilinears({v, Representation::Weyl});
    const cplx z = 2.0 * v.head<2>().dot(v.tail<2>());
    EXPECT_NEAR(b.sigma, z.real(), 1e-13);
    EXPECT_NEAR(b.omega, z.imag(), 1e-13);
}

TEST(Bilinears, CurrentIsFutureTimelikeOrNull) {
    for (std::uint64_t k = 0; k < 50; ++k) {
        auto rng = sample_rng(6, k);
        const Bilinears b = bilinears({oracle::random_spinor(rng), Representation::Dirac});
        EXPECT_GT(b.J[0], 0.0);
        EXPECT_GE(minkowski_dot(b.J_up(), b.J_up()), -1e-12);
    }
}

TEST(Bilinears, DiracRestSpinor) {
    // (1,0,0,0) in the dirac rep: sigma = 1, J = (1,0,0,0), omega = 0
    const Bilinears b = bilinears(Spinor{1.0, 0.0, 0.0, 0.0, Representation::Dirac});
    EXPECT_DOUBLE_EQ(b.sigma, 1.0);
    EXPECT_DOUBLE_EQ(b.omega, 0.0);
    EXPECT_DOUBLE_EQ(b.J[0], 1.0);
    EXPECT_DOUBLE_EQ(b.J[3], 0.0);
}

TEST(Bilinears, ZeroSpinor) {
    const Bilinears b = bilinears(Spinor{Vector4c::Zero(), Representation::Weyl});
    EXPECT_EQ(b.scale(), 0.0);
}

TEST(Bilinears, STensorAntisymmetric) {
    auto rng = sample_rng(7, 0);
    const Bilinears b = bilinears({oracle::random_spinor(rng), Representation::Weyl});
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) EXPECT_DOUBLE_EQ(b.S[m][n], -b.S[n][m]);
}

TEST(Bilinears, ScalesQuadratically) {
    auto rng = sample_rng(8, 0);
    const auto v = oracle::random_spinor(rng);
    const Bilinears a = bilinears({v, Representation::Dirac});
    const Bilinears b = bilinears({cplx(0, 3) * v, Representation::Dirac});
    EXPECT_NEAR(b.sigma, 9 * a.sigma, 1e-12);
    EXPECT_NEAR(b.J[2], 9 * a.J[2], 1e-12);
}
