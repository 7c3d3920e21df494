#include <gtest/gtest.h>

#include "spinorlab/classifier.hpp"
#include "spinorlab/elko.hpp"
#include "spinorlab/sampling.hpp"

using namespace spinorlab;

namespace {
const std::array<ElkoKind, 2> kinds{ElkoKind::S, ElkoKind::A};
const std::array<Helicity, 2> hels{Helicity::Plus, Helicity::Minus};
}  // namespace

TEST(Elko, ConjugationEigenvalues) {
    for (auto k : kinds)
        for (auto h : hels) {
            const Spinor l = elko(k, h, 1.3, {0.2, -0.4, 0.9});
            const auto mu = conjugation_eigenvalue(l);
            ASSERT_TRUE(mu.has_value());
            EXPECT_LT(std::abs(*mu - (k == ElkoKind::S ? 1.0 : -1.0)), 1e-12);
        }
}

TEST(Elko, AreFlagpoles) {
    for (std::uint64_t i = 0; i < 50; ++i) {
        auto rng = sample_rng(41, i);
        Sampler s{rng};
        const double m = 0.1 + std::abs(s.normal());
        const Vec3 p = s.real3(2.0);
        for (auto k : kinds)
            for (auto h : hels) EXPECT_EQ(classify(elko(k, h, m, p)).id(), 5);
    }
}

TEST(Elko, DiracOperatorMixesHelicities) {
    for (std::uint64_t i = 0; i < 50; ++i) {
        auto rng = sample_rng(42, i);
        Sampler s{rng};
        const double m = 0.1 + std::abs(s.normal());
        const Vec3 p = s.real3(2.0);
        EXPECT_LT(elko_dirac_action(m, p).worst(), 1e-11 * (1 + on_shell_energy(m, p)));
    }
}

TEST(Elko, BoostIsScalarAlongMomentum) {
    const double m = 0.8;
    const Vec3 p{0.3, 1.1, -0.5};
    for (auto k : kinds)
        for (auto h : hels) {
            const Spinor rest = elko_rest(k, h, m, direction_angles(p));
            const Spinor moving = elko(k, h, m, p);
            const double f = elko_closed_form_factor(k, h, m, norm3(p));
            EXPECT_LT((moving.c - f * rest.c).cwiseAbs().maxCoeff(), 1e-13);
        }
}

TEST(Elko, HelicityFlip) {
    for (auto h : hels) EXPECT_LT(helicity_flip_residual(h, 1.0, {0.7, -2.1}), 1e-14);
}

TEST(Elko, RestFrameHasNoDirectionSingularity) {
    const Spinor l = elko(ElkoKind::S, Helicity::Plus, 1.0, {0, 0, 0});
    EXPECT_TRUE(l.c.allFinite());
    EXPECT_EQ(classify(l).id(), 5);
}

TEST(Elko, RejectsNonPositiveMass) {
    EXPECT_THROW(elko(ElkoKind::A, Helicity::Minus, 0.0, {1, 0, 0}), std::invalid_argument);
}

TEST(Elko, DualHelicityNormIsZero) {
    // psibar psi vanishes for a flagpole
    const Spinor l = elko(ElkoKind::A, Helicity::Plus, 2.0, {0, 0, 1});
    EXPECT_LT(std::abs(sandwich(l, identity4(), l)), 1e-14);
}
