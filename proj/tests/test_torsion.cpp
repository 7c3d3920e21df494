#include <gtest/gtest.h>

#include "spinorlab/sampling.hpp"
#include "spinorlab/torsion.hpp"

using namespace spinorlab;

namespace {
Torsion random_torsion(Sampler& s) {
    Tensor3 t;
    for (int l = 0; l < 4; ++l)
        for (int m = 0; m < 4; ++m)
            for (int n = m + 1; n < 4; ++n) {
                t(l, m, n) = s.normal();
                t(l, n, m) = -t(l, m, n);
            }
    return Torsion::from_mixed(t);
}

Dim45Couplings random_couplings(Sampler& s) {
    Dim45Couplings k;
    k.a1 = s.normal();
    k.a2 = s.normal();
    k.a3 = s.normal();
    k.a4 = s.normal();
    for (std::size_t i = 1; i < 10; ++i) k.ahat[i] = s.normal();
    return k;
}
}  // namespace

TEST(Torsion, RejectsNonAntisymmetric) {
    Tensor3 t;
    t(0, 1, 2) = 1.0;
    EXPECT_THROW(Torsion::from_mixed(t), std::invalid_argument);
}

TEST(Torsion, DecompositionReassembles) {
    for (std::uint64_t i = 0; i < 20; ++i) {
        auto rng = sample_rng(71, i);
        Sampler s{rng};
        const Torsion T = random_torsion(s);
        const TorsionParts P = derived_torsion_parts(T);
        for (int l = 0; l < 4; ++l) {
            double tr = 0;  // M^mu_{mu nu} traceless
            for (int m = 0; m < 4; ++m) tr += eta(m) * P.M(m, m, l);
            EXPECT_NEAR(tr, 0.0, 1e-13);
        }
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c) {
                    const double tot = P.M(a, b, c) + P.M(b, c, a) + P.M(c, a, b);
                    EXPECT_NEAR(tot, 0.0, 1e-13);
                }
    }
}

TEST(Torsion, TraceFromMixedComponents) {
    Tensor3 t;
    t(1, 1, 0) = 2.0;
    t(1, 0, 1) = -2.0;
    const TorsionParts P = derived_torsion_parts(Torsion::from_mixed(t));
    // T_0 = T^1_{10}
    EXPECT_DOUBLE_EQ(P.trace[0], 2.0);
    EXPECT_DOUBLE_EQ(P.axial[0], 0.0);
}

TEST(Torsion, FlagpoleSeesOnlyVectorCouplings) {
    for (std::uint64_t i = 0; i < 50; ++i) {
        auto rng = sample_rng(72, i);
        Sampler s{rng};
        const Torsion T = random_torsion(s);
        const Bilinears B = bilinears(s.of_class(5));
        const Dim45Couplings k = random_couplings(s);
        const CouplingReport r = lagrangian_dim45(T, B, s.real4(), k);
        ASSERT_EQ(r.cls.id(), 5);
        EXPECT_NEAR(dim4_sum(r), flagpole_reduction(T, B, k.a1, k.a3), 1e-14 * r.scale);
        EXPECT_LT(r.max_abs_for(Contracts::K), 1e-14 * r.scale);
        EXPECT_LT(r.max_abs_for(Contracts::Sigma), 1e-14 * r.scale);
        EXPECT_LT(r.max_abs_for(Contracts::Omega), 1e-14 * r.scale);
    }
}

TEST(Torsion, VanishingFlagsMatchValues) {
    for (int c = 1; c <= 6; ++c) {
        auto rng = sample_rng(73, static_cast<std::uint64_t>(c));
        Sampler s{rng};
        const Torsion T = random_torsion(s);
        const CouplingReport r = lagrangian_dim45(T, bilinears(s.of_class(c)), s.real4(), random_couplings(s));
        for (const auto& t : r.terms)
            if (t.vanishes_by_class) EXPECT_LT(std::abs(t.value), 1e-13 * r.scale) << t.name << " class " << c;
    }
}

TEST(Torsion, DipoleDropsTensorTerms) {
    auto rng = sample_rng(74, 0);
    Sampler s{rng};
    const CouplingReport r = lagrangian_dim45(random_torsion(s), bilinears(s.of_class(6)), s.real4(), random_couplings(s));
    EXPECT_LT(r.max_abs_for(Contracts::S), 1e-13 * r.scale);
    EXPECT_GT(r.max_abs_for(Contracts::K), 1e-6 * r.scale);
}

TEST(Torsion, MinimalCouplingIsAxial) {
    const auto k = Dim45Couplings::minimal();
    EXPECT_DOUBLE_EQ(k.a4, 0.75);
    EXPECT_DOUBLE_EQ(k.a1, 0.0);
}

TEST(Torsion, LorentzInvariantCouplings) {
    auto rng = sample_rng(75, 0);
    Sampler s{rng};
    const Torsion T = random_torsion(s);
    const Bilinears B = bilinears(s.of_class(5));
    const CouplingReport r = lagrangian_LI(T, B, {1.0, 0.5, -2.0, 0.3});
    EXPECT_EQ(r.terms.size(), 4u);
    EXPECT_LT(r.max_abs_for(Contracts::K), 1e-13 * r.scale);
}

TEST(Torsion, LVCouplingsFromH) {
    Mat4r h{};
    h[0][1] = h[1][0] = 0.2;
    h[2][2] = -0.1;
    const auto k = LVTorsionCouplings::from_h(h);
    EXPECT_EQ(k.k_J.v, k.k5_K.v);
    auto rng = sample_rng(76, 0);
    Sampler s{rng};
    const CouplingReport r = lagrangian_LV(random_torsion(s), bilinears(s.of_class(4)), k);
    EXPECT_EQ(r.terms.size(), 5u);
}

TEST(Torsion, EffectiveCoefficientsReduce) {
    Mat4r c{}, h{}, chi{};
    c[1][2] = 0.5;
    h[1][2] = 0.4;
    chi[1][2] = 0.1;
    const EffectiveCoeffs e = effective_coeffs(c, h, chi, {0.1, 0.2, 0.3, 0.4}, Torsion{});
    EXPECT_NEAR(e.c_eff[1][2], 0.5 + 0.1 - 0.2, 1e-15);
    EXPECT_NEAR(e.b_eff[3], 0.4, 1e-15);
}
