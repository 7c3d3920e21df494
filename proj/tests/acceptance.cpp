// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>

#include "spinorlab/cosmology.hpp"
#include "spinorlab/elko.hpp"
#include "spinorlab/field_redef.hpp"
#include "spinorlab/fierz.hpp"
#include "spinorlab/lv_dirac.hpp"
#include "spinorlab/sampling.hpp"
#include "spinorlab/torsion.hpp"

using namespace spinorlab;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Line {
    std::string name;
    bool ok = true;
    std::ostringstream detail;
    Clock::time_point start = Clock::now();

    explicit Line(std::string n) : name(std::move(n)) { detail.precision(3); }
    void check(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << " [" << what << "]";
        }
    }
    double seconds() const { return std::chrono::duration<double>(Clock::now() - start).count(); }
    void finish() {
        if (!ok) ++failures;
        std::printf("%s  %-26s %.2fs %s\n", ok ? "PASS" : "FAIL", name.c_str(), seconds(), detail.str().c_str());
        std::fflush(stdout);
    }
};

const std::array<Representation, 2> reps{Representation::Dirac, Representation::Weyl};

void clifford() {
    Line L("clifford");
    for (auto rep : reps) L.check(clifford_residual(rep) == 0.0, "anticommutator not exact");
    double worst = 0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        auto rng = sample_rng(1001, i);
        Sampler s{rng};
        Matrix4 m;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) m(a, b) = s.cnormal();
        const auto rep = reps[i % 2];
        worst = std::max(worst, max_abs(recompose(decompose(m, rep), rep) - m));
    }
    L.detail << "roundtrip=" << worst;
    L.check(worst < 1e-12, "round trip");
    L.check(L.seconds() < 1.0, "runtime");
    L.finish();
}

bool pattern_consistent(const Classification& c) {
    if (!c.ok() || c.J_zero) return false;
    switch (c.id()) {
        case 1: return !c.sigma_zero && !c.omega_zero;
        case 2: return !c.sigma_zero && c.omega_zero;
        case 3: return c.sigma_zero && !c.omega_zero;
        case 4: return c.sigma_zero && c.omega_zero && !c.K_zero && !c.S_zero;
        case 5: return c.sigma_zero && c.omega_zero && c.K_zero && !c.S_zero;
        case 6: return c.sigma_zero && c.omega_zero && !c.K_zero && c.S_zero;
        default: return false;
    }
}

void classification() {
    Line L("classification");
    std::size_t bad = 0, n = 10000;
    for (std::uint64_t i = 0; i < n; ++i) {
        auto rng = sample_rng(1002, i);
        Sampler s{rng};
        Spinor psi;
        int want = 0;  // 0: any regular class
        switch (i % 6) {
            case 0: {  // single chirality
                psi = s.of_class(6);
                want = 6;
                break;
            }
            case 1:
                psi = elko(s.pick(0, 1) ? ElkoKind::S : ElkoKind::A, s.pick(0, 1) ? Helicity::Plus : Helicity::Minus,
                           0.1 + std::abs(s.normal()), s.real3());
                want = 5;
                break;
            case 2:
                psi = s.of_class(5);
                want = 5;
                break;
            case 3:
                psi = s.of_class(4);
                want = 4;
                break;
            case 4:
                psi = s.of_class(s.pick(2, 3));
                want = 0;
                break;
            default:
                psi = Spinor{s.vec4(), reps[static_cast<std::size_t>(s.pick(0, 1))]};
                want = 0;
        }
        psi = to_representation(psi, reps[i % 2]);
        const Classification c = classify(psi);
        const bool ok = pattern_consistent(c) && (want ? c.id() == want : c.regular());
        bad += !ok;
    }
    L.detail << "inconsistent=" << bad << "/" << n;
    L.check(bad == 0, "inconsistent samples");
    L.check(L.seconds() < 5.0, "runtime");
    L.finish();
}

void fierz() {
    Line L("fierz");
    double worst_id = 0, worst_tak = 0, worst_re = 0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        auto rng = sample_rng(1003, i);
        Sampler s{rng};
        const Spinor reg = to_representation(s.of_class(s.pick(1, 3)), reps[i % 2]);
        const auto r = fierz_residuals(bilinears(reg));
        worst_id = std::max(worst_id, r.worst() / r.scale);
        const Spinor any = to_representation(s.of_class(s.pick(1, 6)), reps[(i / 2) % 2]);
        try {
            const auto t = takahashi_reconstruct(aggregate(bilinears(any)), any.rep);
            worst_tak = std::max(worst_tak, phase_aligned_error(any, t.psi));
        } catch (const std::exception& e) {
            worst_tak = 1e300;
        }
    }
    for (std::uint64_t q = 0; q < 10; ++q) {
        auto rng = sample_rng(1004, q);
        Sampler s{rng};
        const auto rep = reps[q % 2];
        const Spinor u1{s.vec4(), rep}, u2{s.vec4(), rep}, u3{s.vec4(), rep}, u4{s.vec4(), rep};
        const double sc = u1.norm() * u2.norm() * u3.norm() * u4.norm();
        const auto& b = gamma_basis(rep);
        for (std::size_t m = 0; m < 16; ++m)
            for (std::size_t n = 0; n < 16; ++n)
                worst_re = std::max(worst_re, rearrangement(b.elements[m], b.elements[n], u1, u2, u3, u4).residual() / sc);
    }
    L.detail << "identities=" << worst_id << "*scale takahashi=" << worst_tak << " rearrangement=" << worst_re
             << "*scale";
    L.check(worst_id < 1e-10, "identities");
    L.check(worst_tak < 1e-10, "takahashi");
    L.check(worst_re < 1e-12, "rearrangement");
    L.finish();
}

void elko_suite() {
    Line L("elko");
    double eig = 0, flip = 0, act = 0, boost = 0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        auto rng = sample_rng(1005, i);
        Sampler s{rng};
        const double m = 0.1 + std::abs(s.normal());
        const Vec3 p = s.real3();
        const Angles a = direction_angles(p);
        for (auto k : {ElkoKind::S, ElkoKind::A})
            for (auto h : {Helicity::Plus, Helicity::Minus}) {
                const Spinor l = elko(k, h, m, p);
                const auto mu = conjugation_eigenvalue(l);
                eig = std::max(eig, mu ? std::abs(*mu - (k == ElkoKind::S ? 1.0 : -1.0)) : 1e300);
                const double f = elko_closed_form_factor(k, h, m, norm3(p));
                boost = std::max(boost, (l.c - f * elko_rest(k, h, m, a).c).cwiseAbs().maxCoeff());
                flip = std::max(flip, helicity_flip_residual(h, m, a));
            }
        act = std::max(act, elko_dirac_action(m, p).worst());
    }
    L.detail << "C-eig=" << eig << " flip=" << flip << " dirac=" << act << " boost=" << boost;
    L.check(eig < 1e-12, "eigenvalues");
    L.check(flip < 1e-12, "helicity flip");
    L.check(act < 1e-11, "dirac action");
    L.check(boost < 1e-12, "boost");
    L.finish();
}

void lv_dirac() {
    Line L("lv-dirac");
    double roots = 0, closed = 0, spin = 0, prop = 0, denom = 0;
    std::size_t props = 0;
    for (std::uint64_t i = 0; i < 500; ++i) {
        auto rng = sample_rng(1006, i);
        Sampler s{rng};
        const Vec3 p = s.real3();
        // alternate purely timelike and purely spacelike backgrounds
        const Vec4 r = s.real4(0.5);
        const bool timelike = i % 2 == 0;
        const Vec4 b = timelike ? Vec4{r[0], 0, 0, 0} : Vec4{0, r[1], r[2], r[3]};
        const double m = 0.1 + std::abs(s.normal());
        const auto d = lv_dispersion(p, b, m);
        const auto ev = hamiltonian_eigenvalues(p, b, m);
        if (d.real.size() != 4) {
            roots = 1e300;
            continue;
        }
        for (std::size_t k = 0; k < 4; ++k) {
            roots = std::max(roots, std::abs(d.real[k] - ev[k]));
            const Vec4 pu{d.real[k], p[0], p[1], p[2]};
            double sc = m * m;
            for (int j = 0; j < 4; ++j) sc += pu[j] * pu[j] + b[j] * b[j];
            denom = std::max(denom, std::abs(dispersion_value(pu, b, m)) / (sc * sc));
        }
        std::vector<double> want;
        if (timelike) {
            for (int a : {1, 2}) {
                want.push_back(timelike_energy_u(a, norm3(p), b[0], m));
                want.push_back(-timelike_energy_v(a, norm3(p), b[0], m));
                const auto u = lv_spinor_u(a, p, b, m);
                const auto v = lv_spinor_v(a, p, b, m);
                spin = std::max({spin, u_equation_residual(u, p, b, m), v_equation_residual(v, p, b, m)});
            }
        } else {
            // p0^2 = p^2 + m^2 + |b|^2 +- 2 sqrt(|b|^2 m^2 + (b.p)^2)
            const double bb = b[1] * b[1] + b[2] * b[2] + b[3] * b[3], bp = b[1] * p[0] + b[2] * p[1] + b[3] * p[2];
            const double base = norm3(p) * norm3(p) + m * m + bb, rad = 2 * std::sqrt(bb * m * m + bp * bp);
            for (double sg : {-1.0, 1.0})
                for (double e : {-1.0, 1.0}) want.push_back(e * std::sqrt(base + sg * rad));
        }
        std::sort(want.begin(), want.end());
        for (std::size_t k = 0; k < 4; ++k) closed = std::max(closed, std::abs(d.real[k] - want[k]));
        // off shell
        const Vec4 pu{s.normal(2.0), p[0], p[1], p[2]};
        try {
            const auto r = lv_propagator(pu, b, m, 1e-6);
            const Matrix4 prod = lv_operator(pu, b, m) * r.direct;
            prop = std::max({prop, r.residual, max_abs(prod - I_unit * identity4())});
            ++props;
        } catch (const PoleProximity&) {
        }
    }
    L.detail << "roots=" << roots << " closed=" << closed << " spinors=" << spin << " propagator=" << prop << " ("
             << props << " points) denominator@roots=" << denom;
    L.check(roots < 1e-10, "roots vs hamiltonian");
    L.check(closed < 1e-12, "closed forms");
    L.check(spin < 1e-10, "spinor residual");
    L.check(prop < 1e-10, "propagator identity");
    L.check(denom < 1e-9, "denominator at roots");
    L.finish();
}

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

template <std::size_t R>
Tensor<R> random_tensor(Sampler& s) {
    Tensor<R> t;
    for (auto& x : t.v) x = s.normal();
    return t;
}

void flagpole() {
    Line L("flagpole-insensitivity");
    double worstK = 0, worst_red = 0;
    std::size_t not_class5 = 0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        auto rng = sample_rng(1007, i);
        Sampler s{rng};
        const Spinor psi = to_representation(s.of_class(5), reps[i % 2]);
        const Bilinears B = bilinears(psi);
        for (int j = 0; j < 20; ++j) {
            const Torsion T = random_torsion(s);
            const LICouplings li{s.normal(), s.normal(), s.normal(), s.normal()};
            LVTorsionCouplings lv;
            lv.k_sigma = random_tensor<3>(s);
            lv.k_J = random_tensor<4>(s);
            lv.k_S = random_tensor<5>(s);
            lv.k5_K = random_tensor<4>(s);
            lv.k5_omega = random_tensor<3>(s);
            Dim45Couplings d;
            d.a1 = s.normal();
            d.a2 = s.normal();
            d.a3 = s.normal();
            d.a4 = s.normal();
            for (std::size_t k = 1; k < 10; ++k) d.ahat[k] = s.normal();
            const auto r1 = lagrangian_LI(T, B, li), r2 = lagrangian_LV(T, B, lv),
                       r3 = lagrangian_dim45(T, B, s.real4(), d);
            not_class5 += r3.cls.id() != 5;
            for (const auto* r : {&r1, &r2, &r3}) worstK = std::max(worstK, r->max_abs_for(Contracts::K) / r->scale);
            worst_red = std::max(worst_red, std::abs(dim4_sum(r3) - flagpole_reduction(T, B, d.a1, d.a3)) / r3.scale);
        }
    }
    L.detail << "K-terms=" << worstK << "*scale reduction=" << worst_red << "*scale";
    L.check(not_class5 == 0, "sample not class 5");
    L.check(worstK < 1e-14, "K-contracted terms");
    L.check(worst_red < 1e-14, "dimension-4 reduction");
    L.finish();
}

void class_map() {
    Line L("class-mapping");
    const auto r = class_map_experiment(1000, 1008, MapDistribution::Mixed);
    L.detail << "checked=" << r.checked << " drawn=" << r.drawn << " counterexamples=" << r.counterexamples.size()
             << " inadmissible=" << r.table_violations.size();
    L.check(r.checked == 1000, "too few checked samples");
    L.check(r.counterexamples.empty(), "counterexamples");
    L.check(r.table_violations.empty(), "inadmissible rows");
    L.finish();
}

void cosmology() {
    Line L("cosmology");
    double ode = 0, dirac = 0, drift = 0, slope_dev = 0;
    for (std::uint64_t i = 0; i < 5; ++i) {
        auto rng = sample_rng(1009, i);
        Sampler s{rng};
        const double m = s.uniform(0.5, 2.0), C = s.uniform(0.2, 1.5), K = C + s.uniform(0.1, 2.0);
        const double beta = s.uniform(0.0, 0.3);
        CosmoParams P = CosmoParams::constrained(m, C, K, beta);
        P.varsigma = s.normal();
        P.xi = s.normal();
        const UnperturbedSolution sol{P};
        const double t0 = sol.t_min(P.q()), t1 = t0 + 9 * std::max(std::abs(t0), P.q());
        std::vector<double> ts;
        for (int k = 0; k < 40; ++k) ts.push_back(t0 + (t1 - t0) * k / 39.0);
        for (double t : ts) {
            ode = std::max(ode, std::abs(sol.tau_ode_residual(t)));
            dirac = std::max(dirac, sol.dirac_residual_at(t).cwiseAbs().maxCoeff());
        }
        const auto rec = conservation_check([&](double t) { return sol.psi(t); }, [&](double t) { return sol.tau(t); },
                                            [](double) { return 1.0; }, m, t0, t1, 40);
        drift = std::max({drift, rec.drift_J0tau, rec.drift_K3tau});
        const auto fit = perturbed_exponent(P, ts);
        slope_dev = std::max(slope_dev, std::abs(fit.slope - 2.0));
    }
    // family 3: (0, x, y, 0) under the constraints, dirac components
    std::size_t flag_dipole = 0, draws = 100;
    for (std::uint64_t i = 0; i < draws; ++i) {
        auto rng = sample_rng(1010, i);
        Sampler s{rng};
        FamilyParams f;
        f.C = s.uniform(0.2, 1.5);
        f.K = f.C + s.uniform(0.1, 2.0);
        f.zeta1 = s.pick(0, 1) * M_PI;
        f.zeta2 = M_PI / 2 + s.pick(0, 1) * M_PI;
        f.vartheta1 = s.uniform(-M_PI, M_PI);
        f.vartheta2 = s.uniform(-M_PI, M_PI);
        flag_dipole += classify(family_spinor(3, f, s.uniform(0.1, 10.0))).id() == 4;
    }
    L.detail << "tau-ode=" << ode << " dirac=" << dirac << " drift=" << drift << " |slope-2|=" << slope_dev
             << " family3-flag-dipole=" << flag_dipole << "/" << draws;
    L.check(ode == 0.0, "tau ode");
    L.check(dirac < 1e-9, "dirac residual");
    L.check(drift < 1e-8, "conserved drift");
    L.check(slope_dev < 0.1, "perturbed exponent");
    L.check(flag_dipole == draws, "family-3 class");
    L.finish();
}

}  // namespace

int main() {
    const auto t0 = Clock::now();
    clifford();
    classification();
    fierz();
    elko_suite();
    lv_dirac();
    flagpole();
    class_map();
    cosmology();
    const double total = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("total %.2fs, %d failing\n", total, failures);
    if (total >= 60.0) {
        std::printf("FAIL  runtime over 60s\n");
        return 1;
    }
    return failures == 0 ? 0 : 1;
}
