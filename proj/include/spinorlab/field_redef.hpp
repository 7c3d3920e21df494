#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "classifier.hpp"
#include "sampling.hpp"

namespace spinorlab {

// psi = chi + (v.Gamma + i theta + i Ct_mu x^mu + C_{mu nu} x^mu d^nu + B_mu d^mu + g5 Bt_mu d^mu) chi
// All vectors/tensors with lower indices; v are coefficients on the 16-element basis.
struct RedefParams {
    Coeffs16 v{};
    cplx theta{};
    Vec4 C_tilde{};
    Mat4r C{};
    Vec4 B{};
    Vec4 B_tilde{};

    RedefParams scaled(double s) const {
        RedefParams r = *this;
        for (auto& x : r.v) x *= s;
        r.theta *= s;
        for (int i = 0; i < 4; ++i) {
            r.C_tilde[i] *= s;
            r.B[i] *= s;
            r.B_tilde[i] *= s;
            for (int j = 0; j < 4; ++j) r.C[i][j] *= s;
        }
        return r;
    }
};

// chi(x) = chi0 exp(-i p.x); derivatives act as d^mu -> -i p^mu
struct PlaneWave {
    Spinor chi0;
    Vec4 p_up{};
    Vec4 x_up{};

    Spinor at_x() const {
        const double px = minkowski_dot(p_up, x_up);
        return {chi0.c * std::exp(-I_unit * px), chi0.rep};
    }
};

namespace detail {
inline double dot_lower_up(const Vec4& a_low, const Vec4& b_up) {
    return a_low[0] * b_up[0] + a_low[1] * b_up[1] + a_low[2] * b_up[2] + a_low[3] * b_up[3];
}
inline double xCp(const Mat4r& C, const Vec4& x, const Vec4& p) {
    double s = 0;
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) s += C[m][n] * x[m] * p[n];
    return s;
}
}  // namespace detail

// the operator F with psi = (1 + F) chi on a plane wave
inline Matrix4 redefinition_operator(const PlaneWave& w, const RedefParams& k) {
    const Representation rep = w.chi0.rep;
    const double Ctx = detail::dot_lower_up(k.C_tilde, w.x_up);
    const double Cxp = detail::xCp(k.C, w.x_up, w.p_up);
    const double Bp = detail::dot_lower_up(k.B, w.p_up);
    const double Btp = detail::dot_lower_up(k.B_tilde, w.p_up);
    Matrix4 F = recompose(k.v, rep);
    F += (I_unit * k.theta + I_unit * Ctx - I_unit * Cxp - I_unit * Bp) * identity4();
    F += -I_unit * Btp * gamma5(rep);
    return F;
}

// 1 + 2 Im(theta) + |theta|^2 + 2 Ct.x Re(theta) + (Ct.x)^2
inline double delta_closed_form(const RedefParams& k, const Vec4& x_up) {
    const double Ctx = detail::dot_lower_up(k.C_tilde, x_up);
    return 1 + 2 * k.theta.imag() + std::norm(k.theta) + 2 * Ctx * k.theta.real() + Ctx * Ctx;
}

// |1 + i theta + i Ct.x|^2, the actual rescaling produced by the phase-type terms
inline double phase_rescaling(const RedefParams& k, const Vec4& x_up) {
    const double Ctx = detail::dot_lower_up(k.C_tilde, x_up);
    return std::norm(1.0 + I_unit * (k.theta + Ctx));
}

struct OmegaSet {
    double sigma = 0, omega = 0;
    Vec4 J{}, K{};
    Mat4r S{};

    double max_abs() const {
        double m = std::max(std::abs(sigma), std::abs(omega));
        for (int i = 0; i < 4; ++i) {
            m = std::max({m, std::abs(J[i]), std::abs(K[i])});
            for (int j = 0; j < 4; ++j) m = std::max(m, std::abs(S[i][j]));
        }
        return m;
    }
};

struct RedefResult {
    Spinor chi;  // at x
    Spinor psi;  // at x
    double delta = 1;
    Bilinears chi_b, psi_b;
    OmegaSet omega;  // X(psi) - delta X(chi)
};

inline RedefResult redefine(const PlaneWave& w, const RedefParams& k) {
    RedefResult r;
    r.chi = w.at_x();
    r.psi = act(identity4() + redefinition_operator(w, k), r.chi);
    r.delta = delta_closed_form(k, w.x_up);
    r.chi_b = bilinears(r.chi);
    r.psi_b = bilinears(r.psi);
    const double d = r.delta;
    r.omega.sigma = r.psi_b.sigma - d * r.chi_b.sigma;
    r.omega.omega = r.psi_b.omega - d * r.chi_b.omega;
    for (int i = 0; i < 4; ++i) {
        r.omega.J[i] = r.psi_b.J[i] - d * r.chi_b.J[i];
        r.omega.K[i] = r.psi_b.K[i] - d * r.chi_b.K[i];
        for (int j = 0; j < 4; ++j) r.omega.S[i][j] = r.psi_b.S[i][j] - d * r.chi_b.S[i][j];
    }
    return r;
}

// Term-by-term transcription of the long-hand Omega expression, with G standing where
// g^0 sits in the sigma case (G = g^0 gives Omega_sigma). On plane waves
// d^mu chi = -i p^mu chi and d^mu chi^dag = +i p^mu chi^dag; the conjugation sign
// attached to the hermitian-conjugate side is taken as +1.
inline cplx omega_longhand(const PlaneWave& w, const RedefParams& k, const Matrix4& G) {
    const Representation rep = w.chi0.rep;
    const Vector4c chi = w.at_x().c;
    const Eigen::RowVector4cd cd = chi.adjoint();
    const Matrix4 g5 = gamma5(rep);
    const Matrix4 vG = recompose(k.v, rep);
    const Matrix4 vGd = vG.adjoint();
    const cplx th = k.theta, thc = std::conj(k.theta);
    const double D = 1.0;
    const double Ctx = detail::dot_lower_up(k.C_tilde, w.x_up);
    const double Cxp = detail::xCp(k.C, w.x_up, w.p_up);
    const double Bp = detail::dot_lower_up(k.B, w.p_up);
    const double Btp = detail::dot_lower_up(k.B_tilde, w.p_up);
    Vec4 xC{};  // x^beta C_{beta alpha}
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) xC[a] += w.x_up[b] * k.C[b][a];
    const cplx i = I_unit;
    auto dA = [&](double ap) -> Eigen::RowVector4cd { return i * ap * cd; };  // a_mu d^mu chi^dag

    const cplx t1 = ((dA(Btp) + i * th * dA(Btp) + i * Ctx * dA(Btp)) * D * g5 * G * chi)(0, 0);
    const Eigen::RowVector4cd row2 =
        cd + cd * vGd - i * Ctx * cd + D * (dA(Bp) + dA(Btp) * g5 + i * Cxp * cd) - i * thc * cd;
    const cplx t2 = (row2 * G * vG * chi)(0, 0);
    const Eigen::RowVector4cd row3 = cd * vGd + D * (dA(Bp) + i * Cxp * cd) + i * th * (cd * vGd) +
                                     i * Ctx * (cd * vGd) +
                                     i * th * D * (dA(Bp) + i * Ctx * dA(Bp) + i * th * i * Cxp * cd +
                                                   i * Ctx * i * Cxp * cd);
    const cplx t3 = (row3 * G * chi)(0, 0);
    cplx t4 = 0, t5 = 0;
    for (int a = 0; a < 4; ++a) {
        const Vector4c dchi = -i * w.p_up[a] * chi;
        const double Bta = k.B_tilde[a], Ba = k.B[a];
        const Eigen::RowVector4cd r4 = Bta * cd + D * (Bta * (cd * vGd) - Ctx * Bta * cd) + Bp * i * Bta * cd -
                                       Btp * i * Ba * cd + Btp * i * Bta * (cd * g5) -
                                       D * Btp * i * xC[a] * cd + Bta * i * Cxp * cd - i * thc * D * Bta * cd;
        t4 += (r4 * G * g5 * dchi)(0, 0);
        const Eigen::RowVector4cd r5 =
            Ba * cd + xC[a] * cd - i * Ctx * D * xC[a] * cd + Bp * i * Ba * cd + Bp * i * xC[a] * cd +
            Ba * i * Cxp * cd + i * Cxp * xC[a] * cd -
            i * D * (thc * Ba * cd - i * thc * xC[a] * cd + Ba * (cd * vGd) + xC[a] * (cd * vGd) - i * Ctx * Ba * cd);
        t5 += (r5 * G * dchi)(0, 0);
    }
    return t1 + t2 + t3 + t4 + t5;
}

struct AgreementOrder {
    std::vector<double> eps;
    std::vector<double> residual;  // |Omega_extracted - Omega_longhand|
    double exponent = 0;           // least-squares slope of log residual vs log eps
};

inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const double lx = std::log(x[k]), ly = std::log(y[k]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// Omega_sigma agreement between residual extraction and the long-hand expression as the
// redefinition is scaled down by eps.
inline AgreementOrder omega_sigma_agreement(const PlaneWave& w, const RedefParams& direction,
                                            const std::vector<double>& eps_list) {
    AgreementOrder a;
    const Matrix4 g0 = gamma(0, w.chi0.rep);
    for (double e : eps_list) {
        const RedefParams k = direction.scaled(e);
        const RedefResult r = redefine(w, k);
        const cplx lh = omega_longhand(w, k, g0);
        a.eps.push_back(e);
        a.residual.push_back(std::abs(r.omega.sigma - lh));
    }
    a.exponent = loglog_slope(a.eps, a.residual);
    return a;
}

// ---------------- Dirac -> Majorana ----------------
// chi = (0, a1, 0, a3) in weyl components, T = v_mu g5 g^mu with v0 = v3 = 0 and v_1 - i v_2 = delta.
// Output (-delta a3, a1, -delta a1, a3); it is C-self-conjugate iff
// delta = i a3*/a3 = -i a1*/a1.

struct MajoranaMap {
    Spinor psi;
    RedefParams params;
    double consistency_residual = 0;
};

namespace detail {
inline std::pair<cplx, cplx> majorana_components(const Spinor& chi) {
    const Spinor w = to_representation(chi, Representation::Weyl);
    const double s = w.c.cwiseAbs().maxCoeff();
    if (std::abs(w.c(0)) > 1e-12 * s || std::abs(w.c(2)) > 1e-12 * s)
        throw std::invalid_argument("majorana map needs chi = (0, a1, 0, a3) in weyl components");
    if (std::abs(w.c(1)) == 0.0 || std::abs(w.c(3)) == 0.0)
        throw std::invalid_argument("majorana map needs a1 != 0 and a3 != 0");
    return {w.c(1), w.c(3)};
}
}  // namespace detail

// delta fixed by chi, if chi admits one
inline std::optional<cplx> majorana_delta(const Spinor& chi, double tol = 1e-10) {
    const auto [a1, a3] = detail::majorana_components(chi);
    const cplx d3 = I_unit * std::conj(a3) / a3;
    const cplx d1 = -I_unit * std::conj(a1) / a1;
    if (std::abs(d3 - d1) > tol) return std::nullopt;
    return d3;
}

inline MajoranaMap map_dirac_to_majorana(const Spinor& chi, cplx delta, double tol = 1e-10) {
    const auto [a1, a3] = detail::majorana_components(chi);
    if (std::abs(delta) == 0.0) throw std::invalid_argument("delta = 0 leaves chi unchanged");
    const double res =
        std::max(std::abs(delta - I_unit * std::conj(a3) / a3), std::abs(delta + I_unit * std::conj(a1) / a1));
    if (res > tol)
        throw std::invalid_argument("delta inconsistent with chi: need delta = i a3*/a3 = -i a1*/a1 (residual " +
                                    std::to_string(res) + ")");
    MajoranaMap m;
    m.consistency_residual = res;
    m.params.v[11 + 1] = delta.real();
    m.params.v[11 + 2] = -delta.imag();
    const Spinor w = to_representation(chi, Representation::Weyl);
    m.psi = redefine(PlaneWave{w, {}, {}}, m.params).psi;
    return m;
}

// ---------------- regular -> flag-dipole ----------------
// psi = (1 + lambda g5) chi, lambda = (beta1 - beta2)/2, beta1 + beta2 = 2.
// With g5 = diag(I,-I) in weyl components the upper block scales by beta1, the lower by beta2.

struct FlagDipoleMap {
    Spinor psi;
    double lambda = 0;
    double constraint_residual = 0;  // |c0 + c1 c2 c3*/|c2|^2|
    bool moduli_differ = false;      // |c1| != |c3|
    bool reached = false;
    Classification cls;
};

inline FlagDipoleMap map_regular_to_flagdipole(const Spinor& chi, double beta1, double beta2,
                                               const Tolerance& tol = {}) {
    if (std::abs(beta1 + beta2 - 2.0) > 1e-12)
        throw std::invalid_argument("beta1 + beta2 must equal 2 (beta1 = 1 + lambda, beta2 = 1 - lambda)");
    FlagDipoleMap r;
    r.lambda = 0.5 * (beta1 - beta2);
    const Spinor w = to_representation(chi, Representation::Weyl);
    r.psi = act(identity4() + r.lambda * gamma5(Representation::Weyl), w);
    const Vector4c& c = r.psi.c;
    const double s = c.cwiseAbs().maxCoeff();
    if (std::abs(c(2)) > 1e-300)
        r.constraint_residual = std::abs(c(0) + c(1) * c(2) * std::conj(c(3)) / std::norm(c(2)));
    else
        r.constraint_residual = std::abs(c(0));
    r.moduli_differ = std::abs(std::abs(c(1)) - std::abs(c(3))) > tol.threshold(s);
    r.cls = classify(r.psi, tol);
    r.reached = r.constraint_residual < tol.threshold(s) && r.moduli_differ && r.cls.id() == 4;
    return r;
}

// ---------------- class mapping ----------------

// admissible chi classes for a given psi class under Delta, Omega != 0
inline std::vector<int> admissible_chi_classes(int psi_class) {
    switch (psi_class) {
        case 1: return {1, 2, 3, 4, 5, 6};
        case 2: return {1, 3};
        case 3: return {1, 2};
        case 4:
        case 5:
        case 6: return {1};
        default: return {};
    }
}

enum class MapDistribution { Mixed, Zero };

struct ClassMapSample {
    std::size_t index;
    int chi_class, psi_class;
    double delta, omega_sigma, omega_omega;
};

struct ClassMapReport {
    std::size_t requested = 0;
    std::size_t drawn = 0;
    std::size_t checked = 0;  // samples with Delta, Omega_sigma, Omega_omega nonzero
    std::array<std::array<std::size_t, 7>, 7> table{};      // checked samples, [psi class][chi class], 0 = outside
    std::array<std::array<std::size_t, 7>, 7> table_all{};  // every draw, filtered or not
    std::vector<ClassMapSample> counterexamples;  // psi singular but chi not regular
    std::vector<ClassMapSample> table_violations; // chi class not admissible for the psi row
};

// One draw. Half the draws use a generic small redefinition on a chi of random class; the
// other half aim at a psi of prescribed class by choosing v.Gamma = psi chibar / sigma_chi - 1.
inline std::pair<PlaneWave, RedefParams> draw_redefinition(Sampler& s, MapDistribution dist) {
    PlaneWave w;
    w.p_up = s.real4();
    w.x_up = s.real4();
    RedefParams k;
    if (dist == MapDistribution::Zero) {
        w.chi0 = s.of_class(s.pick(1, 6));
        return {w, k};
    }
    if (s.pick(0, 1) == 0) {
        w.chi0 = s.of_class(s.pick(1, 6));
        for (auto& c : k.v) c = s.cnormal(0.3);
        k.theta = s.cnormal(0.3);
        k.C_tilde = s.real4(0.3);
        k.B = s.real4(0.3);
        k.B_tilde = s.real4(0.3);
        for (auto& row : k.C) row = s.real4(0.3);
        return {w, k};
    }
    const int target = s.pick(1, 6);
    const Spinor psi = s.of_class(target);
    w.chi0 = s.of_class(s.pick(1, 3));
    w.x_up = {};  // chi(x) = chi0
    const double sig = bilinears(w.chi0).sigma;
    if (std::abs(sig) < 1e-8) return {w, k};  // untargetable; becomes a generic zero draw
    const Matrix4 vg = psi.c * dirac_adjoint(w.chi0) / sig - identity4();
    k.v = decompose(vg, w.chi0.rep);
    return {w, k};
}

inline ClassMapReport class_map_experiment(std::size_t samples, std::uint64_t seed, MapDistribution dist,
                                           const Tolerance& tol = {}, double omega_margin = 1e3) {
    ClassMapReport rep;
    rep.requested = samples;
    const std::size_t cap = 20 * samples + 100;
    for (std::size_t i = 0; i < cap; ++i) {
        if (dist == MapDistribution::Mixed && rep.checked >= samples) break;
        if (dist == MapDistribution::Zero && rep.drawn >= samples) break;
        auto rng = sample_rng(seed, i);
        Sampler s{rng};
        const auto [w, k] = draw_redefinition(s, dist);
        const RedefResult r = redefine(w, k);
        const Classification cc = classify(r.chi_b, tol), cp = classify(r.psi_b, tol);
        ++rep.drawn;
        ++rep.table_all[static_cast<std::size_t>(cp.id())][static_cast<std::size_t>(cc.id())];
        const double scale = std::max(r.psi_b.scale(), std::abs(r.delta) * r.chi_b.scale());
        const double nz = omega_margin * tol.threshold(scale);
        if (std::abs(r.delta) < nz || std::abs(r.omega.sigma) < nz || std::abs(r.omega.omega) < nz) continue;
        ++rep.checked;
        ++rep.table[static_cast<std::size_t>(cp.id())][static_cast<std::size_t>(cc.id())];
        const ClassMapSample smp{i, cc.id(), cp.id(), r.delta, r.omega.sigma, r.omega.omega};
        if (cp.singular() && !cc.regular()) rep.counterexamples.push_back(smp);
        if (cp.ok()) {
            const auto adm = admissible_chi_classes(cp.id());
            if (std::find(adm.begin(), adm.end(), cc.id()) == adm.end()) rep.table_violations.push_back(smp);
        }
    }
    return rep;
}

}  // namespace spinorlab
