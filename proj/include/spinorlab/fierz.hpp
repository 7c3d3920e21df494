#pragma once

#include <optional>
#include <stdexcept>

#include "bilinears.hpp"
#include "tolerance.hpp"

namespace spinorlab {

// Z = sigma + J_mu g^mu + sum_{mu<nu} S_{mu nu} sigma^{mu nu} - K_mu g5 g^mu - i omega g5
// which is the multivector sigma + J + iS + iK g_{0123} + omega g_{0123}; equals 4 psi psibar.
inline Matrix4 aggregate(const Bilinears& b) {
    const Representation rep = b.rep;
    const Matrix4 g5 = gamma5(rep);
    Matrix4 z = b.sigma * identity4() - I_unit * b.omega * g5;
    for (int mu = 0; mu < 4; ++mu) {
        z += b.J[mu] * gamma(mu, rep);
        z -= b.K[mu] * (g5 * gamma(mu, rep));
    }
    for (auto [mu, nu] : bivector_pairs) z += b.S[mu][nu] * sigma_munu(mu, nu, rep);
    return z;
}

struct FierzResiduals {
    double j2_sigma2_omega2 = 0;  // |J^2 - sigma^2 - omega^2|
    double j2_plus_k2 = 0;        // |J^2 + K^2|
    double j_dot_k = 0;           // |J.K|
    double wedge = 0;             // max|J^K + (omega + sigma g_{0123}) S|
    double scale = 0;             // max bilinear magnitude, squared

    double worst() const { return std::max({j2_sigma2_omega2, j2_plus_k2, j_dot_k, wedge}); }
};

inline FierzResiduals fierz_residuals(const Bilinears& b) {
    const Representation rep = b.rep;
    const Vec4 Ju = b.J_up(), Ku = b.K_up();
    double J2 = 0, K2 = 0, JK = 0;
    for (int i = 0; i < 4; ++i) {
        J2 += b.J[i] * Ju[i];
        K2 += b.K[i] * Ku[i];
        JK += b.J[i] * Ku[i];
    }
    Matrix4 Jm = Matrix4::Zero(), Km = Matrix4::Zero(), Sm = Matrix4::Zero();
    for (int mu = 0; mu < 4; ++mu) {
        Jm += b.J[mu] * gamma(mu, rep);
        Km += b.K[mu] * gamma(mu, rep);
    }
    for (auto [mu, nu] : bivector_pairs) Sm += b.S[mu][nu] * (gamma(mu, rep) * gamma(nu, rep));
    const Matrix4 g0123 = -I_unit * gamma5(rep);
    const Matrix4 wedge = 0.5 * (Jm * Km - Km * Jm) + (b.omega * identity4() + b.sigma * g0123) * Sm;

    FierzResiduals r;
    r.j2_sigma2_omega2 = std::abs(J2 - b.sigma * b.sigma - b.omega * b.omega);
    r.j2_plus_k2 = std::abs(J2 + K2);
    r.j_dot_k = std::abs(JK);
    r.wedge = max_abs(wedge);
    r.scale = b.scale() * b.scale();
    return r;
}

struct TakahashiFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConventionViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TakahashiResult {
    Spinor psi;
    int probe_index = -1;  // -1 when a caller-supplied probe was used
    cplx N2{};             // etabar Z eta / 4 = N^2
};

// psi = Z eta / (4N), N = (1/2) sqrt(etabar Z eta). Canonical basis probes tried in order;
// a probe is accepted when |etabar Z eta| >= probe_floor * max|Z|.
inline TakahashiResult takahashi_reconstruct(const Matrix4& Z, Representation rep,
                                             std::optional<Vector4c> probe = std::nullopt,
                                             double probe_floor = 1e-6, double phase_tol = 1e-8) {
    const double zmax = max_abs(Z);
    if (zmax == 0.0) throw TakahashiFailure("aggregate is zero");
    auto attempt = [&](const Vector4c& eta, int idx) -> std::optional<TakahashiResult> {
        const Spinor e{eta, rep};
        const cplx q = (dirac_adjoint(e) * Z * eta)(0, 0);
        if (std::abs(q) < probe_floor * zmax * eta.squaredNorm()) return std::nullopt;
        if (std::abs(q.imag()) > phase_tol * std::abs(q))
            throw ConventionViolation("probe value etabar Z eta is not real: " + std::to_string(q.real()) +
                                      (q.imag() < 0 ? "" : "+") + std::to_string(q.imag()) + "i");
        const cplx N = 0.5 * std::sqrt(q);  // principal root; negative probes give imaginary N
        TakahashiResult r;
        r.psi = Spinor{(Z * eta) / (4.0 * N), rep};
        r.probe_index = idx;
        r.N2 = N * N;
        return r;
    };
    if (probe) {
        if (auto r = attempt(*probe, -1)) return *r;
        throw TakahashiFailure("supplied probe gives vanishing etabar Z eta");
    }
    for (int k = 0; k < 4; ++k) {
        if (auto r = attempt(Vector4c::Unit(k), k)) return *r;
    }
    throw TakahashiFailure("all canonical probes give vanishing etabar Z eta");
}

struct BoomerangReport {
    bool is_boomerang = false;
    double self_adjoint_residual = 0;  // max|g0 Z^dag g0 - Z|
    double closure_residual = 0;       // max|aggregate(reconstruction) - Z|
    int probe_index = -1;
    std::string failure;
};

inline BoomerangReport is_boomerang(const Matrix4& Z, Representation rep, const Tolerance& tol = {}) {
    BoomerangReport r;
    const Matrix4 g0 = gamma(0, rep);
    const double scale = max_abs(Z);
    r.self_adjoint_residual = max_abs(g0 * Z.adjoint() * g0 - Z);
    try {
        const TakahashiResult t = takahashi_reconstruct(Z, rep);
        r.probe_index = t.probe_index;
        const Spinor& psi = t.psi;
        const Matrix4 back = 4.0 * psi.c * dirac_adjoint(psi);
        r.closure_residual = max_abs(back - Z);
    } catch (const std::exception& e) {
        r.failure = e.what();
        r.closure_residual = scale;
    }
    const double thr = tol.threshold(scale);
    r.is_boomerang = r.failure.empty() && r.self_adjoint_residual < thr && r.closure_residual < thr;
    return r;
}

// (M,N) rearrangement: u4bar M u2 * u3bar N u1 = sum_k u4bar M E_k N u1 * u3bar D_k u2
struct RearrangementCheck {
    cplx lhs{}, rhs{};
    double residual() const { return std::abs(lhs - rhs); }
};

inline RearrangementCheck rearrangement(const Matrix4& M, const Matrix4& N, const Spinor& u1, const Spinor& u2,
                                        const Spinor& u3, const Spinor& u4) {
    const auto& basis = gamma_basis(u1.rep);
    RearrangementCheck r;
    r.lhs = sandwich(u4, M, u2) * sandwich(u3, N, u1);
    for (std::size_t k = 0; k < 16; ++k)
        r.rhs += sandwich(u4, M * basis.elements[k] * N, u1) * sandwich(u3, basis.duals[k], u2);
    return r;
}

}  // namespace spinorlab
