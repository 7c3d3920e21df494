#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elko.hpp"
#include "polynomial.hpp"
#include "tensor.hpp"
#include "spinor.hpp"

namespace spinorlab {

// Fermion-sector coefficients, all with lower indices.
struct LVCoefficients {
    double m = 0, m5 = 0;
    Vec4 a{}, b{}, e{}, f{};
    Mat4r c{}, d{}, H{};
    Tensor3 g{};
};

// Gamma_nu = g_nu + c_{mu nu} g^mu + d_{mu nu} g5 g^mu + e_nu + i f_nu g5 + (1/2) g_{rho mu nu} sigma^{rho mu}
inline Matrix4 gamma_nu_lv(int nu, const LVCoefficients& k, Representation rep) {
    const Matrix4 g5 = gamma5(rep);
    Matrix4 r = gamma_lower(nu, rep) + k.e[nu] * identity4() + I_unit * k.f[nu] * g5;
    for (int mu = 0; mu < 4; ++mu) {
        r += k.c[mu][nu] * gamma(mu, rep);
        r += k.d[mu][nu] * (g5 * gamma(mu, rep));
        for (int rho = 0; rho < 4; ++rho)
            if (k.g(rho, mu, nu) != 0.0) r += 0.5 * k.g(rho, mu, nu) * sigma_munu(rho, mu, rep);
    }
    return r;
}

// M = m + i m5 g5 + a_mu g^mu + b_mu g5 g^mu + (1/2) H_{mu nu} sigma^{mu nu}
inline Matrix4 mass_matrix_lv(const LVCoefficients& k, Representation rep) {
    const Matrix4 g5 = gamma5(rep);
    Matrix4 r = k.m * identity4() + I_unit * k.m5 * g5;
    for (int mu = 0; mu < 4; ++mu) {
        r += k.a[mu] * gamma(mu, rep);
        r += k.b[mu] * (g5 * gamma(mu, rep));
        for (int nu = 0; nu < 4; ++nu)
            if (k.H[mu][nu] != 0.0) r += 0.5 * k.H[mu][nu] * sigma_munu(mu, nu, rep);
    }
    return r;
}

// plane wave psi = u e^{-ip.x}: (i/2) psibar Gamma^nu <->d_nu psi - psibar M psi = ubar (p^nu Gamma_nu - M) u
inline cplx lv_lagrangian_plane_wave(const LVCoefficients& k, const Vec4& p_up, const Spinor& u) {
    Matrix4 op = -mass_matrix_lv(k, u.rep);
    for (int nu = 0; nu < 4; ++nu) op += p_up[nu] * gamma_nu_lv(nu, k, u.rep);
    return sandwich(u, op, u);
}

// ---------- b-only model: (p/ - b/ g5 - m) psi = 0, dirac representation, b contravariant ----------

inline Matrix4 lv_operator(const Vec4& p_up, const Vec4& b_up, double m, Representation rep = Representation::Dirac) {
    return slash(p_up, rep) - slash(b_up, rep) * gamma5(rep) - m * identity4();
}

// [p^2 - b^2 - m^2]^2 - 4 (b.p)^2 + 4 b^2 p^2 as a polynomial in p0
inline Quartic dispersion_quartic(const Vec3& p, const Vec4& b_up, double m) {
    const double p2s = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
    const double b2 = minkowski_dot(b_up, b_up);
    const double bp = b_up[1] * p[0] + b_up[2] * p[1] + b_up[3] * p[2];  // b-vec . p-vec
    const double A = -p2s - b2 - m * m;
    const double b0 = b_up[0];
    return {1.0, 0.0, 2 * A - 4 * b0 * b0 + 4 * b2, 8 * b0 * bp, A * A - 4 * bp * bp - 4 * b2 * p2s};
}

inline double dispersion_value(const Vec4& p_up, const Vec4& b_up, double m) {
    const double p2 = minkowski_dot(p_up, p_up), b2 = minkowski_dot(b_up, b_up), pb = minkowski_dot(p_up, b_up);
    const double x = p2 - b2 - m * m;
    return x * x - 4 * pb * pb + 4 * b2 * p2;
}

struct RootCluster {
    double value;
    int multiplicity;
};

struct DispersionResult {
    QuarticRoots roots;
    std::vector<double> real;  // sorted
    std::vector<RootCluster> clusters;
    double max_imag = 0;
};

inline DispersionResult lv_dispersion(const Vec3& p, const Vec4& b_up, double m) {
    if (m < 0) throw std::invalid_argument("lv_dispersion: negative mass");
    DispersionResult r;
    r.roots = solve_quartic(dispersion_quartic(p, b_up, m));
    for (auto z : r.roots.roots) r.max_imag = std::max(r.max_imag, std::abs(z.imag()));
    r.real = r.roots.real_roots();
    for (double x : r.real) {
        if (!r.clusters.empty() && std::abs(x - r.clusters.back().value) <= 1e-7 * (1 + std::abs(x)))
            ++r.clusters.back().multiplicity;
        else
            r.clusters.push_back({x, 1});
    }
    return r;
}

// H from solving the operator for p0: H = g^0 (g^i p^i + m + b/ g5)
// = alpha.p + m g^0 + b^0 g5 - Sigma^i b^i  (i.e. + Sigma.b with b lower)
inline Matrix4 lv_hamiltonian(const Vec3& p, const Vec4& b_up, double m) {
    const auto rep = Representation::Dirac;
    Matrix4 inner = m * identity4() + slash(b_up, rep) * gamma5(rep);
    for (int i = 0; i < 3; ++i) inner += p[i] * gamma(i + 1, rep);
    return gamma(0, rep) * inner;
}

inline std::array<double, 4> hamiltonian_eigenvalues(const Vec3& p, const Vec4& b_up, double m) {
    Eigen::SelfAdjointEigenSolver<Matrix4> es(lv_hamiltonian(p, b_up, m), Eigen::EigenvaluesOnly);
    const auto ev = es.eigenvalues();
    return {ev(0), ev(1), ev(2), ev(3)};
}

// E_u^(alpha) = sqrt((|p| + (-1)^alpha b0)^2 + m^2), E_v^(alpha) = sqrt((|p| - (-1)^alpha b0)^2 + m^2)
inline double timelike_energy_u(int alpha, double pmag, double b0, double m) {
    const double s = alpha == 1 ? -1.0 : 1.0;
    return std::sqrt((pmag + s * b0) * (pmag + s * b0) + m * m);
}
inline double timelike_energy_v(int alpha, double pmag, double b0, double m) {
    const double s = alpha == 1 ? -1.0 : 1.0;
    return std::sqrt((pmag - s * b0) * (pmag - s * b0) + m * m);
}

struct LVSpinor {
    Spinor spinor;
    double energy = 0;
    int helicity = 0;              // eigenvalue of s.p-hat carried by the two-spinor
    bool helicity_fallback = false; // p = 0: s_z basis used
};

// eigenvector of s.p-hat with eigenvalue h; s_z basis when p = 0
inline Vector2c helicity_eigenvector(int h, const Vec3& p, bool* fallback = nullptr) {
    const double n = norm3(p);
    if (fallback) *fallback = n == 0.0;
    const Angles a = direction_angles(p);
    Vector2c v;
    if (h > 0) v << std::cos(a.theta / 2), std::exp(I_unit * a.phi) * std::sin(a.theta / 2);
    else v << -std::exp(-I_unit * a.phi) * std::sin(a.theta / 2), std::cos(a.theta / 2);
    return v;
}

namespace detail {
inline void require_timelike_frame(const Vec4& b_up) {
    if (b_up[1] != 0.0 || b_up[2] != 0.0 || b_up[3] != 0.0)
        throw std::invalid_argument("closed-form spinors need b = (b0, 0, 0, 0)");
}
inline void require_alpha(int alpha) {
    if (alpha != 1 && alpha != 2) throw std::invalid_argument("spinor index alpha must be 1 or 2");
}
}  // namespace detail

// u = N (chi, (s.p + b0)/(E+m) chi), chi helicity (-1)^alpha, ubar u = 1.
// Solves (p/ - b/ g5 - m) u = 0 at p0 = E_u^(alpha).
inline LVSpinor lv_spinor_u(int alpha, const Vec3& p, const Vec4& b_up, double m) {
    detail::require_alpha(alpha);
    detail::require_timelike_frame(b_up);
    if (!(m > 0)) throw std::invalid_argument("lv spinors need m > 0");
    LVSpinor r;
    r.helicity = alpha == 1 ? -1 : 1;
    r.energy = timelike_energy_u(alpha, norm3(p), b_up[0], m);
    const Vector2c chi = helicity_eigenvector(r.helicity, p, &r.helicity_fallback);
    const Matrix2 xi = (sigma_dot(p) + b_up[0] * Matrix2::Identity()) / (r.energy + m);
    Vector4c c;
    c << chi, xi * chi;
    Spinor u{c, Representation::Dirac};
    const double n = sandwich(u, identity4(), u).real();
    u.c /= std::sqrt(n);
    r.spinor = u;
    return r;
}

// v = N ((s.p - b0)/(E_v+m) eta, eta), eta helicity (-1)^alpha, vbar v = -1.
// Solves (p/ + b/ g5 + m) v = 0 at p0 = E_v^(alpha).
inline LVSpinor lv_spinor_v(int alpha, const Vec3& p, const Vec4& b_up, double m) {
    detail::require_alpha(alpha);
    detail::require_timelike_frame(b_up);
    if (!(m > 0)) throw std::invalid_argument("lv spinors need m > 0");
    LVSpinor r;
    r.helicity = alpha == 1 ? -1 : 1;
    r.energy = timelike_energy_v(alpha, norm3(p), b_up[0], m);
    const Vector2c eta_ = helicity_eigenvector(r.helicity, p, &r.helicity_fallback);
    const Matrix2 xi = (sigma_dot(p) - b_up[0] * Matrix2::Identity()) / (r.energy + m);
    Vector4c c;
    c << xi * eta_, eta_;
    Spinor v{c, Representation::Dirac};
    const double n = -sandwich(v, identity4(), v).real();
    v.c /= std::sqrt(n);
    r.spinor = v;
    return r;
}

inline double u_equation_residual(const LVSpinor& u, const Vec3& p, const Vec4& b_up, double m) {
    const Vec4 pu{u.energy, p[0], p[1], p[2]};
    return (lv_operator(pu, b_up, m) * u.spinor.c).cwiseAbs().maxCoeff();
}

inline double v_equation_residual(const LVSpinor& v, const Vec3& p, const Vec4& b_up, double m) {
    const Vec4 pv{v.energy, p[0], p[1], p[2]};
    const auto rep = Representation::Dirac;
    const Matrix4 op = slash(pv, rep) + slash(b_up, rep) * gamma5(rep) + m * identity4();
    return (op * v.spinor.c).cwiseAbs().maxCoeff();
}

struct PoleProximity : std::runtime_error {
    double nearest_root;
    PoleProximity(const std::string& what, double root) : std::runtime_error(what), nearest_root(root) {}
};

struct PropagatorResult {
    Matrix4 direct;        // i (p/ - b/ g5 - m)^-1
    Matrix4 rationalized;  // i (p/ - b/ g5 + m) {p^2 - b^2 - m^2 + [p/,b/] g5} / quartic
    double quartic = 0;
    double residual = 0;   // max|direct - rationalized| / max|direct|
};

// ([p/, b/] g5)^2 - (-4 p^2 b^2 + 4 (p.b)^2) I
inline double commutator_square_residual(const Vec4& p_up, const Vec4& b_up) {
    const auto rep = Representation::Dirac;
    const Matrix4 ps = slash(p_up, rep), bs = slash(b_up, rep);
    const Matrix4 Y = (ps * bs - bs * ps) * gamma5(rep);
    const double p2 = minkowski_dot(p_up, p_up), b2 = minkowski_dot(b_up, b_up), pb = minkowski_dot(p_up, b_up);
    return max_abs(Y * Y - (-4 * p2 * b2 + 4 * pb * pb) * identity4());
}

inline PropagatorResult lv_propagator(const Vec4& p_up, const Vec4& b_up, double m, double pole_eps = 1e-10) {
    const auto rep = Representation::Dirac;
    PropagatorResult r;
    r.quartic = dispersion_value(p_up, b_up, m);
    double scale = m * m;
    for (int i = 0; i < 4; ++i) scale += p_up[i] * p_up[i] + b_up[i] * b_up[i];
    scale *= scale;
    if (std::abs(r.quartic) < pole_eps * scale) {
        const auto d = lv_dispersion({p_up[1], p_up[2], p_up[3]}, b_up, m);
        double nearest = d.real.empty() ? 0.0 : d.real.front();
        for (double x : d.real)
            if (std::abs(x - p_up[0]) < std::abs(nearest - p_up[0])) nearest = x;
        throw PoleProximity("propagator evaluated on the mass shell (quartic=" + std::to_string(r.quartic) +
                                ", nearest root p0=" + std::to_string(nearest) + ")",
                            nearest);
    }
    const Matrix4 ps = slash(p_up, rep), bs = slash(b_up, rep), g5 = gamma5(rep);
    r.direct = I_unit * lv_operator(p_up, b_up, m).inverse();
    const double X = minkowski_dot(p_up, p_up) - minkowski_dot(b_up, b_up) - m * m;
    const Matrix4 Y = (ps * bs - bs * ps) * g5;
    r.rationalized = I_unit * (ps - bs * g5 + m * identity4()) * (X * identity4() + Y) / r.quartic;
    r.residual = max_abs(r.direct - r.rationalized) / max_abs(r.direct);
    return r;
}

}  // namespace spinorlab
