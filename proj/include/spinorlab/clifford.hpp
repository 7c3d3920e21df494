#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace spinorlab {

using cplx = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Vector2c = Eigen::Vector2cd;
using Vector4c = Eigen::Vector4cd;
using RowVector4c = Eigen::RowVector4cd;

// Plain real four-component arrays. Index position is stated at each use.
using Vec4 = std::array<double, 4>;
using Mat4r = std::array<std::array<double, 4>, 4>;
using Vec3 = std::array<double, 3>;

inline double norm3(const Vec3& p) { return std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]); }

inline constexpr cplx I_unit{0.0, 1.0};

// mostly-minus metric
inline constexpr Vec4 metric_diag{1.0, -1.0, -1.0, -1.0};

inline constexpr double eta(int mu) { return metric_diag[static_cast<std::size_t>(mu)]; }

inline Vec4 lower(const Vec4& v) { return {v[0], -v[1], -v[2], -v[3]}; }

inline double minkowski_dot(const Vec4& a_up, const Vec4& b_up) {
    return a_up[0] * b_up[0] - a_up[1] * b_up[1] - a_up[2] * b_up[2] - a_up[3] * b_up[3];
}

enum class Representation { Dirac, Weyl };

inline std::string_view to_string(Representation r) {
    return r == Representation::Dirac ? "dirac" : "weyl";
}

inline Representation parse_representation(std::string_view s) {
    if (s == "dirac") return Representation::Dirac;
    if (s == "weyl" || s == "chiral") return Representation::Weyl;
    throw std::invalid_argument("unknown representation: " + std::string(s));
}

// identifiers embedded in every report
namespace conventions {
inline constexpr std::string_view metric = "eta=diag(+1,-1,-1,-1)";
inline constexpr std::string_view gamma5 = "gamma5=i*g^0*g^1*g^2*g^3";
inline constexpr std::string_view gamma5_dirac = "gamma5(dirac)=[[0,I],[I,0]]";
inline constexpr std::string_view gamma5_weyl = "gamma5(weyl)=diag(I,-I)";
inline constexpr std::string_view weyl_gammas = "weyl: g^0=[[0,I],[I,0]], g^k=[[0,-s_k],[s_k,0]]";
inline constexpr std::string_view dirac_gammas = "dirac: g^0=diag(I,-I), g^k=[[0,s_k],[-s_k,0]]";
inline constexpr std::string_view sigma_munu = "sigma^{mu nu}=(i/2)[g^mu,g^nu]";
inline constexpr std::string_view omega = "omega=i*psibar*gamma5*psi";
inline constexpr std::string_view S_tensor = "S_{mu nu}=psibar*sigma_{mu nu}*psi=i*psibar*g_mu*g_nu*psi";
inline constexpr std::string_view levi_civita = "eps_{0123}=+1";
inline constexpr std::string_view charge_conjugation = "C=[[0,sigma_2],[-sigma_2,0]]K (weyl blocks)";
}  // namespace conventions

inline Matrix2 pauli(int k) {
    Matrix2 s;
    switch (k) {
        case 0: s << 1, 0, 0, 1; break;
        case 1: s << 0, 1, 1, 0; break;
        case 2: s << 0, -I_unit, I_unit, 0; break;
        case 3: s << 1, 0, 0, -1; break;
        default: throw std::out_of_range("pauli index");
    }
    return s;
}

inline Matrix4 blocks(const Matrix2& a, const Matrix2& b, const Matrix2& c, const Matrix2& d) {
    Matrix4 m;
    m << a, b, c, d;
    return m;
}

inline Matrix4 identity4() { return Matrix4::Identity(); }

// gamma^mu, upper index
inline Matrix4 gamma(int mu, Representation rep) {
    if (mu < 0 || mu > 3) throw std::out_of_range("gamma index");
    const Matrix2 z = Matrix2::Zero();
    const Matrix2 one = Matrix2::Identity();
    if (rep == Representation::Dirac) {
        if (mu == 0) return blocks(one, z, z, -one);
        const Matrix2 s = pauli(mu);
        return blocks(z, s, -s, z);
    }
    if (mu == 0) return blocks(z, one, one, z);
    const Matrix2 s = pauli(mu);
    return blocks(z, -s, s, z);
}

inline Matrix4 gamma_lower(int mu, Representation rep) { return eta(mu) * gamma(mu, rep); }

inline Matrix4 gamma5(Representation rep) {
    return I_unit * gamma(0, rep) * gamma(1, rep) * gamma(2, rep) * gamma(3, rep);
}

// sigma^{mu nu} = (i/2)[g^mu, g^nu]
inline Matrix4 sigma_munu(int mu, int nu, Representation rep) {
    const Matrix4 a = gamma(mu, rep);
    const Matrix4 b = gamma(nu, rep);
    return 0.5 * I_unit * (a * b - b * a);
}

inline Matrix4 sigma_munu_lower(int mu, int nu, Representation rep) {
    return eta(mu) * eta(nu) * sigma_munu(mu, nu, rep);
}

// slash of a contravariant vector: g^mu a_mu
inline Matrix4 slash(const Vec4& a_up, Representation rep) {
    Matrix4 m = Matrix4::Zero();
    for (int mu = 0; mu < 4; ++mu) m += gamma(mu, rep) * (eta(mu) * a_up[static_cast<std::size_t>(mu)]);
    return m;
}

inline constexpr std::array<std::pair<int, int>, 6> bivector_pairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// {I, g^mu, sigma^{mu nu} (mu<nu), g5 g^mu, g5} and the trace-dual
// {I/4, g_mu/4, sigma_{mu nu}/4, g_mu g5/4, g5/4}; Tr(E_i D_j) = delta_ij.
struct GammaBasis16 {
    Representation rep{};
    std::array<Matrix4, 16> elements;
    std::array<Matrix4, 16> duals;
    std::array<std::string, 16> labels;
};

inline GammaBasis16 make_gamma_basis(Representation rep) {
    GammaBasis16 b;
    b.rep = rep;
    const Matrix4 g5 = gamma5(rep);
    std::size_t k = 0;
    b.elements[k] = identity4();
    b.duals[k] = 0.25 * identity4();
    b.labels[k++] = "1";
    for (int mu = 0; mu < 4; ++mu) {
        b.elements[k] = gamma(mu, rep);
        b.duals[k] = 0.25 * gamma_lower(mu, rep);
        b.labels[k++] = "g" + std::to_string(mu);
    }
    for (auto [mu, nu] : bivector_pairs) {
        b.elements[k] = sigma_munu(mu, nu, rep);
        b.duals[k] = 0.25 * sigma_munu_lower(mu, nu, rep);
        b.labels[k++] = "s" + std::to_string(mu) + std::to_string(nu);
    }
    for (int mu = 0; mu < 4; ++mu) {
        b.elements[k] = g5 * gamma(mu, rep);
        b.duals[k] = 0.25 * gamma_lower(mu, rep) * g5;
        b.labels[k++] = "g5g" + std::to_string(mu);
    }
    b.elements[k] = g5;
    b.duals[k] = 0.25 * g5;
    b.labels[k] = "g5";
    return b;
}

inline const GammaBasis16& gamma_basis(Representation rep) {
    static const GammaBasis16 dirac = make_gamma_basis(Representation::Dirac);
    static const GammaBasis16 weyl = make_gamma_basis(Representation::Weyl);
    return rep == Representation::Dirac ? dirac : weyl;
}

using Coeffs16 = std::array<cplx, 16>;

inline Coeffs16 decompose(const Matrix4& m, Representation rep) {
    const auto& b = gamma_basis(rep);
    Coeffs16 c{};
    for (std::size_t i = 0; i < 16; ++i) c[i] = (m * b.duals[i]).trace();
    return c;
}

inline Matrix4 recompose(const Coeffs16& c, Representation rep) {
    const auto& b = gamma_basis(rep);
    Matrix4 m = Matrix4::Zero();
    for (std::size_t i = 0; i < 16; ++i) m += c[i] * b.elements[i];
    return m;
}

// S with psi_to = S psi_from and g_to = S g_from S^-1
inline Matrix4 rep_change(Representation from, Representation to) {
    if (from == to) return identity4();
    const Matrix2 one = Matrix2::Identity();
    const Matrix4 w2d = std::sqrt(0.5) * blocks(one, one, one, -one);  // self-inverse
    return w2d;
}

inline double max_abs(const Matrix4& m) { return m.cwiseAbs().maxCoeff(); }

// max over mu,nu of |{g^mu,g^nu} - 2 eta^{mu nu}|
inline double clifford_residual(Representation rep) {
    double r = 0.0;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            const Matrix4 a = gamma(mu, rep), b = gamma(nu, rep);
            Matrix4 d = a * b + b * a;
            if (mu == nu) d -= 2.0 * eta(mu) * identity4();
            r = std::max(r, max_abs(d));
        }
    return r;
}

}  // namespace spinorlab
