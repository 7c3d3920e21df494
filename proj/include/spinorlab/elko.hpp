#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spinor.hpp"

namespace spinorlab {

// Elko spinors live in the weyl representation.
enum class ElkoKind { S, A };  // self- / anti-self-conjugate
enum class Helicity { Plus, Minus };

struct Angles {
    double theta = 0.0;
    double phi = 0.0;
};

// polar angles of p; p = 0 maps to theta = phi = 0
inline Angles direction_angles(const Vec3& p) {
    const double n = norm3(p);
    if (n == 0.0) return {};
    return {std::acos(std::clamp(p[2] / n, -1.0, 1.0)), std::atan2(p[1], p[0])};
}

// rest-frame helicity two-spinors phi^{+/-}
inline Vector2c helicity_spinor(Helicity h, double m, Angles a) {
    const double c = std::cos(a.theta / 2), s = std::sin(a.theta / 2);
    const cplx em = std::exp(-I_unit * a.phi / 2.0), ep = std::exp(I_unit * a.phi / 2.0);
    Vector2c v;
    if (h == Helicity::Plus) v << c * em, s * ep;
    else v << -s * em, c * ep;
    return std::sqrt(m) * v;
}

inline Matrix2 wigner_theta() { return -I_unit * pauli(2); }

inline Helicity flip(Helicity h) { return h == Helicity::Plus ? Helicity::Minus : Helicity::Plus; }

inline Spinor elko_rest(ElkoKind kind, Helicity h, double m, Angles a) {
    if (!(m > 0.0)) throw std::invalid_argument("elko: mass must be positive");
    const Matrix2 iTheta = I_unit * wigner_theta();  // = sigma_2
    Vector4c c;
    if (kind == ElkoKind::S) {
        const Vector2c ph = helicity_spinor(h, m, a);
        c << iTheta * ph.conjugate(), ph;
    } else {
        const Vector2c ph = helicity_spinor(flip(h), m, a);
        const double sgn = h == Helicity::Plus ? 1.0 : -1.0;
        c << -(iTheta * ph.conjugate()), ph;
        c *= sgn;
    }
    return {c, Representation::Weyl};
}

inline double on_shell_energy(double m, const Vec3& p) { return std::sqrt(m * m + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]); }

inline Matrix2 sigma_dot(const Vec3& p) { return p[0] * pauli(1) + p[1] * pauli(2) + p[2] * pauli(3); }

// sqrt((E+m)/2m) diag(1 + s.p/(E+m), 1 - s.p/(E+m))
inline Matrix4 elko_boost(double m, const Vec3& p) {
    if (!(m > 0.0)) throw std::invalid_argument("elko: mass must be positive");
    const double E = on_shell_energy(m, p);
    const Matrix2 sp = sigma_dot(p) / (E + m);
    const Matrix2 one = Matrix2::Identity(), z = Matrix2::Zero();
    return std::sqrt((E + m) / (2 * m)) * blocks(one + sp, z, z, one - sp);
}

// rest spinor along p-hat, then boosted
inline Spinor elko(ElkoKind kind, Helicity h, double m, const Vec3& p) {
    return act(elko_boost(m, p), elko_rest(kind, h, m, direction_angles(p)));
}

// scalar factor of the boosted spinor relative to the rest one
inline double elko_closed_form_factor(ElkoKind kind, Helicity h, double m, double pmag) {
    const double E = std::sqrt(m * m + pmag * pmag);
    const double x = pmag / (E + m);
    const bool minus = (kind == ElkoKind::S) == (h == Helicity::Plus);
    return std::sqrt((E + m) / (2 * m)) * (minus ? 1.0 - x : 1.0 + x);
}

// g^mu p_mu acting on the four elko spinors: residuals of
// p/ lS+ = i m lS-, p/ lS- = -i m lS+, p/ lA- = i m lA+, p/ lA+ = -i m lA-
struct ElkoActionResiduals {
    double s_plus = 0, s_minus = 0, a_minus = 0, a_plus = 0;
    double worst() const { return std::max({s_plus, s_minus, a_minus, a_plus}); }
};

inline ElkoActionResiduals elko_dirac_action(double m, const Vec3& p) {
    const double E = on_shell_energy(m, p);
    const Matrix4 ps = slash({E, p[0], p[1], p[2]}, Representation::Weyl);
    const auto Sp = elko(ElkoKind::S, Helicity::Plus, m, p).c;
    const auto Sm = elko(ElkoKind::S, Helicity::Minus, m, p).c;
    const auto Ap = elko(ElkoKind::A, Helicity::Plus, m, p).c;
    const auto Am = elko(ElkoKind::A, Helicity::Minus, m, p).c;
    const cplx im = I_unit * m;
    ElkoActionResiduals r;
    r.s_plus = (ps * Sp - im * Sm).cwiseAbs().maxCoeff();
    r.s_minus = (ps * Sm + im * Sp).cwiseAbs().maxCoeff();
    r.a_minus = (ps * Am - im * Ap).cwiseAbs().maxCoeff();
    r.a_plus = (ps * Ap + im * Am).cwiseAbs().maxCoeff();
    return r;
}

// s.p-hat [Theta phi*] = -/+ [Theta phi*]; returns the residual
inline double helicity_flip_residual(Helicity h, double m, Angles a) {
    const Vec3 n{std::sin(a.theta) * std::cos(a.phi), std::sin(a.theta) * std::sin(a.phi), std::cos(a.theta)};
    const Vector2c v = wigner_theta() * helicity_spinor(h, m, a).conjugate();
    const double expected = h == Helicity::Plus ? -1.0 : 1.0;
    return (sigma_dot(n) * v - expected * v).cwiseAbs().maxCoeff();
}

}  // namespace spinorlab
