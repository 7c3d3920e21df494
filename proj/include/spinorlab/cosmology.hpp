#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "classifier.hpp"

namespace spinorlab {

// Bianchi-I: ds^2 = dt^2 - a1^2 dx^2 - a2^2 dy^2 - a3^2 dz^2, values and time derivatives at one instant
struct ScaleFactors {
    std::array<double, 3> a{1, 1, 1}, da{}, dda{};

    double tau() const { return a[0] * a[1] * a[2]; }
    double dtau_over_tau() const { return da[0] / a[0] + da[1] / a[1] + da[2] / a[2]; }
};

// Gamma^0 = g^0, Gamma^i = g^i / a_i
inline std::array<Matrix4, 4> tetrad_gammas(const ScaleFactors& f, Representation rep = Representation::Dirac) {
    std::array<Matrix4, 4> G;
    G[0] = gamma(0, rep);
    for (int i = 1; i < 4; ++i) G[i] = gamma(i, rep) / f.a[i - 1];
    return G;
}

// max |{G^mu, G^nu} - 2 g^{mu nu}| for g = diag(1, -1/a^2, -1/b^2, -1/c^2)
inline double tetrad_clifford_residual(const ScaleFactors& f, Representation rep = Representation::Dirac) {
    const auto G = tetrad_gammas(f, rep);
    double r = 0;
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
            Matrix4 d = G[m] * G[n] + G[n] * G[m];
            if (m == n) d -= 2.0 * (m == 0 ? 1.0 : -1.0 / (f.a[m - 1] * f.a[m - 1])) * identity4();
            r = std::max(r, max_abs(d));
        }
    return r;
}

// Omega_0 = 0, Omega_i = (1/2) da_i g^i g^0, no sum
inline std::array<Matrix4, 4> spin_connection(const ScaleFactors& f, Representation rep = Representation::Dirac) {
    std::array<Matrix4, 4> W;
    W[0] = Matrix4::Zero();
    for (int i = 1; i < 4; ++i) W[i] = 0.5 * f.da[i - 1] * gamma(i, rep) * gamma(0, rep);
    return W;
}

// Sign in front of the (3i/16 phi)(sigma g^0 + i omega g^0 g5) term. Covariant: from
// i Gamma^mu D_mu psi with D = d - Omega, multiplied by -i g^0; Flipped: the opposite sign.
enum class TorsionTermSign { Covariant = +1, Flipped = -1 };

// dpsi + (dtau/2tau) psi + i m g^0 psi + s (3i/16 phi)(sigma g^0 + i omega g^0 g5) psi,
// sigma and omega recomputed from psi; dirac representation
inline Vector4c dirac_residual(const Spinor& psi, const Vector4c& dpsi, double dtau_over_tau, double phi, double m,
                               TorsionTermSign sign = TorsionTermSign::Covariant) {
    if (phi <= 0) throw std::domain_error("phi <= 0: effective coupling is singular");
    const Spinor p = to_representation(psi, Representation::Dirac);
    const Representation R = Representation::Dirac;
    const Bilinears b = bilinears(p);
    const Matrix4 g0 = gamma(0, R);
    const double s = static_cast<int>(sign);
    const Matrix4 T = s * (3.0 * I_unit / (16.0 * phi)) * (b.sigma * g0 + I_unit * b.omega * g0 * gamma5(R));
    return dpsi + 0.5 * dtau_over_tau * p.c + I_unit * m * g0 * p.c + T * p.c;
}

// gravitational-side inputs at one instant
struct EinsteinInputs {
    ScaleFactors f;
    double phi = 1, dphi = 0, ddphi = 0;
    double V = 0;
    double KK = 0;  // K^sigma K_sigma
    double rho = 0, p = 0;
};

// [time-time, then (r,s) = (2,3), (1,3), (1,2) with t the remaining index]
inline std::array<double, 4> einstein_residuals(const EinsteinInputs& in) {
    const auto& f = in.f;
    std::array<double, 3> H{}, A{};
    for (int i = 0; i < 3; ++i) {
        H[i] = f.da[i] / f.a[i];
        A[i] = f.dda[i] / f.a[i];
    }
    const double phi = in.phi, dp = in.dphi, ht = f.dtau_over_tau();
    std::array<double, 4> r{};
    r[0] = H[0] * H[1] + H[1] * H[2] + H[0] * H[2] -
           (in.rho / phi - 3.0 / (64 * phi * phi) * in.KK +
            (-0.75 * dp * dp - phi * dp * ht - in.V) / (phi * phi));
    const int pairs[3][3] = {{1, 2, 0}, {0, 2, 1}, {0, 1, 2}};
    for (int k = 0; k < 3; ++k) {
        const int rr = pairs[k][0], ss = pairs[k][1], tt = pairs[k][2];
        const double lhs = A[rr] + A[ss] + H[rr] * H[ss];
        const double rhs = -in.p / phi +
                           (phi * dp * H[tt] + 0.75 * dp * dp - phi * (in.ddphi + ht * dp) - in.V) / (phi * phi) +
                           3.0 / (64 * phi * phi) * in.KK;
        r[k + 1] = lhs - rhs;
    }
    return r;
}

// 4th-order central difference
template <class F>
auto central_diff4(const F& f, double t, double h) {
    return (f(t - 2 * h) - 8.0 * f(t - h) + 8.0 * f(t + h) - f(t + 2 * h)) / (12.0 * h);
}

struct CosmoParams {
    double m = 1, C = 1, K = 2, beta = 1, b = 0;
    double delta_alpha = 0, varsigma = 0, xi = 0;

    // b fixed by 3 m^2 (beta^2 - b) = 1
    static CosmoParams constrained(double m, double C, double K, double beta) {
        CosmoParams p;
        p.m = m;
        p.C = C;
        p.K = K;
        p.beta = beta;
        p.b = beta * beta - 1.0 / (3.0 * m * m);
        return p;
    }
    void validate() const {
        if (!(m > 0)) throw std::invalid_argument("m must be positive");
        if (!(C > 0)) throw std::invalid_argument("C must be positive");
        if (!(K > C)) throw std::invalid_argument("K must exceed |C|");
        if (!(beta * beta > b)) throw std::invalid_argument("beta^2 <= b: complex branch points");
    }
    double q() const { return std::sqrt(beta * beta - b); }
    double constraint_residual() const { return 3.0 * m * m * (beta * beta - b) - 1.0; }
};

// tau = (3mC/8)(b + 2 beta t + t^2), a = b, D = 1, 8X = -3mC sqrt(beta^2 - b)
struct UnperturbedSolution {
    CosmoParams P;

    explicit UnperturbedSolution(CosmoParams p) : P(p) { P.validate(); }

    double k3() const { return 3.0 * P.m * P.C / 8.0; }
    double x(double t) const { return t + P.beta; }
    double w(double t) const { return P.b + 2 * P.beta * t + t * t; }
    double u(double t) const { return x(t) - P.q(); }
    double v(double t) const { return x(t) + P.q(); }
    bool admissible(double t) const { return u(t) > 0; }
    // first admissible instant with u = margin
    double t_min(double margin = 0.0) const { return P.q() - P.beta + margin; }

    double tau(double t) const { return k3() * w(t); }
    double dtau(double t) const { return 2 * k3() * x(t); }
    double ddtau(double) const { return 2 * k3(); }
    double tau_ode_residual(double t) const { return ddtau(t) - 3.0 * P.m * P.C / 4.0; }

    ScaleFactors factors(double t) const {
        if (!admissible(t)) throw std::domain_error("outside admissible window");
        const double kk = std::cbrt(k3()), U = u(t), Vv = v(t);
        const double a = kk * std::pow(U, 1.0 / 6.0) * std::sqrt(Vv);
        const double c = kk * std::pow(U, 2.0 / 3.0);
        const double Ha = 1.0 / (6 * U) + 1.0 / (2 * Vv);
        const double dHa = -1.0 / (6 * U * U) - 1.0 / (2 * Vv * Vv);
        const double Hc = 2.0 / (3 * U), dHc = -2.0 / (3 * U * U);
        ScaleFactors f;
        f.a = {a, a, c};
        f.da = {a * Ha, a * Ha, c * Hc};
        f.dda = {a * (dHa + Ha * Ha), a * (dHa + Ha * Ha), c * (dHc + Hc * Hc)};
        return f;
    }

    // a/c from the integrated shape equation
    double shape_ratio(double t) const {
        const double X = -3.0 * P.m * P.C * P.q() / 8.0;
        return std::pow(v(t) / u(t), -8.0 * X / (6.0 * P.m * P.C * P.q()));
    }

    double phase(double t) const {
        return -P.m * t + std::sqrt(3.0 / 16.0) * std::log(v(t) / u(t));
    }
    double dphase(double t) const {
        const double q = P.q(), X = x(t);
        return -P.m - std::sqrt(3.0) / 2.0 * q / (X * X - q * q);
    }
    // phase from -mt - (3C/16) int dt/tau, analytic for quadratic tau
    double beta_phase(double t) const {
        const double q = P.q();
        const double integral = std::log(u(t) / v(t)) / (2 * q * k3());
        return -P.m * t - 3.0 * P.C / 16.0 * integral;
    }

    Spinor psi(double t) const {
        if (!admissible(t)) throw std::domain_error("outside admissible window");
        const double f = 2.0 / std::sqrt(3.0 * P.m * w(t));
        const double ph = phase(t);
        return {0.0, f * std::sqrt(P.K / P.C + 1) * std::polar(1.0, ph),
                f * std::sqrt(P.K / P.C - 1) * std::polar(1.0, -ph), 0.0, Representation::Dirac};
    }
    Vector4c dpsi(double t) const {
        const Spinor s = psi(t);
        const double rate = -x(t) / w(t);  // d ln f
        const double dph = dphase(t);
        Vector4c d = s.c * rate;
        d[1] += I_unit * dph * s.c[1];
        d[2] += -I_unit * dph * s.c[2];
        return d;
    }

    Vector4c dirac_residual_at(double t, TorsionTermSign sign = TorsionTermSign::Covariant) const {
        return dirac_residual(psi(t), dpsi(t), dtau(t) / tau(t), 1.0, P.m, sign);
    }

    // f(R)=R inputs; the matter density is the spinor's own m sigma / 2
    EinsteinInputs einstein_inputs(double t) const {
        EinsteinInputs in;
        in.f = factors(t);
        const Bilinears B = bilinears(psi(t));
        in.KK = minkowski_dot(B.K_up(), B.K_up());
        in.rho = 0.5 * P.m * B.sigma;
        return in;
    }
};

// phi = 1 - da mC/tau, V = da m^2 C^2 / (8 tau^2)
struct PerturbedSolution {
    CosmoParams P;

    explicit PerturbedSolution(CosmoParams p) : P(p) { UnperturbedSolution{P}; }

    UnperturbedSolution base() const { return UnperturbedSolution{P}; }
    double L(double t) const { return std::log(base().v(t) / base().u(t)); }

    double tau1(double t) const {
        const double X = base().x(t);
        return 0.5 * P.m * P.C * (P.varsigma * (P.xi + t) + P.m * std::sqrt(3.0) * X * L(t));
    }
    double dtau1(double t) const {
        const double X = base().x(t), q = P.q();
        const double Lp = -2 * q / (X * X - q * q);
        return 0.5 * P.m * P.C * (P.varsigma + P.m * std::sqrt(3.0) * (L(t) + X * Lp));
    }
    double ddtau1(double t) const {
        const double X = base().x(t), q = P.q();
        const double Lp = -2 * q / (X * X - q * q);
        const double Lpp = 1.0 / ((X - q) * (X - q)) - 1.0 / ((X + q) * (X + q));
        return 0.5 * P.m * P.C * P.m * std::sqrt(3.0) * (2 * Lp + X * Lpp);
    }

    double tau(double t) const { return base().tau(t) + P.delta_alpha * tau1(t); }
    double dtau(double t) const { return base().dtau(t) + P.delta_alpha * dtau1(t); }
    double ddtau(double t) const { return base().ddtau(t) + P.delta_alpha * ddtau1(t); }

    double phi(double t) const {
        const double v = 1.0 - P.delta_alpha * P.m * P.C / tau(t);
        if (v <= 0) throw std::domain_error("phi <= 0 on window");
        return v;
    }
    double V(double t) const {
        const double T = tau(t);
        return P.delta_alpha * P.m * P.m * P.C * P.C / (8 * T * T);
    }

    // (ddtau - 3mC/4) - da (mC/2)(dtau^2/tau^2 - ddtau/tau - 3mC/(4 tau)); ddtau - 3mC/4 = da ddtau1 exactly
    double ode_residual(double t) const {
        const double T = tau(t), dT = dtau(t), ddT = ddtau(t);
        const double G = dT * dT / (T * T) - ddT / T - 3.0 * P.m * P.C / (4 * T);
        return P.delta_alpha * (ddtau1(t) - 0.5 * P.m * P.C * G);
    }
};

inline double loglog_fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log(x[i]), ly = std::log(std::abs(y[i]));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

struct ExponentFit {
    std::vector<double> deltas, residuals;
    double slope = 0;
};

// max |ode residual| over sample times, per delta alpha
inline ExponentFit perturbed_exponent(CosmoParams p, const std::vector<double>& times,
                                      const std::vector<double>& deltas = {1e-3, 1e-4, 1e-5}) {
    ExponentFit fit;
    fit.deltas = deltas;
    for (double d : deltas) {
        p.delta_alpha = d;
        const PerturbedSolution s{p};
        double r = 0;
        for (double t : times) {
            s.phi(t);
            r = std::max(r, std::abs(s.ode_residual(t)));
        }
        fit.residuals.push_back(r);
    }
    fit.slope = loglog_fit_slope(fit.deltas, fit.residuals);
    return fit;
}

using SpinorFn = std::function<Spinor(double)>;
using ScalarFn = std::function<double(double)>;

struct ConservationRecord {
    double D = 0, C = 0, sigma_tau0 = 0;  // reference values at the first sample
    double drift_J0tau = 0, drift_K3tau = 0, drift_sigmatau = 0;  // relative
    double max_omega = 0, max_K0 = 0, max_K12 = 0;
    std::array<double, 4> system_residual{};  // the four coupled first-order equations
    std::size_t samples = 0;
};

// samples log-spaced on [t0, t1]; derivatives of the products by 4th-order central differences
inline ConservationRecord conservation_check(const SpinorFn& psi, const ScalarFn& tau, const ScalarFn& phi, double m,
                                             double t0, double t1, std::size_t n) {
    if (!(t1 > t0) || n < 2) throw std::invalid_argument("bad window");
    ConservationRecord rec;
    rec.samples = n;
    auto prod = [&](double t) {
        const Bilinears B = bilinears(to_representation(psi(t), Representation::Dirac));
        const double T = tau(t);
        return std::array<double, 5>{B.J[0] * T, B.K_up()[3] * T, B.sigma * T, B.omega * T, B.K[0] * T};
    };
    const bool logspace = t0 > 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double s = static_cast<double>(i) / static_cast<double>(n - 1);
        const double t = logspace ? t0 * std::pow(t1 / t0, s) : t0 + (t1 - t0) * s;
        const auto P = prod(t);
        if (i == 0) {
            rec.D = P[0];
            rec.C = P[1];
            rec.sigma_tau0 = P[2];
        }
        rec.drift_J0tau = std::max(rec.drift_J0tau, std::abs(P[0] - rec.D) / std::abs(rec.D));
        rec.drift_K3tau = std::max(rec.drift_K3tau, std::abs(P[1] - rec.C) / std::abs(rec.C));
        rec.drift_sigmatau = std::max(rec.drift_sigmatau, std::abs(P[2] - rec.sigma_tau0) / std::abs(rec.sigma_tau0));

        const Bilinears B = bilinears(to_representation(psi(t), Representation::Dirac));
        rec.max_omega = std::max(rec.max_omega, std::abs(B.omega));
        rec.max_K0 = std::max(rec.max_K0, std::abs(B.K[0]));
        rec.max_K12 = std::max({rec.max_K12, std::abs(B.K[1]), std::abs(B.K[2])});

        const double h = 1e-3 * std::max(1.0, std::abs(t));
        auto comp = [&](int k) { return [&, k](double tt) { return prod(tt)[static_cast<std::size_t>(k)]; }; };
        const double dJ = central_diff4(comp(0), t, h);
        const double dS = central_diff4(comp(2), t, h);
        const double dW = central_diff4(comp(3), t, h);
        const double dK0 = central_diff4(comp(4), t, h);
        const double ph = phi(t);
        const std::array<double, 4> r{dJ, dS + 3 * P[3] * P[4] / (8 * ph * tau(t)),
                                      -dW + (2 * m + 3 * B.sigma / (8 * ph)) * P[4], dK0 + 2 * m * P[3]};
        const double sc = std::max({std::abs(P[0]), std::abs(P[1]), 1e-300});
        for (std::size_t k = 0; k < 4; ++k)
            rec.system_residual[k] = std::max(rec.system_residual[k], std::abs(r[k]) / sc);
    }
    return rec;
}

// general members of the three constrained families
struct FamilyParams {
    double K = 2, C = 1;
    double zeta1 = 0, zeta2 = 0;
    double theta1 = 0, theta2 = 0, vartheta1 = 0, vartheta2 = 0;
    int n = 0;  // family 1 branch
};

struct FamilyConstraintError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// family 1: tan z1 tan z2 = (-1)^(n+1), th1 + th2 - vth1 - vth2 = pi n.
// families 2, 3: K^3 tau = C and J_0 tau = K force cos^2 z1 = sin^2 z2 = 1.
inline void check_family_constraints(int family, const FamilyParams& p, double tol = 1e-10) {
    if (!(p.K >= std::abs(p.C))) throw FamilyConstraintError("K < |C|");
    if (family == 1) {
        const double sgn = (p.n % 2 == 0) ? -1.0 : 1.0;
        const double c1 = std::cos(p.zeta1), c2 = std::cos(p.zeta2);
        const double s1 = std::sin(p.zeta1), s2 = std::sin(p.zeta2);
        if (std::abs(s1 * s2 - sgn * c1 * c2) > tol) throw FamilyConstraintError("tan z1 tan z2 != (-1)^(n+1)");
        const double ph = p.theta1 + p.theta2 - p.vartheta1 - p.vartheta2 - M_PI * p.n;
        if (std::abs(std::remainder(ph, 2 * M_PI)) > tol) throw FamilyConstraintError("phase constraint violated");
    } else if (family == 2 || family == 3) {
        const double c1 = std::cos(p.zeta1), s2 = std::sin(p.zeta2);
        if (std::abs(c1 * c1 - 1) > tol || std::abs(s2 * s2 - 1) > tol)
            throw FamilyConstraintError("K^3 tau = C and J_0 tau = K need cos^2 z1 = sin^2 z2 = 1");
    } else {
        throw std::invalid_argument("family must be 1, 2 or 3");
    }
}

inline Spinor family_spinor(int family, const FamilyParams& p, double tau, bool check = true) {
    if (check) check_family_constraints(family, p);
    if (!(tau > 0)) throw std::domain_error("tau must be positive");
    const double n = 1.0 / std::sqrt(2 * tau);
    const double km = std::sqrt(p.K - p.C), kp = std::sqrt(p.K + p.C);
    auto e = [](double a) { return std::polar(1.0, a); };
    switch (family) {
        case 1:
            return {n * km * std::cos(p.zeta1) * e(p.theta1), n * kp * std::cos(p.zeta2) * e(p.vartheta1),
                    n * km * std::sin(p.zeta1) * e(p.vartheta2), n * kp * std::sin(p.zeta2) * e(p.theta2),
                    Representation::Dirac};
        case 2:
            return {n * km * std::cos(p.zeta1) * e(p.theta1), 0.0, 0.0, n * kp * std::sin(p.zeta2) * e(p.theta2),
                    Representation::Dirac};
        case 3:
            return {0.0, n * kp * std::cos(p.zeta1) * e(p.vartheta1), n * km * std::sin(p.zeta2) * e(p.vartheta2),
                    0.0, Representation::Dirac};
        default: throw std::invalid_argument("family must be 1, 2 or 3");
    }
}

}  // namespace spinorlab
