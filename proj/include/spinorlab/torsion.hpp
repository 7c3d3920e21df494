#pragma once

#include <string>
#include <vector>

#include "classifier.hpp"
#include "tensor.hpp"

namespace spinorlab {

// Torsion stored as T^lambda_{mu nu} (first index up), antisymmetric in (mu, nu).
struct Torsion {
    Tensor3 mixed;

    static Torsion from_mixed(const Tensor3& t, double tol = 1e-12) {
        const double s = t.max_abs();
        for (int l = 0; l < 4; ++l)
            for (int m = 0; m < 4; ++m)
                for (int n = 0; n < 4; ++n)
                    if (std::abs(t(l, m, n) + t(l, n, m)) > tol * (1.0 + s))
                        throw std::invalid_argument("torsion must be antisymmetric in its last two indices");
        return Torsion{t};
    }

    double lower(int l, int m, int n) const { return eta(l) * mixed(l, m, n); }
    double upper(int l, int m, int n) const { return eta(m) * eta(n) * mixed(l, m, n); }
    double max_abs() const { return mixed.max_abs(); }
};

struct TorsionParts {
    Vec4 trace{};   // T_mu = T^lambda_{lambda mu}, lower
    Vec4 axial{};   // A^mu = (1/6) eps^{alpha beta gamma mu} T_{alpha beta gamma}, upper
    Tensor3 M{};    // mixed-symmetry remainder, all lower: traceless, no totally antisymmetric part

    Vec4 trace_up() const { return {trace[0], -trace[1], -trace[2], -trace[3]}; }
    Vec4 axial_low() const { return {axial[0], -axial[1], -axial[2], -axial[3]}; }
};

inline TorsionParts derived_torsion_parts(const Torsion& T) {
    TorsionParts p;
    for (int mu = 0; mu < 4; ++mu)
        for (int l = 0; l < 4; ++l) p.trace[mu] += T.mixed(l, l, mu);
    for (int mu = 0; mu < 4; ++mu)
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c) {
                    const int e = levi_civita_upper(a, b, c, mu);
                    if (e) p.axial[mu] += e * T.lower(a, b, c) / 6.0;
                }
    for (int l = 0; l < 4; ++l)
        for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n) {
                const double anti = (T.lower(l, m, n) + T.lower(m, n, l) + T.lower(n, l, m)) / 3.0;
                const double tr = ((l == m ? eta(l) : 0.0) * p.trace[n] - (l == n ? eta(l) : 0.0) * p.trace[m]) / 3.0;
                p.M(l, m, n) = T.lower(l, m, n) - tr - anti;
            }
    return p;
}

struct EffectiveCoeffs {
    Mat4r c_eff{};  // c + chi - h/2
    Vec4 b_eff{};   // b_mu + (1/8) eps_{mu nu rho sigma} T^{nu rho sigma} - (1/4) d^nu chi^{rho sigma} eps_{mu nu rho sigma}
};

// dchi(nu, rho, sigma) = d^nu chi^{rho sigma}; zero for constant chi
inline EffectiveCoeffs effective_coeffs(const Mat4r& c, const Mat4r& h, const Mat4r& chi, const Vec4& b,
                                        const Torsion& T, const Tensor3& dchi = {}) {
    EffectiveCoeffs r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.c_eff[i][j] = c[i][j] + chi[i][j] - 0.5 * h[i][j];
    for (int mu = 0; mu < 4; ++mu) {
        double s = b[mu];
        for (int n = 0; n < 4; ++n)
            for (int rh = 0; rh < 4; ++rh)
                for (int sg = 0; sg < 4; ++sg) {
                    const int e = levi_civita(mu, n, rh, sg);
                    if (!e) continue;
                    s += e * (T.upper(n, rh, sg) / 8.0 - dchi(n, rh, sg) / 4.0);
                }
        r.b_eff[mu] = s;
    }
    return r;
}

// k_{mu g a b} = (1/2)(eta_{mu a} h_{g b} - eta_{g a} h_{mu b} + eta_{g b} h_{mu a} - eta_{mu b} h_{g a})
inline Tensor4 k_from_h(const Mat4r& h) {
    Tensor4 k;
    auto et = [](int a, int b) { return a == b ? eta(a) : 0.0; };
    for (int m = 0; m < 4; ++m)
        for (int g = 0; g < 4; ++g)
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    k(m, g, a, b) = 0.5 * (et(m, a) * h[g][b] - et(g, a) * h[m][b] + et(g, b) * h[m][a] -
                                           et(m, b) * h[g][a]);
    return k;
}

// ---------- coupling reports ----------

enum class Contracts { Sigma, Omega, J, K, S };

inline std::string to_string(Contracts c) {
    switch (c) {
        case Contracts::Sigma: return "sigma";
        case Contracts::Omega: return "omega";
        case Contracts::J: return "J";
        case Contracts::K: return "K";
        case Contracts::S: return "S";
    }
    return "";
}

struct CouplingTerm {
    std::string name;
    Contracts contracts;
    double value = 0;
    bool vanishes_by_class = false;  // the contracted bilinear is zero for the spinor's class
};

struct CouplingReport {
    std::vector<CouplingTerm> terms;
    Classification cls;
    double scale = 0;  // |T|max * bilinear scale * coupling scale

    double total() const {
        double s = 0;
        for (const auto& t : terms) s += t.value;
        return s;
    }
    double max_abs_for(Contracts c) const {
        double m = 0;
        for (const auto& t : terms)
            if (t.contracts == c) m = std::max(m, std::abs(t.value));
        return m;
    }
};

namespace detail {
inline bool vanishes_for(Contracts c, const Classification& cls) {
    if (!cls.ok()) return false;
    const int k = cls.id();
    switch (c) {
        case Contracts::Sigma:
        case Contracts::Omega: return k >= 4;
        case Contracts::K: return k == 5;
        case Contracts::S: return k == 6;
        case Contracts::J: return false;
    }
    return false;
}
inline void add(CouplingReport& r, std::string name, Contracts c, double v) {
    r.terms.push_back({std::move(name), c, v, vanishes_for(c, r.cls)});
}
}  // namespace detail

struct LICouplings {
    double a = 0, a5 = 0, b = 0, b5 = 0;
};

// (a T_mu + a5 eps_{mu nu rho sigma} T^{nu rho sigma}) J^mu + (b T_sigma + b5 T^{mu nu rho} eps_{mu nu rho sigma}) K^sigma
inline CouplingReport lagrangian_LI(const Torsion& T, const Bilinears& B, const LICouplings& k,
                                    const Tolerance& tol = {}) {
    CouplingReport r;
    r.cls = classify(B, tol);
    const TorsionParts p = derived_torsion_parts(T);
    const Vec4 Ju = B.J_up(), Ku = B.K_up();
    double tJ = 0, tK = 0, eJ = 0, eK = 0;
    for (int mu = 0; mu < 4; ++mu) {
        tJ += p.trace[mu] * Ju[mu];
        tK += p.trace[mu] * Ku[mu];
        double epsT = 0, Teps = 0;
        for (int n = 0; n < 4; ++n)
            for (int rh = 0; rh < 4; ++rh)
                for (int sg = 0; sg < 4; ++sg) {
                    if (const int e = levi_civita(mu, n, rh, sg)) epsT += e * T.upper(n, rh, sg);
                    if (const int e = levi_civita(n, rh, sg, mu)) Teps += e * T.upper(n, rh, sg);
                }
        eJ += epsT * Ju[mu];
        eK += Teps * Ku[mu];
    }
    detail::add(r, "a T.J", Contracts::J, k.a * tJ);
    detail::add(r, "a5 epsT.J", Contracts::J, k.a5 * eJ);
    detail::add(r, "b T.K", Contracts::K, k.b * tK);
    detail::add(r, "b5 Teps.K", Contracts::K, k.b5 * eK);
    r.scale = T.max_abs() * B.scale() * std::max({std::abs(k.a), std::abs(k.a5), std::abs(k.b), std::abs(k.b5), 1.0});
    return r;
}

// Lorentz-violating torsion couplings, all k lower-index
struct LVTorsionCouplings {
    Tensor3 k_sigma;  // k_{mu nu rho} T^{mu nu rho} sigma
    Tensor4 k_J;      // k_{mu nu rho sigma} T^{mu nu rho} J^sigma
    Tensor5 k_S;      // k_{mu nu rho sigma tau} T^{mu nu rho} psibar sigma^{sigma tau} psi
    Tensor4 k5_K;     // k5_{mu nu rho sigma} T^{mu nu rho} K^sigma
    Tensor3 k5_omega; // k5_{mu nu rho} T^{mu nu rho} omega

    static LVTorsionCouplings from_h(const Mat4r& h) {
        LVTorsionCouplings c;
        c.k_J = k_from_h(h);
        c.k5_K = c.k_J;
        return c;
    }
};

inline CouplingReport lagrangian_LV(const Torsion& T, const Bilinears& B, const LVTorsionCouplings& k,
                                    const Tolerance& tol = {}) {
    CouplingReport r;
    r.cls = classify(B, tol);
    const Vec4 Ju = B.J_up(), Ku = B.K_up();
    double ts = 0, tj = 0, tS = 0, tk = 0, tw = 0;
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
            for (int rh = 0; rh < 4; ++rh) {
                const double Tu = T.upper(m, n, rh);
                if (Tu == 0.0) continue;
                ts += k.k_sigma(m, n, rh) * Tu * B.sigma;
                tw += k.k5_omega(m, n, rh) * Tu * B.omega;
                for (int s = 0; s < 4; ++s) {
                    tj += k.k_J(m, n, rh, s) * Tu * Ju[s];
                    tk += k.k5_K(m, n, rh, s) * Tu * Ku[s];
                    for (int t = 0; t < 4; ++t) tS += k.k_S(m, n, rh, s, t) * Tu * B.S_up(s, t);
                }
            }
    detail::add(r, "k T sigma", Contracts::Sigma, ts);
    detail::add(r, "k T J", Contracts::J, tj);
    detail::add(r, "k T S", Contracts::S, tS);
    detail::add(r, "k5 T K", Contracts::K, tk);
    detail::add(r, "k5 T omega", Contracts::Omega, tw);
    const double ks = std::max({k.k_sigma.max_abs(), k.k_J.max_abs(), k.k_S.max_abs(), k.k5_K.max_abs(),
                                k.k5_omega.max_abs(), 1.0});
    r.scale = T.max_abs() * B.scale() * ks;
    return r;
}

struct Dim45Couplings {
    double a1 = 0, a2 = 0, a3 = 0, a4 = 0;
    std::array<double, 10> ahat{};  // ahat[1..9]

    static Dim45Couplings minimal() {
        Dim45Couplings c;
        c.a4 = 0.75;
        return c;
    }
};

// Plane wave psi = u e^{-ip.x}: psibar G <->d_mu psi -> -2i p_mu psibar G psi.
// The a^5 term is read as (i/2) a^5 M^lambda_{mu nu} psibar <->d_lambda sigma^{mu nu} psi.
inline CouplingReport lagrangian_dim45(const Torsion& T, const Bilinears& B, const Vec4& p_up,
                                       const Dim45Couplings& k, const Tolerance& tol = {}) {
    CouplingReport r;
    r.cls = classify(B, tol);
    const TorsionParts P = derived_torsion_parts(T);
    const Vec4 Ju = B.J_up(), Ku = B.K_up();
    const Vec4 Tl = P.trace, Al = P.axial_low();
    double TJ = 0, AJ = 0, TK = 0, AK = 0, Tp = 0, Ap = 0;
    for (int m = 0; m < 4; ++m) {
        TJ += Tl[m] * Ju[m];
        AJ += Al[m] * Ju[m];
        TK += Tl[m] * Ku[m];
        AK += Al[m] * Ku[m];
        Tp += Tl[m] * p_up[m];
        Ap += Al[m] * p_up[m];
    }
    const Vec4 pl = lower(p_up);
    // X_mu p_nu S^{mu nu}
    auto xpS = [&](const Vec4& X) {
        double s = 0;
        for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n) s += X[m] * pl[n] * B.S_up(m, n);
        return s;
    };
    double MpS = 0;  // M^lambda_{mu nu} p_lambda S^{mu nu} = M_{lambda mu nu} p^lambda S^{mu nu}
    for (int l = 0; l < 4; ++l)
        for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n) MpS += P.M(l, m, n) * p_up[l] * B.S_up(m, n);
    // eps^{lambda kappa mu nu} X_lambda p_kappa S_{mu nu}
    auto epS = [&](const Vec4& X) {
        double s = 0;
        for (int l = 0; l < 4; ++l)
            for (int kk = 0; kk < 4; ++kk)
                for (int m = 0; m < 4; ++m)
                    for (int n = 0; n < 4; ++n)
                        if (const int e = levi_civita_upper(l, kk, m, n)) s += e * X[l] * pl[kk] * B.S[m][n];
        return s;
    };
    const auto& h = k.ahat;
    detail::add(r, "a1 T.J", Contracts::J, k.a1 * TJ);
    detail::add(r, "a3 A.J", Contracts::J, k.a3 * AJ);
    detail::add(r, "a2 T.K", Contracts::K, k.a2 * TK);
    detail::add(r, "a4 A.K", Contracts::K, k.a4 * AK);
    detail::add(r, "ahat1 T.p sigma", Contracts::Sigma, h[1] * Tp * B.sigma);
    detail::add(r, "ahat2 T.p omega", Contracts::Omega, -h[2] * Tp * B.omega);
    detail::add(r, "ahat4 A.p omega", Contracts::Omega, -h[4] * Ap * B.omega);
    detail::add(r, "ahat3 A.p sigma", Contracts::Sigma, h[3] * Ap * B.sigma);
    detail::add(r, "ahat5 M p S", Contracts::S, h[5] * MpS);
    detail::add(r, "ahat6 T p S", Contracts::S, h[6] * xpS(Tl));
    detail::add(r, "ahat7 A p S", Contracts::S, h[7] * xpS(Al));
    detail::add(r, "ahat8 eps T p S", Contracts::S, h[8] * epS(Tl));
    detail::add(r, "ahat9 eps A p S", Contracts::S, h[9] * epS(Al));
    double cs = std::max({std::abs(k.a1), std::abs(k.a2), std::abs(k.a3), std::abs(k.a4), 1.0});
    for (double x : h) cs = std::max(cs, std::abs(x));
    double ps = 1.0;
    for (double x : p_up) ps = std::max(ps, std::abs(x));
    r.scale = T.max_abs() * B.scale() * cs * ps;
    return r;
}

// dimension-4 terms only (no derivative couplings)
inline double dim4_sum(const CouplingReport& r) {
    double s = 0;
    for (const auto& t : r.terms)
        if (t.name.rfind("a", 0) == 0 && t.name.rfind("ahat", 0) != 0) s += t.value;
    return s;
}

// (a1 T_mu + a3 A_mu) J^mu
inline double flagpole_reduction(const Torsion& T, const Bilinears& B, double a1, double a3) {
    const TorsionParts P = derived_torsion_parts(T);
    const Vec4 Ju = B.J_up(), Al = P.axial_low();
    double s = 0;
    for (int m = 0; m < 4; ++m) s += (a1 * P.trace[m] + a3 * Al[m]) * Ju[m];
    return s;
}

}  // namespace spinorlab
