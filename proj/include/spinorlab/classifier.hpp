#pragma once

#include <optional>
#include <string>

#include "bilinears.hpp"
#include "tolerance.hpp"

namespace spinorlab {

enum class Outside { None, AllZero, CurrentZero, NoTensorNoAxial };

struct Classification {
    std::optional<int> lounesto;  // 1..6
    Outside outside = Outside::None;
    bool sigma_zero = false, omega_zero = false, J_zero = false, K_zero = false, S_zero = false;
    double scale = 0.0;
    double threshold = 0.0;

    bool ok() const { return lounesto.has_value(); }
    bool regular() const { return ok() && *lounesto <= 3; }
    bool singular() const { return ok() && *lounesto >= 4; }
    int id() const { return lounesto.value_or(0); }
};

inline std::string class_name(int c) {
    switch (c) {
        case 1: return "regular-1";
        case 2: return "regular-2";
        case 3: return "regular-3";
        case 4: return "flag-dipole";
        case 5: return "flagpole";
        case 6: return "dipole";
        default: return "outside";
    }
}

inline std::string outside_name(Outside o) {
    switch (o) {
        case Outside::None: return "";
        case Outside::AllZero: return "all bilinears vanish";
        case Outside::CurrentZero: return "J vanishes";
        case Outside::NoTensorNoAxial: return "singular with S=0 and K=0";
    }
    return "";
}

inline Classification classify(const Bilinears& b, const Tolerance& tol = {}) {
    Classification r;
    r.scale = b.scale();
    r.threshold = tol.threshold(r.scale);
    auto zero = [&](double x) { return std::abs(x) < r.threshold; };
    auto zero_vec = [&](const Vec4& v) {
        return zero(v[0]) && zero(v[1]) && zero(v[2]) && zero(v[3]);
    };
    r.sigma_zero = zero(b.sigma);
    r.omega_zero = zero(b.omega);
    r.J_zero = zero_vec(b.J);
    r.K_zero = zero_vec(b.K);
    r.S_zero = true;
    for (auto [mu, nu] : bivector_pairs) r.S_zero = r.S_zero && zero(b.S[mu][nu]);

    if (r.scale == 0.0 || (r.sigma_zero && r.omega_zero && r.J_zero && r.K_zero && r.S_zero)) {
        r.outside = Outside::AllZero;
        return r;
    }
    if (r.J_zero) {
        r.outside = Outside::CurrentZero;
        return r;
    }
    if (!r.sigma_zero && !r.omega_zero) r.lounesto = 1;
    else if (!r.sigma_zero) r.lounesto = 2;
    else if (!r.omega_zero) r.lounesto = 3;
    else if (!r.S_zero && !r.K_zero) r.lounesto = 4;
    else if (!r.S_zero) r.lounesto = 5;
    else if (!r.K_zero) r.lounesto = 6;
    else r.outside = Outside::NoTensorNoAxial;
    return r;
}

inline Classification classify(const Spinor& psi, const Tolerance& tol = {}) {
    return classify(bilinears(psi), tol);
}

// ---- canonical singular forms, weyl components (f, g, zeta, xi) ----

enum class Type4Variant { F00Xi = 1, ZeroGZetaZero = 2, Derived = 3 };

struct Type4Params {
    Type4Variant variant = Type4Variant::F00Xi;
    cplx f{}, g{}, zeta{}, xi{};
};

// variant 3: f fixed by sigma = omega = 0, f = -g zeta xi* / |zeta|^2
inline Spinor canonical_type4(const Type4Params& p) {
    constexpr double eps = 1e-12;
    switch (p.variant) {
        case Type4Variant::F00Xi:
            if (std::abs(std::abs(p.f) - std::abs(p.xi)) <= eps * (1 + std::abs(p.f)))
                throw std::invalid_argument("type-4 form (f,0,0,xi) needs |f| != |xi|");
            return {p.f, 0.0, 0.0, p.xi, Representation::Weyl};
        case Type4Variant::ZeroGZetaZero:
            if (std::abs(std::abs(p.g) - std::abs(p.zeta)) <= eps * (1 + std::abs(p.g)))
                throw std::invalid_argument("type-4 form (0,g,zeta,0) needs |g| != |zeta|");
            return {0.0, p.g, p.zeta, 0.0, Representation::Weyl};
        case Type4Variant::Derived: {
            if (std::abs(p.zeta) == 0.0) throw std::invalid_argument("type-4 derived form needs zeta != 0");
            if (std::abs(std::abs(p.g) - std::abs(p.zeta)) <= eps * (1 + std::abs(p.g)))
                throw std::invalid_argument("type-4 derived form needs |g| != |zeta|");
            const cplx f = -p.g * p.zeta * std::conj(p.xi) / std::norm(p.zeta);
            return {f, p.g, p.zeta, p.xi, Representation::Weyl};
        }
    }
    throw std::invalid_argument("type-4 variant");
}

// Same as variant 3 but with no inequality check, for degenerate-edge probes.
inline Spinor type4_derived_unchecked(cplx g, cplx zeta, cplx xi) {
    const cplx f = -g * zeta * std::conj(xi) / std::norm(zeta);
    return {f, g, zeta, xi, Representation::Weyl};
}

// (e^{i phi} sigma_2 chi*, chi)
inline Spinor canonical_type5(const Vector2c& chi, double phi) {
    if (chi.norm() == 0.0) throw std::invalid_argument("type-5 form needs chi != 0");
    const Vector2c top = std::exp(I_unit * phi) * (pauli(2) * chi.conjugate());
    Vector4c c;
    c << top, chi;
    return {c, Representation::Weyl};
}

// eigenvalue of C on the canonical type-5 form
inline cplx type5_conjugation_eigenvalue(double phi) { return std::exp(-I_unit * phi); }

// C psi = [[0, sigma_2],[-sigma_2, 0]] psi*  (i Theta = sigma_2)
inline Spinor charge_conjugate(const Spinor& psi) {
    const Spinor w = to_representation(psi, Representation::Weyl);
    const Vector2c top = w.c.head<2>();
    const Vector2c bot = w.c.tail<2>();
    Vector4c out;
    out << pauli(2) * bot.conjugate(), -(pauli(2) * top.conjugate());
    return to_representation({out, Representation::Weyl}, psi.rep);
}

// mu with C psi = mu psi, if it exists within tol
inline std::optional<cplx> conjugation_eigenvalue(const Spinor& psi, double tol = 1e-12) {
    const Spinor cp = charge_conjugate(psi);
    const double n2 = psi.c.squaredNorm();
    if (n2 == 0.0) return std::nullopt;
    const cplx mu = psi.c.dot(cp.c) / n2;  // <psi, C psi>
    if ((cp.c - mu * psi.c).cwiseAbs().maxCoeff() > tol * (1.0 + psi.c.cwiseAbs().maxCoeff()))
        return std::nullopt;
    return mu;
}

}  // namespace spinorlab
