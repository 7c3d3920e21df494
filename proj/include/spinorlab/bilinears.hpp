#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>

#include "spinor.hpp"

namespace spinorlab {

struct NonRealBilinear : std::runtime_error {
    std::string which;
    double imag_part;
    NonRealBilinear(std::string w, double im)
        : std::runtime_error("bilinear " + w + " has imaginary part " + std::to_string(im)),
          which(std::move(w)),
          imag_part(im) {}
};

// Lower-index components throughout. S is antisymmetric, S[mu][nu] = psibar sigma_{mu nu} psi.
struct Bilinears {
    Representation rep = Representation::Dirac;
    double sigma = 0.0;
    double omega = 0.0;
    Vec4 J{};
    Vec4 K{};
    Mat4r S{};

    double scale() const {
        double s = std::max(std::abs(sigma), std::abs(omega));
        for (int i = 0; i < 4; ++i) {
            s = std::max({s, std::abs(J[i]), std::abs(K[i])});
            for (int j = 0; j < 4; ++j) s = std::max(s, std::abs(S[i][j]));
        }
        return s;
    }

    Vec4 J_up() const { return {J[0], -J[1], -J[2], -J[3]}; }
    Vec4 K_up() const { return {K[0], -K[1], -K[2], -K[3]}; }
    double S_up(int mu, int nu) const { return eta(mu) * eta(nu) * S[mu][nu]; }
};

namespace detail {
inline double certify_real(const std::string& name, cplx v) {
    if (std::abs(v.imag()) > 1e-12 * (1.0 + std::abs(v))) throw NonRealBilinear(name, v.imag());
    return v.real();
}
}  // namespace detail

inline Bilinears bilinears(const Spinor& psi) {
    const Representation rep = psi.rep;
    const RowVector4c bar = dirac_adjoint(psi);
    const Matrix4 g5 = gamma5(rep);
    auto form = [&](const Matrix4& g) { return (bar * g * psi.c)(0, 0); };

    Bilinears b;
    b.rep = rep;
    b.sigma = detail::certify_real("sigma", form(identity4()));
    b.omega = detail::certify_real("omega", I_unit * form(g5));
    for (int mu = 0; mu < 4; ++mu) {
        const Matrix4 gl = gamma_lower(mu, rep);
        b.J[mu] = detail::certify_real("J" + std::to_string(mu), form(gl));
        b.K[mu] = detail::certify_real("K" + std::to_string(mu), form(g5 * gl));
    }
    for (auto [mu, nu] : bivector_pairs) {
        const double v = detail::certify_real("S" + std::to_string(mu) + std::to_string(nu),
                                              form(sigma_munu_lower(mu, nu, rep)));
        b.S[mu][nu] = v;
        b.S[nu][mu] = -v;
    }
    return b;
}

}  // namespace spinorlab
