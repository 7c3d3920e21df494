#pragma once

#include "clifford.hpp"

namespace spinorlab {

struct Spinor {
    Vector4c c = Vector4c::Zero();
    Representation rep = Representation::Dirac;

    Spinor() = default;
    Spinor(Vector4c comps, Representation r) : c(std::move(comps)), rep(r) {}
    Spinor(cplx a, cplx b, cplx d, cplx e, Representation r) : rep(r) { c << a, b, d, e; }

    cplx operator[](int i) const { return c(i); }
    double norm() const { return c.norm(); }
};

inline Spinor to_representation(const Spinor& s, Representation to) {
    if (s.rep == to) return s;
    return {rep_change(s.rep, to) * s.c, to};
}

inline Spinor act(const Matrix4& m, const Spinor& s) { return {m * s.c, s.rep}; }

// psibar = psi^dagger g^0
inline RowVector4c dirac_adjoint(const Spinor& s) { return s.c.adjoint() * gamma(0, s.rep); }

// abar G b
inline cplx sandwich(const Spinor& a, const Matrix4& g, const Spinor& b) {
    if (a.rep != b.rep) throw std::invalid_argument("sandwich: representation mismatch");
    return (dirac_adjoint(a) * g * b.c)(0, 0);
}

// overall-phase-insensitive distance; phase fixed on the largest component of a
inline double phase_aligned_error(const Spinor& a, const Spinor& b) {
    const Spinor bb = to_representation(b, a.rep);
    Eigen::Index k = 0;
    a.c.cwiseAbs().maxCoeff(&k);
    if (std::abs(bb.c(k)) == 0.0) return (a.c - bb.c).cwiseAbs().maxCoeff();
    const cplx ph = (a.c(k) / bb.c(k)) / std::abs(a.c(k) / bb.c(k));
    return (a.c - ph * bb.c).cwiseAbs().maxCoeff();
}

}  // namespace spinorlab
